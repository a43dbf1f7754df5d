#pragma once

#include <ngw/bounds.hpp>
#include <ngw/certificate.hpp>
#include <ngw/decomposition.hpp>
#include <ngw/params.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ngw {

enum class Relation { at_least, at_most };

constexpr std::string_view relation_name(Relation r) noexcept
{
    return r == Relation::at_least ? "at_least" : "at_most";
}

// Claim about the aggregate of one parameter over the parts.
struct Guarantee {
    ParamKind param;
    Aggregate aggregate;
    Relation relation;
    std::int64_t value;
};

template <int Capacity = kDefaultCapacity>
struct BasicConstructionResult {
    BasicDecomposition<Capacity> decomposition;
    std::vector<Guarantee> guarantees;
    std::string provenance;
    // Host for the last part, when the construction names one.
    std::optional<KTreeHost> last_part_host;
};

using ConstructionResult = BasicConstructionResult<kDefaultCapacity>;

// Sizes of `count` consecutive vertex blocks covering 0..n-1; the first
// n mod count blocks get one extra vertex.
inline std::vector<VertexSet> balanced_blocks(int n, int count)
{
    std::vector<VertexSet> blocks;
    int start = 0;
    for (int i = 0; i < count; ++i) {
        const int size = n / count + (i < n % count ? 1 : 0);
        blocks.push_back(all_vertices(start + size) & ~all_vertices(start));
        start += size;
    }
    return blocks;
}

namespace detail {

template <int Capacity>
void add_block(BasicGraph<Capacity>& g, VertexSet a, VertexSet b)
{
    for_each_vertex(a, [&](int u) {
        for_each_vertex(b, [&](int v) {
            if (u != v)
                g.add_edge(u, v);
        });
    });
}

template <int Capacity>
BasicDecomposition<Capacity> empty_decomposition(int n, int r)
{
    BasicDecomposition<Capacity> d;
    d.n = n;
    d.parts.assign(static_cast<std::size_t>(r), BasicGraph<Capacity>(n));
    return d;
}

} // namespace detail

// t balanced blocks with t the least integer having r <= t(t+1)/2. Parts 1..t
// are the cliques on the blocks, the remaining r - t parts are complete
// bipartite graphs between block pairs in lexicographic order, and every
// edge left over joins part 1.
template <int Capacity = kDefaultCapacity>
BasicConstructionResult<Capacity> blowup_decomposition(int n, int r)
{
    if (r < 2)
        throw DomainError("blow-up construction needs r >= 2");
    const int t = static_cast<int>(triangular_root_ceil(r));
    if (n < t)
        throw DomainError("blow-up construction needs n >= " + std::to_string(t));
    if (n > Capacity)
        throw CapacityError("n exceeds vertex capacity");

    const auto blocks = balanced_blocks(n, t);
    auto d = detail::empty_decomposition<Capacity>(n, r);
    for (int i = 0; i < t; ++i)
        detail::add_block(d.parts[i], blocks[i], blocks[i]);
    int next = t;
    for (int a = 0; a < t; ++a) {
        for (int b = a + 1; b < t; ++b) {
            auto& sink = next < r ? d.parts[next++] : d.parts[0];
            detail::add_block(sink, blocks[a], blocks[b]);
        }
    }

    BasicConstructionResult<Capacity> out{std::move(d), {}, "blowup", std::nullopt};
    if (n % t == 0)
        out.guarantees.push_back({ParamKind::eta, Aggregate::sum, Relation::at_least,
                                  static_cast<std::int64_t>(r) * (n / t) + r - t});
    out.guarantees.push_back({ParamKind::eta, Aggregate::product, Relation::at_least,
                              detail::ipow(n / t - 1, r)});
    return out;
}

// Four balanced blocks V1..V4 arranged so that each of the first three parts
// has pathwidth about n/4. Parts beyond the third are empty, or in the
// non-degenerate mode each takes one edge of the third part.
template <int Capacity = kDefaultCapacity>
BasicConstructionResult<Capacity> four_block_decomposition(int n, int r, bool nondegenerate = false)
{
    if (r < 3 || n < 4)
        throw DomainError("four-block construction needs r >= 3 and n >= 4");
    if (n > Capacity)
        throw CapacityError("n exceeds vertex capacity");

    const auto v = balanced_blocks(n, 4);
    auto d = detail::empty_decomposition<Capacity>(n, r);
    auto& g1 = d.parts[0];
    detail::add_block(g1, v[0], v[0]);
    detail::add_block(g1, v[3], v[3]);
    detail::add_block(g1, v[0], v[1]);
    detail::add_block(g1, v[2], v[3]);
    auto& g2 = d.parts[1];
    detail::add_block(g2, v[1], v[1]);
    detail::add_block(g2, v[2], v[2]);
    detail::add_block(g2, v[0], v[2]);
    detail::add_block(g2, v[1], v[3]);
    auto& g3 = d.parts[2];
    detail::add_block(g3, v[0], v[3]);
    detail::add_block(g3, v[1], v[2]);

    std::int64_t bound = 3 * ((n + 3) / 4);
    if (nondegenerate && r > 3) {
        const auto moved = d.parts[2].edges();
        if (static_cast<int>(moved.size()) < r - 2)
            throw InfeasibleError("third part has " + std::to_string(moved.size()) +
                                  " edges, need at least " + std::to_string(r - 2));
        for (int i = 0; i < r - 3; ++i) {
            d.parts[2].remove_edge(moved[i].i, moved[i].j);
            d.parts[3 + i].add_edge(moved[i]);
        }
        bound += r - 3;
    }
    BasicConstructionResult<Capacity> out{std::move(d), {}, "four-block", std::nullopt};
    out.guarantees.push_back({ParamKind::pw, Aggregate::sum, Relation::at_most, bound});
    return out;
}

// r edge-disjoint Hamiltonian paths of K_{2r}. Path j runs j, j+1, j-1, j+2,
// j-2, ... modulo 2r; vertices are then renamed so the last path is
// 0, 1, ..., 2r-1.
inline std::vector<std::vector<int>> hamiltonian_path_partition(int r)
{
    if (r < 1)
        throw DomainError("path partition needs r >= 1");
    const int m = 2 * r;
    std::vector<std::vector<int>> paths(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) {
        auto& path = paths[j];
        path.push_back(j);
        for (int step = 1; step < r; ++step) {
            path.push_back((j + step) % m);
            path.push_back(((j - step) % m + m) % m);
        }
        path.push_back((j + r) % m);
    }
    std::vector<int> rename(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        rename[paths.back()[i]] = i;
    for (auto& path : paths)
        for (int& v : path)
            v = rename[v];
    return paths;
}

// Parts 1..r-1 are the first r-1 Hamiltonian paths on vertices 0..2r-1,
// the rest of the vertices isolated. Part r carries the last path and every
// edge meeting a vertex outside 0..2r-1.
template <int Capacity = kDefaultCapacity>
BasicConstructionResult<Capacity> path_plus_remainder_decomposition(int n, int r)
{
    if (r < 2 || n < 2 * r)
        throw DomainError("paths-plus-remainder construction needs r >= 2 and n >= 2r");
    if (n > Capacity)
        throw CapacityError("n exceeds vertex capacity");

    const auto paths = hamiltonian_path_partition(r);
    auto d = detail::empty_decomposition<Capacity>(n, r);
    for (int j = 0; j < r; ++j)
        for (std::size_t i = 0; i + 1 < paths[j].size(); ++i)
            d.parts[j].add_edge(paths[j][i], paths[j][i + 1]);
    const VertexSet outside = all_vertices(n) & ~all_vertices(2 * r);
    detail::add_block(d.parts[r - 1], outside, all_vertices(n));

    // Linear host: the clique on {2r-2, ..., n-1}, then 2r-3, ..., 0, each
    // joined to its successor and to every vertex outside 0..2r-1.
    KTreeHost host;
    host.shape = KTreeHost::Shape::linear;
    host.k = n - 2 * r + 1;
    for (int v = 2 * r - 2; v < n; ++v)
        host.seed.push_back(v);
    for (int x = 2 * r - 3; x >= 0; --x)
        host.steps.push_back({x, bit(x + 1) | outside});

    BasicConstructionResult<Capacity> out{std::move(d), {}, "paths-plus-remainder", host};
    out.guarantees.push_back(
        {ParamKind::ppw, Aggregate::sum, Relation::at_most, static_cast<std::int64_t>(n - r)});
    return out;
}

} // namespace ngw
