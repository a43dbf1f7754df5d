#pragma once

#include <ngw/errors.hpp>
#include <ngw/graph.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ngw {

// An r-decomposition of K_n: r spanning subgraphs whose edge sets partition
// the edges of K_n.
template <int Capacity>
struct BasicDecomposition {
    int n = 0;
    std::vector<BasicGraph<Capacity>> parts;

    int part_count() const noexcept { return static_cast<int>(parts.size()); }

    bool nondegenerate() const
    {
        for (const auto& g : parts)
            if (g.edgeless())
                return false;
        return true;
    }

    friend bool operator==(const BasicDecomposition&, const BasicDecomposition&) = default;
};

using Decomposition = BasicDecomposition<kDefaultCapacity>;

// Part index of every edge of K_n, in colex edge order.
using EdgeColouring = std::vector<std::uint8_t>;

template <int Capacity>
bool is_valid_decomposition(const BasicDecomposition<Capacity>& d)
{
    if (d.n < 1 || d.parts.empty())
        return false;
    std::vector<VertexSet> covered(static_cast<std::size_t>(d.n), 0);
    for (const auto& g : d.parts) {
        if (g.order() != d.n || !g.is_well_formed())
            return false;
        for (int v = 0; v < d.n; ++v) {
            if (covered[v] & g.row(v))
                return false;
            covered[v] |= g.row(v);
        }
    }
    for (int v = 0; v < d.n; ++v)
        if (covered[v] != (all_vertices(d.n) & ~bit(v)))
            return false;
    return true;
}

template <int Capacity = kDefaultCapacity>
BasicDecomposition<Capacity> decomposition_from_colouring(int n, int r, const EdgeColouring& colours)
{
    if (static_cast<int>(colours.size()) != pair_count(n))
        throw DomainError("colouring length does not match the edge count of K_n");
    if (r < 1)
        throw DomainError("a decomposition needs at least one part");
    BasicDecomposition<Capacity> d;
    d.n = n;
    d.parts.assign(static_cast<std::size_t>(r), BasicGraph<Capacity>(n));
    for (int e = 0; e < pair_count(n); ++e) {
        if (colours[e] >= r)
            throw DomainError("edge colour exceeds part count");
        d.parts[colours[e]].add_edge(EdgeId::from_index(e));
    }
    return d;
}

template <int Capacity>
EdgeColouring colouring_of(const BasicDecomposition<Capacity>& d)
{
    EdgeColouring colours(static_cast<std::size_t>(pair_count(d.n)), 0);
    for (int p = 0; p < d.part_count(); ++p)
        for (const EdgeId& e : d.parts[p].edges())
            colours[e.index()] = static_cast<std::uint8_t>(p);
    return colours;
}

namespace detail {

// Uniform in [0, bound) without modulo bias.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit)
            return x % bound;
    }
}

// Independent generator for (seed, stream); streams never share state, so
// sample i is reproducible regardless of which worker draws it.
inline std::mt19937_64 stream_generator(std::uint64_t seed, std::uint64_t stream)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

} // namespace detail

// Every edge of K_n goes to a uniformly random part, independently.
template <int Capacity = kDefaultCapacity>
BasicDecomposition<Capacity> random_decomposition(int n, int r, std::uint64_t seed,
                                                  std::uint64_t stream = 0)
{
    if (n < 1 || r < 1)
        throw DomainError("random decomposition needs n >= 1 and r >= 1");
    if (r > 255)
        throw CapacityError("at most 255 parts are supported");
    auto rng = detail::stream_generator(seed, stream);
    EdgeColouring colours(static_cast<std::size_t>(pair_count(n)));
    for (auto& c : colours)
        c = static_cast<std::uint8_t>(detail::uniform_below(rng, static_cast<std::uint64_t>(r)));
    return decomposition_from_colouring<Capacity>(n, r, colours);
}

} // namespace ngw
