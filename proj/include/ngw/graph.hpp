#pragma once

#include <ngw/errors.hpp>

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ngw {

// Bit v set iff vertex v is a member.
using VertexSet = std::uint32_t;

inline constexpr int kDefaultCapacity = 16;

constexpr VertexSet bit(int v) noexcept { return VertexSet{1} << v; }
constexpr int popcount(VertexSet s) noexcept { return std::popcount(s); }
constexpr int lowest(VertexSet s) noexcept { return std::countr_zero(s); }
constexpr VertexSet all_vertices(int n) noexcept
{
    return n >= 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

// Calls fn(v) for every member of s in ascending order.
template <class Fn>
constexpr void for_each_vertex(VertexSet s, Fn&& fn)
{
    while (s) {
        fn(lowest(s));
        s &= s - 1;
    }
}

struct EdgeId {
    int i;
    int j;

    EdgeId(int a, int b) : i(a < b ? a : b), j(a < b ? b : a)
    {
        if (a == b)
            throw DomainError("edge endpoints must differ");
        if (i < 0)
            throw DomainError("negative vertex index");
    }

    // Position in colex order: (0,1) (0,2) (1,2) (0,3) ...
    int index() const noexcept { return j * (j - 1) / 2 + i; }

    static EdgeId from_index(int index)
    {
        int j = 1;
        while ((j + 1) * j / 2 <= index)
            ++j;
        return EdgeId(index - j * (j - 1) / 2, j);
    }

    friend bool operator==(const EdgeId&, const EdgeId&) = default;
};

constexpr int pair_count(int n) noexcept { return n * (n - 1) / 2; }

// Simple undirected graph on vertices 0..n-1, one adjacency bitrow per vertex.
template <int Capacity>
class BasicGraph {
    static_assert(Capacity >= 1 && Capacity <= 32);

public:
    static constexpr int capacity = Capacity;

    BasicGraph() = default;

    explicit BasicGraph(int n) : n_(n)
    {
        if (n < 1 || n > Capacity)
            throw CapacityError("vertex count " + std::to_string(n) + " outside 1.." +
                                std::to_string(Capacity));
    }

    int order() const noexcept { return n_; }
    VertexSet vertices() const noexcept { return all_vertices(n_); }
    VertexSet row(int v) const noexcept { return adj_[v]; }
    int degree(int v) const noexcept { return popcount(adj_[v]); }
    bool has_edge(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }

    void add_edge(int u, int v)
    {
        check_pair(u, v);
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }

    void add_edge(EdgeId e) { add_edge(e.i, e.j); }

    void remove_edge(int u, int v)
    {
        check_pair(u, v);
        adj_[u] &= ~bit(v);
        adj_[v] &= ~bit(u);
    }

    int edge_count() const noexcept
    {
        int twice = 0;
        for (int v = 0; v < n_; ++v)
            twice += popcount(adj_[v]);
        return twice / 2;
    }

    bool edgeless() const noexcept
    {
        for (int v = 0; v < n_; ++v)
            if (adj_[v])
                return false;
        return true;
    }

    bool is_complete() const noexcept { return edge_count() == pair_count(n_); }

    bool is_clique(VertexSet s) const noexcept
    {
        bool ok = true;
        for_each_vertex(s, [&](int v) { ok = ok && (s & ~bit(v) & ~adj_[v]) == 0; });
        return ok;
    }

    std::vector<EdgeId> edges() const
    {
        std::vector<EdgeId> out;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i)
                if (has_edge(i, j))
                    out.emplace_back(i, j);
        return out;
    }

    // Symmetry, irreflexivity and no stray bits past n.
    bool is_well_formed() const noexcept
    {
        if (n_ < 1 || n_ > Capacity)
            return false;
        for (int v = 0; v < Capacity; ++v) {
            if (v >= n_) {
                if (adj_[v])
                    return false;
                continue;
            }
            if (adj_[v] & ~vertices())
                return false;
            if (adj_[v] & bit(v))
                return false;
            bool symmetric = true;
            for_each_vertex(adj_[v], [&](int u) { symmetric = symmetric && has_edge(u, v); });
            if (!symmetric)
                return false;
        }
        return true;
    }

    friend bool operator==(const BasicGraph&, const BasicGraph&) = default;

private:
    void check_pair(int u, int v) const
    {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw DomainError("vertex index out of range");
        if (u == v)
            throw DomainError("self-loops are not allowed");
    }

    int n_ = 0;
    std::array<VertexSet, Capacity> adj_{};
};

using Graph = BasicGraph<kDefaultCapacity>;

struct GraphFamily {
    enum class Tag { complete, empty, path, cycle, complete_bipartite, star };

    Tag tag;
    int a = 0;
    int b = 0;

    static GraphFamily complete(int n) { return {Tag::complete, n}; }
    static GraphFamily empty(int n) { return {Tag::empty, n}; }
    static GraphFamily path(int n) { return {Tag::path, n}; }
    static GraphFamily cycle(int n) { return {Tag::cycle, n}; }
    static GraphFamily complete_bipartite(int p, int q) { return {Tag::complete_bipartite, p, q}; }
    // K_{1,leaves}; the center is vertex 0.
    static GraphFamily star(int leaves) { return {Tag::star, leaves}; }

    int order() const
    {
        switch (tag) {
        case Tag::complete_bipartite:
            return a + b;
        case Tag::star:
            return a + 1;
        default:
            return a;
        }
    }
};

template <int Capacity = kDefaultCapacity>
BasicGraph<Capacity> make_graph(const GraphFamily& family)
{
    using Tag = GraphFamily::Tag;
    if (family.a < 1 || (family.tag == Tag::complete_bipartite && family.b < 1))
        throw DomainError("family parameters must be positive");
    if (family.tag == Tag::cycle && family.a < 3)
        throw DomainError("a cycle needs at least 3 vertices");
    if (family.order() > Capacity)
        throw CapacityError("family needs " + std::to_string(family.order()) +
                            " vertices, capacity is " + std::to_string(Capacity));

    BasicGraph<Capacity> g(family.order());
    const int n = g.order();
    switch (family.tag) {
    case Tag::complete:
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                g.add_edge(i, j);
        break;
    case Tag::empty:
        break;
    case Tag::path:
        for (int i = 0; i + 1 < n; ++i)
            g.add_edge(i, i + 1);
        break;
    case Tag::cycle:
        for (int i = 0; i < n; ++i)
            g.add_edge(i, (i + 1) % n);
        break;
    case Tag::complete_bipartite:
        for (int i = 0; i < family.a; ++i)
            for (int j = family.a; j < n; ++j)
                g.add_edge(i, j);
        break;
    case Tag::star:
        for (int i = 1; i < n; ++i)
            g.add_edge(0, i);
        break;
    }
    return g;
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
template <int Capacity = kDefaultCapacity>
BasicGraph<Capacity> petersen_graph()
{
    BasicGraph<Capacity> g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, i + 5);
    }
    return g;
}

template <int Capacity>
BasicGraph<Capacity> complement(const BasicGraph<Capacity>& g)
{
    BasicGraph<Capacity> out(g.order());
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i)
            if (!g.has_edge(i, j))
                out.add_edge(i, j);
    return out;
}

// Vertices of s relabelled 0..|s|-1 in ascending order.
template <int Capacity>
BasicGraph<Capacity> induced_subgraph(const BasicGraph<Capacity>& g, VertexSet s)
{
    if (s == 0)
        throw DomainError("induced_subgraph needs a nonempty vertex set");
    if (s & ~g.vertices())
        throw DomainError("vertex set exceeds graph order");

    std::array<int, Capacity> position{};
    int k = 0;
    for_each_vertex(s, [&](int v) { position[v] = k++; });
    BasicGraph<Capacity> out(k);
    for_each_vertex(s, [&](int v) {
        for_each_vertex(g.row(v) & s, [&](int u) {
            if (u > v)
                out.add_edge(position[v], position[u]);
        });
    });
    return out;
}

// True iff `within` is nonempty and induces a connected subgraph.
template <int Capacity>
bool is_connected_set(const BasicGraph<Capacity>& g, VertexSet within)
{
    if (within == 0)
        return false;
    VertexSet reached = bit(lowest(within));
    for (;;) {
        VertexSet next = reached;
        for_each_vertex(reached, [&](int v) { next |= g.row(v) & within; });
        if (next == reached)
            return reached == within;
        reached = next;
    }
}

} // namespace ngw
