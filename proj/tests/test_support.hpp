#pragma once

#include <ngw/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace ngw::testing {

// Bit e of mask is the edge with colex index e.
inline Graph graph_from_mask(int n, std::uint64_t mask)
{
    Graph g(n);
    for (int e = 0; e < pair_count(n); ++e)
        if ((mask >> e) & 1U)
            g.add_edge(EdgeId::from_index(e));
    return g;
}

inline std::uint64_t mask_of(const Graph& g)
{
    std::uint64_t mask = 0;
    for (const EdgeId& e : g.edges())
        mask |= std::uint64_t{1} << e.index();
    return mask;
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm)
{
    Graph out(g.order());
    for (const EdgeId& e : g.edges())
        out.add_edge(perm[e.i], perm[e.j]);
    return out;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (coin(rng))
                g.add_edge(i, j);
    return g;
}

// Least edge mask over all n! relabellings.
inline std::uint64_t brute_canonical_mask(const Graph& g)
{
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, mask_of(relabel(g, perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace ngw::testing
