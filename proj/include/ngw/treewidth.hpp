#pragma once

#include <ngw/certificate.hpp>
#include <ngw/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

namespace ngw {

namespace detail {

// Vertices outside `eliminated` + v that v reaches through `eliminated`:
// v's neighbourhood in the graph after eliminating `eliminated`.
inline VertexSet elimination_neighbours(const Graph& g, VertexSet eliminated, int v)
{
    VertexSet component = bit(v);
    VertexSet frontier = bit(v);
    while (frontier) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int u) { next |= g.row(u); });
        next &= eliminated & ~component;
        component |= next;
        frontier = next;
    }
    VertexSet reach = 0;
    for_each_vertex(component, [&](int u) { reach |= g.row(u); });
    return reach & ~component & ~eliminated;
}

// Greedy min-degree elimination: an ordering and its width.
inline std::pair<int, std::vector<int>> min_degree_ordering(const Graph& g)
{
    const int n = g.order();
    std::vector<int> order;
    VertexSet eliminated = 0;
    int width = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        int pick_degree = n + 1;
        for_each_vertex(g.vertices() & ~eliminated, [&](int v) {
            const int d = popcount(elimination_neighbours(g, eliminated, v));
            if (d < pick_degree) {
                pick = v;
                pick_degree = d;
            }
        });
        width = std::max(width, pick_degree);
        order.push_back(pick);
        eliminated |= bit(pick);
    }
    return {width, order};
}

} // namespace detail

// Exact treewidth by dynamic programming over eliminated prefixes, pruned by
// the min-degree upper bound.
inline WidthResult treewidth(const Graph& g)
{
    const int n = g.order();
    auto [upper, heuristic_order] = detail::min_degree_ordering(g);
    if (upper == 0)
        return {0, EliminationOrdering{heuristic_order}};

    const std::size_t states = std::size_t{1} << n;
    constexpr std::uint8_t kUnset = 0xFF;
    std::vector<std::uint8_t> best(states, kUnset);
    std::vector<std::int8_t> last(states, -1);
    best[0] = 0;
    for (std::size_t s = 0; s < states; ++s) {
        const std::uint8_t here = best[s];
        if (here == kUnset || here >= upper)
            continue;
        const auto eliminated = static_cast<VertexSet>(s);
        for_each_vertex(g.vertices() & ~eliminated, [&](int v) {
            const int degree = popcount(detail::elimination_neighbours(g, eliminated, v));
            const auto width = static_cast<std::uint8_t>(std::max<int>(here, degree));
            if (width >= upper)
                return;
            const std::size_t next = s | bit(v);
            if (width < best[next]) {
                best[next] = width;
                last[next] = static_cast<std::int8_t>(v);
            }
        });
    }

    const std::size_t full = states - 1;
    if (best[full] == kUnset)
        return {upper, EliminationOrdering{heuristic_order}};
    std::vector<int> order;
    for (std::size_t s = full; s != 0; s &= ~static_cast<std::size_t>(bit(last[s])))
        order.push_back(last[s]);
    std::reverse(order.begin(), order.end());
    return {best[full], EliminationOrdering{order}};
}

} // namespace ngw
