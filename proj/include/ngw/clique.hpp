#pragma once

#include <ngw/certificate.hpp>
#include <ngw/graph.hpp>

#include <algorithm>
#include <bit>
#include <vector>

namespace ngw {

namespace detail {

inline void grow_clique(const Graph& g, VertexSet current, VertexSet candidates, VertexSet& best)
{
    if (popcount(current) + popcount(candidates) <= popcount(best))
        return;
    if (candidates == 0) {
        best = current;
        return;
    }
    // Pivot on the candidate with the most candidate neighbours.
    int pivot = lowest(candidates);
    for_each_vertex(candidates, [&](int v) {
        if (popcount(g.row(v) & candidates) > popcount(g.row(pivot) & candidates))
            pivot = v;
    });
    for (VertexSet rest = candidates & ~g.row(pivot); rest; rest &= rest - 1) {
        const int v = lowest(rest);
        grow_clique(g, current | bit(v), candidates & g.row(v), best);
        candidates &= ~bit(v);
    }
}

} // namespace detail

inline WidthResult clique_number(const Graph& g)
{
    VertexSet best = bit(0);
    detail::grow_clique(g, 0, g.vertices(), best);
    return {popcount(best), CliqueWitness{best}};
}

namespace detail {

// Backtracking k-colouring, most saturated vertex first.
inline bool colour_with(const Graph& g, int k, std::vector<int>& colours, VertexSet uncoloured)
{
    if (uncoloured == 0)
        return true;
    int pick = -1;
    int pick_saturation = -1;
    int pick_degree = -1;
    for_each_vertex(uncoloured, [&](int v) {
        unsigned used = 0;
        for_each_vertex(g.row(v) & ~uncoloured, [&](int u) { used |= 1U << colours[u]; });
        const int saturation = std::popcount(used);
        const int degree = popcount(g.row(v) & uncoloured);
        if (saturation > pick_saturation ||
            (saturation == pick_saturation && degree > pick_degree)) {
            pick = v;
            pick_saturation = saturation;
            pick_degree = degree;
        }
    });
    unsigned used = 0;
    int highest = -1;
    for_each_vertex(g.vertices() & ~uncoloured, [&](int u) { highest = std::max(highest, colours[u]); });
    for_each_vertex(g.row(pick) & ~uncoloured, [&](int u) { used |= 1U << colours[u]; });
    // Colours above highest + 1 are interchangeable with highest + 1.
    const int limit = std::min(k, highest + 2);
    for (int c = 0; c < limit; ++c) {
        if (used & (1U << c))
            continue;
        colours[pick] = c;
        if (colour_with(g, k, colours, uncoloured & ~bit(pick)))
            return true;
    }
    colours[pick] = -1;
    return false;
}

} // namespace detail

inline WidthResult chromatic_number(const Graph& g)
{
    const int n = g.order();
    for (int k = clique_number(g).value;; ++k) {
        std::vector<int> colours(static_cast<std::size_t>(n), -1);
        if (detail::colour_with(g, k, colours, g.vertices()))
            return {k, Coloring{colours}};
    }
}

} // namespace ngw
