#pragma once

#include <ngw/graph.hpp>

#include <algorithm>
#include <array>
#include <vector>

namespace ngw {

// True iff some bijection V(pattern) -> V(host) maps every edge of `pattern`
// onto an edge of `host`.
template <int Capacity>
bool embeds_as_spanning_subgraph(const BasicGraph<Capacity>& pattern,
                                 const BasicGraph<Capacity>& host)
{
    const int n = pattern.order();
    if (host.order() != n)
        throw DomainError("pattern and host must have the same vertex count");
    if (pattern.edge_count() > host.edge_count())
        return false;

    std::vector<int> pattern_degrees(static_cast<std::size_t>(n));
    std::vector<int> host_degrees(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        pattern_degrees[v] = pattern.degree(v);
        host_degrees[v] = host.degree(v);
    }
    std::sort(pattern_degrees.rbegin(), pattern_degrees.rend());
    std::sort(host_degrees.rbegin(), host_degrees.rend());
    for (int i = 0; i < n; ++i)
        if (pattern_degrees[i] > host_degrees[i])
            return false;

    // Map pattern vertices in an order where each one has as many already
    // mapped neighbours as possible.
    std::vector<int> order;
    VertexSet placed = 0;
    while (static_cast<int>(order.size()) < n) {
        int pick = -1;
        int pick_back = -1;
        for_each_vertex(pattern.vertices() & ~placed, [&](int v) {
            const int back = popcount(pattern.row(v) & placed);
            if (back > pick_back ||
                (back == pick_back && pattern.degree(v) > pattern.degree(pick))) {
                pick = v;
                pick_back = back;
            }
        });
        order.push_back(pick);
        placed |= bit(pick);
    }

    std::array<int, Capacity> image{};
    VertexSet used = 0;
    auto extend = [&](auto&& self, int depth) -> bool {
        if (depth == n)
            return true;
        const int v = order[depth];
        VertexSet candidates = host.vertices() & ~used;
        for (int d = 0; d < depth; ++d)
            if (pattern.has_edge(v, order[d]))
                candidates &= host.row(image[order[d]]);
        for (VertexSet rest = candidates; rest; rest &= rest - 1) {
            const int w = lowest(rest);
            if (host.degree(w) < pattern.degree(v))
                continue;
            image[v] = w;
            used |= bit(w);
            if (self(self, depth + 1))
                return true;
            used &= ~bit(w);
        }
        return false;
    };
    return extend(extend, 0);
}

} // namespace ngw
