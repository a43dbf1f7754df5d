#pragma once

#include <ngw/certificate.hpp>
#include <ngw/errors.hpp>
#include <ngw/graph.hpp>
#include <ngw/ktree_hosts.hpp>
#include <ngw/treewidth.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace ngw {

namespace detail {

// Members of `prefix` with a neighbour outside it.
inline VertexSet boundary(const Graph& g, VertexSet prefix)
{
    VertexSet out = 0;
    for_each_vertex(prefix, [&](int v) {
        if (g.row(v) & ~prefix)
            out |= bit(v);
    });
    return out;
}

inline KTreeHost edgeless_host(const Graph& g)
{
    KTreeHost host;
    host.k = 0;
    host.seed = {0};
    for (int v = 1; v < g.order(); ++v)
        host.steps.push_back({v, 0});
    return host;
}

} // namespace detail

// Vertex separation number by subset DP: the least, over linear layouts, of
// the largest boundary of a prefix.
inline WidthResult vertex_separation(const Graph& g)
{
    const int n = g.order();
    const std::size_t states = std::size_t{1} << n;
    constexpr std::uint8_t kUnset = 0xFF;
    std::vector<std::uint8_t> best(states, kUnset);
    std::vector<std::int8_t> last(states, -1);
    best[0] = 0;
    for (std::size_t s = 0; s < states; ++s) {
        const std::uint8_t here = best[s];
        if (here == kUnset)
            continue;
        const auto prefix = static_cast<VertexSet>(s);
        for_each_vertex(g.vertices() & ~prefix, [&](int v) {
            const std::size_t next = s | bit(v);
            const auto width = static_cast<std::uint8_t>(
                std::max<int>(here, popcount(detail::boundary(g, static_cast<VertexSet>(next)))));
            if (width < best[next]) {
                best[next] = width;
                last[next] = static_cast<std::int8_t>(v);
            }
        });
    }
    std::vector<int> order;
    for (std::size_t s = states - 1; s != 0; s &= ~static_cast<std::size_t>(bit(last[s])))
        order.push_back(last[s]);
    std::reverse(order.begin(), order.end());
    return {best[states - 1], VertexLayout{order}};
}

// Exact pathwidth. The layout DP and a direct k-caterpillar host search must
// agree: a host exists at the DP value and none exists one below it.
inline WidthResult pathwidth(const Graph& g)
{
    WidthResult by_layout = vertex_separation(g);
    const int k = by_layout.value;
    if (k == 0)
        return by_layout;
    const bool fits = find_caterpillar_host(g, k).has_value();
    const bool fits_below = k > 1 && find_caterpillar_host(g, k - 1).has_value();
    if (!fits || fits_below)
        throw SolverDisagreement("pathwidth routes disagree on " + std::to_string(g.order()) +
                                 "-vertex graph: layout gives " + std::to_string(k) +
                                 ", caterpillar search " +
                                 (fits ? "finds a host one below" : "finds no host"));
    return by_layout;
}

// Exact proper pathwidth: pw or pw + 1, decided by a linear k-tree search.
inline WidthResult proper_pathwidth(const Graph& g)
{
    if (g.edgeless()) {
        KTreeHost host = detail::edgeless_host(g);
        host.shape = KTreeHost::Shape::linear;
        return {0, host};
    }
    const int k = pathwidth(g).value;
    if (auto host = find_linear_host(g, k))
        return {k, *host};
    if (auto host = find_linear_host(g, k + 1))
        return {k + 1, *host};
    throw SolverDisagreement("no linear host at pathwidth + 1");
}

// Exact largeur d'arborescence: tw or tw + 1, never above pw.
inline WidthResult largeur(const Graph& g)
{
    if (g.edgeless()) {
        KTreeHost host = detail::edgeless_host(g);
        host.shape = KTreeHost::Shape::two_sided;
        return {0, host};
    }
    const int tw = treewidth(g).value;
    const int pw = pathwidth(g).value;
    auto caterpillar_as_two_sided = [&](int k) -> WidthResult {
        auto host = find_caterpillar_host(g, k);
        if (!host)
            throw SolverDisagreement("no caterpillar host at pathwidth");
        host->shape = KTreeHost::Shape::two_sided;
        return {k, *host};
    };
    if (tw == pw)
        return caterpillar_as_two_sided(pw);
    if (auto host = find_two_sided_host(g, tw))
        return {tw, *host};
    if (pw == tw + 1)
        return caterpillar_as_two_sided(pw);
    if (auto host = find_two_sided_host(g, tw + 1))
        return {tw + 1, *host};
    throw SolverDisagreement("no two-sided host at treewidth + 1");
}

} // namespace ngw
