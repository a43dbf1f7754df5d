#pragma once

#include <ngw/certificate.hpp>
#include <ngw/graph.hpp>
#include <ngw/params.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

// Certificate checkers. They deliberately work on plain adjacency matrices and
// share no routine with the solvers they check.
namespace ngw::certify {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const Graph& g)
{
    const auto n = static_cast<std::size_t>(g.order());
    Matrix a(n, std::vector<bool>(n, false));
    for (const EdgeId& e : g.edges())
        a[e.i][e.j] = a[e.j][e.i] = true;
    return a;
}

inline bool is_permutation_of_vertices(const std::vector<int>& order, int n)
{
    if (static_cast<int>(order.size()) != n)
        return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

// Width of an elimination ordering: play the elimination game with fill-in.
inline std::optional<int> elimination_width(const Graph& g, const std::vector<int>& order)
{
    const int n = g.order();
    if (!is_permutation_of_vertices(order, n))
        return std::nullopt;
    Matrix a = matrix_of(g);
    std::vector<bool> gone(static_cast<std::size_t>(n), false);
    int width = 0;
    for (int v : order) {
        std::vector<int> later;
        for (int u = 0; u < n; ++u)
            if (!gone[u] && u != v && a[v][u])
                later.push_back(u);
        width = std::max(width, static_cast<int>(later.size()));
        for (int x : later)
            for (int y : later)
                if (x != y)
                    a[x][y] = true;
        gone[v] = true;
    }
    return width;
}

// Largest number of placed vertices with an unplaced neighbour.
inline std::optional<int> layout_separation(const Graph& g, const std::vector<int>& order)
{
    const int n = g.order();
    if (!is_permutation_of_vertices(order, n))
        return std::nullopt;
    const Matrix a = matrix_of(g);
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        position[order[i]] = i;
    int width = 0;
    for (int i = 0; i < n; ++i) {
        int cut = 0;
        for (int p = 0; p <= i; ++p) {
            bool open = false;
            for (int u = 0; u < n; ++u)
                open = open || (a[order[p]][u] && position[u] > i);
            cut += open ? 1 : 0;
        }
        width = std::max(width, cut);
    }
    return width;
}

// Replays the host construction, checking the shape rule at every step and
// that every edge of g is a host edge. Returns k on success.
inline std::optional<int> host_width(const Graph& g, const KTreeHost& host)
{
    const int n = g.order();
    const int k = host.k;
    if (k < 0 || static_cast<int>(host.seed.size()) != k + 1)
        return std::nullopt;
    if (static_cast<int>(host.steps.size()) + k + 1 != n)
        return std::nullopt;

    const auto size = static_cast<std::size_t>(n);
    Matrix h(size, std::vector<bool>(size, false));
    std::vector<bool> placed(size, false);
    std::vector<int> degree(size, 0);
    for (int v : host.seed) {
        if (v < 0 || v >= n || placed[v])
            return std::nullopt;
        placed[v] = true;
    }
    for (int v : host.seed)
        for (int u : host.seed)
            if (u != v)
                h[v][u] = true;
    for (int v : host.seed)
        degree[v] = k;

    std::vector<int> current_max(host.seed);
    std::set<std::vector<int>> used_facets;
    int previous = -1;
    for (const auto& step : host.steps) {
        const int w = step.vertex;
        if (w < 0 || w >= n || placed[w])
            return std::nullopt;
        std::vector<int> facet;
        for (int v = 0; v < n; ++v)
            if ((step.attach >> v) & 1U)
                facet.push_back(v);
        if (static_cast<int>(facet.size()) != k)
            return std::nullopt;
        for (int v : facet)
            if (!placed[v])
                return std::nullopt;
        for (int x : facet)
            for (int y : facet)
                if (x != y && !h[x][y])
                    return std::nullopt;

        // A 0-tree is edgeless; the shape rules are vacuous.
        switch (k == 0 ? KTreeHost::Shape::caterpillar : host.shape) {
        case KTreeHost::Shape::linear:
            if (previous >= 0 && std::find(facet.begin(), facet.end(), previous) == facet.end())
                return std::nullopt;
            [[fallthrough]];
        case KTreeHost::Shape::caterpillar:
            for (int v : facet)
                if (std::find(current_max.begin(), current_max.end(), v) == current_max.end())
                    return std::nullopt;
            break;
        case KTreeHost::Shape::two_sided: {
            bool low = false;
            for (int v : facet)
                low = low || degree[v] == k;
            if (!low && used_facets.count(facet) == 0)
                return std::nullopt;
            break;
        }
        }

        used_facets.insert(facet);
        placed[w] = true;
        for (int v : facet) {
            h[v][w] = h[w][v] = true;
            ++degree[v];
        }
        degree[w] = k;
        current_max = facet;
        current_max.push_back(w);
        previous = w;
    }
    for (const EdgeId& e : g.edges())
        if (!h[e.i][e.j])
            return std::nullopt;
    return k;
}

// Order of the clique minor given by the branch sets.
inline std::optional<int> minor_order(const Graph& g, const BranchSets& b)
{
    const int n = g.order();
    const Matrix a = matrix_of(g);
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    const int count = static_cast<int>(b.sets.size());
    if (count == 0)
        return std::nullopt;
    for (int i = 0; i < count; ++i) {
        std::vector<int> members;
        for (int v = 0; v < 32; ++v)
            if ((b.sets[i] >> v) & 1U) {
                if (v >= n || owner[v] != -1)
                    return std::nullopt;
                owner[v] = i;
                members.push_back(v);
            }
        if (members.empty())
            return std::nullopt;
        std::vector<int> stack{members[0]};
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        seen[members[0]] = true;
        int reached = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u : members)
                if (!seen[u] && a[v][u]) {
                    seen[u] = true;
                    ++reached;
                    stack.push_back(u);
                }
        }
        if (reached != static_cast<int>(members.size()))
            return std::nullopt;
    }
    std::vector<std::vector<bool>> touch(static_cast<std::size_t>(count),
                                         std::vector<bool>(static_cast<std::size_t>(count), false));
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (a[v][u] && owner[v] >= 0 && owner[u] >= 0)
                touch[owner[v]][owner[u]] = true;
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j)
            if (i != j && !touch[i][j])
                return std::nullopt;
    return count;
}

inline std::optional<int> clique_order(const Graph& g, const CliqueWitness& c)
{
    const Matrix a = matrix_of(g);
    std::vector<int> members;
    for (int v = 0; v < 32; ++v)
        if ((c.members >> v) & 1U) {
            if (v >= g.order())
                return std::nullopt;
            members.push_back(v);
        }
    for (int x : members)
        for (int y : members)
            if (x != y && !a[x][y])
                return std::nullopt;
    if (members.empty())
        return std::nullopt;
    return static_cast<int>(members.size());
}

// Number of colours used by a proper colouring.
inline std::optional<int> colour_count(const Graph& g, const Coloring& c)
{
    const int n = g.order();
    if (static_cast<int>(c.colors.size()) != n)
        return std::nullopt;
    for (int v : c.colors)
        if (v < 0)
            return std::nullopt;
    for (const EdgeId& e : g.edges())
        if (c.colors[e.i] == c.colors[e.j])
            return std::nullopt;
    return static_cast<int>(std::set<int>(c.colors.begin(), c.colors.end()).size());
}

// The value a certificate proves for `kind`, or nothing if it does not check.
inline std::optional<int> replay(const Graph& g, ParamKind kind, const WidthCertificate& cert)
{
    switch (kind) {
    case ParamKind::tw:
        if (auto* o = std::get_if<EliminationOrdering>(&cert))
            return elimination_width(g, o->order);
        return std::nullopt;
    case ParamKind::pw:
        if (auto* o = std::get_if<VertexLayout>(&cert))
            return layout_separation(g, o->order);
        return std::nullopt;
    case ParamKind::ppw:
        if (auto* h = std::get_if<KTreeHost>(&cert); h && h->shape == KTreeHost::Shape::linear)
            return host_width(g, *h);
        return std::nullopt;
    case ParamKind::la:
        if (auto* h = std::get_if<KTreeHost>(&cert); h && h->shape == KTreeHost::Shape::two_sided)
            return host_width(g, *h);
        return std::nullopt;
    case ParamKind::eta:
        if (auto* b = std::get_if<BranchSets>(&cert))
            return minor_order(g, *b);
        return std::nullopt;
    case ParamKind::omega:
        if (auto* c = std::get_if<CliqueWitness>(&cert))
            return clique_order(g, *c);
        return std::nullopt;
    case ParamKind::chi:
        if (auto* c = std::get_if<Coloring>(&cert))
            return colour_count(g, *c);
        return std::nullopt;
    default:
        return std::nullopt;
    }
}

} // namespace ngw::certify
