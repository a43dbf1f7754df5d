#pragma once

#include <ngw/canonical.hpp>
#include <ngw/certificate.hpp>
#include <ngw/clique.hpp>
#include <ngw/graph.hpp>

#include <array>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace ngw {

namespace detail {

// A minor of the input graph: vertex i stands for the connected branch set
// members[i] of original vertices.
struct MinorGraph {
    int m = 0;
    std::array<VertexSet, kDefaultCapacity> adj{};
    std::array<VertexSet, kDefaultCapacity> members{};

    static MinorGraph of(const Graph& g)
    {
        MinorGraph h;
        h.m = g.order();
        for (int v = 0; v < h.m; ++v) {
            h.adj[v] = g.row(v);
            h.members[v] = bit(v);
        }
        return h;
    }

    int edge_count() const
    {
        int twice = 0;
        for (int v = 0; v < m; ++v)
            twice += popcount(adj[v]);
        return twice / 2;
    }

    bool complete() const { return edge_count() == pair_count(m); }

    // Remove vertex v, shifting higher indices down by one.
    MinorGraph without(int v) const
    {
        MinorGraph h;
        h.m = m - 1;
        const VertexSet low = bit(v) - 1;
        for (int u = 0, t = 0; u < m; ++u) {
            if (u == v)
                continue;
            const VertexSet row = adj[u] & ~bit(v);
            h.adj[t] = (row & low) | ((row & ~low) >> 1);
            h.members[t] = members[u];
            ++t;
        }
        return h;
    }

    // Merge v into its neighbour u.
    MinorGraph contracted(int v, int u) const
    {
        MinorGraph h = *this;
        h.adj[u] |= adj[v];
        h.adj[u] &= ~bit(u);
        for_each_vertex(adj[v] & ~bit(u), [&](int w) { h.adj[w] |= bit(u); });
        h.members[u] |= members[v];
        return h.without(v);
    }

    std::string code() const
    {
        Graph g(m);
        for (int v = 0; v < m; ++v)
            for_each_vertex(adj[v], [&](int w) {
                if (w > v)
                    g.add_edge(v, w);
            });
        return canonical_code(g);
    }
};

class CliqueMinorSearch {
public:
    explicit CliqueMinorSearch(int k) : k_(k) {}

    std::optional<BranchSets> find(const MinorGraph& h)
    {
        if (h.m < k_ || h.edge_count() < pair_count(k_))
            return std::nullopt;
        if (h.m == k_ && !h.complete())
            return std::nullopt;

        for (int v = 0; v < h.m; ++v)
            if (popcount(h.adj[v]) <= 1 && k_ >= 3)
                return find(h.without(v));

        if (h.complete()) {
            BranchSets out;
            for (int v = 0; v < k_; ++v)
                out.sets.push_back(h.members[v]);
            return out;
        }

        const std::string key = h.code();
        if (failed_.count(key))
            return std::nullopt;

        // A vertex too sparse to be a branch set alone is either unused or
        // shares its branch set with a neighbour.
        int sparse = -1;
        for (int v = 0; v < h.m && sparse < 0; ++v)
            if (popcount(h.adj[v]) < k_ - 1)
                sparse = v;
        std::vector<int> pivots;
        if (sparse >= 0) {
            pivots.push_back(sparse);
        } else {
            // Two non-adjacent vertices cannot both be singleton branch sets.
            int best_v = -1;
            int best_w = -1;
            int best_sum = 1 << 30;
            for (int v = 0; v < h.m; ++v)
                for_each_vertex(~h.adj[v] & all_vertices(h.m) & ~(bit(v + 1) - 1), [&](int w) {
                    const int sum = popcount(h.adj[v]) + popcount(h.adj[w]);
                    if (sum < best_sum) {
                        best_sum = sum;
                        best_v = v;
                        best_w = w;
                    }
                });
            pivots = {best_v, best_w};
        }

        for (int v : pivots)
            if (auto found = find(h.without(v)))
                return found;
        for (int v : pivots)
            for (VertexSet rest = h.adj[v]; rest; rest &= rest - 1)
                if (auto found = find(h.contracted(v, lowest(rest))))
                    return found;
        failed_.insert(key);
        return std::nullopt;
    }

private:
    int k_;
    std::unordered_set<std::string> failed_;
};

// Contract greedily down to a clique; the clique order bounds η from below.
inline BranchSets greedy_clique_minor(const Graph& g)
{
    MinorGraph h = MinorGraph::of(g);
    while (!h.complete()) {
        int v = 0;
        for (int u = 1; u < h.m; ++u)
            if (popcount(h.adj[u]) < popcount(h.adj[v]))
                v = u;
        if (h.adj[v] == 0) {
            h = h.without(v);
            continue;
        }
        int target = lowest(h.adj[v]);
        for_each_vertex(h.adj[v], [&](int u) {
            if (popcount(h.adj[u] & h.adj[v]) < popcount(h.adj[target] & h.adj[v]))
                target = u;
        });
        h = h.contracted(v, target);
    }
    BranchSets out;
    for (int v = 0; v < h.m; ++v)
        out.sets.push_back(h.members[v]);
    return out;
}

} // namespace detail

// Branch sets of a K_k minor, if one exists.
inline std::optional<BranchSets> find_clique_minor(const Graph& g, int k)
{
    if (k <= 1) {
        BranchSets one;
        if (k == 1)
            one.sets.push_back(bit(0));
        return one;
    }
    return detail::CliqueMinorSearch(k).find(detail::MinorGraph::of(g));
}

// Exact Hadwiger number.
inline WidthResult hadwiger(const Graph& g)
{
    BranchSets best = detail::greedy_clique_minor(g);
    const auto clique = clique_number(g);
    if (clique.value > static_cast<int>(best.sets.size())) {
        best.sets.clear();
        for_each_vertex(std::get<CliqueWitness>(clique.certificate).members,
                        [&](int v) { best.sets.push_back(bit(v)); });
    }
    for (int k = static_cast<int>(best.sets.size()) + 1;; ++k) {
        auto found = find_clique_minor(g, k);
        if (!found)
            break;
        best = std::move(*found);
    }
    return {static_cast<int>(best.sets.size()), best};
}

} // namespace ngw
