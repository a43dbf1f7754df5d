#pragma once

#include <ngw/certificate.hpp>
#include <ngw/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace ngw {

namespace detail {

// All subsets of `pool` with exactly `size` members, ascending as integers.
inline std::vector<VertexSet> subsets_of_size(VertexSet pool, int size)
{
    std::vector<VertexSet> out;
    std::vector<int> members;
    for_each_vertex(pool, [&](int v) { members.push_back(v); });
    const int m = static_cast<int>(members.size());
    if (size > m)
        return out;
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i)
        pick[i] = i;
    for (;;) {
        VertexSet s = 0;
        for (int i : pick)
            s |= bit(members[i]);
        out.push_back(s);
        int i = size - 1;
        while (i >= 0 && pick[i] == m - size + i)
            --i;
        if (i < 0)
            break;
        ++pick[i];
        for (int j = i + 1; j < size; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> members_of(VertexSet s)
{
    std::vector<int> out;
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

// Search for a path-like host: each new vertex w joins the current maximal
// clique minus one dropped vertex x. With `linear`, x must differ from the
// previously added vertex.
class PathHostSearch {
public:
    PathHostSearch(const Graph& g, int k, bool linear) : g_(g), k_(k), linear_(linear) {}

    std::optional<KTreeHost> run()
    {
        const int n = g_.order();
        if (k_ + 1 > n)
            return std::nullopt;
        for (VertexSet seed : subsets_of_size(g_.vertices(), k_ + 1)) {
            steps_.clear();
            if (extend(seed, seed, -1)) {
                KTreeHost host;
                host.shape = linear_ ? KTreeHost::Shape::linear : KTreeHost::Shape::caterpillar;
                host.k = k_;
                host.seed = members_of(seed);
                host.steps = steps_;
                return host;
            }
        }
        return std::nullopt;
    }

private:
    bool extend(VertexSet placed, VertexSet bag, int previous)
    {
        if (placed == g_.vertices())
            return true;
        const std::uint64_t key = placed | (std::uint64_t{bag} << 16) |
                                  (std::uint64_t(previous + 1) << 32);
        if (failed_.count(key))
            return false;
        const VertexSet open = g_.vertices() & ~placed;
        for (VertexSet rest = bag; rest; rest &= rest - 1) {
            const int x = lowest(rest);
            if (linear_ && x == previous)
                continue;
            if (g_.row(x) & open)
                continue;
            const VertexSet facet = bag & ~bit(x);
            for (VertexSet cand = open; cand; cand &= cand - 1) {
                const int w = lowest(cand);
                if (g_.row(w) & placed & ~facet)
                    continue;
                steps_.push_back({w, facet});
                if (extend(placed | bit(w), facet | bit(w), w))
                    return true;
                steps_.pop_back();
            }
        }
        failed_.insert(key);
        return false;
    }

    const Graph& g_;
    int k_;
    bool linear_;
    std::vector<KTreeHost::Step> steps_;
    std::unordered_set<std::uint64_t> failed_;
};

// Search for a two-sided host: w may attach to a host k-clique C when C
// contains a vertex of current degree k or some earlier vertex attached to C.
class TwoSidedHostSearch {
public:
    TwoSidedHostSearch(const Graph& g, int k) : g_(g), k_(k) {}

    std::optional<KTreeHost> run()
    {
        const int n = g_.order();
        if (k_ + 1 > n)
            return std::nullopt;
        for (VertexSet seed : subsets_of_size(g_.vertices(), k_ + 1)) {
            State state;
            state.placed = seed;
            for (VertexSet facet : subsets_of_size(seed, k_))
                state.cliques.emplace(facet, false);
            for_each_vertex(seed, [&](int v) { state.degree[v] = k_; });
            steps_.clear();
            if (extend(state)) {
                KTreeHost host;
                host.shape = KTreeHost::Shape::two_sided;
                host.k = k_;
                host.seed = members_of(seed);
                host.steps = steps_;
                return host;
            }
        }
        return std::nullopt;
    }

private:
    struct State {
        VertexSet placed = 0;
        std::map<VertexSet, bool> cliques;  // host k-clique -> some vertex attached to it
        std::array<int, kDefaultCapacity> degree{};
    };

    static std::string key_of(const State& s)
    {
        std::string key(reinterpret_cast<const char*>(&s.placed), sizeof s.placed);
        for (const auto& [clique, used] : s.cliques) {
            VertexSet tagged = clique | (used ? bit(31) : 0);
            key.append(reinterpret_cast<const char*>(&tagged), sizeof tagged);
        }
        for (int d : s.degree)
            key.push_back(static_cast<char>(d));
        return key;
    }

    bool hopeless(const State& s) const
    {
        bool stuck = false;
        for_each_vertex(g_.vertices() & ~s.placed, [&](int w) {
            if (stuck)
                return;
            const VertexSet need = g_.row(w) & s.placed;
            bool fits = false;
            for (const auto& entry : s.cliques)
                if ((need & ~entry.first) == 0) {
                    fits = true;
                    break;
                }
            stuck = !fits;
        });
        return stuck;
    }

    bool extend(State& s)
    {
        if (s.placed == g_.vertices())
            return true;
        if (hopeless(s))
            return false;
        const std::string key = key_of(s);
        if (failed_.count(key))
            return false;

        std::vector<std::pair<VertexSet, bool>> attachable;
        for (const auto& [clique, used] : s.cliques) {
            bool has_low = false;
            for_each_vertex(clique, [&](int v) { has_low = has_low || s.degree[v] == k_; });
            if (used || has_low)
                attachable.emplace_back(clique, used);
        }
        const VertexSet open = g_.vertices() & ~s.placed;
        for (VertexSet cand = open; cand; cand &= cand - 1) {
            const int w = lowest(cand);
            const VertexSet need = g_.row(w) & s.placed;
            for (const auto& [clique, used] : attachable) {
                if (need & ~clique)
                    continue;
                State next = s;
                next.placed |= bit(w);
                next.cliques[clique] = true;
                for_each_vertex(clique, [&](int u) {
                    next.cliques.emplace((clique & ~bit(u)) | bit(w), false);
                    ++next.degree[u];
                });
                next.degree[w] = k_;
                steps_.push_back({w, clique});
                if (extend(next))
                    return true;
                steps_.pop_back();
            }
        }
        failed_.insert(key);
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<KTreeHost::Step> steps_;
    std::unordered_set<std::string> failed_;
};

} // namespace detail

// A k-caterpillar on the vertices of g containing g, if one exists.
inline std::optional<KTreeHost> find_caterpillar_host(const Graph& g, int k)
{
    return detail::PathHostSearch(g, k, false).run();
}

// A linear k-tree on the vertices of g containing g, if one exists.
inline std::optional<KTreeHost> find_linear_host(const Graph& g, int k)
{
    return detail::PathHostSearch(g, k, true).run();
}

// A two-sided k-tree on the vertices of g containing g, if one exists.
inline std::optional<KTreeHost> find_two_sided_host(const Graph& g, int k)
{
    return detail::TwoSidedHostSearch(g, k).run();
}

} // namespace ngw
