#pragma once

#include <ngw/graph.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

namespace ngw {

namespace detail {

// Individualization-refinement search for a canonical labelling. Leaves of
// the search tree are discrete ordered partitions; the canonical form is the
// lexicographically least relabelled adjacency matrix over all leaves.
// Automorphisms found along the way prune the tree in two ways: children of a
// node lying in one orbit of the pointwise stabilizer of its prefix are
// explored once, and a leaf equivalent to the first or best leaf backjumps to
// the deepest common ancestor.
template <int Capacity>
class CanonicalSearch {
public:
    using Rows = std::array<VertexSet, Capacity>;
    using Perm = std::array<std::int8_t, Capacity>;

    explicit CanonicalSearch(const BasicGraph<Capacity>& g) : g_(g), n_(g.order()) {}

    Rows run()
    {
        std::vector<VertexSet> cells{g_.vertices()};
        std::vector<int> path;
        search(cells, path);
        return best_rows_;
    }

    const Perm& best_labelling() const { return best_lab_; }

private:
    static constexpr int kNoJump = -1;
    static constexpr std::size_t kMaxAutomorphisms = 128;

    void refine(std::vector<VertexSet>& cells) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
                const VertexSet splitter = cells[s];
                for (std::size_t c = 0; c < cells.size() && !changed; ++c) {
                    const VertexSet cell = cells[c];
                    if (popcount(cell) == 1)
                        continue;
                    std::array<VertexSet, Capacity + 1> by_count{};
                    int distinct = 0;
                    for_each_vertex(cell, [&](int v) {
                        const int k = popcount(g_.row(v) & splitter);
                        if (by_count[k] == 0)
                            ++distinct;
                        by_count[k] |= bit(v);
                    });
                    if (distinct < 2)
                        continue;
                    std::vector<VertexSet> pieces;
                    for (VertexSet piece : by_count)
                        if (piece)
                            pieces.push_back(piece);
                    cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                    cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(),
                                 pieces.end());
                    changed = true;
                }
            }
        }
    }

    Perm labelling_of(const std::vector<VertexSet>& cells) const
    {
        Perm lab{};
        for (std::size_t p = 0; p < cells.size(); ++p)
            lab[lowest(cells[p])] = static_cast<std::int8_t>(p);
        return lab;
    }

    Rows rows_under(const Perm& lab) const
    {
        Rows rows{};
        for (int v = 0; v < n_; ++v) {
            VertexSet r = 0;
            for_each_vertex(g_.row(v), [&](int u) { r |= bit(lab[u]); });
            rows[lab[v]] = r;
        }
        return rows;
    }

    static int common_prefix(const std::vector<int>& a, const std::vector<int>& b)
    {
        const std::size_t m = std::min(a.size(), b.size());
        std::size_t i = 0;
        while (i < m && a[i] == b[i])
            ++i;
        return static_cast<int>(i);
    }

    void record_automorphism(const Perm& from, const Perm& to)
    {
        if (automorphisms_.size() >= kMaxAutomorphisms)
            return;
        Perm inverse_to{};
        for (int v = 0; v < n_; ++v)
            inverse_to[to[v]] = static_cast<std::int8_t>(v);
        Perm gamma{};
        for (int v = 0; v < n_; ++v)
            gamma[v] = inverse_to[from[v]];
        automorphisms_.push_back(gamma);
    }

    int leaf(const std::vector<VertexSet>& cells, const std::vector<int>& path)
    {
        const Perm lab = labelling_of(cells);
        Rows rows = rows_under(lab);
        if (!have_leaf_) {
            have_leaf_ = true;
            first_rows_ = best_rows_ = rows;
            first_lab_ = best_lab_ = lab;
            first_path_ = best_path_ = path;
            return kNoJump;
        }
        if (rows == first_rows_) {
            record_automorphism(lab, first_lab_);
            return common_prefix(path, first_path_);
        }
        if (rows == best_rows_) {
            record_automorphism(lab, best_lab_);
            return common_prefix(path, best_path_);
        }
        if (std::lexicographical_compare(rows.begin(), rows.begin() + n_, best_rows_.begin(),
                                         best_rows_.begin() + n_)) {
            best_rows_ = rows;
            best_lab_ = lab;
            best_path_ = path;
        }
        return kNoJump;
    }

    int find(std::array<int, Capacity>& parent, int v) const
    {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    }

    // Orbit representatives under the recorded automorphisms fixing `path`.
    std::array<int, Capacity> stabilizer_orbits(const std::vector<int>& path) const
    {
        std::array<int, Capacity> parent{};
        std::iota(parent.begin(), parent.end(), 0);
        for (const Perm& gamma : automorphisms_) {
            bool fixes = true;
            for (int p : path)
                fixes = fixes && gamma[p] == p;
            if (!fixes)
                continue;
            for (int v = 0; v < n_; ++v) {
                const int a = find(parent, v);
                const int b = find(parent, gamma[v]);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (int v = 0; v < n_; ++v)
            parent[v] = find(parent, v);
        return parent;
    }

    int search(std::vector<VertexSet> cells, std::vector<int>& path)
    {
        refine(cells);
        if (static_cast<int>(cells.size()) == n_)
            return leaf(cells, path);

        std::size_t target = 0;
        while (popcount(cells[target]) == 1)
            ++target;
        const VertexSet cell = cells[target];
        const int depth = static_cast<int>(path.size());

        VertexSet explored_roots = 0;
        for (VertexSet rest = cell; rest; rest &= rest - 1) {
            const int v = lowest(rest);
            if (!automorphisms_.empty()) {
                const auto orbit = stabilizer_orbits(path);
                if (explored_roots & bit(orbit[v]))
                    continue;
            }
            std::vector<VertexSet> child = cells;
            child[target] = cell & ~bit(v);
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), bit(v));
            path.push_back(v);
            const int jump = search(std::move(child), path);
            path.pop_back();
            const auto orbit = stabilizer_orbits(path);
            explored_roots |= bit(orbit[v]);
            // Earlier-explored roots may have merged into new orbits.
            VertexSet normalized = 0;
            for_each_vertex(explored_roots, [&](int u) { normalized |= bit(orbit[u]); });
            explored_roots = normalized;
            if (jump != kNoJump && jump < depth)
                return jump;
        }
        return kNoJump;
    }

    const BasicGraph<Capacity>& g_;
    int n_;
    bool have_leaf_ = false;
    Rows first_rows_{};
    Rows best_rows_{};
    Perm first_lab_{};
    Perm best_lab_{};
    std::vector<int> first_path_;
    std::vector<int> best_path_;
    std::vector<Perm> automorphisms_;
};

} // namespace detail

// Byte string equal for two graphs iff they are isomorphic.
template <int Capacity>
std::string canonical_code(const BasicGraph<Capacity>& g)
{
    const int n = g.order();
    detail::CanonicalSearch<Capacity> search(g);
    const auto rows = search.run();
    const int row_bytes = (n + 7) / 8;
    std::string code;
    code.reserve(1 + static_cast<std::size_t>(n * row_bytes));
    code.push_back(static_cast<char>(n));
    for (int p = 0; p < n; ++p)
        for (int b = 0; b < row_bytes; ++b)
            code.push_back(static_cast<char>((rows[p] >> (8 * b)) & 0xFF));
    return code;
}

// The graph relabelled into its canonical form.
template <int Capacity>
BasicGraph<Capacity> canonical_form(const BasicGraph<Capacity>& g)
{
    detail::CanonicalSearch<Capacity> search(g);
    const auto rows = search.run();
    BasicGraph<Capacity> out(g.order());
    for (int p = 0; p < g.order(); ++p)
        for_each_vertex(rows[p], [&](int q) {
            if (q > p)
                out.add_edge(p, q);
        });
    return out;
}

} // namespace ngw
