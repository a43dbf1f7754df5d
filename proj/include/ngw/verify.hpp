#pragma once

#include <ngw/bounds.hpp>
#include <ngw/constructions.hpp>
#include <ngw/graph6.hpp>
#include <ngw/ng_search.hpp>
#include <ngw/report.hpp>
#include <ngw/solve.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace ngw {

enum class VerifyLevel { smoke, desk, extended };

constexpr std::string_view verify_level_name(VerifyLevel l) noexcept
{
    switch (l) {
    case VerifyLevel::smoke: return "smoke";
    case VerifyLevel::desk: return "desk";
    case VerifyLevel::extended: return "extended";
    }
    return "?";
}

inline std::optional<VerifyLevel> parse_verify_level(std::string_view s)
{
    for (auto l : {VerifyLevel::smoke, VerifyLevel::desk, VerifyLevel::extended})
        if (verify_level_name(l) == s)
            return l;
    return std::nullopt;
}

// Sizes and sample counts per level; each level covers the one before it.
struct LevelCaps {
    int eta_sum_max_n;
    int tw_sum_max_n;
    int tw_prod_max_n;
    int eta_prod_max_n;
    std::vector<std::pair<int, int>> floor_cases;  // (r, n)
    int chain_order;
    int random_graphs;
    int mc_samples_two_parts;
    int mc_samples_three_parts;
    int symmetry_off_max_n;
};

inline LevelCaps level_caps(VerifyLevel level)
{
    switch (level) {
    case VerifyLevel::smoke:
        return {6, 6, 5, 4, {{2, 4}, {2, 5}, {3, 4}}, 5, 1000, 20, 10, 4};
    case VerifyLevel::desk:
        return {7, 7, 6, 5, {{2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}}, 6, 10000, 100, 50, 5};
    case VerifyLevel::extended:
        return {8, 8, 7, 6, {{2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 4}, {3, 5}, {3, 6}}, 7, 100000,
                400, 200, 6};
    }
    return level_caps(VerifyLevel::desk);
}

struct CheckOutcome {
    int criterion = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    // Exit code of a thrown failure: 1 internal error, 2 capacity, 3 bound
    // violation, 4 solver disagreement. A plain mismatch leaves it 0.
    int severity = 0;
    std::string witness;
};

struct VerifyReport {
    VerifyLevel level = VerifyLevel::desk;
    std::vector<CheckOutcome> checks;

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
    }

    int exit_code() const
    {
        int code = 0;
        for (const auto& c : checks)
            if (!c.passed)
                code = std::max(code, c.severity == 0 ? 3 : c.severity);
        return code;
    }
};

namespace detail {

// Collects mismatch messages for one criterion.
class Tally {
public:
    template <class T, class U>
    void expect_eq(const T& got, const U& want, const std::string& what)
    {
        ++checks_;
        if (!(got == want)) {
            std::ostringstream msg;
            msg << what << ": got " << show(got) << ", want " << show(want);
            failures_.push_back(msg.str());
        }
    }

    void expect(bool ok, const std::string& what)
    {
        ++checks_;
        if (!ok)
            failures_.push_back(what);
    }

    bool ok() const { return failures_.empty(); }

    std::string summary() const
    {
        if (failures_.empty())
            return std::to_string(checks_) + " checks";
        std::string out = std::to_string(failures_.size()) + " of " + std::to_string(checks_) + " failed";
        for (std::size_t i = 0; i < std::min<std::size_t>(failures_.size(), 5); ++i)
            out += "; " + failures_[i];
        return out;
    }

private:
    template <class T>
    static std::string show(const T& v)
    {
        if constexpr (std::is_same_v<T, ValueInterval>)
            return to_string(v);
        else if constexpr (std::is_arithmetic_v<T>)
            return std::to_string(v);
        else if constexpr (std::is_convertible_v<T, std::string>)
            return std::string(v);
        else {
            std::string out = "(";
            for (std::size_t i = 0; i < v.size(); ++i)
                out += (i ? "," : "") + std::to_string(v[i]);
            return out + ")";
        }
    }

    std::size_t checks_ = 0;
    std::vector<std::string> failures_;
};

inline std::int64_t floor_six_fifths(int n) { return 6 * n / 5; }

inline std::vector<int> part_values(const Decomposition& d, ParamKind p)
{
    std::vector<int> out;
    for (const auto& g : d.parts)
        out.push_back(static_cast<int>(parameter_value(g, p).lo));
    return out;
}

inline Graph graph_from_bits(int n, std::uint64_t mask)
{
    Graph g(n);
    for (int e = 0; e < pair_count(n); ++e)
        if ((mask >> e) & 1U)
            g.add_edge(EdgeId::from_index(e));
    return g;
}

// The exact Nordhaus-Gaddum runs of the first four criteria.
struct AnchorRun {
    int criterion;
    NGQuery query;
    std::int64_t expected;
};

inline std::vector<AnchorRun> anchor_runs(const LevelCaps& caps)
{
    std::vector<AnchorRun> runs;
    for (int n = 5; n <= caps.eta_sum_max_n; ++n)
        runs.push_back({1, {ParamKind::eta, Aggregate::sum, Direction::upper, 2, n}, floor_six_fifths(n)});
    for (int n = 4; n <= caps.tw_sum_max_n; ++n)
        runs.push_back({2, {ParamKind::tw, Aggregate::sum, Direction::lower, 2, n}, n - 2});
    for (int n = 4; n <= caps.tw_prod_max_n; ++n)
        runs.push_back({3, {ParamKind::tw, Aggregate::product, Direction::lower, 2, n, true}, n - 3});
    for (int n = 4; n <= caps.eta_prod_max_n; ++n)
        runs.push_back({4, {ParamKind::eta, Aggregate::product, Direction::lower, 2, n}, n});
    return runs;
}

inline int max_workers() { return std::max(4, static_cast<int>(std::thread::hardware_concurrency())); }

} // namespace detail

// Runs every acceptance criterion at the level's caps. Bound violations and
// solver disagreements are recorded with their severity instead of thrown.
inline VerifyReport verify_suite(VerifyLevel level, int jobs = 1,
                                 const std::function<void(const CheckOutcome&)>& progress = {})
{
    const LevelCaps caps = level_caps(level);
    VerifyReport report;
    report.level = level;
    SolverCache cache;

    auto run = [&](int criterion, std::string name, auto&& body) {
        CheckOutcome out;
        out.criterion = criterion;
        out.name = std::move(name);
        Stopwatch clock;
        detail::Tally tally;
        try {
            body(tally);
            out.passed = tally.ok();
            out.detail = tally.summary();
        } catch (const BoundViolation& e) {
            out.detail = e.what();
            out.witness = e.witness();
            out.severity = 3;
        } catch (const SolverDisagreement& e) {
            out.detail = e.what();
            out.severity = 4;
        } catch (const CapacityError& e) {
            out.detail = e.what();
            out.severity = 2;
        } catch (const std::exception& e) {
            out.detail = e.what();
            out.severity = 1;
        }
        out.seconds = clock.seconds();
        if (progress)
            progress(out);
        report.checks.push_back(std::move(out));
    };

    NGOptions options;
    options.jobs = jobs;
    options.cache = &cache;
    const auto anchors = detail::anchor_runs(caps);
    std::vector<NGResult> anchor_results(anchors.size());

    const char* anchor_names[] = {"",
                                  "eta sum upper, r=2, equals floor(6n/5)",
                                  "tw sum lower, r=2, equals n-2",
                                  "tw product lower, r=2, non-degenerate, equals n-3",
                                  "eta product lower, r=2, equals n"};
    for (int criterion = 1; criterion <= 4; ++criterion) {
        run(criterion, anchor_names[criterion], [&](detail::Tally& t) {
            for (std::size_t i = 0; i < anchors.size(); ++i) {
                if (anchors[i].criterion != criterion)
                    continue;
                anchor_results[i] = ng_exact(anchors[i].query, options);
                t.expect_eq(anchor_results[i].value, ValueInterval(anchors[i].expected),
                            "n=" + std::to_string(anchors[i].query.n));
            }
        });
    }

    run(5, "tw sum lower at least the k-tree edge-count floor", [&](detail::Tally& t) {
        for (auto [r, n] : caps.floor_cases) {
            const auto exact = ng_exact({ParamKind::tw, Aggregate::sum, Direction::lower, r, n}, options);
            t.expect(tw_sum_lower_bound(r, n).ceiling <= exact.value.lo,
                     "r=" + std::to_string(r) + " n=" + std::to_string(n) + " floor " +
                         std::to_string(tw_sum_lower_bound(r, n).ceiling) + " exceeds " +
                         to_string(exact.value));
        }
    });

    run(6, "constructions realize their bounds", [&](detail::Tally& t) {
        const auto four = four_block_decomposition(8, 3);
        t.expect(is_valid_decomposition(four.decomposition), "four-block is a decomposition");
        t.expect_eq(detail::part_values(four.decomposition, ParamKind::pw), std::vector<int>{2, 2, 2},
                    "four-block(8,3) pathwidths");
        const auto paths = path_plus_remainder_decomposition(6, 2);
        t.expect(is_valid_decomposition(paths.decomposition), "paths-plus-remainder is a decomposition");
        t.expect_eq(detail::part_values(paths.decomposition, ParamKind::ppw), std::vector<int>{1, 3},
                    "paths-plus-remainder(6,2) proper pathwidths");
        const auto blow = blowup_decomposition(6, 3);
        t.expect(is_valid_decomposition(blow.decomposition), "blowup is a decomposition");
        const auto eta = detail::part_values(blow.decomposition, ParamKind::eta);
        t.expect(std::accumulate(eta.begin(), eta.end(), 0) >= 10, "blowup(6,3) eta sum below 10");
    });

    run(7, "least product for a given sum matches exhaustive tuples", [&](detail::Tally& t) {
        for (int r = 1; r <= 4; ++r)
            for (int n = 2; n <= 6; ++n)
                for (int sigma = r; sigma <= r * n; ++sigma) {
                    std::vector<int> a(static_cast<std::size_t>(r), 1);
                    std::int64_t best = std::numeric_limits<std::int64_t>::max();
                    for (;;) {
                        int sum = 0;
                        std::int64_t prod = 1;
                        for (int x : a) {
                            sum += x;
                            prod *= x;
                        }
                        if (sum == sigma)
                            best = std::min(best, prod);
                        int i = 0;
                        while (i < r && a[i] == n)
                            a[i++] = 1;
                        if (i == r)
                            break;
                        ++a[i];
                    }
                    t.expect_eq(min_product_given_sum(r, n, sigma).min_product, best,
                                "r=" + std::to_string(r) + " n=" + std::to_string(n) +
                                    " sigma=" + std::to_string(sigma));
                }
    });

    run(8, "ratio table regeneration", [&](detail::Tally& t) {
        static const char* published[][3] = {
            {"3", "1.5", "1.73205"}, {"4", "1.33333", "2.0"}, {"5", "1.66667", "2.23607"},
            {"6", "2.0", "2.44949"}, {"7", "1.75", "2.64575"}, {"8", "2.0", "2.82843"},
            {"9", "2.25", "3.0"},    {"10", "2.5", "3.16228"},
        };
        const auto rows = table1(10);
        t.expect_eq(rows.size(), std::size(published), "row count");
        for (std::size_t i = 0; i < std::min(rows.size(), std::size(published)); ++i) {
            t.expect_eq(std::to_string(rows[i].r), std::string(published[i][0]), "r");
            t.expect_eq(format_table_value(rows[i].blowup_ratio), std::string(published[i][1]),
                        "r/t at r=" + std::to_string(rows[i].r));
            t.expect_eq(format_table_value(rows[i].sqrt_r), std::string(published[i][2]),
                        "sqrt(r) at r=" + std::to_string(rows[i].r));
        }
    });

    run(9, "solver ground truths", [&](detail::Tally& t) {
        for (int p = 2; p <= 4; ++p) {
            const auto kpp = make_graph(GraphFamily::complete_bipartite(p, p));
            t.expect_eq(pathwidth(kpp).value, p, "pw(K_{p,p}) p=" + std::to_string(p));
            t.expect_eq(hadwiger(kpp).value, p + 1, "eta(K_{s,s}) s=" + std::to_string(p));
        }
        for (int n = 1; n <= 8; ++n)
            t.expect_eq(treewidth(make_graph(GraphFamily::complete(n))).value, n - 1,
                        "tw(K_n) n=" + std::to_string(n));
        for (int n = 2; n <= solver_capacity(ParamKind::ppw); ++n)
            t.expect_eq(proper_pathwidth(make_graph(GraphFamily::path(n))).value, 1,
                        "ppw(P_n) n=" + std::to_string(n));
    });

    run(10, "width chain, pathwidth route agreement, chi <= eta", [&](detail::Tally& t) {
        const int n = caps.chain_order;
        const std::uint64_t total = std::uint64_t{1} << pair_count(n);
        std::size_t bad = 0;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const Graph g = detail::graph_from_bits(n, mask);
            const int tw = treewidth(g).value;
            const int la = largeur(g).value;
            const int pw = pathwidth(g).value;
            const int ppw = proper_pathwidth(g).value;
            const int vs = vertex_separation(g).value;
            const bool ok = tw <= la && la <= pw && pw <= ppw && la <= tw + 1 && ppw <= pw + 1 && vs == pw;
            if (!ok && bad++ < 3)
                t.expect(false, "chain fails on " + graph6_emit(g));
        }
        t.expect(bad == 0, std::to_string(bad) + " of " + std::to_string(total) + " graphs break the chain");
        std::mt19937_64 rng(2024);
        for (int i = 0; i < caps.random_graphs; ++i) {
            const int order = 1 + static_cast<int>(detail::uniform_below(rng, 7));
            Graph g(order);
            for (int e = 0; e < pair_count(order); ++e)
                if (detail::uniform_below(rng, 2))
                    g.add_edge(EdgeId::from_index(e));
            const int chi = chromatic_number(g).value;
            const int eta = hadwiger(g).value;
            if (chi > eta)
                throw BoundViolation("chromatic number " + std::to_string(chi) +
                                         " exceeds Hadwiger number " + std::to_string(eta),
                                     graph6_emit(g));
        }
        t.expect(true, "chi <= eta");
    });

    run(11, "random decompositions respect every assertable bound", [&](detail::Tally& t) {
        for (ParamKind p : {ParamKind::tw, ParamKind::la, ParamKind::pw, ParamKind::ppw, ParamKind::eta}) {
            const auto two = monte_carlo(p, 2, 10, caps.mc_samples_two_parts, 3, jobs, &cache);
            const auto three = monte_carlo(p, 3, 8, caps.mc_samples_three_parts, 1, jobs, &cache);
            t.expect(two.bound_checks > 0 && three.bound_checks > 0,
                     std::string(param_name(p)) + " ran no bound checks");
            if (p == ParamKind::tw)
                t.expect(two.sum_lo.min >= 8, "tw sum below n-2 at r=2, n=10");
            if (p == ParamKind::eta)
                t.expect(three.product_lo.min >= 0.513 * 8, "eta product below 0.513 n at r=3, n=8");
        }
    });

    run(12, "symmetry and worker count leave values and witnesses unchanged", [&](detail::Tally& t) {
        for (std::size_t i = 0; i < anchors.size(); ++i) {
            const auto& q = anchors[i].query;
            const auto& reference = anchor_results[i];
            const std::string label = "criterion " + std::to_string(anchors[i].criterion) +
                                      " n=" + std::to_string(q.n);
            NGOptions parallel = options;
            parallel.jobs = detail::max_workers();
            const auto many = ng_exact(q, parallel);
            t.expect_eq(many.value, reference.value, label + " parallel value");
            t.expect(many.witness == reference.witness, label + " parallel witness differs");
            if (q.n > caps.symmetry_off_max_n)
                continue;
            for (SymmetryMode m : {SymmetryMode::none, SymmetryMode::vertices}) {
                NGOptions other = options;
                other.symmetry = m;
                const auto res = ng_exact(q, other);
                t.expect_eq(res.value, reference.value, label + " " + std::string(symmetry_name(m)));
                t.expect(res.witness == reference.witness,
                         label + " witness differs under " + std::string(symmetry_name(m)));
            }
        }
    });

    return report;
}

inline Json verify_report_json(const VerifyReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json j{{"criterion", c.criterion},
               {"name", c.name},
               {"passed", c.passed},
               {"detail", c.detail}};
        if (!c.witness.empty())
            j["witness"] = c.witness;
        checks.push_back(std::move(j));
    }
    return Json{{"level", verify_level_name(r.level)}, {"passed", r.passed()}, {"checks", checks}};
}

} // namespace ngw
