#pragma once

#include <ngw/bounds.hpp>
#include <ngw/decomposition.hpp>
#include <ngw/graph6.hpp>
#include <ngw/solve.hpp>
#include <ngw/solver_cache.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace ngw {

// Group acting on edge colourings of K_n during enumeration.
enum class SymmetryMode { none, vertices, vertices_and_colors };

constexpr std::string_view symmetry_name(SymmetryMode m) noexcept
{
    switch (m) {
    case SymmetryMode::none: return "none";
    case SymmetryMode::vertices: return "vertices";
    case SymmetryMode::vertices_and_colors: return "vertices_and_colors";
    }
    return "?";
}

inline std::optional<SymmetryMode> parse_symmetry(std::string_view s)
{
    for (auto m : {SymmetryMode::none, SymmetryMode::vertices, SymmetryMode::vertices_and_colors})
        if (symmetry_name(m) == s)
            return m;
    return std::nullopt;
}

inline constexpr std::uint64_t kDefaultMaxStates = std::uint64_t{1} << 22;

// Ceiling on estimated enumeration states; NGW_MAX_STATES overrides it.
inline std::uint64_t max_states_from_environment()
{
    if (const char* env = std::getenv("NGW_MAX_STATES")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return kDefaultMaxStates;
}

// r^C(n,2) divided by the order of the acting group.
inline double estimated_states(int n, int r, SymmetryMode mode)
{
    double est = std::pow(static_cast<double>(r), static_cast<double>(pair_count(n)));
    if (mode != SymmetryMode::none)
        for (int i = 2; i <= n; ++i)
            est /= i;
    if (mode == SymmetryMode::vertices_and_colors)
        for (int i = 2; i <= r; ++i)
            est /= i;
    return std::max(est, 1.0);
}

struct NGOptions {
    SymmetryMode symmetry = SymmetryMode::vertices_and_colors;
    // 0 means one worker per hardware thread.
    int jobs = 1;
    std::optional<std::uint64_t> max_states;
    // Completed work units are appended here and skipped on a rerun.
    std::string checkpoint_path;
    SolverCache* cache = nullptr;
};

struct NGResult {
    ValueInterval value;
    // Lexicographically least colouring optimal for the lower end; `witness_hi`
    // is the same for the upper end and equals `witness` for exact parameters.
    Decomposition witness;
    Decomposition witness_hi;
    std::uint64_t states_explored = 0;
    SymmetryMode symmetry = SymmetryMode::vertices_and_colors;
    std::size_t work_units = 0;
    std::size_t resumed_units = 0;
};

namespace detail {

using ColourMatrix = std::array<std::array<std::uint8_t, kDefaultCapacity>, kDefaultCapacity>;

// Decides whether a colouring of K_m is the lexicographic minimum of its orbit
// in colex order. Vertex images are chosen one column at a time; with colour
// symmetry the best colour renaming for a fixed vertex order numbers colours
// by first appearance, so it is built alongside.
class CanonicityCheck {
public:
    CanonicityCheck(const ColourMatrix& col, int m, bool colours)
        : col_(col), m_(m), colours_(colours) {}

    bool canonical()
    {
        std::array<std::uint8_t, 256> rename;
        rename.fill(kUnset);
        used_ = 0;
        return !smaller_exists(0, rename, 0);
    }

private:
    static constexpr std::uint8_t kUnset = 0xFF;

    bool smaller_exists(int j, const std::array<std::uint8_t, 256>& rename, int next)
    {
        if (j == m_)
            return false;
        for (int v = 0; v < m_; ++v) {
            if (used_ & bit(v))
                continue;
            auto local = rename;
            int local_next = next;
            bool larger = false;
            for (int i = 0; i < j; ++i) {
                std::uint8_t x = col_[image_[i]][v];
                if (colours_) {
                    if (local[x] == kUnset)
                        local[x] = static_cast<std::uint8_t>(local_next++);
                    x = local[x];
                }
                const std::uint8_t target = col_[i][j];
                if (x < target)
                    return true;
                if (x > target) {
                    larger = true;
                    break;
                }
            }
            if (larger)
                continue;
            image_[j] = v;
            used_ |= bit(v);
            const bool found = smaller_exists(j + 1, local, local_next);
            used_ &= ~bit(v);
            if (found)
                return true;
        }
        return false;
    }

    const ColourMatrix& col_;
    int m_;
    bool colours_;
    VertexSet used_ = 0;
    std::array<int, kDefaultCapacity> image_{};
};

// Orderly generation: a colouring of K_{m+1} is kept only if canonical, and
// restricting a canonical colouring to its first m vertices stays canonical,
// so extending canonical colourings vertex by vertex reaches every orbit once.
// Colourings are produced in lexicographic colex order.
class ColouringWalk {
public:
    ColouringWalk(int n, int r, bool nondegenerate, SymmetryMode mode)
        : n_(n), r_(r), nondegenerate_(nondegenerate), mode_(mode), counts_(r, 0) {}

    // Start from a canonical colouring of K_m given in colex order.
    void load(const EdgeColouring& prefix)
    {
        colex_ = prefix;
        std::fill(counts_.begin(), counts_.end(), 0);
        for (int e = 0; e < static_cast<int>(prefix.size()); ++e) {
            const EdgeId id = EdgeId::from_index(e);
            col_[id.i][id.j] = col_[id.j][id.i] = prefix[e];
            ++counts_[prefix[e]];
        }
        m_ = 1;
        while (pair_count(m_) < static_cast<int>(prefix.size()))
            ++m_;
    }

    // Calls fn(colex colouring) for every kept colouring of K_target.
    template <class Fn>
    void walk(int target, Fn&& fn)
    {
        if (m_ == target) {
            if (!nondegenerate_ || target < n_ || all_colours_used())
                fn(static_cast<const EdgeColouring&>(colex_));
            return;
        }
        const int v = m_;
        std::vector<int> digits(static_cast<std::size_t>(v), 0);
        for (;;) {
            for (int i = 0; i < v; ++i) {
                const auto c = static_cast<std::uint8_t>(digits[i]);
                col_[i][v] = col_[v][i] = c;
                colex_.push_back(c);
                ++counts_[c];
            }
            m_ = v + 1;
            if (feasible() && kept()) {
                ++states_;
                walk(target, fn);
            }
            m_ = v;
            for (int i = v - 1; i >= 0; --i) {
                --counts_[colex_.back()];
                colex_.pop_back();
            }
            int pos = v - 1;
            while (pos >= 0 && digits[pos] == r_ - 1)
                digits[pos--] = 0;
            if (pos < 0)
                return;
            ++digits[pos];
        }
    }

    std::uint64_t states() const noexcept { return states_; }

private:
    bool all_colours_used() const
    {
        return std::all_of(counts_.begin(), counts_.end(), [](int c) { return c > 0; });
    }

    // Enough uncoloured edges remain to use every colour.
    bool feasible() const
    {
        if (!nondegenerate_)
            return true;
        const auto missing = std::count(counts_.begin(), counts_.end(), 0);
        return missing <= pair_count(n_) - pair_count(m_);
    }

    bool kept()
    {
        if (mode_ == SymmetryMode::none)
            return true;
        CanonicityCheck check(col_, m_, mode_ == SymmetryMode::vertices_and_colors);
        return check.canonical();
    }

    int n_;
    int r_;
    bool nondegenerate_;
    SymmetryMode mode_;
    std::vector<int> counts_;
    ColourMatrix col_{};
    EdgeColouring colex_;
    int m_ = 1;
    std::uint64_t states_ = 0;
};

inline void check_enumeration(int n, int r, bool nondegenerate, SymmetryMode mode,
                              std::optional<std::uint64_t> max_states)
{
    if (n < 1 || r < 1)
        throw DomainError("enumeration needs n >= 1 and r >= 1");
    if (n > kDefaultCapacity)
        throw CapacityError("enumeration supports at most 16 vertices");
    if (r > 255)
        throw CapacityError("at most 255 parts are supported");
    if (nondegenerate && r > pair_count(n))
        throw InfeasibleError("no non-degenerate " + std::to_string(r) + "-decomposition of K_" +
                              std::to_string(n) + ": only " + std::to_string(pair_count(n)) +
                              " edges");
    const double est = estimated_states(n, r, mode);
    const auto ceiling = max_states.value_or(max_states_from_environment());
    if (est > static_cast<double>(ceiling)) {
        std::ostringstream msg;
        msg << "enumeration of " << r << "-decompositions of K_" << n << " under symmetry "
            << symmetry_name(mode) << " needs about " << est << " states, ceiling is " << ceiling
            << " (raise NGW_MAX_STATES to allow)";
        throw CapacityError(msg.str());
    }
}

} // namespace detail

// Calls fn(decomposition) once per colouring, or once per orbit with symmetry.
// Returns the number of decompositions produced.
template <class Fn>
std::uint64_t enumerate_decompositions(int n, int r, bool nondegenerate, SymmetryMode mode, Fn&& fn,
                                       std::optional<std::uint64_t> max_states = std::nullopt)
{
    detail::check_enumeration(n, r, nondegenerate, mode, max_states);
    detail::ColouringWalk walk(n, r, nondegenerate, mode);
    walk.load({});
    std::uint64_t produced = 0;
    walk.walk(n, [&](const EdgeColouring& c) {
        ++produced;
        fn(decomposition_from_colouring(n, r, c));
    });
    return produced;
}

inline std::uint64_t count_decompositions(int n, int r, bool nondegenerate, SymmetryMode mode,
                                          std::optional<std::uint64_t> max_states = std::nullopt)
{
    detail::check_enumeration(n, r, nondegenerate, mode, max_states);
    detail::ColouringWalk walk(n, r, nondegenerate, mode);
    walk.load({});
    std::uint64_t produced = 0;
    walk.walk(n, [&](const EdgeColouring&) { ++produced; });
    return produced;
}

inline std::int64_t aggregate_values(Aggregate a, const std::vector<std::int64_t>& values)
{
    std::int64_t acc = a == Aggregate::sum ? 0 : 1;
    for (auto v : values) {
        if (a == Aggregate::sum)
            acc += v;
        else if (__builtin_mul_overflow(acc, v, &acc))
            throw CapacityError("product of part values overflows 64 bits");
    }
    return acc;
}

// Aggregate of the parts' values, end by end for interval parameters.
inline ValueInterval aggregate_parts(Aggregate a, const std::vector<ValueInterval>& parts)
{
    std::vector<std::int64_t> lo;
    std::vector<std::int64_t> hi;
    for (const auto& v : parts) {
        lo.push_back(v.lo);
        hi.push_back(v.hi);
    }
    return {aggregate_values(a, lo), aggregate_values(a, hi)};
}

namespace detail {

struct UnitResult {
    bool found = false;
    std::int64_t lo = 0;
    EdgeColouring lo_colouring;
    std::int64_t hi = 0;
    EdgeColouring hi_colouring;
    std::uint64_t states = 0;
};

inline bool improves(Direction d, std::int64_t candidate, std::int64_t incumbent)
{
    return d == Direction::upper ? candidate > incumbent : candidate < incumbent;
}

// Fold `next` into `acc`; on ties the earlier unit, which holds the
// lexicographically smaller colourings, wins.
inline void merge_unit(Direction d, UnitResult& acc, const UnitResult& next)
{
    acc.states += next.states;
    if (!next.found)
        return;
    if (!acc.found || improves(d, next.lo, acc.lo)) {
        acc.lo = next.lo;
        acc.lo_colouring = next.lo_colouring;
    }
    if (!acc.found || improves(d, next.hi, acc.hi)) {
        acc.hi = next.hi;
        acc.hi_colouring = next.hi_colouring;
    }
    acc.found = true;
}

inline std::string colouring_text(const EdgeColouring& c)
{
    if (c.empty())
        return "-";
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (auto x : c) {
        out.push_back(kHex[x >> 4]);
        out.push_back(kHex[x & 15]);
    }
    return out;
}

inline std::optional<EdgeColouring> parse_colouring_text(const std::string& s)
{
    if (s == "-")
        return EdgeColouring{};
    if (s.size() % 2 != 0)
        return std::nullopt;
    EdgeColouring out;
    for (std::size_t i = 0; i < s.size(); i += 2) {
        unsigned v = 0;
        for (int k = 0; k < 2; ++k) {
            const char ch = s[i + k];
            v <<= 4;
            if (ch >= '0' && ch <= '9')
                v |= static_cast<unsigned>(ch - '0');
            else if (ch >= 'a' && ch <= 'f')
                v |= static_cast<unsigned>(ch - 'a' + 10);
            else
                return std::nullopt;
        }
        out.push_back(static_cast<std::uint8_t>(v));
    }
    return out;
}

inline constexpr std::string_view kCheckpointHeader = "ngw-checkpoint v1";

inline std::string checkpoint_query_line(const NGQuery& q, SymmetryMode mode, std::size_t units)
{
    std::ostringstream line;
    line << "query " << param_name(q.param) << ' ' << aggregate_name(q.aggregate) << ' '
         << direction_name(q.direction) << ' ' << q.r << ' ' << q.n << ' '
         << (q.nondegenerate ? 1 : 0) << ' ' << symmetry_name(mode) << ' ' << units;
    return line.str();
}

// Completed units recorded in a checkpoint for the same query; a torn last
// line is ignored.
inline std::map<std::size_t, UnitResult> read_checkpoint(const std::string& path,
                                                         const std::string& query_line)
{
    std::map<std::size_t, UnitResult> done;
    std::ifstream in(path);
    if (!in)
        return done;
    std::string line;
    if (!std::getline(in, line) || line != kCheckpointHeader)
        throw ParseError("checkpoint " + path + " has no version header", 0);
    if (!std::getline(in, line) || line != query_line)
        throw DomainError("checkpoint " + path + " belongs to a different query");
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string tag, lo_text, hi_text, end;
        std::size_t id = 0;
        UnitResult u;
        int found = 0;
        if (!(fields >> tag >> id >> u.states >> found >> u.lo >> lo_text >> u.hi >> hi_text >> end) ||
            tag != "unit" || end != ".")
            continue;
        auto lo_c = parse_colouring_text(lo_text);
        auto hi_c = parse_colouring_text(hi_text);
        if (!lo_c || !hi_c)
            continue;
        u.found = found != 0;
        u.lo_colouring = std::move(*lo_c);
        u.hi_colouring = std::move(*hi_c);
        done[id] = std::move(u);
    }
    return done;
}

inline std::string checkpoint_unit_line(std::size_t id, const UnitResult& u)
{
    std::ostringstream line;
    line << "unit " << id << ' ' << u.states << ' ' << (u.found ? 1 : 0) << ' ' << u.lo << ' '
         << colouring_text(u.lo_colouring) << ' ' << u.hi << ' ' << colouring_text(u.hi_colouring)
         << " .";
    return line.str();
}

inline int worker_count(int jobs, std::size_t tasks)
{
    int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(workers, 1);
    return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), std::max<std::size_t>(tasks, 1)));
}

// Runs task(i) for i in [0, count) on `workers` threads pulling indices from a
// shared counter. The first exception stops further pulls and is rethrown.
template <class Task>
void run_parallel(std::size_t count, int workers, Task&& task)
{
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            if (failed.load())
                return;
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed = true;
                return;
            }
        }
    };
    if (workers <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(body);
        for (auto& t : pool)
            t.join();
    }
    if (error)
        std::rethrow_exception(error);
}

} // namespace detail

// Exact Nordhaus-Gaddum value of the query over all (or all non-degenerate)
// r-decompositions of K_n. Work is split into the kept colourings of the
// first few vertices; the result does not depend on the worker count.
inline NGResult ng_exact(const NGQuery& q, const NGOptions& options = {})
{
    detail::check_enumeration(q.n, q.r, q.nondegenerate, options.symmetry, options.max_states);
    if (q.n > solver_capacity(q.param))
        throw CapacityError(std::string(param_name(q.param)) + " solver accepts at most " +
                            std::to_string(solver_capacity(q.param)) + " vertices");

    SolverCache local_cache;
    SolverCache& cache = options.cache ? *options.cache : local_cache;

    const int split = std::min(q.n, 4);
    std::vector<EdgeColouring> prefixes;
    detail::ColouringWalk prefix_walk(q.n, q.r, q.nondegenerate, options.symmetry);
    prefix_walk.load({});
    prefix_walk.walk(split, [&](const EdgeColouring& c) { prefixes.push_back(c); });

    const std::string query_line = detail::checkpoint_query_line(q, options.symmetry, prefixes.size());
    std::map<std::size_t, detail::UnitResult> resumed;
    std::unique_ptr<std::ofstream> checkpoint;
    std::mutex checkpoint_mutex;
    if (!options.checkpoint_path.empty()) {
        resumed = detail::read_checkpoint(options.checkpoint_path, query_line);
        const bool fresh = !std::ifstream(options.checkpoint_path).good();
        checkpoint = std::make_unique<std::ofstream>(options.checkpoint_path, std::ios::app);
        if (!*checkpoint)
            throw DomainError("cannot write checkpoint " + options.checkpoint_path);
        if (fresh)
            *checkpoint << detail::kCheckpointHeader << '\n' << query_line << '\n' << std::flush;
    }

    std::vector<detail::UnitResult> units(prefixes.size());
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        if (auto it = resumed.find(i); it != resumed.end())
            units[i] = it->second;
        else
            pending.push_back(i);
    }

    auto run_unit = [&](std::size_t k) {
        const std::size_t id = pending[k];
        detail::ColouringWalk walk(q.n, q.r, q.nondegenerate, options.symmetry);
        walk.load(prefixes[id]);
        detail::UnitResult u;
        walk.walk(q.n, [&](const EdgeColouring& c) {
            const auto d = decomposition_from_colouring(q.n, q.r, c);
            std::vector<ValueInterval> parts;
            for (const auto& g : d.parts)
                parts.push_back(cache.value(g, q.param));
            const auto v = aggregate_parts(q.aggregate, parts);
            if (!u.found || detail::improves(q.direction, v.lo, u.lo)) {
                u.lo = v.lo;
                u.lo_colouring = c;
            }
            if (!u.found || detail::improves(q.direction, v.hi, u.hi)) {
                u.hi = v.hi;
                u.hi_colouring = c;
            }
            u.found = true;
        });
        u.states = walk.states();
        units[id] = std::move(u);
        if (checkpoint) {
            std::lock_guard lock(checkpoint_mutex);
            *checkpoint << detail::checkpoint_unit_line(id, units[id]) << '\n' << std::flush;
        }
    };
    detail::run_parallel(pending.size(), detail::worker_count(options.jobs, pending.size()), run_unit);

    detail::UnitResult total;
    for (const auto& u : units)
        detail::merge_unit(q.direction, total, u);
    if (!total.found)
        throw InfeasibleError("no decomposition matches the query");

    NGResult out;
    out.value = ValueInterval(total.lo, total.hi);
    out.witness = decomposition_from_colouring(q.n, q.r, total.lo_colouring);
    out.witness_hi = decomposition_from_colouring(q.n, q.r, total.hi_colouring);
    out.states_explored = prefix_walk.states() + total.states;
    out.symmetry = options.symmetry;
    out.work_units = prefixes.size();
    out.resumed_units = resumed.size();
    return out;
}

// Degenerate value from non-degenerate values at ell = 1..min(r, C(n,2)) parts:
// the extreme over ell of v(ell) + (r - ell) b for sums and v(ell) b^(r - ell)
// for products, b being the value on the edgeless graph.
inline ValueInterval degenerate_adjust(ParamKind param, Aggregate aggregate, Direction direction,
                                       int r, int n,
                                       const std::map<int, ValueInterval>& nondegenerate_values)
{
    if (r < 1 || n < 1)
        throw DomainError("degenerate adjustment needs r >= 1 and n >= 1");
    const std::int64_t b = edgeless_value(param, n);
    const int edges = pair_count(n);
    if (edges == 0)
        return aggregate == Aggregate::sum ? ValueInterval(r * b) : ValueInterval(detail::ipow(b, r));

    const int top = std::min(r, edges);
    // Some part can be edgeless, and values are nonnegative.
    if (aggregate == Aggregate::product && b == 0 && direction == Direction::lower && r >= 2)
        return ValueInterval(0);
    std::optional<ValueInterval> best;
    for (int ell = 1; ell <= top; ++ell) {
        ValueInterval term;
        if (aggregate == Aggregate::product && b == 0 && ell < r) {
            term = ValueInterval(0);
        } else {
            const auto it = nondegenerate_values.find(ell);
            if (it == nondegenerate_values.end())
                throw DomainError("missing non-degenerate value for " + std::to_string(ell) +
                                  " parts");
            const ValueInterval v = it->second;
            if (aggregate == Aggregate::sum)
                term = ValueInterval(v.lo + (r - ell) * b, v.hi + (r - ell) * b);
            else
                term = ValueInterval(v.lo * detail::ipow(b, r - ell), v.hi * detail::ipow(b, r - ell));
        }
        if (!best) {
            best = term;
            continue;
        }
        const auto pick = [&](std::int64_t x, std::int64_t y) {
            return direction == Direction::upper ? std::max(x, y) : std::min(x, y);
        };
        best = ValueInterval(pick(best->lo, term.lo), pick(best->hi, term.hi));
    }
    return *best;
}

struct SampleStats {
    double min = 0;
    double mean = 0;
    double max = 0;
};

struct MonteCarloSummary {
    ParamKind param = ParamKind::tw;
    int r = 1;
    int n = 1;
    int samples = 0;
    std::uint64_t seed = 0;
    // Statistics of the lower and upper ends; equal for exact parameters.
    SampleStats part_lo, part_hi;
    SampleStats sum_lo, sum_hi;
    SampleStats product_lo, product_hi;
    int nondegenerate_samples = 0;
    std::uint64_t bound_checks = 0;
};

namespace detail {

struct Accumulator {
    double min = 0;
    double max = 0;
    double total = 0;
    std::uint64_t count = 0;

    void add(double v)
    {
        if (count == 0 || v < min)
            min = v;
        if (count == 0 || v > max)
            max = v;
        total += v;
        ++count;
    }

    SampleStats stats() const { return {min, count ? total / static_cast<double>(count) : 0.0, max}; }
};

inline std::string decomposition_text(const Decomposition& d)
{
    std::string out;
    for (const auto& g : d.parts) {
        if (!out.empty())
            out += ',';
        out += graph6_emit(g);
    }
    return out;
}

} // namespace detail

// Rows a single decomposition must satisfy: lower and exact rows of minimum
// queries and upper and exact rows of maximum queries.
inline bool row_binds_every_decomposition(const BoundRow& row, Direction direction)
{
    if (row.kind == BoundKind::exact)
        return true;
    return direction == Direction::lower ? row.kind == BoundKind::lower
                                         : row.kind == BoundKind::upper;
}

// Random decompositions, sample i drawn from stream i of the seed. Every
// sample is checked against every assertable row of the bound table; a
// contradiction throws BoundViolation naming the sample.
inline MonteCarloSummary monte_carlo(ParamKind param, int r, int n, int samples, std::uint64_t seed,
                                     int jobs = 1, SolverCache* shared_cache = nullptr)
{
    if (samples < 1)
        throw DomainError("Monte Carlo needs at least one sample");
    if (n > solver_capacity(param))
        throw CapacityError(std::string(param_name(param)) + " solver accepts at most " +
                            std::to_string(solver_capacity(param)) + " vertices");
    if (n < 1 || r < 1)
        throw DomainError("Monte Carlo needs n >= 1 and r >= 1");

    struct Rows {
        Aggregate aggregate;
        Direction direction;
        bool nondegenerate;
        std::vector<BoundRow> rows;
    };
    std::vector<Rows> tables;
    for (Aggregate a : {Aggregate::sum, Aggregate::product})
        for (Direction d : {Direction::upper, Direction::lower})
            for (bool nondeg : {false, true}) {
                Rows t{a, d, nondeg, {}};
                for (auto& row : theorem_bound_table({param, a, d, r, n, nondeg}))
                    if (row.kind != BoundKind::asymptotic && row_binds_every_decomposition(row, d))
                        t.rows.push_back(std::move(row));
                tables.push_back(std::move(t));
            }

    struct Sample {
        std::vector<ValueInterval> parts;
        ValueInterval sum;
        ValueInterval product;
        bool nondegenerate = false;
        std::uint64_t checks = 0;
        std::optional<std::string> violation;
        std::string witness;
    };
    std::vector<Sample> results(static_cast<std::size_t>(samples));
    SolverCache local_cache;
    SolverCache& cache = shared_cache ? *shared_cache : local_cache;

    detail::run_parallel(results.size(), detail::worker_count(jobs, results.size()), [&](std::size_t i) {
        const auto d = random_decomposition(n, r, seed, i);
        Sample& s = results[i];
        for (const auto& g : d.parts)
            s.parts.push_back(cache.value(g, param));
        s.sum = aggregate_parts(Aggregate::sum, s.parts);
        s.product = aggregate_parts(Aggregate::product, s.parts);
        s.nondegenerate = d.nondegenerate();
        for (const auto& t : tables) {
            if (t.nondegenerate && !s.nondegenerate)
                continue;
            const ValueInterval& v = t.aggregate == Aggregate::sum ? s.sum : s.product;
            for (const auto& row : t.rows) {
                BoundRow one_sided = row;
                if (one_sided.kind == BoundKind::exact)
                    one_sided.kind = t.direction == Direction::lower ? BoundKind::lower : BoundKind::upper;
                ++s.checks;
                if (check_bound(one_sided, v) == BoundStatus::violated && !s.violation) {
                    s.violation = "sample " + std::to_string(i) + " has " +
                                  std::string(aggregate_name(t.aggregate)) + " " + to_string(v) +
                                  ", contradicting " + row.tag + " (" + row.statement + ")";
                    s.witness = detail::decomposition_text(d);
                }
            }
        }
    });

    MonteCarloSummary out;
    out.param = param;
    out.r = r;
    out.n = n;
    out.samples = samples;
    out.seed = seed;
    detail::Accumulator part_lo, part_hi, sum_lo, sum_hi, prod_lo, prod_hi;
    for (const auto& s : results) {
        if (s.violation)
            throw BoundViolation(*s.violation, s.witness);
        for (const auto& v : s.parts) {
            part_lo.add(static_cast<double>(v.lo));
            part_hi.add(static_cast<double>(v.hi));
        }
        sum_lo.add(static_cast<double>(s.sum.lo));
        sum_hi.add(static_cast<double>(s.sum.hi));
        prod_lo.add(static_cast<double>(s.product.lo));
        prod_hi.add(static_cast<double>(s.product.hi));
        out.nondegenerate_samples += s.nondegenerate ? 1 : 0;
        out.bound_checks += s.checks;
    }
    out.part_lo = part_lo.stats();
    out.part_hi = part_hi.stats();
    out.sum_lo = sum_lo.stats();
    out.sum_hi = sum_hi.stats();
    out.product_lo = prod_lo.stats();
    out.product_hi = prod_hi.stats();
    return out;
}

} // namespace ngw
