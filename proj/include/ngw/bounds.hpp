#pragma once

#include <ngw/errors.hpp>
#include <ngw/params.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace ngw {

// Least t with r <= t(t+1)/2, in integer arithmetic.
inline std::int64_t triangular_root_ceil(std::int64_t r)
{
    if (r < 1)
        throw DomainError("triangular root needs r >= 1");
    std::int64_t t = static_cast<std::int64_t>(std::sqrt(2.0 * static_cast<double>(r)));
    while (t > 1 && (t - 1) * t / 2 >= r)
        --t;
    while (t * (t + 1) / 2 < r)
        ++t;
    return t;
}

// Edge count of any k-tree on n vertices.
inline std::int64_t ktree_edge_count(std::int64_t n, std::int64_t k)
{
    if (k < 0 || k >= n)
        throw DomainError("k-tree on n vertices needs 0 <= k <= n - 1");
    return k * (k - 1) / 2 + (n - k) * k;
}

struct TreewidthSumFloor {
    double value;        // rn - r/2 - sqrt((r^2 - r)n^2 - (r^2 - r)n + r^2/4)
    std::int64_t ceiling;  // least integer >= value, computed exactly
};

inline TreewidthSumFloor tw_sum_lower_bound(std::int64_t r, std::int64_t n)
{
    if (r < 1 || n < 1)
        throw DomainError("treewidth sum floor needs r >= 1 and n >= 1");
    const std::int64_t a = r * r - r;
    // 4 * radicand, an integer.
    const std::int64_t radicand4 = 4 * a * n * n - 4 * a * n + r * r;
    const double value = static_cast<double>(r * n) - 0.5 * static_cast<double>(r) -
                         0.5 * std::sqrt(static_cast<double>(radicand4));
    // m >= value  iff  2rn - r - 2m <= sqrt(radicand4).
    auto at_least = [&](std::int64_t m) {
        const std::int64_t x = 2 * r * n - r - 2 * m;
        return x <= 0 || x * x <= radicand4;
    };
    std::int64_t m = static_cast<std::int64_t>(std::floor(value)) - 1;
    while (at_least(m))
        --m;
    while (!at_least(m))
        ++m;
    return {value, m};
}

// Least product of r integers in [1, n] with sum sigma, and its shape:
// q entries equal to n, one entry rho, the rest 1.
struct SumProductWitness {
    std::int64_t sigma;
    std::int64_t q;
    std::int64_t rho;
    std::int64_t min_product;
};

inline SumProductWitness min_product_given_sum(std::int64_t r, std::int64_t n, std::int64_t sigma)
{
    if (n < 2 || r < 1)
        throw DomainError("product minimum needs n >= 2 and r >= 1");
    if (sigma < r || sigma > r * n)
        throw DomainError("sum " + std::to_string(sigma) + " outside [r, rn]");
    const std::int64_t q = (sigma - r) / (n - 1);
    const std::int64_t rho = sigma - r - q * (n - 1) + 1;
    std::int64_t product = rho;
    for (std::int64_t i = 0; i < q; ++i)
        product *= n;
    return {sigma, q, rho, product};
}

// Product lower bound obtained from a non-degenerate sum lower bound s.
inline std::int64_t sum_to_prod_lower(std::int64_t r, std::int64_t n, std::int64_t s)
{
    if (s >= n + r - 1)
        throw InapplicableError("sum-to-product conversion needs s < n + r - 1, got s = " +
                                std::to_string(s) + " with n + r - 1 = " +
                                std::to_string(n + r - 1));
    return s - r + 1;
}

enum class BoundKind { exact, lower, upper, asymptotic };

constexpr std::string_view bound_kind_name(BoundKind k) noexcept
{
    switch (k) {
    case BoundKind::exact: return "exact";
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
    case BoundKind::asymptotic: return "asymptotic";
    }
    return "?";
}

// One closed-form statement about the Nordhaus-Gaddum value of a query.
// `kind` says how the value relates to `value`; asymptotic rows are never
// asserted.
struct BoundRow {
    std::string tag;
    std::string statement;
    double value = 0;
    BoundKind kind = BoundKind::asymptotic;
    // Derived from a row about the other of the degenerate and non-degenerate
    // values.
    bool transferred = false;
};

struct NGQuery {
    ParamKind param = ParamKind::tw;
    Aggregate aggregate = Aggregate::sum;
    Direction direction = Direction::upper;
    int r = 1;
    int n = 1;
    bool nondegenerate = false;
};

enum class BoundStatus { satisfied, violated, undetermined, not_asserted };

constexpr std::string_view bound_status_name(BoundStatus s) noexcept
{
    switch (s) {
    case BoundStatus::satisfied: return "satisfied";
    case BoundStatus::violated: return "violated";
    case BoundStatus::undetermined: return "undetermined";
    case BoundStatus::not_asserted: return "asymptotic-only";
    }
    return "?";
}

// Tolerance for comparing integers to real-valued bounds.
inline constexpr double kBoundSlack = 1e-9;

// Status of a row against a computed value, which may be an interval.
inline BoundStatus check_bound(const BoundRow& row, const ValueInterval& v)
{
    const double lo = static_cast<double>(v.lo);
    const double hi = static_cast<double>(v.hi);
    switch (row.kind) {
    case BoundKind::asymptotic:
        return BoundStatus::not_asserted;
    case BoundKind::lower:
        if (lo >= row.value - kBoundSlack)
            return BoundStatus::satisfied;
        return hi < row.value - kBoundSlack ? BoundStatus::violated : BoundStatus::undetermined;
    case BoundKind::upper:
        if (hi <= row.value + kBoundSlack)
            return BoundStatus::satisfied;
        return lo > row.value + kBoundSlack ? BoundStatus::violated : BoundStatus::undetermined;
    case BoundKind::exact:
        if (v.exact() && std::abs(lo - row.value) <= kBoundSlack)
            return BoundStatus::satisfied;
        if (hi < row.value - kBoundSlack || lo > row.value + kBoundSlack)
            return BoundStatus::violated;
        return BoundStatus::undetermined;
    }
    return BoundStatus::undetermined;
}

namespace detail {

inline std::int64_t ipow(std::int64_t base, std::int64_t exp)
{
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < exp; ++i)
        out *= base;
    return out;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

struct Catalogue {
    ParamKind param;
    std::int64_t r;
    std::int64_t n;
    std::vector<BoundRow> degenerate;
    std::vector<BoundRow> nondegenerate;

    bool is(std::initializer_list<ParamKind> kinds) const
    {
        for (ParamKind k : kinds)
            if (k == param)
                return true;
        return false;
    }

    void add(bool nondeg, std::string tag, std::string statement, double value, BoundKind kind)
    {
        (nondeg ? nondegenerate : degenerate)
            .push_back({std::move(tag), std::move(statement), value, kind, false});
    }
};

constexpr auto kTreewidthFamily = {ParamKind::tw, ParamKind::la, ParamKind::pw, ParamKind::ppw};
constexpr auto kCdv = {ParamKind::mu, ParamKind::nu, ParamKind::xi};

inline void sum_upper_rows(Catalogue& c)
{
    const auto r = c.r;
    const auto n = c.n;
    const double rd = static_cast<double>(r);
    const double nd = static_cast<double>(n);
    c.add(false, "order-sum-upper", "each part has value at most n, so the sum is at most rn",
          static_cast<double>(r * n), BoundKind::upper);
    if (r < 2)
        return;
    if (c.is(kTreewidthFamily))
        c.add(false, "tw-family-sum-upper-asymptotic", "sum upper value is rn - o(n)", rd * nd,
              BoundKind::asymptotic);
    const bool n_large = n * n >= 4 * r;
    if (c.is(kCdv) && n_large)
        c.add(false, "cdv-sum-upper-sqrt", "sum upper value at most sqrt(r) n for n >= 2 sqrt(r)",
              std::sqrt(rd) * nd, BoundKind::upper);
    if (c.param == ParamKind::eta && n_large)
        c.add(false, "eta-sum-upper-sqrt",
              "sum upper value at most sqrt(r) n + r for n >= 2 sqrt(r)", std::sqrt(rd) * nd + rd,
              BoundKind::upper);
    const std::int64_t t = triangular_root_ceil(r);
    const double td = static_cast<double>(t);
    if (c.is({ParamKind::eta})) {
        if (n % t == 0)
            c.add(false, "eta-sum-upper-blowup",
                  "at least (r/t) n + (r - t) when t = ceil(trt(r)) divides n",
                  static_cast<double>(r * (n / t) + r - t), BoundKind::lower);
        c.add(false, "eta-sum-upper-blowup-asymptotic", "at least (r/t) n - o(n)", rd / td * nd,
              BoundKind::asymptotic);
        if (r == 2 && n >= 5)
            c.add(false, "eta-sum-upper-two-parts", "equals floor(6n/5) for r = 2 and n >= 5",
                  static_cast<double>(6 * n / 5), BoundKind::exact);
    }
    if (c.is(kCdv)) {
        if (n % t == 0)
            c.add(false, "cdv-sum-upper-blowup",
                  "at least (r/t) n - t when t = ceil(trt(r)) divides n",
                  static_cast<double>(r * (n / t) - t), BoundKind::lower);
        c.add(false, "cdv-sum-upper-blowup-asymptotic", "at least (r/t) n - o(n)", rd / td * nd,
              BoundKind::asymptotic);
    }
}

inline void sum_lower_rows(Catalogue& c)
{
    const auto r = c.r;
    const auto n = c.n;
    const double rd = static_cast<double>(r);
    const double nd = static_cast<double>(n);
    if (r < 2)
        return;
    const bool twf = c.is(kTreewidthFamily);
    if (twf && r == 2 && n >= 4)
        c.add(false, "tw-family-sum-lower-two-parts", "equals n - 2 for r = 2",
              static_cast<double>(n - 2), BoundKind::exact);
    if (c.param == ParamKind::eta && n >= 2) {
        const double root_log = std::sqrt(std::log(nd));
        c.add(false, "eta-sum-lower-asymptotic-floor", "at least n / (570 r sqrt(log n))",
              nd / (570.0 * rd * root_log), BoundKind::asymptotic);
        c.add(false, "eta-sum-lower-asymptotic-ceiling", "at most r n / sqrt(log n)",
              rd * nd / root_log, BoundKind::asymptotic);
    }
    const std::int64_t quarter = 3 * ceil_div(n, 4);
    const std::int64_t edges = n * (n - 1) / 2;
    if (r >= 3 && n >= 4) {
        if (c.is({ParamKind::tw, ParamKind::la, ParamKind::pw})) {
            c.add(false, "four-block-sum-lower", "at most 3 ceil(n/4) for r >= 3",
                  static_cast<double>(quarter), BoundKind::upper);
            if (r <= edges)
                c.add(true, "four-block-sum-lower-nondegenerate",
                      "non-degenerate value at most 3 ceil(n/4) + r - 3 for r >= 3",
                      static_cast<double>(quarter + r - 3), BoundKind::upper);
        }
        if (c.param == ParamKind::ppw) {
            c.add(false, "four-block-sum-lower-ppw", "at most 3 ceil(n/4) + r for r >= 3",
                  static_cast<double>(quarter + r), BoundKind::upper);
            if (r <= edges)
                c.add(true, "four-block-sum-lower-ppw-nondegenerate",
                      "non-degenerate value at most 3 ceil(n/4) + 2r - 3 for r >= 3",
                      static_cast<double>(quarter + 2 * r - 3), BoundKind::upper);
        }
    }
    if (twf) {
        const auto floor_bound = tw_sum_lower_bound(r, n);
        c.add(false, "ktree-edge-count-sum-lower",
              "at least rn - r/2 - sqrt((r^2 - r)n^2 - (r^2 - r)n + r^2/4), rounded up",
              static_cast<double>(floor_bound.ceiling), BoundKind::lower);
        c.add(false, "ktree-edge-count-sum-lower-asymptotic",
              "at least (r - sqrt(r^2 - r)) n - o(n)", (rd - std::sqrt(rd * rd - rd)) * nd,
              BoundKind::asymptotic);
    }
    if (c.is(kCdv) && r >= 3 && n >= 19) {
        c.add(false, "cdv-sum-lower-floor", "at least n / (570 r sqrt(log n)) - r for n >= 19",
              nd / (570.0 * rd * std::sqrt(std::log(nd))) - rd, BoundKind::lower);
        if (r <= edges) {
            const std::int64_t extra = c.param == ParamKind::nu ? r - 3 : 2 * r - 3;
            c.add(true, "cdv-sum-lower-four-block",
                  c.param == ParamKind::nu
                      ? "non-degenerate value at most 3 ceil(n/4) + r - 3 for n >= 19"
                      : "non-degenerate value at most 3 ceil(n/4) + 2r - 3 for n >= 19",
                  static_cast<double>(quarter + extra), BoundKind::upper);
        }
    }
    if ((twf || c.is(kCdv)) && n >= 2 * r)
        c.add(true, "paths-plus-remainder-sum-lower",
              "non-degenerate value at most n - r for n >= 2r", static_cast<double>(n - r),
              BoundKind::upper);
}

inline void product_upper_rows(Catalogue& c)
{
    const auto r = c.r;
    const auto n = c.n;
    const double rd = static_cast<double>(r);
    const double nd = static_cast<double>(n);
    c.add(false, "order-product-upper", "each part has value at most n, so the product is at most n^r",
          static_cast<double>(ipow(n, r)), BoundKind::upper);
    if (r < 2)
        return;
    if (c.is(kTreewidthFamily))
        c.add(false, "tw-family-product-upper-asymptotic", "product upper value is n^r - o(n^r)",
              std::pow(nd, rd), BoundKind::asymptotic);
    if ((c.is(kCdv) || c.param == ParamKind::eta) && n * n >= 4 * r) {
        const std::int64_t t = triangular_root_ceil(r);
        c.add(false, "blowup-product-upper", "at least (floor(n/t) - 1)^r for n >= 2 sqrt(r)",
              static_cast<double>(ipow(n / t - 1, r)), BoundKind::lower);
        c.add(false, "blowup-product-upper-asymptotic", "at most r^(-r/2) n^r + o(n^r)",
              std::pow(rd, -rd / 2) * std::pow(nd, rd), BoundKind::asymptotic);
    }
    if (c.param == ParamKind::eta && r == 2 && n >= 5) {
        const std::int64_t s = 6 * n / 5;
        c.add(false, "eta-product-upper-two-parts", "equals floor(floor(6n/5)^2 / 4) for n >= 5",
              static_cast<double>(s * s / 4), BoundKind::exact);
    }
}

inline void product_lower_rows(Catalogue& c)
{
    const auto r = c.r;
    const auto n = c.n;
    const double rd = static_cast<double>(r);
    const double nd = static_cast<double>(n);
    if (r < 2)
        return;
    const std::int64_t edges = n * (n - 1) / 2;
    if (c.is(kTreewidthFamily)) {
        c.add(false, "tw-family-product-lower-degenerate", "equals 0: some part can be edgeless",
              0.0, BoundKind::exact);
        if (r == 2 && n >= 4)
            c.add(true, "tw-family-product-lower-two-parts", "non-degenerate value equals n - 3",
                  static_cast<double>(n - 3), BoundKind::exact);
        if (r >= 3) {
            c.add(true, "tw-family-product-lower-asymptotic",
                  "non-degenerate value at least n/2 - r + 1 for n large", nd / 2 - rd + 1,
                  BoundKind::asymptotic);
            if (n >= 2 * r)
                c.add(true, "paths-plus-remainder-product-lower",
                      "non-degenerate value at most n - 2r + 1 for n >= 2r",
                      static_cast<double>(n - 2 * r + 1), BoundKind::upper);
        }
    }
    if (c.param == ParamKind::eta) {
        if (r == 2) {
            c.add(false, "eta-product-lower-two-parts", "equals n for r = 2",
                  static_cast<double>(n), BoundKind::exact);
            if (edges >= 2)
                c.add(true, "eta-product-lower-two-parts-nondegenerate",
                      "non-degenerate value at least ceil((3n - 5)/2)",
                      static_cast<double>(ceil_div(3 * n - 5, 2)), BoundKind::lower);
        }
        c.add(false, "eta-product-lower-clique-cover", "at least 0.513^(r-2) n",
              std::pow(0.513, rd - 2) * nd, BoundKind::lower);
        c.add(false, "eta-product-lower-single-clique", "at most n: one complete part, rest empty",
              nd, BoundKind::upper);
        if (n >= 2 * r && r <= edges) {
            c.add(true, "eta-product-lower-nondegenerate", "non-degenerate value at least 0.513^(r-2) n",
                  std::pow(0.513, rd - 2) * nd, BoundKind::lower);
            c.add(true, "eta-product-lower-paths", "non-degenerate value at most 2^(r-1) (n - 2r + 2)",
                  static_cast<double>(ipow(2, r - 1) * (n - 2 * r + 2)), BoundKind::upper);
        }
    }
    if (c.is(kCdv) && n >= 2 * r) {
        c.add(true, "cdv-product-lower-floor", "non-degenerate value at least n / 2^(2r-2)",
              nd / static_cast<double>(ipow(2, 2 * r - 2)), BoundKind::lower);
        c.add(true, "cdv-product-lower-paths", "non-degenerate value at most n - 2r + 1",
              static_cast<double>(n - 2 * r + 1), BoundKind::upper);
    }
}

} // namespace detail

// Every closed-form statement applicable to the query. Rows about the other
// of the degenerate and non-degenerate values are carried over when the
// inequality between the two values preserves them: the degenerate minimum
// is at most the non-degenerate one, and the degenerate maximum at least.
inline std::vector<BoundRow> theorem_bound_table(const NGQuery& q)
{
    if (q.r < 1 || q.n < 1)
        throw DomainError("query needs r >= 1 and n >= 1");
    detail::Catalogue c{q.param, q.r, q.n, {}, {}};
    if (q.aggregate == Aggregate::sum)
        (q.direction == Direction::upper ? detail::sum_upper_rows : detail::sum_lower_rows)(c);
    else
        (q.direction == Direction::upper ? detail::product_upper_rows
                                         : detail::product_lower_rows)(c);

    const bool nondeg_exists = q.r <= static_cast<std::int64_t>(q.n) * (q.n - 1) / 2;
    auto& own = q.nondegenerate ? c.nondegenerate : c.degenerate;
    const auto& other = q.nondegenerate ? c.degenerate : c.nondegenerate;
    std::vector<BoundRow> out = own;
    if (q.nondegenerate && !nondeg_exists)
        return {};
    // The side of the other value that carries over to this one.
    const bool minimum = q.direction == Direction::lower;
    const BoundKind carried = (minimum == q.nondegenerate) ? BoundKind::lower : BoundKind::upper;
    for (BoundRow row : other) {
        if (row.kind == BoundKind::asymptotic)
            continue;
        if (row.kind == BoundKind::exact)
            row.kind = carried;
        if (row.kind != carried)
            continue;
        row.transferred = true;
        out.push_back(std::move(row));
    }
    return out;
}

struct Table1Row {
    int r;
    double blowup_ratio;  // r / ceil(trt(r))
    double sqrt_r;
};

inline std::vector<Table1Row> table1(int r_max)
{
    if (r_max < 3)
        throw DomainError("table starts at r = 3");
    std::vector<Table1Row> rows;
    for (int r = 3; r <= r_max; ++r)
        rows.push_back({r, static_cast<double>(r) / static_cast<double>(triangular_root_ceil(r)),
                        std::sqrt(static_cast<double>(r))});
    return rows;
}

// Six significant digits, integers shown with a trailing ".0".
inline std::string format_table_value(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    std::string s(buf);
    if (s.find_first_of(".e") == std::string::npos)
        s += ".0";
    return s;
}

inline std::string table1_csv(int r_max)
{
    std::string out = "r,r_over_t,sqrt_r\n";
    for (const auto& row : table1(r_max))
        out += std::to_string(row.r) + "," + format_table_value(row.blowup_ratio) + "," +
               format_table_value(row.sqrt_r) + "\n";
    return out;
}

inline std::string table1_text(int r_max)
{
    std::string out;
    char line[96];
    std::snprintf(line, sizeof line, "%4s %12s %12s\n", "r", "r/t", "sqrt(r)");
    out += line;
    for (const auto& row : table1(r_max)) {
        std::snprintf(line, sizeof line, "%4d %12s %12s\n", row.r,
                      format_table_value(row.blowup_ratio).c_str(),
                      format_table_value(row.sqrt_r).c_str());
        out += line;
    }
    return out;
}

} // namespace ngw
