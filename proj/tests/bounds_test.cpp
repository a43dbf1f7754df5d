#include <ngw/bounds.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace ngw;

namespace {

// Least product over all tuples 1 <= a_i <= n of length r with the given sum.
std::int64_t brute_min_product(int r, int n, int sigma)
{
    std::vector<int> a(static_cast<std::size_t>(r), 1);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (;;) {
        int sum = 0;
        std::int64_t product = 1;
        for (int x : a) {
            sum += x;
            product *= x;
        }
        if (sum == sigma)
            best = std::min(best, product);
        int i = 0;
        while (i < r && a[i] == n)
            a[i++] = 1;
        if (i == r)
            return best;
        ++a[i];
    }
}

bool has_row(const std::vector<BoundRow>& rows, double value, BoundKind kind)
{
    for (const auto& row : rows)
        if (row.kind == kind && std::abs(row.value - value) < 1e-9)
            return true;
    return false;
}

} // namespace

TEST(TriangularRoot, Examples)
{
    EXPECT_EQ(triangular_root_ceil(1), 1);
    EXPECT_EQ(triangular_root_ceil(3), 2);
    EXPECT_EQ(triangular_root_ceil(7), 4);
    EXPECT_THROW(triangular_root_ceil(0), DomainError);
}

TEST(TriangularRoot, BracketsUpToMillion)
{
    for (std::int64_t r = 1; r <= 1'000'000; ++r) {
        const auto t = triangular_root_ceil(r);
        ASSERT_LT((t - 1) * t / 2, r) << r;
        ASSERT_LE(r, t * (t + 1) / 2) << r;
    }
}

TEST(KTreeEdgeCount, Examples)
{
    EXPECT_EQ(ktree_edge_count(5, 2), 7);
    for (int k = 0; k < 10; ++k)
        EXPECT_EQ(ktree_edge_count(k + 1, k), k * (k + 1) / 2);
    EXPECT_EQ(ktree_edge_count(6, 1), 5);
    EXPECT_THROW(ktree_edge_count(4, 4), DomainError);
}

TEST(TreewidthSumFloor, Examples)
{
    EXPECT_EQ(tw_sum_lower_bound(1, 9).ceiling, 8);
    const auto two = tw_sum_lower_bound(2, 4);
    EXPECT_NEAR(two.value, 2.0, 1e-12);
    EXPECT_EQ(two.ceiling, 2);
    const auto three = tw_sum_lower_bound(3, 4);
    EXPECT_NEAR(three.value, 10.5 - std::sqrt(74.25), 1e-12);
    EXPECT_NEAR(three.value, 1.883, 1e-3);
    EXPECT_EQ(three.ceiling, 2);
}

TEST(TreewidthSumFloor, SinglePartIsCompleteGraph)
{
    for (int n = 1; n <= 100; ++n) {
        const auto b = tw_sum_lower_bound(1, n);
        EXPECT_EQ(b.ceiling, n - 1);
        EXPECT_NEAR(b.value, n - 1, 1e-9);
    }
}

TEST(TreewidthSumFloor, CeilingMatchesRadical)
{
    for (int r = 1; r <= 12; ++r) {
        for (int n = 1; n <= 200; ++n) {
            const auto b = tw_sum_lower_bound(r, n);
            EXPECT_GE(static_cast<double>(b.ceiling), b.value - 1e-9);
            EXPECT_LT(static_cast<double>(b.ceiling) - 1, b.value + 1e-9);
        }
    }
}

TEST(MinProduct, Examples)
{
    const auto a = min_product_given_sum(2, 4, 5);
    EXPECT_EQ(a.q, 1);
    EXPECT_EQ(a.rho, 1);
    EXPECT_EQ(a.min_product, 4);
    const auto b = min_product_given_sum(3, 5, 3);
    EXPECT_EQ(b.q, 0);
    EXPECT_EQ(b.rho, 1);
    EXPECT_EQ(b.min_product, 1);
    const auto c = min_product_given_sum(2, 5, 10);
    EXPECT_EQ(c.q, 2);
    EXPECT_EQ(c.rho, 1);
    EXPECT_EQ(c.min_product, 25);
    EXPECT_THROW(min_product_given_sum(2, 5, 1), DomainError);
    EXPECT_THROW(min_product_given_sum(2, 5, 11), DomainError);
}

TEST(MinProduct, MatchesExhaustiveTuples)
{
    for (int r = 1; r <= 4; ++r) {
        for (int n = 2; n <= 6; ++n) {
            for (int sigma = r; sigma <= r * n; ++sigma) {
                const auto w = min_product_given_sum(r, n, sigma);
                EXPECT_EQ(w.min_product, brute_min_product(r, n, sigma))
                    << "r=" << r << " n=" << n << " sigma=" << sigma;
                EXPECT_GE(w.rho, 1);
                EXPECT_LE(w.rho, n);
                // One block of n's, one rho, the rest ones.
                if (w.q < r)
                    EXPECT_EQ((r - 1 - w.q) + w.q * n + w.rho, sigma);
                else
                    EXPECT_EQ(w.q * n, sigma);
            }
        }
    }
}

TEST(SumToProduct, Examples)
{
    EXPECT_EQ(sum_to_prod_lower(2, 6, 4), 3);
    EXPECT_EQ(sum_to_prod_lower(2, 7, 5), 4);
    EXPECT_THROW(sum_to_prod_lower(3, 10, 13), InapplicableError);
}

TEST(SumToProductRatio, ExceedsHalf)
{
    for (int r = 2; r <= 1000; ++r) {
        const double rd = r;
        EXPECT_GT(rd - std::sqrt(rd * rd - rd), 0.5) << r;
    }
}

TEST(BoundTable, Examples)
{
    const auto eta = theorem_bound_table({ParamKind::eta, Aggregate::sum, Direction::upper, 2, 10});
    EXPECT_TRUE(has_row(eta, 12, BoundKind::exact));
    const auto tw = theorem_bound_table({ParamKind::tw, Aggregate::sum, Direction::lower, 2, 6});
    EXPECT_TRUE(has_row(tw, 4, BoundKind::exact));
    const auto ppw = theorem_bound_table({ParamKind::ppw, Aggregate::sum, Direction::lower, 3, 8});
    EXPECT_TRUE(has_row(ppw, 5, BoundKind::upper));
    const auto prod = theorem_bound_table({ParamKind::eta, Aggregate::product, Direction::upper, 2, 6});
    EXPECT_TRUE(has_row(prod, 12, BoundKind::exact));
    const auto mc = theorem_bound_table({ParamKind::eta, Aggregate::product, Direction::lower, 3, 9});
    EXPECT_TRUE(has_row(mc, 0.513 * 9, BoundKind::lower));
    const auto tw_prod = theorem_bound_table(
        {ParamKind::tw, Aggregate::product, Direction::lower, 2, 6, true});
    EXPECT_TRUE(has_row(tw_prod, 3, BoundKind::exact));
}

TEST(BoundTable, TransfersBetweenDegenerateAndNondegenerate)
{
    // The non-degenerate minimum is at least the degenerate minimum.
    const auto nondeg = theorem_bound_table({ParamKind::tw, Aggregate::sum, Direction::lower, 2, 6, true});
    bool found = false;
    for (const auto& row : nondeg)
        found = found || (row.transferred && row.kind == BoundKind::lower && row.value == 4);
    EXPECT_TRUE(found);
    // More parts than edges: no non-degenerate decomposition exists.
    EXPECT_TRUE(theorem_bound_table({ParamKind::tw, Aggregate::sum, Direction::lower, 4, 3, true}).empty());
}

TEST(BoundTable, AsymptoticRowsAreNotAsserted)
{
    const auto rows = theorem_bound_table({ParamKind::eta, Aggregate::sum, Direction::lower, 3, 30});
    bool any = false;
    for (const auto& row : rows) {
        if (row.kind != BoundKind::asymptotic)
            continue;
        any = true;
        EXPECT_EQ(check_bound(row, ValueInterval(0)), BoundStatus::not_asserted);
    }
    EXPECT_TRUE(any);
}

TEST(BoundTable, LowerRowsNeverExceedUpperRows)
{
    for (ParamKind p : kAllParams)
        for (Aggregate a : {Aggregate::sum, Aggregate::product})
            for (Direction d : {Direction::upper, Direction::lower})
                for (bool nondeg : {false, true})
                    for (int r = 1; r <= 5; ++r)
                        for (int n = 1; n <= 50; ++n) {
                            const auto rows = theorem_bound_table({p, a, d, r, n, nondeg});
                            for (const auto& lo : rows) {
                                if (lo.kind != BoundKind::lower && lo.kind != BoundKind::exact)
                                    continue;
                                for (const auto& hi : rows) {
                                    if (hi.kind != BoundKind::upper && hi.kind != BoundKind::exact)
                                        continue;
                                    EXPECT_LE(lo.value, hi.value + 1e-9)
                                        << param_name(p) << " " << aggregate_name(a) << " "
                                        << direction_name(d) << " r=" << r << " n=" << n
                                        << " nondeg=" << nondeg << ": " << lo.tag << " vs " << hi.tag;
                                }
                            }
                        }
}

TEST(BoundStatus, IntervalSemantics)
{
    const BoundRow lower{"l", "", 5, BoundKind::lower, false};
    EXPECT_EQ(check_bound(lower, ValueInterval(5)), BoundStatus::satisfied);
    EXPECT_EQ(check_bound(lower, ValueInterval(4)), BoundStatus::violated);
    EXPECT_EQ(check_bound(lower, ValueInterval(4, 6)), BoundStatus::undetermined);
    const BoundRow upper{"u", "", 4.5, BoundKind::upper, false};
    EXPECT_EQ(check_bound(upper, ValueInterval(4)), BoundStatus::satisfied);
    EXPECT_EQ(check_bound(upper, ValueInterval(5)), BoundStatus::violated);
    EXPECT_EQ(check_bound(upper, ValueInterval(3, 5)), BoundStatus::undetermined);
    const BoundRow exact{"e", "", 7, BoundKind::exact, false};
    EXPECT_EQ(check_bound(exact, ValueInterval(7)), BoundStatus::satisfied);
    EXPECT_EQ(check_bound(exact, ValueInterval(6)), BoundStatus::violated);
    EXPECT_EQ(check_bound(exact, ValueInterval(6, 8)), BoundStatus::undetermined);
}

TEST(RatioTable, MatchesReferenceValues)
{
    const auto rows = table1(10);
    ASSERT_EQ(rows.size(), 8U);
    const char* expected[][3] = {
        {"3", "1.5", "1.73205"},  {"4", "1.33333", "2.0"}, {"5", "1.66667", "2.23607"},
        {"6", "2.0", "2.44949"},  {"7", "1.75", "2.64575"}, {"8", "2.0", "2.82843"},
        {"9", "2.25", "3.0"},     {"10", "2.5", "3.16228"},
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(std::to_string(rows[i].r), expected[i][0]);
        EXPECT_EQ(format_table_value(rows[i].blowup_ratio), expected[i][1]);
        EXPECT_EQ(format_table_value(rows[i].sqrt_r), expected[i][2]);
    }
    const auto csv = table1_csv(4);
    EXPECT_EQ(csv, "r,r_over_t,sqrt_r\n3,1.5,1.73205\n4,1.33333,2.0\n");
    EXPECT_THROW(table1(2), DomainError);
}
