// One PASS/FAIL line per acceptance criterion, run at desk caps.

#include <ngw/verify.hpp>

#include <cstdio>

namespace {

struct Budget {
    const char* tolerance;
    double seconds;
};

// Tolerance and wall-clock budget per criterion, indexed by criterion number.
constexpr Budget kBudgets[] = {
    {"", 0},
    {"exact", 600},
    {"exact", 600},
    {"exact", 600},
    {"exact", 120},
    {"exact", 900},
    {"exact", 180},
    {"exact", 60},
    {"5 decimals", 1},
    {"exact", 60},
    {"exact", 1800},
    {"exact", 1200},
    {"exact", 0},
};

} // namespace

int main()
{
    const auto report = ngw::verify_suite(ngw::VerifyLevel::desk, ngw::detail::max_workers());
    int failures = 0;
    for (const auto& c : report.checks) {
        const Budget& b = kBudgets[c.criterion];
        const bool in_time = b.seconds == 0 || c.seconds <= b.seconds;
        const bool ok = c.passed && in_time;
        failures += !ok;
        std::printf("%s criterion %2d [%s] %s: %s (%.2fs%s)\n", ok ? "PASS" : "FAIL", c.criterion, b.tolerance,
                    c.name.c_str(), c.detail.c_str(), c.seconds, in_time ? "" : ", over budget");
        if (!c.witness.empty())
            std::printf("     witness %s\n", c.witness.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(report.checks.size()) - failures,
                report.checks.size());
    return failures == 0 ? 0 : 1;
}
