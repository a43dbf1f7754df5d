#pragma once

#include <ngw/errors.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ngw {

enum class ParamKind { tw, la, pw, ppw, eta, omega, chi, mu, nu, xi };

inline constexpr std::array<ParamKind, 10> kAllParams{
    ParamKind::tw,  ParamKind::la,    ParamKind::pw,  ParamKind::ppw, ParamKind::eta,
    ParamKind::omega, ParamKind::chi, ParamKind::mu,  ParamKind::nu,  ParamKind::xi};

constexpr std::string_view param_name(ParamKind kind) noexcept
{
    switch (kind) {
    case ParamKind::tw: return "tw";
    case ParamKind::la: return "la";
    case ParamKind::pw: return "pw";
    case ParamKind::ppw: return "ppw";
    case ParamKind::eta: return "eta";
    case ParamKind::omega: return "omega";
    case ParamKind::chi: return "chi";
    case ParamKind::mu: return "mu";
    case ParamKind::nu: return "nu";
    case ParamKind::xi: return "xi";
    }
    return "?";
}

inline std::optional<ParamKind> parse_param(std::string_view name)
{
    for (ParamKind kind : kAllParams)
        if (param_name(kind) == name)
            return kind;
    return std::nullopt;
}

// Colin de Verdiere type parameters are only bracketed, never computed.
constexpr bool is_interval_param(ParamKind kind) noexcept
{
    return kind == ParamKind::mu || kind == ParamKind::nu || kind == ParamKind::xi;
}

constexpr bool is_treewidth_family(ParamKind kind) noexcept
{
    return kind == ParamKind::tw || kind == ParamKind::la || kind == ParamKind::pw ||
           kind == ParamKind::ppw;
}

// Value of the parameter on the edgeless graph of order n.
constexpr int edgeless_value(ParamKind kind, int n) noexcept
{
    switch (kind) {
    case ParamKind::eta:
    case ParamKind::omega:
    case ParamKind::chi:
        return 1;
    case ParamKind::mu:
        return n >= 2 ? 1 : 0;
    case ParamKind::nu:
    case ParamKind::xi:
        return 1;
    default:
        return 0;
    }
}

enum class Aggregate { sum, product };
enum class Direction { upper, lower };

constexpr std::string_view aggregate_name(Aggregate a) noexcept
{
    return a == Aggregate::sum ? "sum" : "prod";
}

constexpr std::string_view direction_name(Direction d) noexcept
{
    return d == Direction::upper ? "upper" : "lower";
}

struct ValueInterval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    ValueInterval() = default;
    ValueInterval(std::int64_t exact) : lo(exact), hi(exact) {}
    ValueInterval(std::int64_t low, std::int64_t high) : lo(low), hi(high)
    {
        if (low > high)
            throw DomainError("interval lower end exceeds upper end");
    }

    bool exact() const noexcept { return lo == hi; }
    bool contains(std::int64_t v) const noexcept { return lo <= v && v <= hi; }

    friend bool operator==(const ValueInterval&, const ValueInterval&) = default;
};

inline std::string to_string(const ValueInterval& v)
{
    if (v.exact())
        return std::to_string(v.lo);
    return "[" + std::to_string(v.lo) + ", " + std::to_string(v.hi) + "]";
}

} // namespace ngw
