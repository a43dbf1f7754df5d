#pragma once

#include <ngw/certificate.hpp>
#include <ngw/clique.hpp>
#include <ngw/errors.hpp>
#include <ngw/graph.hpp>
#include <ngw/hadwiger.hpp>
#include <ngw/params.hpp>
#include <ngw/pathwidth.hpp>
#include <ngw/treewidth.hpp>

#include <string>

namespace ngw {

// Largest order each exact solver accepts.
constexpr int solver_capacity(ParamKind kind) noexcept
{
    switch (kind) {
    case ParamKind::tw:
    case ParamKind::pw:
    case ParamKind::omega:
        return 16;
    case ParamKind::eta:
    case ParamKind::chi:
        return 14;
    default:
        return 12;
    }
}

inline void require_capacity(const Graph& g, ParamKind kind)
{
    if (g.order() > solver_capacity(kind))
        throw CapacityError(std::string(param_name(kind)) + " solver accepts at most " +
                            std::to_string(solver_capacity(kind)) + " vertices, got " +
                            std::to_string(g.order()));
}

// Exact value and certificate of a point-valued parameter.
inline WidthResult solve_exact(const Graph& g, ParamKind kind)
{
    require_capacity(g, kind);
    switch (kind) {
    case ParamKind::tw: return treewidth(g);
    case ParamKind::pw: return pathwidth(g);
    case ParamKind::ppw: return proper_pathwidth(g);
    case ParamKind::la: return largeur(g);
    case ParamKind::eta: return hadwiger(g);
    case ParamKind::omega: return clique_number(g);
    case ParamKind::chi: return chromatic_number(g);
    default:
        throw DomainError(std::string(param_name(kind)) + " has no exact solver");
    }
}

// [η - 1, U] with U = la for ν and U = ppw for μ and ξ.
inline ValueInterval cdv_interval(const Graph& g, ParamKind kind)
{
    if (!is_interval_param(kind))
        throw DomainError(std::string(param_name(kind)) + " is not bracketed by an interval");
    if (g.edgeless())
        throw DomainError("interval bounds need a graph with an edge");
    require_capacity(g, kind);
    const int lo = hadwiger(g).value - 1;
    const int hi = kind == ParamKind::nu ? largeur(g).value : proper_pathwidth(g).value;
    return {lo, hi};
}

// Value of any parameter, with the edgeless conventions applied.
inline ValueInterval parameter_value(const Graph& g, ParamKind kind)
{
    if (g.edgeless())
        return edgeless_value(kind, g.order());
    if (is_interval_param(kind))
        return cdv_interval(g, kind);
    return solve_exact(g, kind).value;
}

} // namespace ngw
