#pragma once

#include <ngw/bounds.hpp>
#include <ngw/constructions.hpp>
#include <ngw/graph6.hpp>
#include <ngw/ng_search.hpp>

#include <json.hpp>

#include <chrono>
#include <string>
#include <vector>

namespace ngw {

inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr std::string_view kReportSchema = "ngw-report/1";

using Json = nlohmann::json;

inline Json interval_json(const ValueInterval& v)
{
    if (v.exact())
        return Json{{"exact", true}, {"value", v.lo}, {"lo", v.lo}, {"hi", v.hi}};
    return Json{{"exact", false}, {"lo", v.lo}, {"hi", v.hi}};
}

inline Json decomposition_json(const Decomposition& d)
{
    Json parts = Json::array();
    for (const auto& g : d.parts)
        parts.push_back(graph6_emit(g));
    return Json{{"n", d.n}, {"r", d.part_count()}, {"parts", parts}};
}

inline Json query_json(const NGQuery& q)
{
    return Json{{"param", param_name(q.param)},     {"aggregate", aggregate_name(q.aggregate)},
                {"direction", direction_name(q.direction)}, {"r", q.r},
                {"n", q.n},                         {"nondegenerate", q.nondegenerate}};
}

struct BoundCheck {
    BoundRow row;
    BoundStatus status;
};

inline std::vector<BoundCheck> check_bounds(const NGQuery& q, const ValueInterval& value)
{
    std::vector<BoundCheck> out;
    for (auto& row : theorem_bound_table(q)) {
        const auto status = check_bound(row, value);
        out.push_back({std::move(row), status});
    }
    return out;
}

inline bool any_violated(const std::vector<BoundCheck>& checks)
{
    for (const auto& c : checks)
        if (c.status == BoundStatus::violated)
            return true;
    return false;
}

inline Json bound_row_json(const BoundRow& row)
{
    return Json{{"tag", row.tag},
                {"statement", row.statement},
                {"value", row.value},
                {"kind", bound_kind_name(row.kind)},
                {"transferred", row.transferred}};
}

inline Json bound_checks_json(const std::vector<BoundCheck>& checks)
{
    Json out = Json::array();
    for (const auto& c : checks) {
        Json j = bound_row_json(c.row);
        j["status"] = bound_status_name(c.status);
        out.push_back(std::move(j));
    }
    return out;
}

inline Json host_json(const KTreeHost& h)
{
    Json steps = Json::array();
    for (const auto& s : h.steps) {
        Json attach = Json::array();
        for_each_vertex(s.attach, [&](int v) { attach.push_back(v); });
        steps.push_back(Json{{"vertex", s.vertex}, {"attach", attach}});
    }
    std::string shape = h.shape == KTreeHost::Shape::caterpillar ? "caterpillar"
                        : h.shape == KTreeHost::Shape::linear    ? "linear"
                                                                 : "two_sided";
    return Json{{"shape", shape}, {"k", h.k}, {"seed", h.seed}, {"steps", steps}};
}

inline Json construction_json(const ConstructionResult& c)
{
    Json j = decomposition_json(c.decomposition);
    j["provenance"] = c.provenance;
    Json guarantees = Json::array();
    for (const auto& g : c.guarantees)
        guarantees.push_back(Json{{"param", param_name(g.param)},
                                  {"aggregate", aggregate_name(g.aggregate)},
                                  {"relation", relation_name(g.relation)},
                                  {"value", g.value}});
    j["guarantee"] = guarantees;
    if (c.last_part_host)
        j["last_part_host"] = host_json(*c.last_part_host);
    return j;
}

inline Json stats_json(const SampleStats& s)
{
    return Json{{"min", s.min}, {"mean", s.mean}, {"max", s.max}};
}

inline Json monte_carlo_json(const MonteCarloSummary& s)
{
    return Json{{"param", param_name(s.param)},
                {"r", s.r},
                {"n", s.n},
                {"samples", s.samples},
                {"seed", s.seed},
                {"nondegenerate_samples", s.nondegenerate_samples},
                {"bound_checks", s.bound_checks},
                {"part", Json{{"lo", stats_json(s.part_lo)}, {"hi", stats_json(s.part_hi)}}},
                {"sum", Json{{"lo", stats_json(s.sum_lo)}, {"hi", stats_json(s.sum_hi)}}},
                {"product", Json{{"lo", stats_json(s.product_lo)}, {"hi", stats_json(s.product_hi)}}}};
}

inline Json ng_result_json(const NGQuery& q, const NGResult& r, const std::vector<BoundCheck>& checks)
{
    Json j{{"query", query_json(q)},
           {"value", interval_json(r.value)},
           {"witness", decomposition_json(r.witness)},
           {"states_explored", r.states_explored},
           {"symmetry", symmetry_name(r.symmetry)},
           {"work_units", r.work_units},
           {"bounds", bound_checks_json(checks)}};
    if (!r.value.exact())
        j["witness_hi"] = decomposition_json(r.witness_hi);
    return j;
}

// Common envelope: schema tag, tool version, command and seed. Timing lives
// under "timing" so byte comparisons can drop that one key.
inline Json report_envelope(std::string_view command, std::uint64_t seed)
{
    return Json{{"schema", kReportSchema},
                {"tool_version", kToolVersion},
                {"command", command},
                {"seed", seed}};
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}

    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace ngw
