#include "stringart/report_json.hpp"

#include "stringart/areas.hpp"

namespace stringart {

ordered_json report_config(const NetConfig& config) {
    ordered_json j;
    j["n"] = config.n();
    j["frame"] = {{"a", config.frame().a.to_string()}, {"b", config.frame().b.to_string()}};
    ordered_json spacing = ordered_json::array();
    for (const Rational& x : config.spacing().values()) spacing.push_back(x.to_string());
    j["spacing"] = spacing;
    j["equidistant"] = config.spacing().is_equidistant();
    return j;
}

ordered_json report_check(const CheckResult& result) {
    ordered_json j;
    j["holds"] = result.holds;
    ordered_json witnesses = ordered_json::array();
    for (const Witness& w : result.witnesses) {
        ordered_json entry;
        entry["id"] = w.id;
        entry["values"] = w.values;
        witnesses.push_back(entry);
    }
    j["witnesses"] = witnesses;
    if (result.first_violation) {
        j["first_violation"] = {{"id", result.first_violation->id},
                                {"lhs", result.first_violation->lhs},
                                {"rhs", result.first_violation->rhs}};
    }
    return j;
}

ordered_json report_properties(const PropertyReport& report) {
    ordered_json j;
    j["c1"] = report_check(report.c1);
    j["c2"] = report_check(report.c2);
    j["c3"] = report_check(report.c3);
    j["c4"] = report_check(report.c4);
    j["triangulation_independence"] = report_check(report.triangulation_independence);
    j["diagonal_identity"] = report_check(report.diagonal_identity);
    j["b_equals_2a"] = report_check(report.b_equals_2a);
    j["s_symmetry"] = report_check(report.s_symmetry);
    j["acute_obtuse_area"] = report_check(report.acute_obtuse_area);
    j["all_hold"] = report.all_hold();
    return j;
}

ordered_json report_areas(const NetConfig& config, bool include_pieces) {
    ordered_json j;
    if (include_pieces) {
        ordered_json pieces = ordered_json::array();
        for (const PieceId& id : tiling_pieces(config)) {
            ordered_json entry;
            entry["id"] = id.label();
            entry["area"] = piece_area(config, id).to_string();
            pieces.push_back(entry);
        }
        j["pieces"] = pieces;
        ordered_json sums = ordered_json::array();
        for (int d = 2; d <= config.n() - 1; ++d) {
            ordered_json entry;
            entry["d"] = d;
            entry["sum"] = diagonal_sum(config, d).to_string();
            sums.push_back(entry);
        }
        j["diagonal_sums"] = sums;
    }
    Rational total = total_area(config);
    j["triangle_sum"] = boundary_triangle_sum(config).to_string();
    j["quad_sum"] = quad_sum(config).to_string();
    j["total"] = total.to_string();
    if (config.spacing().is_equidistant()) {
        j["closed_form"] = total_area_closed_form(config).to_string();
    }
    Rational limit = config.frame().a * envelope_area();
    j["envelope_limit"] = limit.to_string();
    j["deviation_from_limit"] = (total - limit).to_string();
    return j;
}

ordered_json report_solver(const SolveOutcome& outcome) {
    ordered_json j;
    j["status"] = to_string(outcome.status);
    if (outcome.solution) {
        ordered_json solution = ordered_json::array();
        for (const Rational& x : outcome.solution->values()) solution.push_back(x.to_string());
        j["solution"] = solution;
    }
    if (outcome.family) {
        j["family"] = {{"relation", outcome.family->relation},
                       {"x1_interval",
                        {outcome.family->x1_low.to_string(), outcome.family->x1_high.to_string()}}};
    }
    j["steps"] = outcome.steps;
    return j;
}

} // namespace stringart
