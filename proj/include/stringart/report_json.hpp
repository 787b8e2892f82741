#pragma once

#include "stringart/invariants.hpp"
#include "stringart/net.hpp"
#include "stringart/spacing_solver.hpp"

#include <json.hpp>

namespace stringart {

// Insertion-ordered JSON so reports serialize with a stable key order.
using ordered_json = nlohmann::ordered_json;

ordered_json report_config(const NetConfig& config);
ordered_json report_check(const CheckResult& result);
ordered_json report_properties(const PropertyReport& report);
// include_pieces adds the per-piece area list (the `areas` command);
// summaries alone keep `verify` output small.
ordered_json report_areas(const NetConfig& config, bool include_pieces);
ordered_json report_solver(const SolveOutcome& outcome);

} // namespace stringart
