#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "weakdp/classifier.hpp"
#include "weakdp/surface_builder.hpp"

namespace wdp {

// Exit codes shared by every subcommand.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Script file format: {"seed": "P2", "blowups": [0, 2, 4], "name": "X1"}.
// Corner index i addresses the node between loop components i and i+1 of
// the current loop, counting from the seed's first component; the new
// exceptional curve is inserted between them.
BlowupScript script_from_json(const nlohmann::json& j);
nlohmann::json script_to_json(const BlowupScript& script);
BlowupScript load_script_file(const std::string& path);

nlohmann::json surface_to_json(const SurfaceModel& model);

// Runs the full check battery for the classified range: model
// consistency, loop simplicity, K + LP ~ 0, negative-curve coverage (2b),
// label range (2c), negative-component structure, the D.sum(E) = 2e
// identity, and one ramification ledger per requested multiplier. Checks
// whose hypotheses need K^2 <= 7 are reported "vacuous" on seed-level
// surfaces instead of failing.
nlohmann::json verification_report(const BlowupScript& script, const std::vector<int64_t>& ds);

// Number of figure-table entries in a K^2 range: the embedded expectation
// that `classify` exits against.
int expected_class_count(int k2_min, int k2_max);

nlohmann::json classify_report(int k2_min, int k2_max);

// Graph emission. DOT lists the loop in script order with curve names;
// ASCII mirrors the two-row figures (top row left-to-right, bottom row
// right-to-left), using the printed figure orientation when the loop
// matches one. Both are byte-deterministic for a given script.
std::string loop_graph_dot(const SurfaceModel& model);
std::string loop_graph_ascii(const SurfaceModel& model);

// Blow-down web of the full classification plus the comparison against the
// printed chains (including the flagged X(2) duplication).
nlohmann::json web_report();

}  // namespace wdp
