#pragma once

#include <string>

#include "semcom/generate.hpp"
#include "semcom/types.hpp"

namespace semcom {

// Fully resolved scenario (every triplet carries numbers). Unknown keys and
// out-of-range values are rejected with the offending JSON path in the
// message. Key order and number formatting of the writer are stable, so
// equal scenarios serialize to identical bytes.
Scenario scenario_from_json(const std::string& text);
std::string scenario_to_json(const Scenario& s);

// Generator input; may omit everything (defaults apply) or spell out devices
// with partially resolved triplets.
ScenarioSpec spec_from_json(const std::string& text);
std::string spec_to_json(const ScenarioSpec& spec);

Scenario load_scenario_file(const std::string& path);
ScenarioSpec load_spec_file(const std::string& path);

}  // namespace semcom
