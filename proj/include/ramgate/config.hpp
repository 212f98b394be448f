#pragma once

#include <string>
#include <vector>

#include "ramgate/counterexample.hpp"
#include "ramgate/simulator.hpp"

namespace ramgate {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Scenario configuration for run/sweep. JSON with a published schema
// (schema/scenario.schema.json); unknown keys are rejected.
struct ScenarioConfig {
    Universe universe;
    ActionClass action_class;
    DriftConfig drift;
    std::vector<double> grid;  // empty unless sweeping
    ModelSet models;
    OracleChannel oracle;
    long steps = 10000;
    bool seed_from_config = false;

    EpisodeOptions episode_options() const;
};

ScenarioConfig parse_scenario_config(const std::string& json_text);
ScenarioConfig load_scenario_config(const std::string& path);

// Finite-instance file for the counterexample lab.
FiniteInstance parse_instance_config(const std::string& json_text);
FiniteInstance load_instance_config(const std::string& path);

// A ready-to-run configuration over the standard five-component universe.
std::string default_scenario_json();

}  // namespace ramgate
