#include "ramgate/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ramgate {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& object, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, value] : object.items()) {
        (void)value;
        if (!allowed.contains(key)) {
            throw ConfigError("unknown key '" + key + "' in " + where);
        }
    }
}

json require_key(const json& object, const std::string& key, const std::string& where) {
    if (!object.contains(key)) {
        throw ConfigError("missing key '" + key + "' in " + where);
    }
    return object.at(key);
}

ComponentSet component_set(const json& array, const Universe& universe,
                           const std::string& where) {
    if (!array.is_array()) {
        throw ConfigError(where + " must be an array of component names");
    }
    ComponentSet set;
    for (const auto& entry : array) {
        ComponentId id{entry.get<std::string>()};
        if (!universe.contains(id)) {
            throw ConfigError(where + " references unregistered component: " + id.name);
        }
        set.insert(id);
    }
    return set;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read config file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

EpisodeOptions ScenarioConfig::episode_options() const {
    EpisodeOptions options;
    options.drift = drift;
    options.models = models;
    options.length = steps;
    options.oracle = oracle;
    options.requested = action_class;
    return options;
}

ScenarioConfig parse_scenario_config(const std::string& json_text) {
    const json root = parse_json(json_text);
    if (!root.is_object()) {
        throw ConfigError("top-level config must be an object");
    }
    reject_unknown_keys(root,
                        {"universe", "action_class", "drift", "grid", "models", "oracle",
                         "steps"},
                        "config");

    ScenarioConfig config;
    try {
        for (const auto& name : require_key(root, "universe", "config")) {
            config.universe.register_component(name.get<std::string>());
        }
    } catch (const UniverseError& e) {
        throw ConfigError(e.what());
    }
    // run/sweep drive the drift engine, which targets the standard
    // five-dimension universe.
    for (const auto& id : standard_universe().components()) {
        if (!config.universe.contains(id)) {
            throw ConfigError("universe must include the standard component " + id.name);
        }
    }

    const json action = require_key(root, "action_class", "config");
    reject_unknown_keys(action, {"privileges"}, "action_class");
    for (const auto& entry : require_key(action, "privileges", "action_class")) {
        reject_unknown_keys(entry, {"name", "requires"}, "privilege");
        Privilege privilege;
        privilege.name = require_key(entry, "name", "privilege").get<std::string>();
        privilege.requires_all =
            component_set(require_key(entry, "requires", "privilege"), config.universe,
                          "privilege '" + privilege.name + "' requires");
        if (privilege.requires_all.empty()) {
            throw ConfigError("privilege '" + privilege.name + "' requires no components");
        }
        config.action_class.privileges.push_back(std::move(privilege));
    }
    if (config.action_class.empty()) {
        throw ConfigError("action_class must declare at least one privilege");
    }

    const json drift = require_key(root, "drift", "config");
    reject_unknown_keys(drift, {"p_drift", "mix", "seed", "coverage", "recovery"},
                        "drift");
    config.drift.p_drift = require_key(drift, "p_drift", "drift").get<double>();
    if (drift.contains("seed")) {
        config.drift.seed = drift.at("seed").get<std::uint64_t>();
        config.seed_from_config = true;
    }
    if (drift.contains("coverage")) {
        config.drift.coverage = drift.at("coverage").get<double>();
    }
    if (drift.contains("recovery")) {
        config.drift.recovery = drift.at("recovery").get<long>();
    }
    if (drift.contains("mix")) {
        const json mix = drift.at("mix");
        if (!mix.is_array() || mix.size() != 4) {
            throw ConfigError("drift.mix must be an array of 4 probabilities");
        }
        for (std::size_t i = 0; i < 4; ++i) {
            config.drift.mix[i] = mix[i].get<double>();
        }
    }

    if (root.contains("grid")) {
        for (const auto& entry : root.at("grid")) {
            config.grid.push_back(entry.get<double>());
        }
    }

    if (root.contains("models")) {
        config.models = ModelSet{false, false, false};
        for (const auto& entry : root.at("models")) {
            const auto model = model_from_string(entry.get<std::string>());
            if (!model) {
                throw ConfigError("unknown model: " + entry.get<std::string>());
            }
            switch (*model) {
                case ModelId::Attestation: config.models.attestation = true; break;
                case ModelId::Oracle: config.models.oracle = true; break;
                case ModelId::Ram: config.models.ram = true; break;
            }
        }
    }

    if (root.contains("oracle")) {
        const json oracle = root.at("oracle");
        reject_unknown_keys(oracle, {"extra_visible", "lag"}, "oracle");
        if (oracle.contains("extra_visible")) {
            config.oracle.extra_visible = component_set(
                oracle.at("extra_visible"), config.universe, "oracle.extra_visible");
        }
        if (oracle.contains("lag")) {
            config.oracle.propagation_lag = oracle.at("lag").get<int>();
            if (config.oracle.propagation_lag < 0) {
                throw ConfigError("oracle.lag must be non-negative");
            }
        }
    }
    if (config.oracle.extra_visible.contains(comp_E())) {
        throw ConfigError("oracle.extra_visible cannot include the hidden component E");
    }

    config.steps = require_key(root, "steps", "config").get<long>();
    if (config.steps < 1) {
        throw ConfigError("steps must be >= 1");
    }

    try {
        config.drift.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return config;
}

ScenarioConfig load_scenario_config(const std::string& path) {
    return parse_scenario_config(slurp(path));
}

FiniteInstance parse_instance_config(const std::string& json_text) {
    const json root = parse_json(json_text);
    if (!root.is_object()) {
        throw ConfigError("instance config must be an object");
    }
    reject_unknown_keys(root, {"universe", "visible", "requires", "admission_monitors"},
                        "instance");

    FiniteInstance instance;
    try {
        for (const auto& name : require_key(root, "universe", "instance")) {
            instance.universe.register_component(name.get<std::string>());
        }
        instance.visible = component_set(require_key(root, "visible", "instance"),
                                         instance.universe, "visible");
        instance.authority_requirements = component_set(
            require_key(root, "requires", "instance"), instance.universe, "requires");
        instance.admission_monitors =
            root.contains("admission_monitors")
                ? component_set(root.at("admission_monitors"), instance.universe,
                                "admission_monitors")
                : instance.visible;
        instance.validate();
    } catch (const UniverseError& e) {
        throw ConfigError(e.what());
    } catch (const SizeError& e) {
        throw ConfigError(e.what());
    }
    return instance;
}

FiniteInstance load_instance_config(const std::string& path) {
    return parse_instance_config(slurp(path));
}

std::string default_scenario_json() {
    return R"({
  "universe": ["I", "B", "R", "C", "E"],
  "action_class": {
    "privileges": [
      {"name": "transfer", "requires": ["I", "B", "R", "C", "E"]}
    ]
  },
  "drift": {"p_drift": 0.5, "mix": [0.30, 0.25, 0.25, 0.20], "seed": 42, "coverage": 1.0, "recovery": 8},
  "grid": [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0],
  "models": ["attestation", "oracle", "ram"],
  "oracle": {"extra_visible": ["R"], "lag": 2},
  "steps": 10000
}
)";
}

}  // namespace ramgate
