#include "ramgate/types.hpp"

namespace ramgate {

const char* to_string(Status s) {
    switch (s) {
        case Status::Valid: return "valid";
        case Status::Invalid: return "invalid";
        case Status::Undefined: return "undefined";
    }
    return "?";
}

const char* to_string(Observation o) {
    switch (o) {
        case Observation::Valid: return "valid";
        case Observation::Invalid: return "invalid";
        case Observation::Undefined: return "undefined";
        case Observation::Unobservable: return "unobservable";
    }
    return "?";
}

Universe::Universe(std::vector<std::string> names) {
    for (auto& name : names) {
        register_component(name);
    }
}

void Universe::register_component(const std::string& name) {
    if (name.empty()) {
        throw UniverseError("component name must be non-empty");
    }
    if (!names_.insert(name).second) {
        throw UniverseError("duplicate component: " + name);
    }
    ordered_.push_back(ComponentId{name});
}

bool Universe::contains(const ComponentId& id) const {
    return names_.contains(id.name);
}

void Universe::require(const ComponentId& id) const {
    if (!contains(id)) {
        throw UniverseError("unregistered component: " + id.name);
    }
}

ComponentSet Universe::as_set() const {
    return ComponentSet(ordered_.begin(), ordered_.end());
}

}  // namespace ramgate
