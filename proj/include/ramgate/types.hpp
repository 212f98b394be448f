#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramgate {

// Definite state of a component as it exists in the world or in a channel
// entry. Undefined models a genuinely weak/ambiguous signal.
enum class Status { Valid, Invalid, Undefined };

// What a channel reports for a component. Unobservable means the channel
// carries no entry at all; Undefined means it carries an unclassifiable one.
enum class Observation { Valid, Invalid, Undefined, Unobservable };

const char* to_string(Status s);
const char* to_string(Observation o);

// Symbolic state dimension, compared by name.
struct ComponentId {
    std::string name;

    auto operator<=>(const ComponentId&) const = default;
};

using StateMap = std::map<ComponentId, Status>;
using ComponentSet = std::set<ComponentId>;

struct UniverseError : std::runtime_error {
    explicit UniverseError(const std::string& what) : std::runtime_error(what) {}
};

struct AssumptionConflict : std::runtime_error {
    explicit AssumptionConflict(const std::string& what) : std::runtime_error(what) {}
};

// Registered set of component names. Registration order is preserved and
// used wherever a deterministic component order matters (enumeration,
// serialization).
class Universe {
public:
    Universe() = default;
    explicit Universe(std::vector<std::string> names);

    void register_component(const std::string& name);
    bool contains(const ComponentId& id) const;
    void require(const ComponentId& id) const;  // throws UniverseError

    std::size_t size() const { return ordered_.size(); }
    const std::vector<ComponentId>& components() const { return ordered_; }
    ComponentSet as_set() const;

private:
    std::vector<ComponentId> ordered_;
    std::set<std::string> names_;
};

}  // namespace ramgate
