#include "ramgate/state_model.hpp"

namespace ramgate {

namespace {

// FNV-1a over the step index and the ordered entries.
constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t fnv1a_bytes(std::uint64_t h, const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= kFnvPrime;
    }
    return h;
}

}  // namespace

std::uint64_t integrity_checksum(long at, const StateMap& entries) {
    std::uint64_t h = kFnvOffset;
    const auto at64 = static_cast<std::uint64_t>(at);
    h = fnv1a_bytes(h, &at64, sizeof(at64));
    for (const auto& [id, status] : entries) {
        h = fnv1a_bytes(h, id.name.data(), id.name.size());
        const unsigned char s = static_cast<unsigned char>(status);
        h = fnv1a_bytes(h, &s, 1);
    }
    return h;
}

RealState RealState::make(const Universe& universe, long at, StateMap components) {
    for (const auto& [id, status] : components) {
        universe.require(id);
        (void)status;
    }
    if (components.size() != universe.size()) {
        throw UniverseError("real state must be total over the universe");
    }
    return RealState{at, std::move(components)};
}

Status RealState::status_of(const ComponentId& id) const {
    auto it = components.find(id);
    if (it == components.end()) {
        throw UniverseError("component absent from real state: " + id.name);
    }
    return it->second;
}

ProvableState ProvableState::make(long at, StateMap entries) {
    ProvableState state{at, std::move(entries), 0};
    state.integrity_tag = integrity_checksum(state.at, state.entries);
    return state;
}

bool ProvableState::verify_integrity() const {
    return integrity_tag == integrity_checksum(at, entries);
}

std::optional<Status> ProvableState::status_of(const ComponentId& id) const {
    auto it = entries.find(id);
    if (it == entries.end()) {
        return std::nullopt;
    }
    return it->second;
}

ProvableState project(const Universe& universe, const RealState& real,
                      const ComponentSet& visible,
                      const std::map<ComponentId, Distortion>& distortions) {
    for (const auto& id : visible) {
        universe.require(id);
    }
    for (const auto& [id, distortion] : distortions) {
        universe.require(id);
        (void)distortion;
        if (!visible.contains(id)) {
            throw UniverseError("distortion on invisible component: " + id.name);
        }
    }
    StateMap entries;
    for (const auto& id : visible) {
        Status status = real.status_of(id);
        if (auto it = distortions.find(id); it != distortions.end()) {
            status = it->second.kind == Distortion::Kind::Stale ? it->second.stale_value
                                                                : Status::Undefined;
        }
        entries.emplace(id, status);
    }
    return ProvableState::make(real.at, std::move(entries));
}

CoverageEnvelope build_envelope(const Universe& universe, const ProvableState& proven,
                                const AssumptionSet& assumptions) {
    for (const auto& [id, status] : proven.entries) {
        universe.require(id);
        (void)status;
    }
    for (const auto& [id, assumed] : assumptions) {
        universe.require(id);
        if (auto actual = proven.status_of(id); actual && *actual != assumed) {
            throw AssumptionConflict("assumption on " + id.name +
                                     " contradicts proven entry");
        }
    }
    ComponentSet residual;
    for (const auto& id : universe.components()) {
        if (!proven.entries.contains(id)) {
            residual.insert(id);
        }
    }
    return CoverageEnvelope{proven, assumptions, std::move(residual)};
}

ComponentSet gap(const Universe& universe, const RealState& real,
                 const ProvableState& proven) {
    ComponentSet result;
    for (const auto& id : universe.components()) {
        const auto carried = proven.status_of(id);
        if (!carried || *carried != real.status_of(id)) {
            result.insert(id);
        }
    }
    return result;
}

}  // namespace ramgate
