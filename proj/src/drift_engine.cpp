#include "ramgate/drift_engine.hpp"

#include <cmath>
#include <stdexcept>

namespace ramgate {

const Universe& standard_universe() {
    static const Universe universe({"I", "B", "R", "C", "E"});
    return universe;
}

ComponentId comp_I() { return {"I"}; }
ComponentId comp_B() { return {"B"}; }
ComponentId comp_R() { return {"R"}; }
ComponentId comp_C() { return {"C"}; }
ComponentId comp_E() { return {"E"}; }

const char* to_string(DriftKind k) {
    switch (k) {
        case DriftKind::None: return "none";
        case DriftKind::Observable: return "observable";
        case DriftKind::Delayed: return "delayed";
        case DriftKind::Hidden: return "hidden";
        case DriftKind::Ambiguous: return "ambiguous";
    }
    return "?";
}

void DriftConfig::validate() const {
    if (p_drift < 0.0 || p_drift > 1.0) {
        throw std::invalid_argument("p_drift must be in [0,1]");
    }
    if (coverage < 0.0 || coverage > 1.0) {
        throw std::invalid_argument("coverage must be in [0,1]");
    }
    double total = 0.0;
    for (double m : mix) {
        if (m < 0.0) throw std::invalid_argument("mix entries must be non-negative");
        total += m;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("mix must sum to 1");
    }
    if (oracle_lag < 0) {
        throw std::invalid_argument("oracle_lag must be non-negative");
    }
    if (recovery < 0) {
        throw std::invalid_argument("recovery must be non-negative");
    }
}

DriftEvent sample_step(const DriftConfig& config, Rng& rng, long step) {
    if (rng.next_double() >= config.p_drift) {
        return {DriftKind::None, {}, step};
    }
    const double u = rng.next_double();
    double cumulative = 0.0;
    DriftKind kind = DriftKind::Ambiguous;  // tail mass absorbs rounding
    static constexpr DriftKind kKinds[4] = {DriftKind::Observable, DriftKind::Delayed,
                                            DriftKind::Hidden, DriftKind::Ambiguous};
    for (int i = 0; i < 4; ++i) {
        cumulative += config.mix[static_cast<std::size_t>(i)];
        if (u < cumulative) {
            kind = kKinds[i];
            break;
        }
    }
    ComponentId target;
    switch (kind) {
        case DriftKind::Observable:
            target = rng.next_double() < 0.5 ? comp_I() : comp_C();
            break;
        case DriftKind::Delayed: target = comp_R(); break;
        case DriftKind::Hidden: target = comp_E(); break;
        case DriftKind::Ambiguous: target = comp_B(); break;
        case DriftKind::None: break;
    }
    return {kind, target, step};
}

EpisodeChannels::EpisodeChannels(const DriftConfig& config, const ComponentSet& oracle_extra)
    : config_(config), oracle_extra_(oracle_extra) {
    config_.validate();
    for (const auto& id : oracle_extra_) {
        standard_universe().require(id);
        if (id == comp_E()) {
            throw UniverseError("oracle channel cannot cover a hidden component");
        }
    }
    StateMap components;
    for (const auto& id : standard_universe().components()) {
        components.emplace(id, Status::Valid);
    }
    real_ = RealState::make(standard_universe(), 0, std::move(components));
}

void EpisodeChannels::advance_to(long step) {
    real_.at = step;
    if (config_.recovery == 0) {
        return;  // effects persist to episode end
    }
    for (auto it = effects_.begin(); it != effects_.end();) {
        if (step >= it->second.step + config_.recovery) {
            real_.components[it->first] = Status::Valid;
            hidden_.erase(it->first);
            it = effects_.erase(it);
        } else {
            ++it;
        }
    }
}

void EpisodeChannels::apply_drift(const DriftEvent& event, Rng& rng) {
    if (event.kind == DriftKind::None) {
        return;
    }
    if (event.step != real_.at) {
        throw std::invalid_argument("drift event step out of sync with episode");
    }
    // One inclusion draw per event from the same stream, hidden or not, so
    // the trace structure does not depend on the kind drawn.
    const bool covered = rng.next_double() < config_.coverage;
    if (effects_.contains(event.target)) {
        return;  // component still drifted; the active effect wins
    }
    const bool included = event.kind != DriftKind::Hidden && covered;
    effects_[event.target] = Effect{event.kind, event.step, included};

    switch (event.kind) {
        case DriftKind::Observable:
        case DriftKind::Delayed:
            real_.components[event.target] = Status::Invalid;
            break;
        case DriftKind::Hidden:
            real_.components[event.target] = Status::Invalid;
            hidden_.insert(event.target);
            break;
        case DriftKind::Ambiguous:
            real_.components[event.target] = Status::Undefined;
            break;
        case DriftKind::None: break;
    }
}

ProvableState EpisodeChannels::provable_view(long step) const {
    StateMap entries;
    for (const auto& id : standard_universe().components()) {
        if (id == comp_E()) continue;  // never in any provable model
        Status status = Status::Valid;
        if (auto it = effects_.find(id); it != effects_.end() && it->second.included) {
            const Effect& effect = it->second;
            switch (effect.kind) {
                case DriftKind::Observable:
                    status = Status::Invalid;
                    break;
                case DriftKind::Delayed:
                    // Stale Valid until the lag expires.
                    status = step >= effect.step + config_.oracle_lag ? Status::Invalid
                                                                      : Status::Valid;
                    break;
                case DriftKind::Ambiguous:
                    status = Status::Undefined;
                    break;
                default: break;
            }
        }
        entries.emplace(id, status);
    }
    return ProvableState::make(step, std::move(entries));
}

ProvableState EpisodeChannels::oracle_view(long step) const {
    StateMap entries;
    for (const auto& id : oracle_extra_) {
        if (hidden_.contains(id)) continue;
        Status status = Status::Valid;
        if (auto it = effects_.find(id); it != effects_.end()) {
            const Effect& effect = it->second;
            if (step >= effect.step + config_.oracle_lag) {
                status = real_.status_of(id);  // delayed ground truth
            }
        }
        entries.emplace(id, status);
    }
    return ProvableState::make(step, std::move(entries));
}

StateMap EpisodeChannels::ram_observe(long step) const {
    (void)step;
    StateMap observed;
    for (const auto& id : standard_universe().components()) {
        auto it = effects_.find(id);
        const bool unresolvable =
            it != effects_.end() && (it->second.kind == DriftKind::Hidden ||
                                     it->second.kind == DriftKind::Ambiguous);
        observed.emplace(id, unresolvable ? Status::Undefined : real_.status_of(id));
    }
    return observed;
}

}  // namespace ramgate
