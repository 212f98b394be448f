#pragma once

#include <array>
#include <map>
#include <optional>

#include "ramgate/rng.hpp"
#include "ramgate/state_model.hpp"

namespace ramgate {

// The five-dimension decision state used by the shipped scenarios:
// I identity, B behavior, R regulatory, C context, E emergent.
const Universe& standard_universe();
ComponentId comp_I();
ComponentId comp_B();
ComponentId comp_R();
ComponentId comp_C();
ComponentId comp_E();

enum class DriftKind { None, Observable, Delayed, Hidden, Ambiguous };

const char* to_string(DriftKind k);

struct DriftEvent {
    DriftKind kind = DriftKind::None;
    ComponentId target;  // empty name for None
    long step = 0;
};

struct DriftConfig {
    double p_drift = 0.5;
    // Probability mass over Observable / Delayed / Hidden / Ambiguous.
    std::array<double, 4> mix = {0.30, 0.25, 0.25, 0.20};
    std::uint64_t seed = 42;
    double coverage = 1.0;  // |S_p|/|S_r| knob, per-event channel inclusion
    int oracle_lag = 2;
    // Steps until a drifted component returns to Valid; 0 keeps every effect
    // alive to episode end. Long traces need recovery to stay ergodic —
    // without it the episode saturates after the first few events and the
    // sweep statistics collapse to a handful of prefix steps.
    long recovery = 8;

    void validate() const;  // throws std::invalid_argument
};

// One independent draw per step. Targets are fixed per kind: Observable
// hits I or C (coin flip), Delayed hits R, Hidden hits E, Ambiguous hits B.
DriftEvent sample_step(const DriftConfig& config, Rng& rng, long step);

// Per-episode channel bookkeeping. Components start Valid everywhere; a
// drift effect lasts `recovery` steps (or to episode end when recovery = 0),
// after which the component heals and can drift again. The attestation and
// oracle channels cover {I,B,R,C}; E is outside every provable model.
class EpisodeChannels {
public:
    EpisodeChannels(const DriftConfig& config, const ComponentSet& oracle_extra);

    // Applies one drift event to ground truth and records its channel
    // effects. Channel inclusion is sampled from `rng` (one draw per
    // non-None event): Observable/Delayed/Ambiguous are carried with
    // probability `coverage`, Hidden with probability 0. Idempotent on a
    // component that already drifted.
    void apply_drift(const DriftEvent& event, Rng& rng);

    const RealState& real() const { return real_; }

    // Moves the episode clock forward, healing effects whose recovery window
    // has elapsed.
    void advance_to(long step);

    // Attestation channel view at `step`: stale Valid for excluded events,
    // Invalid once an included Observable lands or an included Delayed
    // event's lag expires, Undefined for included Ambiguous.
    ProvableState provable_view(long step) const;

    // Ground truth of the oracle's extra components delayed by the lag.
    // Hidden-flagged components never appear.
    ProvableState oracle_view(long step) const;

    // Fresh observation available to the reconstruction gate: true current
    // value for observable/delayed components, Undefined for components hit
    // by hidden or ambiguous drift (bounded uncertainty).
    StateMap ram_observe(long step) const;

    bool component_hidden(const ComponentId& id) const { return hidden_.contains(id); }

private:
    struct Effect {
        DriftKind kind = DriftKind::None;
        long step = 0;
        bool included = false;  // carried by the provable channel
    };

    DriftConfig config_;
    ComponentSet oracle_extra_;
    RealState real_;
    std::map<ComponentId, Effect> effects_;  // first drift per component
    ComponentSet hidden_;
};

}  // namespace ramgate
