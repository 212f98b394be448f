#pragma once

#include <cstdint>
#include <optional>

#include "ramgate/types.hpp"

namespace ramgate {

// Ground truth at a step. Total over the registered universe: reality is
// never Unobservable, only channels lose components.
struct RealState {
    long at = 0;
    StateMap components;

    static RealState make(const Universe& universe, long at, StateMap components);
    Status status_of(const ComponentId& id) const;
};

// The slice of state carried by an attestable channel. The integrity tag is
// a deterministic checksum over the entries; it stands in for the TEE
// attestation layer, which is modeled, not implemented.
struct ProvableState {
    long at = 0;
    StateMap entries;
    std::uint64_t integrity_tag = 0;

    static ProvableState make(long at, StateMap entries);
    bool verify_integrity() const;
    std::optional<Status> status_of(const ComponentId& id) const;
};

std::uint64_t integrity_checksum(long at, const StateMap& entries);

// Declared assumptions about unproven components (the envelope's H).
using AssumptionSet = std::map<ComponentId, Status>;

// The triple authority is constructed over: proven state, declared
// assumptions, acknowledged residual. The residual is always recomputed
// from the universe at build time, never stored stale.
struct CoverageEnvelope {
    ProvableState proven;
    AssumptionSet assumptions;
    ComponentSet residual;
};

// Channel distortion applied during projection. Stale keeps a previous
// status; Masked degrades the entry to Undefined.
struct Distortion {
    enum class Kind { Stale, Masked };
    Kind kind = Kind::Masked;
    Status stale_value = Status::Valid;

    static Distortion stale(Status previous) { return {Kind::Stale, previous}; }
    static Distortion masked() { return {Kind::Masked, Status::Undefined}; }
};

// Restricts ground truth to the visible components and applies per-component
// distortions. The result carries a fresh integrity tag over the final
// entries.
ProvableState project(const Universe& universe, const RealState& real,
                      const ComponentSet& visible,
                      const std::map<ComponentId, Distortion>& distortions = {});

// Builds the coverage envelope; residual = universe minus proven domain.
// Throws AssumptionConflict if an assumption contradicts a proven entry.
CoverageEnvelope build_envelope(const Universe& universe, const ProvableState& proven,
                                const AssumptionSet& assumptions = {});

// Components missing from the provable state or carried with a status that
// diverges from ground truth. Divergence counts: the delayed-drift
// experiments need stale entries to show up as gap content.
ComponentSet gap(const Universe& universe, const RealState& real,
                 const ProvableState& proven);

}  // namespace ramgate
