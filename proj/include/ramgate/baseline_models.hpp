#pragma once

#include "ramgate/authority_gate.hpp"
#include "ramgate/state_model.hpp"

namespace ramgate {

enum class BaselineDecision { Proceed, Halt };

const char* to_string(BaselineDecision d);

// Closed attestation over a one-shot admission snapshot. The snapshot is
// captured at t0 and never refreshed; that staleness is the model.
struct AdmissionSnapshot {
    ProvableState proven_at_admission;
    ActionClass admitted_class;
};

// Extra delayed visibility granted to the oracle-extended baseline.
struct OracleChannel {
    ComponentSet extra_visible;
    int propagation_lag = 2;
};

// Halt iff a component present in both maps carries differing definite
// statuses, or a component in either map is definitively Invalid, or the
// current state's integrity tag fails. Undefined entries and absent
// components trigger nothing: the criterion is "not provably false".
BaselineDecision decide_attestation(const AdmissionSnapshot& snapshot,
                                    const ProvableState& current_proven);

// Attestation semantics over the union of the current provable state and
// the oracle view; the oracle entry wins on overlap.
BaselineDecision decide_oracle(const AdmissionSnapshot& snapshot,
                               const ProvableState& current_proven,
                               const OracleChannel& oracle,
                               const ProvableState& oracle_view);

}  // namespace ramgate
