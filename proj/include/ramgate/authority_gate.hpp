#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ramgate/state_model.hpp"

namespace ramgate {

// An atomic right. Grantable only when every required component is proven
// Valid.
struct Privilege {
    std::string name;
    ComponentSet requires_all;
};

// Non-empty set of privileges; narrowing is the strict-subset relation on
// the privilege set.
struct ActionClass {
    std::vector<Privilege> privileges;

    bool empty() const { return privileges.empty(); }
    std::size_t size() const { return privileges.size(); }
};

enum class Verdict { Execute, Narrow, RefuseDefinitive, HaltInsufficient };

const char* to_string(Verdict v);

// Per-privilege explanation attached to a gate outcome.
struct PrivilegeReason {
    enum class Kind { Granted, RefusedBy, UndeterminedBy };
    Kind kind = Kind::Granted;
    ComponentId component;  // blocking component for RefusedBy/UndeterminedBy
};

struct GateOutcome {
    Verdict verdict = Verdict::HaltInsufficient;
    // Execute carries the full requested class, Narrow a non-empty strict
    // subset, the halting verdicts an empty class.
    ActionClass granted;
    std::map<std::string, PrivilegeReason> reasons;
    // Audit only: privileges whose every blocker is an undetermined component
    // covered by a Valid assumption. Assumptions never alter the verdict.
    std::vector<std::string> liftable_by_assumptions;

    bool executes() const { return verdict == Verdict::Execute || verdict == Verdict::Narrow; }
};

// The reconstruction gate. Per privilege: granted iff every requirement is
// proven Valid; refused iff some requirement is proven Invalid; undetermined
// otherwise (Undefined entry or residual component). Routing on the granted
// set G: G = requested -> Execute; nonempty strict subset -> Narrow;
// empty with all privileges refused -> RefuseDefinitive; empty otherwise ->
// HaltInsufficient.
GateOutcome evaluate_gate(const Universe& universe, const CoverageEnvelope& envelope,
                          const ActionClass& requested);

// ---------------------------------------------------------------------------
// Verbatim-fidelity port of the reference authority constructor over the
// fixed four-component domain. Kept separate from evaluate_gate: this
// function deliberately treats invalid behavior/context signals as
// uncertainty, while the general gate treats proven-Invalid as definitive.

enum class Tri { True, False, Undefined };

const char* to_string(Tri t);

inline const std::vector<std::string>& listing_components() {
    static const std::vector<std::string> names = {
        "identity_consistency",
        "behavior_stability",
        "regulatory_compliance",
        "context_integrity",
    };
    return names;
}

struct AuthorityResult {
    Tri value = Tri::Undefined;
    // First triggering clause, e.g. "missing:behavior_stability",
    // "refused:identity_consistency", "uncertain:context_integrity",
    // "authority_established".
    std::string reason;
};

AuthorityResult construct_authority(const std::map<std::string, Observation>& state);

// ---------------------------------------------------------------------------
// One fresh gate step: observe, verify integrity, evaluate. Holds no state
// between calls; no prior outcome is ever consulted.

struct GateStepResult {
    bool attestation_ok = false;
    std::optional<GateOutcome> outcome;  // absent iff attestation failed
    std::string reason_code;  // "attestation_failure" | "authority_not_constructible"
                              // | "authority_established"
};

using EnvelopeSupplier = std::function<CoverageEnvelope()>;
using IntegrityChecker = std::function<bool(const ProvableState&)>;

GateStepResult gate_step(const Universe& universe, const EnvelopeSupplier& observe,
                         const IntegrityChecker& attest, const ActionClass& requested);

}  // namespace ramgate
