#include "ramgate/authority_gate.hpp"

#include <algorithm>

namespace ramgate {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Execute: return "execute";
        case Verdict::Narrow: return "narrow";
        case Verdict::RefuseDefinitive: return "refuse_definitive";
        case Verdict::HaltInsufficient: return "halt_insufficient";
    }
    return "?";
}

const char* to_string(Tri t) {
    switch (t) {
        case Tri::True: return "true";
        case Tri::False: return "false";
        case Tri::Undefined: return "undefined";
    }
    return "?";
}

GateOutcome evaluate_gate(const Universe& universe, const CoverageEnvelope& envelope,
                          const ActionClass& requested) {
    if (requested.empty()) {
        throw UniverseError("action class must be non-empty");
    }

    GateOutcome out;
    ActionClass granted;
    std::size_t refused = 0;

    for (const auto& privilege : requested.privileges) {
        if (privilege.requires_all.empty()) {
            throw UniverseError("privilege with empty requirement set: " + privilege.name);
        }
        // First clause wins: an Invalid requirement makes the refusal
        // definitive even if other requirements are undetermined.
        std::optional<ComponentId> refused_by;
        std::optional<ComponentId> undetermined_by;
        for (const auto& id : privilege.requires_all) {
            universe.require(id);
            const auto status = envelope.proven.status_of(id);
            if (!status || *status == Status::Undefined) {
                if (!undetermined_by) undetermined_by = id;
            } else if (*status == Status::Invalid) {
                if (!refused_by) refused_by = id;
            }
        }
        if (refused_by) {
            out.reasons[privilege.name] = {PrivilegeReason::Kind::RefusedBy, *refused_by};
            ++refused;
        } else if (undetermined_by) {
            out.reasons[privilege.name] = {PrivilegeReason::Kind::UndeterminedBy,
                                           *undetermined_by};
            // Audit only: would every undetermined blocker be covered by a
            // Valid assumption?
            bool liftable = true;
            for (const auto& id : privilege.requires_all) {
                const auto status = envelope.proven.status_of(id);
                if (status && *status == Status::Valid) continue;
                auto it = envelope.assumptions.find(id);
                if (it == envelope.assumptions.end() || it->second != Status::Valid) {
                    liftable = false;
                    break;
                }
            }
            if (liftable) {
                out.liftable_by_assumptions.push_back(privilege.name);
            }
        } else {
            out.reasons[privilege.name] = {PrivilegeReason::Kind::Granted, {}};
            granted.privileges.push_back(privilege);
        }
    }

    if (granted.size() == requested.size()) {
        out.verdict = Verdict::Execute;
        out.granted = requested;
    } else if (!granted.empty()) {
        out.verdict = Verdict::Narrow;
        out.granted = std::move(granted);
    } else if (refused == requested.size()) {
        out.verdict = Verdict::RefuseDefinitive;
    } else {
        out.verdict = Verdict::HaltInsufficient;
    }
    return out;
}

AuthorityResult construct_authority(const std::map<std::string, Observation>& state) {
    const auto& required = listing_components();

    // Observability check first: a missing, unobservable, or unclassifiable
    // entry means authority cannot be determined.
    for (const auto& component : required) {
        auto it = state.find(component);
        if (it == state.end() || it->second == Observation::Unobservable ||
            it->second == Observation::Undefined) {
            return {Tri::Undefined, "missing:" + component};
        }
    }

    const auto invalid = [&](const std::string& component) {
        return state.at(component) == Observation::Invalid;
    };

    if (invalid("identity_consistency")) {
        return {Tri::False, "refused:identity_consistency"};
    }
    if (invalid("behavior_stability")) {
        return {Tri::Undefined, "uncertain:behavior_stability"};
    }
    if (invalid("regulatory_compliance")) {
        return {Tri::False, "refused:regulatory_compliance"};
    }
    if (invalid("context_integrity")) {
        return {Tri::Undefined, "uncertain:context_integrity"};
    }
    return {Tri::True, "authority_established"};
}

GateStepResult gate_step(const Universe& universe, const EnvelopeSupplier& observe,
                         const IntegrityChecker& attest, const ActionClass& requested) {
    // Fresh observation and integrity check on every call; no prior outcome
    // exists to consult.
    const CoverageEnvelope envelope = observe();
    if (!attest(envelope.proven)) {
        return {false, std::nullopt, "attestation_failure"};
    }
    GateOutcome outcome = evaluate_gate(universe, envelope, requested);
    const bool executes = outcome.executes();
    return {true, std::move(outcome),
            executes ? "authority_established" : "authority_not_constructible"};
}

}  // namespace ramgate
