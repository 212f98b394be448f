#include "ramgate/baseline_models.hpp"

namespace ramgate {

const char* to_string(BaselineDecision d) {
    return d == BaselineDecision::Proceed ? "proceed" : "halt";
}

namespace {

bool definite(Status s) { return s == Status::Valid || s == Status::Invalid; }

BaselineDecision decide_over(const StateMap& admitted, const StateMap& current,
                             bool current_tag_ok) {
    if (!current_tag_ok) {
        return BaselineDecision::Halt;  // enforcement works on what it can see
    }
    // Definitive Invalid anywhere halts.
    for (const auto& [id, status] : admitted) {
        (void)id;
        if (status == Status::Invalid) return BaselineDecision::Halt;
    }
    for (const auto& [id, status] : current) {
        (void)id;
        if (status == Status::Invalid) return BaselineDecision::Halt;
    }
    // Definite-vs-definite mismatch on a shared component halts. Undefined
    // entries and absent components trigger nothing: the criterion is
    // "not provably false".
    for (const auto& [id, admitted_status] : admitted) {
        auto it = current.find(id);
        if (it == current.end()) continue;
        if (definite(admitted_status) && definite(it->second) &&
            admitted_status != it->second) {
            return BaselineDecision::Halt;
        }
    }
    return BaselineDecision::Proceed;
}

}  // namespace

BaselineDecision decide_attestation(const AdmissionSnapshot& snapshot,
                                    const ProvableState& current_proven) {
    return decide_over(snapshot.proven_at_admission.entries, current_proven.entries,
                       current_proven.verify_integrity());
}

BaselineDecision decide_oracle(const AdmissionSnapshot& snapshot,
                               const ProvableState& current_proven,
                               const OracleChannel& oracle,
                               const ProvableState& oracle_view) {
    StateMap merged = current_proven.entries;
    for (const auto& [id, status] : oracle_view.entries) {
        if (!oracle.extra_visible.contains(id)) {
            throw UniverseError("oracle view carries component outside its channel: " +
                                id.name);
        }
        merged[id] = status;  // oracle entry wins on overlap
    }
    return decide_over(snapshot.proven_at_admission.entries, merged,
                       current_proven.verify_integrity());
}

}  // namespace ramgate
