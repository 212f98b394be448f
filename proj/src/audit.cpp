#include "ramgate/audit.hpp"

namespace ramgate {

namespace {

std::optional<Status> status_from_name(const std::string& name) {
    if (name == "valid") return Status::Valid;
    if (name == "invalid") return Status::Invalid;
    if (name == "undefined") return Status::Undefined;
    return std::nullopt;
}

}  // namespace

void AuditLog::append(long step, const std::string& model, const CoverageEnvelope& envelope,
                      const GateStepResult& result) {
    AuditRecord record;
    record.step = step;
    record.model = model;
    record.verdict = result.outcome ? to_string(result.outcome->verdict) : "attestation_halt";
    record.reason = result.reason_code;
    for (const auto& [id, status] : envelope.proven.entries) {
        record.proven.emplace_back(id.name, to_string(status));
    }
    for (const auto& id : envelope.residual) {
        record.residual.push_back(id.name);
    }
    for (const auto& [id, status] : envelope.assumptions) {
        (void)status;
        record.assumptions.push_back(id.name);
    }
    records_.push_back(std::move(record));
}

std::string replay_audit_record(const Universe& universe, const AuditRecord& record,
                                const ActionClass& requested) {
    StateMap entries;
    for (const auto& [name, status_name] : record.proven) {
        auto status = status_from_name(status_name);
        if (!status) {
            throw UniverseError("unknown status in audit record: " + status_name);
        }
        entries.emplace(ComponentId{name}, *status);
    }
    const auto proven = ProvableState::make(record.step, std::move(entries));
    const auto envelope = build_envelope(universe, proven);
    return to_string(evaluate_gate(universe, envelope, requested).verdict);
}

}  // namespace ramgate
