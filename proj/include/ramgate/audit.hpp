#pragma once

#include <string>
#include <vector>

#include "ramgate/authority_gate.hpp"

namespace ramgate {

// Append-only record of a gate decision plus the envelope summary it was
// made from. The audit layer has no causal role: replaying the summary
// through evaluate_gate must reproduce the verdict.
struct AuditRecord {
    long step = 0;
    std::string model;
    std::string verdict;
    std::string reason;
    std::vector<std::pair<std::string, std::string>> proven;  // id -> status name
    std::vector<std::string> residual;
    std::vector<std::string> assumptions;
};

class AuditLog {
public:
    void append(long step, const std::string& model, const CoverageEnvelope& envelope,
                const GateStepResult& result);

    const std::vector<AuditRecord>& records() const { return records_; }

private:
    std::vector<AuditRecord> records_;
};

// Rebuilds an envelope from a recorded summary and re-runs the gate;
// returns the reproduced verdict name.
std::string replay_audit_record(const Universe& universe, const AuditRecord& record,
                                const ActionClass& requested);

}  // namespace ramgate
