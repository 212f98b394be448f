#pragma once

#include <string>
#include <vector>

#include "ramgate/audit.hpp"
#include "ramgate/counterexample.hpp"
#include "ramgate/simulator.hpp"

namespace ramgate {

// All numeric cells carry exactly six decimal places; an undefined rate is
// rendered as "undefined".
std::string format_rate(const std::optional<double>& rate);

// Columns: coverage, model, ier, shr, ocr, executions, halts, n, seed.
std::string sweep_csv(const SweepResult& sweep);

// One IER polyline per model over the coverage grid; correctness is checked
// by parsing the polyline coordinates.
std::string sweep_svg(const SweepResult& sweep);

std::string metrics_json(const std::map<ModelId, Metrics>& metrics, long steps,
                         std::uint64_t seed);

// Header + one row per StepRecord.
std::string steps_csv(const std::vector<StepRecord>& records, const ModelSet& models);

std::string case_study_json(const CaseStudyReport& report);
std::string case_study_table(const CaseStudyReport& report);

std::string witness_json(const FiniteInstance& instance, const std::optional<Witness>& witness);
std::string necessity_json(const NecessityReport& report);

std::string audit_jsonl(const AuditLog& log);

// Writes via a temp file and rename, so readers never see a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace ramgate
