#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramgate/audit.hpp"
#include "ramgate/baseline_models.hpp"
#include "ramgate/drift_engine.hpp"

namespace ramgate {

enum class ModelId { Attestation, Oracle, Ram };

const char* to_string(ModelId m);
std::optional<ModelId> model_from_string(const std::string& name);

struct ModelDecision {
    bool executed = false;
    std::string reason;  // halt reason code, empty when executed
};

// One simulation tick: the drift event, ground-truth authority, and every
// enabled model's decision on the same trace (paired comparison).
struct StepRecord {
    long step = 0;
    DriftEvent event;
    bool a_r = false;  // real authority: all of {I,B,R,C,E} Valid
    std::map<ModelId, ModelDecision> decisions;
};

// Exact counts; rates are derived on demand and rounded only at display.
struct Metrics {
    std::int64_t executions = 0;
    std::int64_t halts = 0;
    std::int64_t invalid_executions = 0;  // executed with a_r false
    std::int64_t halts_on_false = 0;
    std::int64_t halts_on_true = 0;
    std::int64_t a_r_false_steps = 0;
    std::int64_t a_r_true_steps = 0;
    std::int64_t steps = 0;

    // Empty optional marks an undefined rate (zero denominator); never
    // report a fabricated 0 or 1.
    std::optional<double> ier() const;
    std::optional<double> shr() const;
    std::optional<double> ocr() const;

    bool operator==(const Metrics&) const = default;
};

struct ModelSet {
    bool attestation = true;
    bool oracle = true;
    bool ram = true;

    std::vector<ModelId> enabled() const;
};

// The shipped scenario's requested class: one transfer privilege requiring
// every component of the standard universe Valid.
ActionClass standard_action_class();

struct EpisodeOptions {
    DriftConfig drift;
    ModelSet models;
    long length = 10000;
    OracleChannel oracle{{comp_R()}, 2};
    ActionClass requested = standard_action_class();
    AuditLog* audit = nullptr;  // RAM gate decisions, optional
};

// Runs one episode: the admission snapshot is taken over the pristine
// channel at step 0, then every step samples drift, applies it, evaluates
// ground truth and each enabled model. The RAM path goes through gate_step
// (fresh reconstruction behind an integrity precheck); baselines use their
// decide functions against the episode snapshot.
std::vector<StepRecord> run_episode(const EpisodeOptions& options);

Metrics compute_metrics(const std::vector<StepRecord>& records, ModelId model);

struct SweepPoint {
    double coverage = 0.0;
    std::map<ModelId, Metrics> metrics;
};

struct SweepResult {
    std::vector<SweepPoint> points;
    long steps_per_point = 0;
    std::uint64_t seed = 0;
};

std::vector<double> default_coverage_grid();  // 0.1 .. 1.0 by 0.1

// Per grid point, one episode of N steps with the coverage substituted and
// the seed split per point. `parallel` runs points on separate threads; the
// result is identical either way.
SweepResult coverage_sweep(const EpisodeOptions& base, const std::vector<double>& grid,
                           long steps_per_point, bool parallel = false);

// ---------------------------------------------------------------------------
// Scripted financial-transfer scenario.

struct CaseStudyRow {
    std::string model;
    std::string executes;  // "Yes" / "No" / "Yes (in many cases)"
    bool executed = false;
    bool correct = false;
    std::string failure_mode;
};

struct CaseStudyCase {
    std::string name;
    std::vector<CaseStudyRow> rows;  // attestation, oracle, ram
};

struct CaseStudyReport {
    std::vector<CaseStudyCase> cases;  // Case A, Case B, edge case
};

CaseStudyReport run_case_study();

}  // namespace ramgate
