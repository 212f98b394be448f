#include "ramgate/simulator.hpp"

#include <stdexcept>
#include <thread>

namespace ramgate {

const char* to_string(ModelId m) {
    switch (m) {
        case ModelId::Attestation: return "attestation";
        case ModelId::Oracle: return "oracle";
        case ModelId::Ram: return "ram";
    }
    return "?";
}

std::optional<ModelId> model_from_string(const std::string& name) {
    if (name == "attestation") return ModelId::Attestation;
    if (name == "oracle") return ModelId::Oracle;
    if (name == "ram") return ModelId::Ram;
    return std::nullopt;
}

std::vector<ModelId> ModelSet::enabled() const {
    std::vector<ModelId> ids;
    if (attestation) ids.push_back(ModelId::Attestation);
    if (oracle) ids.push_back(ModelId::Oracle);
    if (ram) ids.push_back(ModelId::Ram);
    return ids;
}

ActionClass standard_action_class() {
    return ActionClass{{Privilege{"transfer", standard_universe().as_set()}}};
}

namespace {

std::optional<double> rate(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) return std::nullopt;
    return static_cast<double>(numerator) / static_cast<double>(denominator);
}

bool real_authority(const RealState& real) {
    for (const auto& [id, status] : real.components) {
        (void)id;
        if (status != Status::Valid) return false;
    }
    return true;
}

}  // namespace

std::optional<double> Metrics::ier() const { return rate(invalid_executions, executions); }
std::optional<double> Metrics::shr() const { return rate(halts_on_false, a_r_false_steps); }
std::optional<double> Metrics::ocr() const { return rate(halts_on_true, a_r_true_steps); }

std::vector<StepRecord> run_episode(const EpisodeOptions& options) {
    if (options.length < 1) {
        throw std::invalid_argument("episode length must be >= 1");
    }
    DriftConfig drift = options.drift;
    drift.oracle_lag = options.oracle.propagation_lag;
    drift.validate();

    const Universe& universe = standard_universe();
    Rng rng(drift.seed);
    EpisodeChannels channels(drift, options.oracle.extra_visible);

    // One admission snapshot per episode, over the pristine channel.
    const AdmissionSnapshot snapshot{channels.provable_view(0), options.requested};
    const auto models = options.models.enabled();

    std::vector<StepRecord> records;
    records.reserve(static_cast<std::size_t>(options.length));

    for (long step = 0; step < options.length; ++step) {
        channels.advance_to(step);
        StepRecord record;
        record.step = step;
        record.event = sample_step(drift, rng, step);
        channels.apply_drift(record.event, rng);
        record.a_r = real_authority(channels.real());

        for (ModelId model : models) {
            ModelDecision decision;
            switch (model) {
                case ModelId::Attestation: {
                    const auto verdict =
                        decide_attestation(snapshot, channels.provable_view(step));
                    decision.executed = verdict == BaselineDecision::Proceed;
                    if (!decision.executed) decision.reason = "mismatch_halt";
                    break;
                }
                case ModelId::Oracle: {
                    const auto verdict =
                        decide_oracle(snapshot, channels.provable_view(step),
                                      options.oracle, channels.oracle_view(step));
                    decision.executed = verdict == BaselineDecision::Proceed;
                    if (!decision.executed) decision.reason = "mismatch_halt";
                    break;
                }
                case ModelId::Ram: {
                    const auto observe = [&]() {
                        return build_envelope(
                            universe, ProvableState::make(step, channels.ram_observe(step)));
                    };
                    const auto attest = [](const ProvableState& proven) {
                        return proven.verify_integrity();
                    };
                    const auto result =
                        gate_step(universe, observe, attest, options.requested);
                    decision.executed = result.outcome && result.outcome->executes();
                    if (!decision.executed) decision.reason = result.reason_code;
                    if (options.audit) {
                        options.audit->append(step, "ram", observe(), result);
                    }
                    break;
                }
            }
            record.decisions.emplace(model, std::move(decision));
        }
        records.push_back(std::move(record));
    }
    return records;
}

Metrics compute_metrics(const std::vector<StepRecord>& records, ModelId model) {
    if (records.empty()) {
        throw std::invalid_argument("no step records");
    }
    Metrics m;
    for (const auto& record : records) {
        auto it = record.decisions.find(model);
        if (it == record.decisions.end()) {
            throw std::invalid_argument("model not evaluated on this trace");
        }
        ++m.steps;
        if (record.a_r) {
            ++m.a_r_true_steps;
        } else {
            ++m.a_r_false_steps;
        }
        if (it->second.executed) {
            ++m.executions;
            if (!record.a_r) ++m.invalid_executions;
        } else {
            ++m.halts;
            if (record.a_r) {
                ++m.halts_on_true;
            } else {
                ++m.halts_on_false;
            }
        }
    }
    return m;
}

std::vector<double> default_coverage_grid() {
    std::vector<double> grid;
    for (int i = 1; i <= 10; ++i) {
        grid.push_back(static_cast<double>(i) / 10.0);
    }
    return grid;
}

SweepResult coverage_sweep(const EpisodeOptions& base, const std::vector<double>& grid,
                           long steps_per_point, bool parallel) {
    if (grid.empty()) {
        throw std::invalid_argument("empty coverage grid");
    }
    double previous = -1.0;
    for (double c : grid) {
        if (c < 0.0 || c > 1.0 || c <= previous) {
            throw std::invalid_argument("grid must be strictly increasing within [0,1]");
        }
        previous = c;
    }

    SweepResult result;
    result.steps_per_point = steps_per_point;
    result.seed = base.drift.seed;
    result.points.resize(grid.size());

    const auto run_point = [&](std::size_t index) {
        EpisodeOptions options = base;
        options.length = steps_per_point;
        options.audit = nullptr;
        options.drift.coverage = grid[index];
        options.drift.seed = split_seed(base.drift.seed, index);
        const auto records = run_episode(options);
        SweepPoint point;
        point.coverage = grid[index];
        for (ModelId model : options.models.enabled()) {
            point.metrics.emplace(model, compute_metrics(records, model));
        }
        result.points[index] = std::move(point);
    };

    if (parallel) {
        std::vector<std::thread> workers;
        workers.reserve(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            workers.emplace_back(run_point, i);
        }
        for (auto& worker : workers) {
            worker.join();
        }
    } else {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            run_point(i);
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Scripted case study.

namespace {

struct ScriptedStep {
    StateMap real;             // ground truth at t1
    StateMap baseline_view;    // attestation channel entries at t1 ({I,B,R,C})
    StateMap oracle_extra;     // oracle channel entries at t1 ({R})
    StateMap ram_view;         // fresh observation at t1 (all five)
};

CaseStudyCase run_scripted_case(const std::string& name, const ScriptedStep& script,
                                const std::string& oracle_executes_label,
                                const std::string& attestation_failure,
                                const std::string& oracle_failure) {
    const Universe& universe = standard_universe();
    const ActionClass requested = standard_action_class();

    StateMap pristine;
    for (const auto& id : universe.components()) {
        if (id != comp_E()) pristine.emplace(id, Status::Valid);
    }
    const AdmissionSnapshot snapshot{ProvableState::make(0, pristine), requested};

    const auto real = RealState::make(universe, 1, script.real);
    const bool a_r = real_authority(real);

    const auto current = ProvableState::make(1, script.baseline_view);
    const bool attestation_executes =
        decide_attestation(snapshot, current) == BaselineDecision::Proceed;

    const OracleChannel oracle_channel{{comp_R()}, 2};
    const bool oracle_executes =
        decide_oracle(snapshot, current, oracle_channel,
                      ProvableState::make(1, script.oracle_extra)) ==
        BaselineDecision::Proceed;

    const auto ram_result = gate_step(
        universe,
        [&]() { return build_envelope(universe, ProvableState::make(1, script.ram_view)); },
        [](const ProvableState& proven) { return proven.verify_integrity(); }, requested);
    const bool ram_executes = ram_result.outcome && ram_result.outcome->executes();

    const auto row = [&](const std::string& model, bool executed,
                         const std::string& label, const std::string& failure) {
        CaseStudyRow r;
        r.model = model;
        r.executed = executed;
        r.executes = label.empty() ? (executed ? "Yes" : "No") : label;
        r.correct = executed == a_r;
        r.failure_mode = r.correct ? "None" : failure;
        return r;
    };

    CaseStudyCase result;
    result.name = name;
    result.rows.push_back(row("attestation", attestation_executes, "", attestation_failure));
    result.rows.push_back(
        row("oracle", oracle_executes, oracle_executes ? oracle_executes_label : "",
            oracle_failure));
    result.rows.push_back(row("ram", ram_executes, "", "authority not reconstructible"));
    return result;
}

}  // namespace

CaseStudyReport run_case_study() {
    CaseStudyReport report;

    // Case A: the IP change is carried by the provable channel. Every model
    // sees a definitive invalid identity signal.
    ScriptedStep case_a;
    case_a.real = {{comp_I(), Status::Invalid}, {comp_B(), Status::Valid},
                   {comp_R(), Status::Valid},   {comp_C(), Status::Valid},
                   {comp_E(), Status::Valid}};
    case_a.baseline_view = {{comp_I(), Status::Invalid},
                            {comp_B(), Status::Valid},
                            {comp_R(), Status::Valid},
                            {comp_C(), Status::Valid}};
    case_a.oracle_extra = {{comp_R(), Status::Valid}};
    case_a.ram_view = case_a.real;
    report.cases.push_back(run_scripted_case(
        "Case A: observable drift", case_a, "",
        "executes despite detectable mismatch", "executes despite detectable mismatch"));

    // Case B: a multi-session fraud signal lives outside every provable
    // model and the regulatory alert has not propagated. The baselines see
    // nothing definite; the fresh observation carries two unclassifiable
    // signals, so authority cannot be constructed.
    ScriptedStep case_b;
    case_b.real = {{comp_I(), Status::Valid}, {comp_B(), Status::Valid},
                   {comp_R(), Status::Invalid}, {comp_C(), Status::Valid},
                   {comp_E(), Status::Invalid}};
    case_b.baseline_view = {{comp_I(), Status::Valid},
                            {comp_B(), Status::Valid},
                            {comp_R(), Status::Valid},
                            {comp_C(), Status::Valid}};
    case_b.oracle_extra = {{comp_R(), Status::Valid}};  // lag not yet expired
    case_b.ram_view = {{comp_I(), Status::Valid},   {comp_B(), Status::Valid},
                       {comp_R(), Status::Undefined}, {comp_C(), Status::Valid},
                       {comp_E(), Status::Undefined}};
    report.cases.push_back(run_scripted_case(
        "Case B: hidden drift", case_b, "Yes (in many cases)",
        "executes on stale provable state; gap undetected",
        "oracle coverage gap; unmodeled signal undetected"));

    // Edge case: the change is legitimate and every condition stays valid.
    ScriptedStep edge;
    edge.real = {{comp_I(), Status::Valid}, {comp_B(), Status::Valid},
                 {comp_R(), Status::Valid}, {comp_C(), Status::Valid},
                 {comp_E(), Status::Valid}};
    edge.baseline_view = {{comp_I(), Status::Valid},
                          {comp_B(), Status::Valid},
                          {comp_R(), Status::Valid},
                          {comp_C(), Status::Valid}};
    edge.oracle_extra = {{comp_R(), Status::Valid}};
    edge.ram_view = edge.real;
    report.cases.push_back(run_scripted_case("Edge case: legitimate change", edge, "",
                                             "halts on a valid transfer",
                                             "halts on a valid transfer"));
    return report;
}

}  // namespace ramgate
