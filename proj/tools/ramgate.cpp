// Batch front door for the reconstruction-gate experiments: episode runs,
// coverage sweeps, the scripted case study, and the counterexample lab.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ramgate/config.hpp"
#include "ramgate/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInvariant = 3;

struct CommonOptions {
    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed_override;
    bool quiet = false;
};

std::string out_path(const CommonOptions& common, const std::string& file) {
    return common.out_dir + "/" + file;
}

// Seed priority: --seed flag, then the config file, then RAMGATE_SEED.
void resolve_seed(ramgate::ScenarioConfig& config, const CommonOptions& common) {
    if (common.seed_override) {
        config.drift.seed = *common.seed_override;
        return;
    }
    if (config.seed_from_config) {
        return;
    }
    if (const char* env = std::getenv("RAMGATE_SEED")) {
        config.drift.seed = std::strtoull(env, nullptr, 10);
    }
}

void add_common(CLI::App* cmd, CommonOptions& common, bool with_config) {
    if (with_config) {
        cmd->add_option("--config", common.config_path, "scenario config file")
            ->required();
    }
    cmd->add_option("--seed", common.seed_override, "override the scenario seed");
    cmd->add_option("--out-dir", common.out_dir, "directory for result files");
    cmd->add_flag("--quiet", common.quiet, "suppress stdout summaries");
}

int cmd_run(const CommonOptions& common, bool emit_steps, bool emit_audit) {
    auto config = ramgate::load_scenario_config(common.config_path);
    resolve_seed(config, common);

    auto options = config.episode_options();
    ramgate::AuditLog audit;
    if (emit_audit) options.audit = &audit;

    const auto records = ramgate::run_episode(options);
    std::map<ramgate::ModelId, ramgate::Metrics> metrics;
    for (auto model : options.models.enabled()) {
        metrics.emplace(model, ramgate::compute_metrics(records, model));
    }

    ramgate::write_file_atomic(out_path(common, "metrics.json"),
                               ramgate::metrics_json(metrics, options.length,
                                                     options.drift.seed));
    if (emit_steps) {
        ramgate::write_file_atomic(out_path(common, "steps.csv"),
                                   ramgate::steps_csv(records, options.models));
    }
    if (emit_audit) {
        ramgate::write_file_atomic(out_path(common, "audit.jsonl"),
                                   ramgate::audit_jsonl(audit));
    }
    if (!common.quiet) {
        std::cout << ramgate::metrics_json(metrics, options.length, options.drift.seed);
    }
    return kExitOk;
}

int cmd_sweep(const CommonOptions& common, bool parallel) {
    auto config = ramgate::load_scenario_config(common.config_path);
    resolve_seed(config, common);
    if (config.grid.empty()) {
        throw ramgate::ConfigError("sweep requires a 'grid' entry in the config");
    }

    const auto sweep = ramgate::coverage_sweep(config.episode_options(), config.grid,
                                               config.steps, parallel);
    const auto csv = ramgate::sweep_csv(sweep);
    ramgate::write_file_atomic(out_path(common, "sweep.csv"), csv);
    ramgate::write_file_atomic(out_path(common, "sweep.svg"), ramgate::sweep_svg(sweep));
    if (!common.quiet) {
        std::cout << csv;
    }
    return kExitOk;
}

int cmd_case_study(const CommonOptions& common) {
    const auto report = ramgate::run_case_study();
    ramgate::write_file_atomic(out_path(common, "case_study.json"),
                               ramgate::case_study_json(report));
    if (!common.quiet) {
        std::cout << ramgate::case_study_table(report);
    }
    return kExitOk;
}

int cmd_witness(const CommonOptions& common, const std::string& instance_path) {
    const auto instance = ramgate::load_instance_config(instance_path);
    const auto witness = ramgate::find_witness(instance);
    const auto rendered = ramgate::witness_json(instance, witness);
    ramgate::write_file_atomic(out_path(common, "witness.json"), rendered);
    if (!common.quiet) {
        std::cout << rendered;
    }
    // Absence of a witness is a valid answer, not an error.
    return kExitOk;
}

int cmd_necessity_scan(const CommonOptions& common, const std::string& instance_path) {
    const auto instance = ramgate::load_instance_config(instance_path);
    const auto report = ramgate::necessity_scan(instance);
    const auto rendered = ramgate::necessity_json(report);
    ramgate::write_file_atomic(out_path(common, "necessity.json"), rendered);
    if (!common.quiet) {
        std::cout << rendered;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ramgate: reconstruction-gate simulation and counterexample lab"};
    app.require_subcommand(1);

    CommonOptions run_common, sweep_common, case_common, witness_common, scan_common;
    bool emit_steps = false;
    bool emit_audit = false;
    bool parallel = false;
    std::string witness_instance, scan_instance;

    auto* run = app.add_subcommand("run", "run one episode and emit metrics");
    add_common(run, run_common, true);
    run->add_flag("--emit-steps", emit_steps, "write one CSV row per step");
    run->add_flag("--emit-audit", emit_audit, "write the gate audit log");

    auto* sweep = app.add_subcommand("sweep", "sweep the coverage grid");
    add_common(sweep, sweep_common, true);
    sweep->add_flag("--parallel", parallel, "run grid points on separate threads");

    auto* case_study = app.add_subcommand("case-study", "scripted transfer scenario");
    add_common(case_study, case_common, false);

    auto* witness = app.add_subcommand("witness", "search a finite instance for a witness");
    add_common(witness, witness_common, false);
    witness->add_option("--instance", witness_instance, "finite instance file")->required();

    auto* scan = app.add_subcommand("necessity-scan", "enumerate gate behavior");
    add_common(scan, scan_common, false);
    scan->add_option("--instance", scan_instance, "finite instance file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (run->parsed()) return cmd_run(run_common, emit_steps, emit_audit);
        if (sweep->parsed()) return cmd_sweep(sweep_common, parallel);
        if (case_study->parsed()) return cmd_case_study(case_common);
        if (witness->parsed()) return cmd_witness(witness_common, witness_instance);
        if (scan->parsed()) return cmd_necessity_scan(scan_common, scan_instance);
    } catch (const ramgate::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return kExitConfig;
}
