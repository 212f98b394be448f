#include "ramgate/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ramgate {

namespace {

using nlohmann::json;

std::string fixed6(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6f", value);
    return buffer;
}

json metrics_to_json(const Metrics& m) {
    const auto rate_field = [](const std::optional<double>& rate) {
        return rate ? json(fixed6(*rate)) : json("undefined");
    };
    return json{{"ier", rate_field(m.ier())},
                {"shr", rate_field(m.shr())},
                {"ocr", rate_field(m.ocr())},
                {"executions", m.executions},
                {"halts", m.halts},
                {"invalid_executions", m.invalid_executions},
                {"steps", m.steps},
                {"a_r_false_steps", m.a_r_false_steps},
                {"a_r_true_steps", m.a_r_true_steps}};
}

}  // namespace

std::string format_rate(const std::optional<double>& rate) {
    return rate ? fixed6(*rate) : "undefined";
}

std::string sweep_csv(const SweepResult& sweep) {
    std::ostringstream out;
    out << "coverage,model,ier,shr,ocr,executions,halts,n,seed\n";
    for (const auto& point : sweep.points) {
        for (const auto& [model, metrics] : point.metrics) {
            out << fixed6(point.coverage) << ',' << to_string(model) << ','
                << format_rate(metrics.ier()) << ',' << format_rate(metrics.shr()) << ','
                << format_rate(metrics.ocr()) << ',' << metrics.executions << ','
                << metrics.halts << ',' << sweep.steps_per_point << ',' << sweep.seed
                << '\n';
        }
    }
    return out.str();
}

std::string sweep_svg(const SweepResult& sweep) {
    constexpr double kWidth = 640.0;
    constexpr double kHeight = 400.0;
    constexpr double kMargin = 50.0;
    const double plot_w = kWidth - 2 * kMargin;
    const double plot_h = kHeight - 2 * kMargin;

    const double c_min = sweep.points.front().coverage;
    const double c_max = sweep.points.back().coverage;
    const double span = c_max > c_min ? c_max - c_min : 1.0;

    const auto x_of = [&](double coverage) {
        return kMargin + (coverage - c_min) / span * plot_w;
    };
    const auto y_of = [&](double ier) { return kMargin + (1.0 - ier) * plot_h; };

    static const std::map<ModelId, std::string> colors = {
        {ModelId::Attestation, "#e07020"},
        {ModelId::Oracle, "#2060c0"},
        {ModelId::Ram, "#30a040"},
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
        << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "  <line x1=\"" << kMargin << "\" y1=\"" << kMargin + plot_h << "\" x2=\""
        << kMargin + plot_w << "\" y2=\"" << kMargin + plot_h
        << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin
        << "\" y2=\"" << kMargin + plot_h << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 10
        << "\" text-anchor=\"middle\" font-size=\"14\">coverage</text>\n";
    out << "  <text x=\"15\" y=\"" << kHeight / 2
        << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 15 "
        << kHeight / 2 << ")\">invalid execution rate</text>\n";

    for (const auto& [model, color] : colors) {
        bool present = false;
        std::ostringstream points;
        for (const auto& point : sweep.points) {
            auto it = point.metrics.find(model);
            if (it == point.metrics.end()) continue;
            const auto ier = it->second.ier();
            if (!ier) continue;
            present = true;
            points << fixed6(x_of(point.coverage)) << ',' << fixed6(y_of(*ier)) << ' ';
        }
        if (!present) continue;
        out << "  <polyline id=\"ier_" << to_string(model) << "\" fill=\"none\" stroke=\""
            << color << "\" stroke-width=\"2\" points=\"" << points.str() << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string metrics_json(const std::map<ModelId, Metrics>& metrics, long steps,
                         std::uint64_t seed) {
    json root;
    root["steps"] = steps;
    root["seed"] = seed;
    for (const auto& [model, m] : metrics) {
        root["models"][to_string(model)] = metrics_to_json(m);
    }
    return root.dump(2) + "\n";
}

std::string steps_csv(const std::vector<StepRecord>& records, const ModelSet& models) {
    std::ostringstream out;
    out << "step,drift_kind,drift_target,a_r";
    for (ModelId model : models.enabled()) {
        out << ',' << to_string(model) << "_executed," << to_string(model) << "_reason";
    }
    out << '\n';
    for (const auto& record : records) {
        out << record.step << ',' << to_string(record.event.kind) << ','
            << record.event.target.name << ',' << (record.a_r ? 1 : 0);
        for (ModelId model : models.enabled()) {
            const auto& decision = record.decisions.at(model);
            out << ',' << (decision.executed ? 1 : 0) << ',' << decision.reason;
        }
        out << '\n';
    }
    return out.str();
}

std::string case_study_json(const CaseStudyReport& report) {
    json cases = json::array();
    for (const auto& c : report.cases) {
        json rows = json::array();
        for (const auto& row : c.rows) {
            rows.push_back(json{{"model", row.model},
                                {"executes", row.executes},
                                {"executed", row.executed},
                                {"correct", row.correct ? "Yes" : "No"},
                                {"failure_mode", row.failure_mode}});
        }
        cases.push_back(json{{"case", c.name}, {"rows", rows}});
    }
    return json{{"cases", cases}}.dump(2) + "\n";
}

std::string case_study_table(const CaseStudyReport& report) {
    std::ostringstream out;
    for (const auto& c : report.cases) {
        out << c.name << '\n';
        out << "  model        executes?             correct?  failure mode\n";
        for (const auto& row : c.rows) {
            char line[256];
            std::snprintf(line, sizeof(line), "  %-12s %-21s %-9s %s\n", row.model.c_str(),
                          row.executes.c_str(), row.correct ? "Yes" : "No",
                          row.failure_mode.c_str());
            out << line;
        }
        out << '\n';
    }
    return out.str();
}

std::string witness_json(const FiniteInstance& instance, const std::optional<Witness>& witness) {
    json root;
    json universe = json::array();
    for (const auto& id : instance.universe.components()) universe.push_back(id.name);
    root["universe"] = universe;
    if (!witness) {
        root["witness"] = nullptr;
        root["result"] = "no witness";
        return root.dump(2) + "\n";
    }
    const auto check = verify_witness(instance, *witness);
    json proven;
    for (const auto& [id, status] : witness->s_p.entries) {
        proven[id.name] = to_string(status);
    }
    json real;
    for (const auto& [id, status] : witness->s_r_star.components) {
        real[id.name] = to_string(status);
    }
    root["result"] = "witness found";
    root["witness"] = json{{"s_p", proven},
                           {"s_r_star", real},
                           {"delta_star", witness->delta_star.name}};
    root["conditions"] = json{{"admission_approves", check.admission_approves},
                              {"real_authority_false", check.real_authority_false},
                              {"proven_slice_benign", check.proven_slice_benign},
                              {"delta_outside_visible", check.delta_outside_visible},
                              {"delta_in_gap", check.delta_in_gap},
                              {"verified", check.all()}};
    return root.dump(2) + "\n";
}

std::string necessity_json(const NecessityReport& report) {
    return json{{"assignments", report.assignments},
                {"f_true", report.f_true},
                {"f_false", report.f_false},
                {"ram_executes", report.ram_executes},
                {"ram_invalid_executions", report.ram_invalid_executions},
                {"ram_halts_on_f_true", report.ram_halts_on_f_true}}
               .dump(2) +
           "\n";
}

std::string audit_jsonl(const AuditLog& log) {
    std::ostringstream out;
    for (const auto& record : log.records()) {
        json proven;
        for (const auto& [name, status] : record.proven) {
            proven[name] = status;
        }
        out << json{{"step", record.step},
                    {"model", record.model},
                    {"verdict", record.verdict},
                    {"reason", record.reason},
                    {"proven", proven},
                    {"residual", record.residual},
                    {"assumptions", record.assumptions}}
                   .dump()
            << '\n';
    }
    return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open output file: " + tmp);
        }
        out << content;
        if (!out.flush()) {
            throw std::runtime_error("write failed: " + tmp);
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace ramgate
