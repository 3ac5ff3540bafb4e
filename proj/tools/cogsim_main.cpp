#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cogsim/harness.hpp"
#include "cogsim/version.hpp"

namespace {

using namespace cogsim;

struct GlobalOpts {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> backend;
    int workers = 1;
};

SimConfig load_config(const std::string& path, const GlobalOpts& opts) {
    SimConfig config = path.empty() ? SimConfig{} : SimConfig::load(path);
    if (opts.seed) config.master_seed = *opts.seed;
    if (opts.backend) config.backend = backend_from_string(*opts.backend);
    config.validate();
    return config;
}

ExperimentSpec make_spec(const SimConfig& config, const GlobalOpts& opts) {
    ExperimentSpec spec;
    spec.base = config;
    spec.workers = opts.workers;
    return spec;
}

void write_feature_csv(const std::vector<FeatureRow>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write feature file: " + path);
    out << "user_id,day,label";
    for (auto name : feature_names()) out << ',' << name;
    out << '\n';
    for (const auto& row : rows) {
        out << row.user_id << ',' << row.day << ',' << to_string(row.label);
        for (double v : row.features.to_array()) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out << ',' << buf;
        }
        out << '\n';
    }
}

std::vector<FeatureRow> read_feature_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open feature file: " + path);
    std::string header;
    if (!std::getline(in, header)) throw ParseError("empty feature file: " + path);
    std::vector<FeatureRow> rows;
    std::string line;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        for (char c : line) {
            if (c == ',') {
                cells.push_back(cell);
                cell.clear();
            } else {
                cell.push_back(c);
            }
        }
        cells.push_back(cell);
        if (cells.size() != 3 + kNumFeatures) {
            throw ParseError("feature file line " + std::to_string(line_no) +
                             ": wrong column count");
        }
        FeatureRow row;
        row.user_id = std::stoi(cells[0]);
        row.day = std::stoi(cells[1]);
        row.label = label_from_string(cells[2]);
        std::array<double, kNumFeatures> arr{};
        for (int f = 0; f < kNumFeatures; ++f) {
            arr[static_cast<std::size_t>(f)] = std::stod(cells[static_cast<std::size_t>(3 + f)]);
        }
        row.features = FeatureVector::from_array(arr);
        rows.push_back(row);
    }
    return rows;
}

const std::vector<int>& mask_by_name(const std::string& name) {
    static const std::vector<int> all = [] {
        std::vector<int> idx;
        for (int i = 0; i < kNumFeatures; ++i) idx.push_back(i);
        return idx;
    }();
    if (name == "full") return all;
    if (name == "coherence") return coherence_feature_indices();
    if (name == "language") return language_feature_indices();
    if (name == "behavior") return behavior_feature_indices();
    throw ConfigError("unknown mask: " + name);
}

int run(int argc, char** argv) {
    CLI::App app{"synthetic cognitive-decline interaction simulator and benchmark"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--seed", opts.seed, "override the master seed");
    app.add_option("--workers", opts.workers, "parallel experiment cells")
        ->check(CLI::PositiveNumber);
    app.add_option("--backend", opts.backend, "coherence backend")
        ->check(CLI::IsMember({"text", "parametric"}));

    std::string config_path;
    std::string out_path;
    std::string data_path;
    std::string features_path;
    std::string model_path;
    std::string mask_name = "full";
    std::string sweep_kind = "noise";
    int window_days = 7;

    auto* simulate_cmd = app.add_subcommand("simulate", "generate a dataset");
    simulate_cmd->add_option("--config", config_path, "config JSON");
    simulate_cmd->add_option("--out", out_path, "output directory")->required();

    auto* features_cmd = app.add_subcommand("features", "extract fused feature windows");
    features_cmd->add_option("--data", data_path, "dataset JSONL path")->required();
    features_cmd->add_option("--out", out_path, "feature CSV path")->required();
    features_cmd->add_option("--window", window_days, "window length in days");

    auto* train_cmd = app.add_subcommand("train", "train the stage classifier");
    train_cmd->add_option("--features", features_path, "feature CSV path")->required();
    train_cmd->add_option("--out", model_path, "model JSON path")->required();
    train_cmd->add_option("--mask", mask_name, "feature mask")
        ->check(CLI::IsMember({"full", "coherence", "language", "behavior"}));

    auto* eval_cmd = app.add_subcommand("evaluate", "evaluate a trained model");
    eval_cmd->add_option("--model", model_path, "model JSON path")->required();
    eval_cmd->add_option("--features", features_path, "feature CSV path")->required();
    eval_cmd->add_option("--mask", mask_name, "feature mask")
        ->check(CLI::IsMember({"full", "coherence", "language", "behavior"}));

    auto* ablate_cmd = app.add_subcommand("ablate", "run the ablation study");
    ablate_cmd->add_option("--config", config_path, "config JSON");
    ablate_cmd->add_option("--out", out_path, "report directory")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "run a parameter sweep");
    sweep_cmd->add_option("--kind", sweep_kind, "sweep kind")
        ->check(CLI::IsMember({"noise", "sensitivity", "earlydetect"}));
    sweep_cmd->add_option("--config", config_path, "config JSON");
    sweep_cmd->add_option("--out", out_path, "report directory")->required();

    auto* report_cmd = app.add_subcommand("report", "run the full experiment battery");
    report_cmd->add_option("--config", config_path, "config JSON");
    report_cmd->add_option("--out", out_path, "report directory")->required();

    CLI11_PARSE(app, argc, argv);

    if (simulate_cmd->parsed()) {
        const SimConfig config = load_config(config_path, opts);
        std::filesystem::create_directories(out_path);
        const Dataset ds = simulate(config);
        const auto dataset_file = (std::filesystem::path(out_path) / "dataset.jsonl").string();
        save(ds, dataset_file);
        std::cout << "wrote " << ds.records.size() << " records to " << dataset_file
                  << '\n';
        return 0;
    }
    if (features_cmd->parsed()) {
        const Dataset ds = load(data_path);
        for (const auto& w : ds.load_warnings) std::cerr << "warning: " << w << '\n';
        const auto rows =
            extract_windows(ds.records, ds.durations_by_video(), window_days,
                            ds.config.noise.sigma, ds.config.master_seed);
        write_feature_csv(rows, out_path);
        std::cout << "wrote " << rows.size() << " feature rows to " << out_path << '\n';
        return 0;
    }
    if (train_cmd->parsed()) {
        const auto rows = mask_rows(read_feature_csv(features_path), mask_by_name(mask_name));
        std::vector<FeatureVector> xs;
        std::vector<CognitiveLabel> ys;
        for (const auto& row : rows) {
            xs.push_back(row.features);
            ys.push_back(row.label);
        }
        const Classifier model = Classifier::train(xs, ys);
        for (const auto& w : model.warnings()) std::cerr << "warning: " << w << '\n';
        model.save(model_path);
        std::cout << "trained on " << xs.size() << " rows; model saved to " << model_path
                  << '\n';
        return 0;
    }
    if (eval_cmd->parsed()) {
        const Classifier model = Classifier::load(model_path);
        const auto rows = mask_rows(read_feature_csv(features_path), mask_by_name(mask_name));
        std::vector<FeatureVector> xs;
        std::vector<CognitiveLabel> ys;
        for (const auto& row : rows) {
            xs.push_back(row.features);
            ys.push_back(row.label);
        }
        const Metrics m = model.evaluate(xs, ys);
        std::cout << "accuracy," << format_fixed(m.accuracy) << '\n';
        std::cout << "macro_f1," << format_fixed(m.macro_f1) << '\n';
        for (const auto& [label, f1] : m.f1) {
            std::cout << "f1_" << to_string(label) << ',' << format_fixed(f1) << '\n';
        }
        return 0;
    }
    if (ablate_cmd->parsed()) {
        const ExperimentSpec spec = make_spec(load_config(config_path, opts), opts);
        EvaluationReport report;
        report.ablation = run_ablation(spec);
        report.provenance["base_config_hash"] = std::to_string(spec.base.config_hash());
        emit_report(report, out_path);
        std::cout << "ablation report written to " << out_path << '\n';
        return 0;
    }
    if (sweep_cmd->parsed()) {
        const ExperimentSpec spec = make_spec(load_config(config_path, opts), opts);
        EvaluationReport report;
        report.provenance["base_config_hash"] = std::to_string(spec.base.config_hash());
        if (sweep_kind == "noise") {
            report.noise_sweep = run_noise_sweep(spec);
        } else if (sweep_kind == "sensitivity") {
            report.sensitivity = run_sensitivity(spec);
        } else {
            report.early_detect = run_earlydetect(spec);
        }
        emit_report(report, out_path);
        std::cout << sweep_kind << " sweep written to " << out_path << '\n';
        return 0;
    }
    if (report_cmd->parsed()) {
        const ExperimentSpec spec = make_spec(load_config(config_path, opts), opts);
        const EvaluationReport report = run_all(spec);
        emit_report(report, out_path);
        std::cout << "full report written to " << out_path << '\n';
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cogsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const cogsim::ParseError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 3;
    } catch (const cogsim::IoError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 3;
    } catch (const cogsim::InputError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 3;
    } catch (const cogsim::DegenerateInputError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
