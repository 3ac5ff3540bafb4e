#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cogsim/dataset.hpp"
#include "cogsim/earlydetect.hpp"
#include "cogsim/model.hpp"
#include "cogsim/stats.hpp"

namespace cogsim {

// Declarative description of the experiment battery.
struct ExperimentSpec {
    SimConfig base;
    int window_days = 7;
    DetectionPolicy detection;
    std::vector<double> noise_grid = {0.0, 0.05, 0.1, 0.2, 0.3};  // sigma values
    std::vector<int> population_grid = {100, 200, 300};
    std::vector<std::pair<int, int>> summary_length_grid = {{1, 1}, {1, 3}};
    double validation_fraction = 0.2;
    int workers = 1;

    void validate() const;
};

struct UserSplit {
    std::vector<int> train_users;
    std::vector<int> validation_users;

    bool is_validation(int user_id) const;
};

// Stratified by progression profile, shuffled with a seed-derived stream.
UserSplit split_users(const std::vector<UserProfile>& users, double validation_fraction,
                      std::uint64_t master_seed);

// Explicit ablation mask: features outside `keep` are zeroed, not skipped.
FeatureVector mask_features(const FeatureVector& fv, const std::vector<int>& keep);
std::vector<FeatureRow> mask_rows(std::vector<FeatureRow> rows,
                                  const std::vector<int>& keep);

struct CellResult {
    std::string setting;
    std::uint64_t config_hash = 0;
    Metrics metrics;

    double accuracy() const { return metrics.accuracy; }
    double f1_mci() const { return metrics.f1_of(CognitiveLabel::MCI); }
    double f1_earlyad() const { return metrics.f1_of(CognitiveLabel::EarlyAD); }
};

struct AblationReport {
    CellResult full;
    CellResult coherence_only;
    CellResult behavior_only;
    CellResult no_noise;
};

struct CoherenceDropRow {
    CognitiveLabel label;
    double clean_mean = 0.0;
    double noisy_mean = 0.0;
    double drop_pct = 0.0;
};

struct NoiseSweepReport {
    std::vector<std::pair<double, CellResult>> cells;  // (sigma, result)
    std::vector<CoherenceDropRow> coherence_drops;     // at the default noise spec
};

struct SensitivityRow {
    int users = 0;
    int summary_min = 0;
    int summary_max = 0;
    double accuracy = 0.0;
    double f1_mci = 0.0;
    double f1_earlyad = 0.0;
    double coherence_separation = 0.0;  // mean clean coherence Healthy - EarlyAD
    std::uint64_t config_hash = 0;
};

struct SensitivityReport {
    std::vector<SensitivityRow> rows;
};

struct ErdeRow {
    std::string model;
    double erde_100 = 0.0;
    double erde_200 = 0.0;
};

struct EarlyPrRow {
    std::string model;
    int k = 0;
    std::optional<double> precision;
    double recall = 0.0;
};

struct EarlyDetectReport {
    std::vector<ErdeRow> erde_rows;             // coherence_only, behavior_only, fusion
    std::vector<EarlyPrRow> early_pr_rows;      // k in {50, 100}
    double fusion_mean_ttd = 0.0;               // over detected at-risk users
    int fusion_detected = 0;
    int fusion_at_risk = 0;
    int fusion_false_early = 0;
    std::vector<double> fusion_curve;           // cumulative detection fraction
    std::vector<DetectionOutcome> fusion_outcomes;
};

struct SeparabilityReport {
    std::vector<SeparabilityStat> stats;
};

struct EvaluationReport {
    std::optional<AblationReport> ablation;
    std::optional<NoiseSweepReport> noise_sweep;
    std::optional<SensitivityReport> sensitivity;
    std::optional<EarlyDetectReport> early_detect;
    std::optional<SeparabilityReport> separability;
    std::map<std::string, std::string> provenance;  // cell -> config hash etc.
};

AblationReport run_ablation(const ExperimentSpec& spec);
NoiseSweepReport run_noise_sweep(const ExperimentSpec& spec);
SensitivityReport run_sensitivity(const ExperimentSpec& spec);
EarlyDetectReport run_earlydetect(const ExperimentSpec& spec);
SeparabilityReport run_separability(const ExperimentSpec& spec);

// Runs the full battery (parallel across cells up to spec.workers).
EvaluationReport run_all(const ExperimentSpec& spec);

// One CSV per table plus report.md with provenance hashes and the
// calibration register (external target vs achieved value).
void emit_report(const EvaluationReport& report, const std::string& out_dir);

// Formats a double with fixed 4 decimals, locale-independent.
std::string format_fixed(double v);

}  // namespace cogsim
