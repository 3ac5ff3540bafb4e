#pragma once

#include <optional>
#include <vector>

#include "cogsim/domain.hpp"

namespace cogsim {

// How a stream of daily classifier probabilities becomes a detection: the
// first day ending a run of `persistence_m` consecutive days at or above
// `probability_threshold` for the target stage.
struct DetectionPolicy {
    double probability_threshold = 0.5;
    int persistence_m = 3;
    CognitiveLabel target_label = CognitiveLabel::MCI;

    void validate() const;
};

struct DetectionOutcome {
    int user_id = 0;
    bool detected = false;
    std::optional<int> detection_day;
    std::optional<int> true_onset_day;

    std::optional<int> lead_or_lag_days() const {
        if (!detection_day || !true_onset_day) return std::nullopt;
        return *detection_day - *true_onset_day;
    }
};

// daily_probs[d-1] is the day-d probability for the target stage; days with
// no prediction should carry 0. Returns the first day d such that days
// d-m+1..d are all >= threshold.
std::optional<int> first_detection_day(const std::vector<double>& daily_probs,
                                       const DetectionPolicy& policy);

// Detection cost: miss_cost when no detection occurred, otherwise
// 1 - exp(-d / o), increasing in the detection day d and decreasing in the
// observation window o.
double erde(std::optional<int> detection_day, double observation_window,
            double miss_cost);

// Mean cost over at-risk users (those whose trajectory reaches the target).
double mean_erde(const std::vector<DetectionOutcome>& outcomes,
                 double observation_window, double miss_cost);

struct TimeToDetection {
    std::optional<int> days;             // detection at/after onset
    std::optional<int> false_early_lead;  // detection before onset, in days
};

TimeToDetection time_to_detection(const DetectionOutcome& outcome);

struct EarlyPrecisionRecall {
    std::optional<double> precision;  // absent when nobody was flagged
    double recall = 0.0;
};

// A user is flagged iff detection_day <= k; at-risk users are those with a
// true onset day. Precision over flagged, recall over at-risk.
EarlyPrecisionRecall early_precision_recall(const std::vector<DetectionOutcome>& outcomes,
                                            int k);

// Cumulative fraction of at-risk users detected by each day 1..total_days.
std::vector<double> detection_curve(const std::vector<DetectionOutcome>& outcomes,
                                    int total_days);

}  // namespace cogsim
