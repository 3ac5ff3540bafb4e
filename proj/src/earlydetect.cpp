#include "cogsim/earlydetect.hpp"

#include <cmath>

namespace cogsim {

void DetectionPolicy::validate() const {
    if (!(probability_threshold > 0.0 && probability_threshold < 1.0)) {
        throw ConfigError("detection threshold must be in (0, 1)");
    }
    if (persistence_m < 1) {
        throw ConfigError("detection persistence must be >= 1");
    }
}

std::optional<int> first_detection_day(const std::vector<double>& daily_probs,
                                       const DetectionPolicy& policy) {
    policy.validate();
    int run = 0;
    for (std::size_t i = 0; i < daily_probs.size(); ++i) {
        const double p = daily_probs[i];
        if (p < 0.0 || p > 1.0) {
            throw InputError("detection probabilities must be in [0, 1]");
        }
        run = p >= policy.probability_threshold ? run + 1 : 0;
        if (run >= policy.persistence_m) {
            return static_cast<int>(i) + 1;
        }
    }
    return std::nullopt;
}

double erde(std::optional<int> detection_day, double observation_window,
            double miss_cost) {
    if (observation_window <= 0.0) {
        throw InputError("observation window must be > 0");
    }
    if (miss_cost < 0.0 || miss_cost > 1.0) {
        throw InputError("miss cost must be in [0, 1]");
    }
    if (!detection_day) return miss_cost;
    if (*detection_day <= 0) {
        throw InputError("detection day must be >= 1");
    }
    return 1.0 - std::exp(-static_cast<double>(*detection_day) / observation_window);
}

double mean_erde(const std::vector<DetectionOutcome>& outcomes,
                 double observation_window, double miss_cost) {
    if (outcomes.empty()) {
        throw InputError("mean_erde over an empty outcome set");
    }
    double sum = 0.0;
    for (const auto& o : outcomes) {
        sum += erde(o.detection_day, observation_window, miss_cost);
    }
    return sum / static_cast<double>(outcomes.size());
}

TimeToDetection time_to_detection(const DetectionOutcome& outcome) {
    if (!outcome.true_onset_day) {
        throw InputError("time_to_detection needs a true onset day");
    }
    TimeToDetection r;
    if (!outcome.detection_day) return r;
    const int lag = *outcome.detection_day - *outcome.true_onset_day;
    if (lag >= 0) {
        r.days = lag;
    } else {
        r.false_early_lead = -lag;
    }
    return r;
}

EarlyPrecisionRecall early_precision_recall(const std::vector<DetectionOutcome>& outcomes,
                                            int k) {
    if (k < 1) throw InputError("cutoff k must be >= 1");
    long long flagged = 0;
    long long flagged_at_risk = 0;
    long long at_risk = 0;
    for (const auto& o : outcomes) {
        const bool is_flagged = o.detection_day && *o.detection_day <= k;
        const bool is_at_risk = o.true_onset_day.has_value();
        if (is_flagged) ++flagged;
        if (is_at_risk) ++at_risk;
        if (is_flagged && is_at_risk) ++flagged_at_risk;
    }
    EarlyPrecisionRecall r;
    if (flagged > 0) {
        r.precision = static_cast<double>(flagged_at_risk) / static_cast<double>(flagged);
    }
    r.recall = at_risk > 0
                   ? static_cast<double>(flagged_at_risk) / static_cast<double>(at_risk)
                   : 0.0;
    return r;
}

std::vector<double> detection_curve(const std::vector<DetectionOutcome>& outcomes,
                                    int total_days) {
    if (total_days < 1) throw InputError("total_days must be >= 1");
    long long at_risk = 0;
    std::vector<long long> detections(static_cast<std::size_t>(total_days) + 1, 0);
    for (const auto& o : outcomes) {
        if (!o.true_onset_day) continue;
        ++at_risk;
        if (o.detection_day && *o.detection_day <= total_days) {
            ++detections[static_cast<std::size_t>(*o.detection_day)];
        }
    }
    std::vector<double> curve(static_cast<std::size_t>(total_days), 0.0);
    long long cumulative = 0;
    for (int d = 1; d <= total_days; ++d) {
        cumulative += detections[static_cast<std::size_t>(d)];
        curve[static_cast<std::size_t>(d - 1)] =
            at_risk > 0 ? static_cast<double>(cumulative) / static_cast<double>(at_risk)
                        : 0.0;
    }
    return curve;
}

}  // namespace cogsim
