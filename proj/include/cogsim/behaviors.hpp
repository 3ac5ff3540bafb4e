#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cogsim/domain.hpp"
#include "cogsim/rng.hpp"

namespace cogsim {

// One interaction's engagement metrics. liked/shared are 0/1. Percent-style
// metrics (like, share) are stored as probabilities/flags; churn_pct keeps
// the percent scale of its source ranges.
struct BehaviorSample {
    double watch_time_s = 0.0;
    double skipped_s = 0.0;
    int pauses = 0;
    int replays = 0;
    double reaction_time_s = 0.0;
    int liked = 0;
    int shared = 0;
    double churn_pct = 0.0;
    double logins_per_day = 0.0;

    bool operator==(const BehaviorSample&) const = default;
};

struct Range {
    double lo = 0.0;
    double hi = 0.0;
    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double v) const { return v >= lo && v <= hi; }
};

// Calibrated per-stage engagement ranges. Continuous metrics are uniform in
// the range, counts integer-uniform, like/share are Bernoulli with the
// success probability itself uniform in the range.
struct BehaviorRanges {
    Range watch_time_s;
    Range skipped_s;
    Range pauses;
    Range replays;
    Range reaction_time_s;
    Range like_p;
    Range share_p;
    Range churn_pct;
    Range logins_per_day;
};

const BehaviorRanges& behavior_ranges(CognitiveLabel label);

// Draws a sample inside the stage's ranges (no clipping, no noise).
BehaviorSample sample_behaviors(CognitiveLabel label, RngStream& rng);

// Same, with watch time clipped to the video duration.
BehaviorSample sample_behaviors(CognitiveLabel label, const VideoMetadata& video,
                                RngStream& rng);

// Population distortions. SlowViewer inflates watch time 1.5x (clipped to
// duration), ImpulsiveReplayer adds 3 replays, LowLiker suppresses a set
// like with probability 0.7.
BehaviorSample apply_confound(const BehaviorSample& sample,
                              const std::vector<ConfoundKind>& kinds,
                              const VideoMetadata& video, RngStream& rng);

// Noise model for the degraded ("noisy") condition. sigma is the stddev of
// the additive Gaussian perturbation on coherence, delta the half-width of
// the uniform perturbation applied to each behavioral metric scaled by that
// metric's stage-range width. attenuation is the per-stage multiplicative
// factor applied to coherence before the jitter.
//
// The trait fields model stable per-user heterogeneity and belong to the
// noisy condition as well: trait_shift_sigma shifts all engagement metrics
// coherently along the severity direction (in units of one stage step),
// metric_trait_sigma adds an independent per-metric shift on the same scale,
// coherence_trait_sigma is a persistent per-user coherence offset, and
// disfluency_spread is the half-width of the per-user multiplier applied to
// the degradation rates. All are zero in the clean condition.
struct NoiseSpec {
    double sigma = 0.1;
    double delta = 0.1;
    std::array<double, kNumLabels> attenuation = {0.859, 0.480, 0.683, 0.715, 0.640};
    double trait_shift_sigma = 0.75;
    double metric_trait_sigma = 2.25;
    double coherence_trait_sigma = 0.12;
    double disfluency_spread = 0.15;

    void validate() const;
    bool enabled() const;

    static NoiseSpec none();  // identity: sigma=delta=0, attenuation=1, traits off
};

inline constexpr int kNumBehaviorMetrics = 9;

// Stable per-user draw used by the noisy condition.
struct UserTraits {
    double behavior_shift = 0.0;     // severity-direction shift, stage steps
    std::array<double, kNumBehaviorMetrics> metric_shift = {};  // idiosyncratic
    double coherence_offset = 0.0;   // additive coherence offset
    double degradation_scale = 1.0;  // multiplier on degradation rates

    // common + idiosyncratic shift for one metric, in stage steps
    double shift_for(int metric) const {
        return behavior_shift + metric_shift[static_cast<std::size_t>(metric)];
    }
};

UserTraits sample_user_traits(const NoiseSpec& spec, RngStream& rng);

// Average change of each metric per one stage of severity, computed from the
// range midpoints. Used to scale trait shifts.
struct SeverityStep {
    double watch_time_s;
    double skipped_s;
    double pauses;
    double replays;
    double reaction_time_s;
    double like_p;
    double share_p;
    double churn_pct;
    double logins_per_day;
};
const SeverityStep& severity_step();

// Shifts every metric by `shift` severity steps; counts round to >= 0,
// like/share flip stochastically in the implied direction, watch time is
// clipped to the video duration.
BehaviorSample apply_trait_shift(const BehaviorSample& sample, double shift,
                                 const VideoMetadata& video, RngStream& rng);

// Per-metric variant driven by a user's combined trait shifts, indexed in
// the BehaviorSample field order.
BehaviorSample apply_trait_shift(const BehaviorSample& sample,
                                 const std::array<double, kNumBehaviorMetrics>& shifts,
                                 const VideoMetadata& video, RngStream& rng);

// Uniform per-metric jitter: m -> clip(m + eta * range_width(m)), eta drawn
// fresh per metric in U(-delta, delta). Counts round to >= 0; binary fields
// pass through.
BehaviorSample inject_behavior_noise(const BehaviorSample& sample,
                                     const NoiseSpec& spec, CognitiveLabel label,
                                     RngStream& rng);

// Pre-clip noisy coherence: attenuation[label] * coherence + N(0, sigma^2).
double noisy_coherence_raw(double coherence, const NoiseSpec& spec,
                           CognitiveLabel label, RngStream& rng);

// Combined record-level noise op: returns the perturbed behaviors and the
// noisy coherence clipped to [0, 1].
std::pair<BehaviorSample, double> inject_noise(const BehaviorSample& sample,
                                               double coherence,
                                               const NoiseSpec& spec,
                                               CognitiveLabel label,
                                               RngStream& rng);

}  // namespace cogsim
