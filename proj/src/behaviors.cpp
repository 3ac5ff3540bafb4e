#include "cogsim/behaviors.hpp"

#include <algorithm>
#include <cmath>

namespace cogsim {

namespace {

int round_count(double v) {
    const long r = std::lround(v);
    return r < 0 ? 0 : static_cast<int>(r);
}

double clip_low(double v, double lo) { return v < lo ? lo : v; }

}  // namespace

const BehaviorRanges& behavior_ranges(CognitiveLabel label) {
    static const std::array<BehaviorRanges, kNumLabels> kTable = {{
        // Healthy
        {{85, 100}, {0, 5}, {0, 2}, {0, 1}, {4, 6}, {0.65, 0.80}, {0.35, 0.50}, {1, 1}, {2, 3}},
        // MCI
        {{60, 80}, {5, 15}, {1, 3}, {1, 3}, {7, 10}, {0.45, 0.55}, {0.25, 0.35}, {2, 3}, {1, 2}},
        // EarlyAD
        {{35, 55}, {10, 25}, {2, 5}, {2, 5}, {11, 14}, {0.15, 0.25}, {0.05, 0.15}, {5, 6}, {0.5, 1}},
        // ModAD
        {{20, 35}, {15, 30}, {3, 6}, {3, 6}, {14, 17}, {0.05, 0.10}, {0.02, 0.08}, {7, 8}, {0.3, 0.8}},
        // SevAD
        {{10, 20}, {20, 40}, {4, 8}, {4, 8}, {18, 22}, {0.00, 0.05}, {0.00, 0.03}, {12, 15}, {0.0, 0.5}},
    }};
    return kTable[static_cast<std::size_t>(label)];
}

BehaviorSample sample_behaviors(CognitiveLabel label, RngStream& rng) {
    const BehaviorRanges& r = behavior_ranges(label);
    BehaviorSample s;
    s.watch_time_s = rng.uniform_real(r.watch_time_s.lo, r.watch_time_s.hi);
    s.skipped_s = rng.uniform_real(r.skipped_s.lo, r.skipped_s.hi);
    s.pauses = static_cast<int>(rng.uniform_int(
        static_cast<std::int64_t>(r.pauses.lo), static_cast<std::int64_t>(r.pauses.hi)));
    s.replays = static_cast<int>(rng.uniform_int(
        static_cast<std::int64_t>(r.replays.lo), static_cast<std::int64_t>(r.replays.hi)));
    s.reaction_time_s = rng.uniform_real(r.reaction_time_s.lo, r.reaction_time_s.hi);
    s.liked = rng.bernoulli(rng.uniform_real(r.like_p.lo, r.like_p.hi)) ? 1 : 0;
    s.shared = rng.bernoulli(rng.uniform_real(r.share_p.lo, r.share_p.hi)) ? 1 : 0;
    s.churn_pct = rng.uniform_real(r.churn_pct.lo, r.churn_pct.hi);
    s.logins_per_day = rng.uniform_real(r.logins_per_day.lo, r.logins_per_day.hi);
    return s;
}

BehaviorSample sample_behaviors(CognitiveLabel label, const VideoMetadata& video,
                                RngStream& rng) {
    BehaviorSample s = sample_behaviors(label, rng);
    s.watch_time_s = std::min(s.watch_time_s, static_cast<double>(video.duration_s));
    return s;
}

BehaviorSample apply_confound(const BehaviorSample& sample,
                              const std::vector<ConfoundKind>& kinds,
                              const VideoMetadata& video, RngStream& rng) {
    BehaviorSample s = sample;
    for (ConfoundKind k : kinds) {
        switch (k) {
            case ConfoundKind::SlowViewer:
                s.watch_time_s = std::min(s.watch_time_s * 1.5,
                                          static_cast<double>(video.duration_s));
                break;
            case ConfoundKind::ImpulsiveReplayer:
                s.replays += 3;
                break;
            case ConfoundKind::LowLiker:
                if (s.liked == 1 && rng.bernoulli(0.7)) s.liked = 0;
                break;
        }
    }
    return s;
}

void NoiseSpec::validate() const {
    if (sigma < 0.0) throw ConfigError("noise sigma must be >= 0");
    if (delta < 0.0) throw ConfigError("noise delta must be >= 0");
    for (double a : attenuation) {
        if (!(a > 0.0 && a <= 1.0)) {
            throw ConfigError("attenuation factors must be in (0, 1]");
        }
    }
    if (trait_shift_sigma < 0.0 || metric_trait_sigma < 0.0 ||
        coherence_trait_sigma < 0.0) {
        throw ConfigError("trait sigmas must be >= 0");
    }
    if (disfluency_spread < 0.0) {
        throw ConfigError("disfluency_spread must be >= 0");
    }
}

bool NoiseSpec::enabled() const {
    if (sigma != 0.0 || delta != 0.0) return true;
    for (double a : attenuation) {
        if (a != 1.0) return true;
    }
    return trait_shift_sigma != 0.0 || metric_trait_sigma != 0.0 ||
           coherence_trait_sigma != 0.0 || disfluency_spread != 0.0;
}

NoiseSpec NoiseSpec::none() {
    NoiseSpec spec;
    spec.sigma = 0.0;
    spec.delta = 0.0;
    spec.attenuation.fill(1.0);
    spec.trait_shift_sigma = 0.0;
    spec.metric_trait_sigma = 0.0;
    spec.coherence_trait_sigma = 0.0;
    spec.disfluency_spread = 0.0;
    return spec;
}

UserTraits sample_user_traits(const NoiseSpec& spec, RngStream& rng) {
    // shifts are truncated to the span of the stage table; more extreme
    // draws would leave the behavioral manifold entirely
    const auto truncate = [](double v, double bound) {
        return std::clamp(v, -bound, bound);
    };
    UserTraits t;
    t.behavior_shift =
        spec.trait_shift_sigma > 0.0
            ? truncate(rng.normal(0.0, spec.trait_shift_sigma), 2.0)
            : 0.0;
    for (auto& z : t.metric_shift) {
        z = spec.metric_trait_sigma > 0.0
                ? truncate(rng.normal(0.0, spec.metric_trait_sigma), 2.5)
                : 0.0;
    }
    t.coherence_offset = spec.coherence_trait_sigma > 0.0
                             ? rng.normal(0.0, spec.coherence_trait_sigma)
                             : 0.0;
    if (spec.disfluency_spread > 0.0) {
        t.degradation_scale = clip_low(
            rng.uniform_real(1.0 - spec.disfluency_spread, 1.0 + spec.disfluency_spread),
            0.0);
    }
    return t;
}

const SeverityStep& severity_step() {
    // (SevAD midpoint - Healthy midpoint) / 4 for each metric.
    static const SeverityStep kStep = {
        -19.375,  // watch_time_s
        6.875,    // skipped_s
        1.25,     // pauses
        1.375,    // replays
        3.75,     // reaction_time_s
        -0.175,   // like_p
        -0.1025,  // share_p
        3.125,    // churn_pct
        -0.5625,  // logins_per_day
    };
    return kStep;
}

BehaviorSample apply_trait_shift(const BehaviorSample& sample,
                                 const std::array<double, kNumBehaviorMetrics>& shifts,
                                 const VideoMetadata& video, RngStream& rng) {
    bool all_zero = true;
    for (double s : shifts) all_zero = all_zero && s == 0.0;
    if (all_zero) return sample;

    const SeverityStep& step = severity_step();
    BehaviorSample s = sample;
    s.watch_time_s =
        std::min(clip_low(s.watch_time_s + shifts[0] * step.watch_time_s, 0.0),
                 static_cast<double>(video.duration_s));
    s.skipped_s = clip_low(s.skipped_s + shifts[1] * step.skipped_s, 0.0);
    s.pauses = round_count(s.pauses + shifts[2] * step.pauses);
    s.replays = round_count(s.replays + shifts[3] * step.replays);
    s.reaction_time_s =
        clip_low(s.reaction_time_s + shifts[4] * step.reaction_time_s, 0.0);
    s.churn_pct = clip_low(s.churn_pct + shifts[7] * step.churn_pct, 0.0);
    s.logins_per_day = clip_low(s.logins_per_day + shifts[8] * step.logins_per_day, 0.0);

    const double like_shift = shifts[5] * step.like_p;
    if (like_shift < 0.0 && s.liked == 1) {
        if (rng.bernoulli(std::min(1.0, -like_shift))) s.liked = 0;
    } else if (like_shift > 0.0 && s.liked == 0) {
        if (rng.bernoulli(std::min(1.0, like_shift))) s.liked = 1;
    }
    const double share_shift = shifts[6] * step.share_p;
    if (share_shift < 0.0 && s.shared == 1) {
        if (rng.bernoulli(std::min(1.0, -share_shift))) s.shared = 0;
    } else if (share_shift > 0.0 && s.shared == 0) {
        if (rng.bernoulli(std::min(1.0, share_shift))) s.shared = 1;
    }
    return s;
}

BehaviorSample apply_trait_shift(const BehaviorSample& sample, double shift,
                                 const VideoMetadata& video, RngStream& rng) {
    std::array<double, kNumBehaviorMetrics> shifts;
    shifts.fill(shift);
    return apply_trait_shift(sample, shifts, video, rng);
}

BehaviorSample inject_behavior_noise(const BehaviorSample& sample,
                                     const NoiseSpec& spec, CognitiveLabel label,
                                     RngStream& rng) {
    spec.validate();
    if (spec.delta == 0.0) return sample;
    const BehaviorRanges& r = behavior_ranges(label);
    auto eta = [&](double width) {
        return rng.uniform_real(-spec.delta, spec.delta) * width;
    };
    BehaviorSample s = sample;
    s.watch_time_s = clip_low(s.watch_time_s + eta(r.watch_time_s.width()), 0.0);
    s.skipped_s = clip_low(s.skipped_s + eta(r.skipped_s.width()), 0.0);
    s.pauses = round_count(s.pauses + eta(r.pauses.width()));
    s.replays = round_count(s.replays + eta(r.replays.width()));
    s.reaction_time_s = clip_low(s.reaction_time_s + eta(r.reaction_time_s.width()), 0.0);
    s.churn_pct = clip_low(s.churn_pct + eta(r.churn_pct.width()), 0.0);
    s.logins_per_day = clip_low(s.logins_per_day + eta(r.logins_per_day.width()), 0.0);
    return s;
}

double noisy_coherence_raw(double coherence, const NoiseSpec& spec,
                           CognitiveLabel label, RngStream& rng) {
    const double att = spec.attenuation[static_cast<std::size_t>(label)];
    const double eps = spec.sigma > 0.0 ? rng.normal(0.0, spec.sigma) : 0.0;
    return att * coherence + eps;
}

std::pair<BehaviorSample, double> inject_noise(const BehaviorSample& sample,
                                               double coherence,
                                               const NoiseSpec& spec,
                                               CognitiveLabel label,
                                               RngStream& rng) {
    spec.validate();
    const double raw = noisy_coherence_raw(coherence, spec, label, rng);
    const double clipped = std::clamp(raw, 0.0, 1.0);
    return {inject_behavior_noise(sample, spec, label, rng), clipped};
}

}  // namespace cogsim
