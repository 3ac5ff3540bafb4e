#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cogsim/embedding.hpp"
#include "cogsim/record.hpp"
#include "cogsim/rng.hpp"

namespace cogsim {

// --- coherence -------------------------------------------------------------

// Cosine of the summary against the video's reference description.
double coherence(const Summary& summary, const VideoMetadata& video);

enum class CoherenceMode { Clean, Noisy };

// Calibrated per-stage coherence distribution used by the parametric backend.
// The Healthy/MCI/EarlyAD means are measurement anchors; ModAD/SevAD extend
// the ladder and are plain defaults. Draws are Normal(mean, spread^2) clipped
// to [0, 1].
struct CoherenceModel {
    std::array<double, kNumLabels> clean_mean = {0.932, 0.878, 0.741, 0.600, 0.460};
    std::array<double, kNumLabels> noisy_mean = {0.801, 0.421, 0.506, 0.429, 0.294};
    double spread = 0.05;

    double mean(CognitiveLabel label, CoherenceMode mode) const {
        const auto i = static_cast<std::size_t>(label);
        return mode == CoherenceMode::Clean ? clean_mean[i] : noisy_mean[i];
    }
    double sample(CognitiveLabel label, CoherenceMode mode, RngStream& rng) const;
};

// --- drift -----------------------------------------------------------------

// Decline of today's coherence relative to the personal baseline value.
double semantic_drift_baseline(double baseline_coherence, double day_coherence,
                               double epsilon);

// 1 - cos(day embedding, baseline embedding); in [0, 2] for non-zero inputs.
double semantic_drift_embedding(const EmbeddingVector& day_embedding,
                                const EmbeddingVector& baseline_embedding);

// --- engagement ------------------------------------------------------------

enum class EngagementEvent : int { Pause = 0, Skip = 1, Replay = 2, Like = 3, Share = 4 };
inline constexpr int kNumEngagementEvents = 5;

using EventCounts = std::array<long long, kNumEngagementEvents>;

// Shannon entropy (nats) of the normalized event counts; 0*log 0 := 0.
double behavioral_entropy(const EventCounts& counts);

struct DecayFit {
    std::vector<double> ratios;  // watch(day) / watch(first day)
    double lambda_hat = 0.0;     // exponential decay rate, >= 0 means decline
};

// Ratios relative to the first entry plus a least-squares fit of
// ln ratio = -lambda * (day - day0) over entries with positive ratio.
DecayFit engagement_decay(const std::vector<std::pair<int, double>>& watch_series);

// --- fused feature vector ----------------------------------------------------

inline constexpr int kNumFeatures = 15;

struct FeatureVector {
    double coherence_mean = 0.0;
    double semantic_drift = 0.0;
    double drift_slope = 0.0;
    double disfluency_freq = 0.0;
    double behavioral_entropy = 0.0;
    double decay_ratio = 0.0;
    double watch_time_mean = 0.0;
    double skipped_mean = 0.0;
    double pauses_mean = 0.0;
    double replays_mean = 0.0;
    double reaction_time_mean = 0.0;
    double like_rate = 0.0;
    double share_rate = 0.0;
    double churn_pct = 0.0;
    double logins_per_day = 0.0;

    std::array<double, kNumFeatures> to_array() const;
    static FeatureVector from_array(const std::array<double, kNumFeatures>& a);
};

const std::array<std::string_view, kNumFeatures>& feature_names();

// Feature index sets for the ablation masks.
const std::vector<int>& coherence_feature_indices();  // coherence-derived only
const std::vector<int>& language_feature_indices();   // + disfluency
const std::vector<int>& behavior_feature_indices();

struct UserBaseline {
    double coherence = 0.0;   // mean noisy-channel coherence, first active days
    double watch_norm = 0.0;  // mean watch_time / duration, first active days
};

// Aggregates one user's sessions within a day window into a FeatureVector.
// `durations_by_video` maps video_id -> duration seconds (for watch
// normalization). `drift_epsilon` is the noise term of the drift definition;
// it perturbs the semantic_drift feature only.
FeatureVector fuse(std::span<const SessionRecord> window,
                   const UserBaseline& baseline,
                   const std::vector<int>& durations_by_video,
                   double drift_epsilon = 0.0);

struct FeatureRow {
    int user_id = 0;
    int day = 0;
    CognitiveLabel label = CognitiveLabel::Healthy;
    FeatureVector features;
};

// Sliding-window feature extraction over a full dataset: one row per
// (user, day) with >= 1 session on that day; the window is the trailing
// `window_days` days. Baselines use each user's first <= 5 active days.
// When drift_sigma > 0 each row's semantic_drift carries the drift noise
// term, drawn deterministically from (seed, user, day).
std::vector<FeatureRow> extract_windows(const std::vector<SessionRecord>& records,
                                        const std::vector<int>& durations_by_video,
                                        int window_days, double drift_sigma = 0.0,
                                        std::uint64_t seed = 0);

}  // namespace cogsim
