#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cogsim/errors.hpp"

namespace cogsim {

// Ordinal cognitive stage. Severity strictly increases with the enum value;
// the serialized names are part of the dataset schema and must not change.
enum class CognitiveLabel : int {
    Healthy = 0,
    MCI = 1,
    EarlyAD = 2,
    ModAD = 3,
    SevAD = 4,
};

inline constexpr int kNumLabels = 5;

constexpr int severity(CognitiveLabel l) { return static_cast<int>(l); }

std::string_view to_string(CognitiveLabel l);
CognitiveLabel label_from_string(std::string_view s);
const std::array<CognitiveLabel, kNumLabels>& all_labels();

// Trajectory archetype assigned to each simulated user.
enum class ProgressionProfileKind : int {
    StableHealthy = 0,
    MildProgressor = 1,
    GradualDecliner = 2,
    FastDecliner = 3,
    StableMCI = 4,
    StableEarlyAD = 5,
};

inline constexpr int kNumProfiles = 6;

std::string_view to_string(ProgressionProfileKind k);
ProgressionProfileKind profile_from_string(std::string_view s);
const std::array<ProgressionProfileKind, kNumProfiles>& all_profiles();

// Population-level behavioral distortions used in distribution-shift studies.
enum class ConfoundKind : int {
    SlowViewer = 0,
    ImpulsiveReplayer = 1,
    LowLiker = 2,
};

inline constexpr int kNumConfounds = 3;

std::string_view to_string(ConfoundKind k);
ConfoundKind confound_from_string(std::string_view s);
const std::array<ConfoundKind, kNumConfounds>& all_confounds();

enum class VideoCategory : int {
    News = 0,
    Sports = 1,
    Cooking = 2,
    Entertainment = 3,
    World = 4,
};

inline constexpr int kNumCategories = 5;

std::string_view to_string(VideoCategory c);
VideoCategory category_from_string(std::string_view s);
const std::array<VideoCategory, kNumCategories>& all_categories();

// Sampled stage-change days for one user, 1-based day indices. Only the
// slots used by the user's profile kind are populated.
struct TransitionDays {
    std::optional<int> d1;  // MildProgressor: Healthy -> MCI
    std::optional<int> d2;  // FastDecliner:   MCI -> EarlyAD
    std::optional<int> d3;  // GradualDecliner: Healthy -> MCI
    std::optional<int> d4;  // GradualDecliner: MCI -> EarlyAD
    std::optional<int> d5;  // FastDecliner:   EarlyAD -> ModAD
    std::optional<int> d6;  // unused by all profiles; kept for schema parity

    bool empty() const {
        return !d1 && !d2 && !d3 && !d4 && !d5 && !d6;
    }

    // Throws InputError if any populated day is outside [1, total_days] or
    // populated days are not strictly increasing in slot order.
    void validate(int total_days) const;
};

struct UserProfile {
    int user_id = 0;
    ProgressionProfileKind kind = ProgressionProfileKind::StableHealthy;
    TransitionDays transitions;
    std::vector<ConfoundKind> confounds;  // sorted, unique
    std::uint64_t rng_stream_id = 0;

    bool has_confound(ConfoundKind k) const;
};

struct VideoMetadata {
    int video_id = 0;
    VideoCategory category = VideoCategory::News;
    int duration_s = 0;  // in [15, 90]
    std::string title;
    std::vector<std::string> tags;
    std::string reference_summary;  // canonical description used for scoring

    bool operator==(const VideoMetadata&) const = default;
};

}  // namespace cogsim
