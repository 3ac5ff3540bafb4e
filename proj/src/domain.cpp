#include "cogsim/domain.hpp"

#include <algorithm>

namespace cogsim {

namespace {

constexpr std::array<std::string_view, kNumLabels> kLabelNames = {
    "Healthy", "MCI", "EarlyAD", "ModAD", "SevAD"};

constexpr std::array<std::string_view, kNumProfiles> kProfileNames = {
    "StableHealthy", "MildProgressor", "GradualDecliner",
    "FastDecliner",  "StableMCI",      "StableEarlyAD"};

constexpr std::array<std::string_view, kNumConfounds> kConfoundNames = {
    "SlowViewer", "ImpulsiveReplayer", "LowLiker"};

constexpr std::array<std::string_view, kNumCategories> kCategoryNames = {
    "News", "Sports", "Cooking", "Entertainment", "World"};

}  // namespace

std::string_view to_string(CognitiveLabel l) {
    return kLabelNames.at(static_cast<std::size_t>(l));
}

CognitiveLabel label_from_string(std::string_view s) {
    for (std::size_t i = 0; i < kLabelNames.size(); ++i) {
        if (kLabelNames[i] == s) return static_cast<CognitiveLabel>(i);
    }
    throw ParseError("unknown cognitive label: " + std::string(s));
}

const std::array<CognitiveLabel, kNumLabels>& all_labels() {
    static const std::array<CognitiveLabel, kNumLabels> labels = {
        CognitiveLabel::Healthy, CognitiveLabel::MCI, CognitiveLabel::EarlyAD,
        CognitiveLabel::ModAD, CognitiveLabel::SevAD};
    return labels;
}

std::string_view to_string(ProgressionProfileKind k) {
    return kProfileNames.at(static_cast<std::size_t>(k));
}

ProgressionProfileKind profile_from_string(std::string_view s) {
    for (std::size_t i = 0; i < kProfileNames.size(); ++i) {
        if (kProfileNames[i] == s) return static_cast<ProgressionProfileKind>(i);
    }
    throw ParseError("unknown progression profile: " + std::string(s));
}

const std::array<ProgressionProfileKind, kNumProfiles>& all_profiles() {
    static const std::array<ProgressionProfileKind, kNumProfiles> kinds = {
        ProgressionProfileKind::StableHealthy,
        ProgressionProfileKind::MildProgressor,
        ProgressionProfileKind::GradualDecliner,
        ProgressionProfileKind::FastDecliner,
        ProgressionProfileKind::StableMCI,
        ProgressionProfileKind::StableEarlyAD};
    return kinds;
}

std::string_view to_string(ConfoundKind k) {
    return kConfoundNames.at(static_cast<std::size_t>(k));
}

ConfoundKind confound_from_string(std::string_view s) {
    for (std::size_t i = 0; i < kConfoundNames.size(); ++i) {
        if (kConfoundNames[i] == s) return static_cast<ConfoundKind>(i);
    }
    throw ParseError("unknown confound: " + std::string(s));
}

const std::array<ConfoundKind, kNumConfounds>& all_confounds() {
    static const std::array<ConfoundKind, kNumConfounds> kinds = {
        ConfoundKind::SlowViewer, ConfoundKind::ImpulsiveReplayer,
        ConfoundKind::LowLiker};
    return kinds;
}

std::string_view to_string(VideoCategory c) {
    return kCategoryNames.at(static_cast<std::size_t>(c));
}

VideoCategory category_from_string(std::string_view s) {
    for (std::size_t i = 0; i < kCategoryNames.size(); ++i) {
        if (kCategoryNames[i] == s) return static_cast<VideoCategory>(i);
    }
    throw ParseError("unknown video category: " + std::string(s));
}

const std::array<VideoCategory, kNumCategories>& all_categories() {
    static const std::array<VideoCategory, kNumCategories> cats = {
        VideoCategory::News, VideoCategory::Sports, VideoCategory::Cooking,
        VideoCategory::Entertainment, VideoCategory::World};
    return cats;
}

void TransitionDays::validate(int total_days) const {
    const std::array<const std::optional<int>*, 6> slots = {&d1, &d2, &d3,
                                                            &d4, &d5, &d6};
    int last = 0;
    for (const auto* slot : slots) {
        if (!slot->has_value()) continue;
        const int day = **slot;
        if (day < 1 || day > total_days) {
            throw InputError("transition day " + std::to_string(day) +
                             " outside [1, " + std::to_string(total_days) + "]");
        }
        if (day <= last) {
            throw InputError("transition days must strictly increase");
        }
        last = day;
    }
}

bool UserProfile::has_confound(ConfoundKind k) const {
    return std::find(confounds.begin(), confounds.end(), k) != confounds.end();
}

}  // namespace cogsim
