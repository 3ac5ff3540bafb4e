#pragma once

#include <string>
#include <vector>

#include "cogsim/config.hpp"
#include "cogsim/features.hpp"
#include "cogsim/population.hpp"
#include "cogsim/progression.hpp"
#include "cogsim/record.hpp"

namespace cogsim {

// In-memory dataset handle: the generating config plus everything derived
// from it. Records are ordered by (user_id, day, video slot).
struct Dataset {
    SimConfig config;
    std::vector<VideoMetadata> catalog;
    std::vector<UserProfile> users;
    std::vector<LabelSchedule> schedules;  // parallel to users
    std::vector<SessionRecord> records;
    std::vector<std::string> load_warnings;  // unknown-field notes, etc.

    std::vector<int> durations_by_video() const;
    const LabelSchedule& schedule_of(int user_id) const;
};

// Simulates one user-day against an already-built catalog. Returns zero
// records on days the user does not log in; otherwise `videos_per_day`
// records drawn from `categories_per_day` sampled categories.
std::vector<SessionRecord> simulate_day(const UserProfile& user,
                                        const LabelSchedule& schedule, int day,
                                        const std::vector<VideoMetadata>& catalog,
                                        const SimConfig& config,
                                        const TextGenerator& textgen,
                                        const CoherenceModel& coherence_model,
                                        const UserTraits& traits,
                                        const std::vector<double>& churn_by_label);

// Full simulation: catalog, population, schedules, all user-days.
Dataset simulate(const SimConfig& config);
Dataset simulate(const SimConfig& config, const TemplateCorpus& corpus);

// JSONL persistence, one record per line, plus a `<path>.manifest.json`
// sidecar carrying the config, its hash, the seed and version stamps.
void save(const Dataset& dataset, const std::string& path);
Dataset load(const std::string& path);

std::string manifest_path(const std::string& dataset_path);

}  // namespace cogsim
