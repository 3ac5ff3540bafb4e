#pragma once

#include <cstdint>
#include <vector>

#include "cogsim/config.hpp"
#include "cogsim/corpus.hpp"
#include "cogsim/domain.hpp"

namespace cogsim {

// Deterministic synthetic catalog: videos_per_category per category, dense
// 0-based ids, durations in [15, 90], titles/tags/reference summaries filled
// from the corpus templates.
std::vector<VideoMetadata> build_catalog(const SimConfig& config,
                                         std::uint64_t seed,
                                         const TemplateCorpus& corpus);

// Exact profile counts via largest-remainder rounding (ties broken in
// enumeration order), assignment shuffled deterministically, per-user
// transition days and confounds drawn from user-keyed streams so values do
// not depend on generation order.
std::vector<UserProfile> sample_population(
    int n_users, const std::map<ProgressionProfileKind, double>& profile_mix,
    const std::map<ConfoundKind, double>& confound_rates,
    std::uint64_t master_seed, int total_days = 200);

// Exposed for tests: number of users per profile under largest-remainder
// rounding, indexed in enumeration order.
std::vector<int> largest_remainder_counts(
    int n_users, const std::map<ProgressionProfileKind, double>& profile_mix);

// Catalog export/import: JSONL, one video per line, fields video_id,
// category, duration_s, title, tags, reference_summary.
void save_catalog(const std::vector<VideoMetadata>& catalog,
                  const std::string& path);
std::vector<VideoMetadata> load_catalog(const std::string& path);

}  // namespace cogsim
