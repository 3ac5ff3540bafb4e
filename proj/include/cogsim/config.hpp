#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cogsim/behaviors.hpp"
#include "cogsim/domain.hpp"
#include "cogsim/textgen.hpp"

namespace cogsim {

enum class CoherenceBackend { Text, Parametric };

std::string_view to_string(CoherenceBackend b);
CoherenceBackend backend_from_string(std::string_view s);

// Full simulation configuration. The defaults reproduce the headline setup:
// 200 users, 200 days, five videos from two categories per active day.
struct SimConfig {
    int total_users = 200;
    int total_days = 200;
    int videos_per_day = 5;
    int categories_per_day = 2;
    int summary_sentence_min = 1;
    int summary_sentence_max = 3;
    int videos_per_category = 8;

    std::uint64_t master_seed = 20240601;
    CoherenceBackend backend = CoherenceBackend::Text;

    NoiseSpec noise;
    std::map<ProgressionProfileKind, double> profile_mix;  // empty = uniform
    std::map<ConfoundKind, double> confound_rates;         // empty = 0.1 each

    DegradationTable policies = DegradationTable::defaults();
    QaAccuracyTable qa;

    void validate() const;

    // mix/rates with defaults applied
    std::map<ProgressionProfileKind, double> effective_mix() const;
    std::map<ConfoundKind, double> effective_confound_rates() const;

    std::string to_json() const;  // stable field order
    static SimConfig from_json(const std::string& text);
    static SimConfig load(const std::string& path);

    // FNV-1a hash of the canonical JSON form; identifies a cell exactly.
    std::uint64_t config_hash() const;
};

}  // namespace cogsim
