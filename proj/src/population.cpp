#include "cogsim/population.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "cogsim/progression.hpp"
#include "cogsim/rng.hpp"
#include "cogsim/text.hpp"

namespace cogsim {

std::vector<VideoMetadata> build_catalog(const SimConfig& config,
                                         std::uint64_t seed,
                                         const TemplateCorpus& corpus) {
    if (config.videos_per_category < 5) {
        throw ConfigError("videos_per_category must be >= 5");
    }

    std::vector<VideoMetadata> catalog;
    catalog.reserve(static_cast<std::size_t>(config.videos_per_category) * kNumCategories);
    int next_id = 0;
    for (VideoCategory cat : all_categories()) {
        const CategoryTemplates& ct = corpus.for_category(cat);
        for (int i = 0; i < config.videos_per_category; ++i) {
            RngStream rng = make_stream(seed, "catalog",
                                        static_cast<std::uint64_t>(cat),
                                        static_cast<std::uint64_t>(i));
            VideoMetadata v;
            v.video_id = next_id++;
            v.category = cat;
            v.duration_s = static_cast<int>(rng.uniform_int(15, 90));

            const auto& topic = ct.topics[static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<std::int64_t>(ct.topics.size()) - 1))];
            const auto& detail = ct.details[static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<std::int64_t>(ct.details.size()) - 1))];

            // two distinct reference sentences built from the same topic
            const auto n_templates = static_cast<std::int64_t>(ct.sentence_templates.size());
            const auto first = rng.uniform_int(0, n_templates - 1);
            auto second = rng.uniform_int(0, n_templates - 2);
            if (second >= first) ++second;
            auto fill = [&](const std::string& tmpl) {
                return fill_slot(fill_slot(tmpl, "{topic}", topic), "{detail}", detail);
            };
            v.reference_summary =
                fill(ct.sentence_templates[static_cast<std::size_t>(first)]) + " " +
                fill(ct.sentence_templates[static_cast<std::size_t>(second)]);

            const auto& title_tmpl = ct.titles[static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<std::int64_t>(ct.titles.size()) - 1))];
            v.title = fill_slot(title_tmpl, "{topic}", topic);

            std::string cat_lower(to_string(cat));
            for (char& c : cat_lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            v.tags = {cat_lower, topic, detail};
            catalog.push_back(std::move(v));
        }
    }
    return catalog;
}

std::vector<int> largest_remainder_counts(
    int n_users, const std::map<ProgressionProfileKind, double>& profile_mix) {
    if (n_users < 1) throw ConfigError("n_users must be >= 1");
    double sum = 0.0;
    for (const auto& [kind, frac] : profile_mix) {
        if (frac < 0.0) throw ConfigError("profile mix fractions must be >= 0");
        sum += frac;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw ConfigError("profile mix must sum to 1");
    }

    std::vector<int> counts(kNumProfiles, 0);
    std::vector<std::pair<double, int>> remainders;  // (-remainder, index)
    int assigned = 0;
    for (ProgressionProfileKind k : all_profiles()) {
        const auto it = profile_mix.find(k);
        const double frac = it == profile_mix.end() ? 0.0 : it->second;
        const double quota = frac * n_users;
        const int base = static_cast<int>(std::floor(quota));
        const int idx = static_cast<int>(k);
        counts[static_cast<std::size_t>(idx)] = base;
        assigned += base;
        remainders.emplace_back(-(quota - base), idx);
    }
    std::stable_sort(remainders.begin(), remainders.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    int leftover = n_users - assigned;
    for (const auto& [neg_rem, idx] : remainders) {
        if (leftover == 0) break;
        ++counts[static_cast<std::size_t>(idx)];
        --leftover;
    }
    return counts;
}

std::vector<UserProfile> sample_population(
    int n_users, const std::map<ProgressionProfileKind, double>& profile_mix,
    const std::map<ConfoundKind, double>& confound_rates,
    std::uint64_t master_seed, int total_days) {
    const auto counts = largest_remainder_counts(n_users, profile_mix);

    std::vector<ProgressionProfileKind> assignment;
    assignment.reserve(static_cast<std::size_t>(n_users));
    for (ProgressionProfileKind k : all_profiles()) {
        for (int i = 0; i < counts[static_cast<std::size_t>(k)]; ++i) {
            assignment.push_back(k);
        }
    }

    // Fisher-Yates with a population-level stream
    RngStream shuffle_rng = make_stream(master_seed, "profile-assignment");
    for (std::size_t i = assignment.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(
            shuffle_rng.uniform_int(0, static_cast<std::int64_t>(i) - 1));
        std::swap(assignment[i - 1], assignment[j]);
    }

    std::vector<UserProfile> users;
    users.reserve(static_cast<std::size_t>(n_users));
    for (int user_id = 1; user_id <= n_users; ++user_id) {
        UserProfile u;
        u.user_id = user_id;
        u.kind = assignment[static_cast<std::size_t>(user_id - 1)];
        u.rng_stream_id = derive_seed(derive_seed(master_seed, hash_tag("user")),
                                      static_cast<std::uint64_t>(user_id));

        RngStream transition_rng =
            make_stream(master_seed, "transitions", static_cast<std::uint64_t>(user_id));
        u.transitions = sample_transition_days(u.kind, total_days, transition_rng);

        RngStream confound_rng =
            make_stream(master_seed, "confounds", static_cast<std::uint64_t>(user_id));
        for (ConfoundKind k : all_confounds()) {
            const auto it = confound_rates.find(k);
            const double rate = it == confound_rates.end() ? 0.0 : it->second;
            if (rate > 0.0 && confound_rng.bernoulli(rate)) {
                u.confounds.push_back(k);
            }
        }
        users.push_back(std::move(u));
    }
    return users;
}

void save_catalog(const std::vector<VideoMetadata>& catalog, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write catalog file: " + path);
    for (const auto& v : catalog) {
        nlohmann::ordered_json j;
        j["video_id"] = v.video_id;
        j["category"] = std::string(to_string(v.category));
        j["duration_s"] = v.duration_s;
        j["title"] = v.title;
        j["tags"] = v.tags;
        j["reference_summary"] = v.reference_summary;
        out << j.dump() << '\n';
    }
}

std::vector<VideoMetadata> load_catalog(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open catalog file: " + path);
    std::vector<VideoMetadata> catalog;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError("catalog line " + std::to_string(line_no) + ": " + e.what());
        }
        VideoMetadata v;
        v.video_id = j.at("video_id").get<int>();
        v.category = category_from_string(j.at("category").get<std::string>());
        v.duration_s = j.at("duration_s").get<int>();
        v.title = j.at("title").get<std::string>();
        v.tags = j.at("tags").get<std::vector<std::string>>();
        v.reference_summary = j.at("reference_summary").get<std::string>();
        catalog.push_back(std::move(v));
    }
    return catalog;
}

}  // namespace cogsim
