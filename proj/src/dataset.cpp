#include "cogsim/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cogsim/version.hpp"

namespace cogsim {

std::vector<int> Dataset::durations_by_video() const {
    std::vector<int> durations(catalog.size(), 0);
    for (const auto& v : catalog) {
        if (v.video_id < 0 || v.video_id >= static_cast<int>(catalog.size())) {
            throw InputError("catalog video ids must be dense");
        }
        durations[static_cast<std::size_t>(v.video_id)] = v.duration_s;
    }
    return durations;
}

const LabelSchedule& Dataset::schedule_of(int user_id) const {
    for (std::size_t i = 0; i < users.size(); ++i) {
        if (users[i].user_id == user_id) return schedules[i];
    }
    throw InputError("unknown user id " + std::to_string(user_id));
}

namespace {

int draw_session_count(double rate, RngStream& rng) {
    if (rate <= 0.0) return 0;
    if (rate < 1.0) return rng.bernoulli(rate) ? 1 : 0;
    return rng.poisson(rate);
}

}  // namespace

std::vector<SessionRecord> simulate_day(const UserProfile& user,
                                        const LabelSchedule& schedule, int day,
                                        const std::vector<VideoMetadata>& catalog,
                                        const SimConfig& config,
                                        const TextGenerator& textgen,
                                        const CoherenceModel& coherence_model,
                                        const UserTraits& traits,
                                        const std::vector<double>& churn_by_label) {
    if (day < 1 || day > config.total_days) {
        throw InputError("day " + std::to_string(day) + " outside [1, total_days]");
    }
    RngStream rng = make_stream(config.master_seed, "day",
                                static_cast<std::uint64_t>(user.user_id),
                                static_cast<std::uint64_t>(day));
    const CognitiveLabel label = schedule.at_day(day);
    const BehaviorRanges& ranges = behavior_ranges(label);

    // login intensity gates participation; the trait shift moves it with the
    // rest of the engagement metrics
    const double login_rate = rng.uniform_real(ranges.logins_per_day.lo,
                                               ranges.logins_per_day.hi);
    // the trait shift moves the login intensity but cannot silence a user
    // outright; a fifth of the stage-level rate survives as a floor
    const double shifted_rate =
        std::max(0.2 * login_rate,
                 login_rate + traits.shift_for(8) * severity_step().logins_per_day);
    if (draw_session_count(shifted_rate, rng) == 0) {
        return {};
    }

    // sample distinct categories, then the day's videos from their union
    std::array<int, kNumCategories> category_order = {0, 1, 2, 3, 4};
    for (int i = kNumCategories - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.uniform_int(0, i));
        std::swap(category_order[static_cast<std::size_t>(i)],
                  category_order[static_cast<std::size_t>(j)]);
    }
    std::set<int> chosen_categories;
    for (int i = 0; i < config.categories_per_day; ++i) {
        chosen_categories.insert(category_order[static_cast<std::size_t>(i)]);
    }

    std::vector<int> pool;
    for (const auto& v : catalog) {
        if (chosen_categories.count(static_cast<int>(v.category)) > 0) {
            pool.push_back(v.video_id);
        }
    }
    if (static_cast<int>(pool.size()) < config.videos_per_day) {
        throw ConfigError("daily video pool smaller than videos_per_day");
    }
    for (int i = 0; i < config.videos_per_day; ++i) {
        const auto j = rng.uniform_int(i, static_cast<std::int64_t>(pool.size()) - 1);
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }

    const double day_epsilon =
        config.noise.sigma > 0.0 ? rng.normal(0.0, config.noise.sigma) : 0.0;
    const DegradationPolicy policy =
        config.policies.for_label(label).scaled(traits.degradation_scale);
    const double churn_phase = churn_by_label[static_cast<std::size_t>(label)];

    std::vector<SessionRecord> out;
    out.reserve(static_cast<std::size_t>(config.videos_per_day));
    for (int slot = 0; slot < config.videos_per_day; ++slot) {
        const VideoMetadata& video =
            catalog[static_cast<std::size_t>(pool[static_cast<std::size_t>(slot)])];

        SessionRecord rec;
        rec.user_id = user.user_id;
        rec.day = day;
        rec.video_id = video.video_id;
        rec.category = video.category;
        rec.label = label;
        rec.confounds_applied = user.confounds;

        rec.summary = textgen.generate_summary(video, label, policy, rng,
                                               config.summary_sentence_min,
                                               config.summary_sentence_max);
        rec.qa = textgen.generate_qa(video, label, rng, config.qa);

        BehaviorSample beh = sample_behaviors(label, video, rng);
        beh.churn_pct = churn_phase;
        beh.logins_per_day = login_rate;
        beh = apply_confound(beh, user.confounds, video, rng);
        std::array<double, kNumBehaviorMetrics> shifts;
        for (int m = 0; m < kNumBehaviorMetrics; ++m) {
            shifts[static_cast<std::size_t>(m)] = traits.shift_for(m);
        }
        beh = apply_trait_shift(beh, shifts, video, rng);
        beh = inject_behavior_noise(beh, config.noise, label, rng);
        beh.watch_time_s = std::min(beh.watch_time_s,
                                    static_cast<double>(video.duration_s));
        rec.behaviors = beh;

        if (config.backend == CoherenceBackend::Text) {
            // signed hashing can dip a hair below zero on unrelated text;
            // the logged value keeps the unit-interval record contract
            rec.coherence_clean = std::clamp(coherence(rec.summary, video), 0.0, 1.0);
        } else {
            rec.coherence_clean = coherence_model.sample(label, CoherenceMode::Clean, rng);
        }
        const double att = config.noise.attenuation[static_cast<std::size_t>(label)];
        rec.coherence_noisy = std::clamp(
            att * rec.coherence_clean + day_epsilon + traits.coherence_offset, 0.0, 1.0);

        out.push_back(std::move(rec));
    }
    return out;
}

Dataset simulate(const SimConfig& config) {
    return simulate(config, TemplateCorpus::builtin());
}

Dataset simulate(const SimConfig& config, const TemplateCorpus& corpus) {
    config.validate();

    Dataset ds;
    ds.config = config;
    ds.catalog = build_catalog(config, derive_seed(config.master_seed, hash_tag("catalog")),
                               corpus);
    ds.users = sample_population(config.total_users, config.effective_mix(),
                                 config.effective_confound_rates(),
                                 config.master_seed, config.total_days);

    const TextGenerator textgen(corpus);
    const CoherenceModel coherence_model;

    ds.schedules.reserve(ds.users.size());
    for (const auto& user : ds.users) {
        ds.schedules.push_back(build_schedule(user, config.total_days));
    }

    for (std::size_t i = 0; i < ds.users.size(); ++i) {
        const UserProfile& user = ds.users[i];
        const LabelSchedule& schedule = ds.schedules[i];

        RngStream trait_rng = make_stream(config.master_seed, "traits",
                                          static_cast<std::uint64_t>(user.user_id));
        const UserTraits traits = sample_user_traits(config.noise, trait_rng);

        std::vector<double> churn_by_label(kNumLabels, 0.0);
        for (CognitiveLabel l : all_labels()) {
            RngStream churn_rng = make_stream(config.master_seed, "churn",
                                              static_cast<std::uint64_t>(user.user_id),
                                              static_cast<std::uint64_t>(l));
            const Range& r = behavior_ranges(l).churn_pct;
            churn_by_label[static_cast<std::size_t>(l)] = churn_rng.uniform_real(r.lo, r.hi);
        }

        for (int day = 1; day <= config.total_days; ++day) {
            auto day_records = simulate_day(user, schedule, day, ds.catalog, config,
                                            textgen, coherence_model, traits,
                                            churn_by_label);
            for (auto& rec : day_records) {
                ds.records.push_back(std::move(rec));
            }
        }
    }
    return ds;
}

namespace {

nlohmann::ordered_json record_to_json(const SessionRecord& rec) {
    nlohmann::ordered_json j;
    j["user_id"] = rec.user_id;
    j["day"] = rec.day;
    j["video_id"] = rec.video_id;
    j["category"] = std::string(to_string(rec.category));
    j["label"] = std::string(to_string(rec.label));

    nlohmann::ordered_json summary;
    summary["text"] = rec.summary.text;
    summary["sentence_count"] = rec.summary.sentence_count;
    summary["disfluency_count"] = rec.summary.disfluency_count;
    summary["source_video_id"] = rec.summary.source_video_id;
    j["summary"] = summary;

    nlohmann::ordered_json qa;
    qa["n_questions"] = rec.qa.n_questions;
    qa["n_correct"] = rec.qa.n_correct;
    qa["question_types"] = rec.qa.question_types;
    j["qa"] = qa;

    nlohmann::ordered_json beh;
    beh["watch_time_s"] = rec.behaviors.watch_time_s;
    beh["skipped_s"] = rec.behaviors.skipped_s;
    beh["pauses"] = rec.behaviors.pauses;
    beh["replays"] = rec.behaviors.replays;
    beh["reaction_time_s"] = rec.behaviors.reaction_time_s;
    beh["liked"] = rec.behaviors.liked;
    beh["shared"] = rec.behaviors.shared;
    beh["churn_pct"] = rec.behaviors.churn_pct;
    beh["logins_per_day"] = rec.behaviors.logins_per_day;
    j["behaviors"] = beh;

    j["coherence_clean"] = rec.coherence_clean;
    j["coherence_noisy"] = rec.coherence_noisy;
    nlohmann::ordered_json confounds = nlohmann::ordered_json::array();
    for (ConfoundKind k : rec.confounds_applied) {
        confounds.push_back(std::string(to_string(k)));
    }
    j["confounds_applied"] = confounds;
    return j;
}

const std::set<std::string>& known_record_fields() {
    static const std::set<std::string> kFields = {
        "user_id",   "day",       "video_id",        "category",
        "label",     "summary",   "qa",              "behaviors",
        "coherence_clean", "coherence_noisy", "confounds_applied"};
    return kFields;
}

SessionRecord record_from_json(const nlohmann::json& j, int line_no,
                               std::vector<std::string>& warnings) {
    for (const auto& [key, value] : j.items()) {
        if (known_record_fields().count(key) == 0) {
            warnings.push_back("line " + std::to_string(line_no) +
                               ": unknown field '" + key + "' ignored");
        }
    }
    auto field = [&](const char* name) -> const nlohmann::json& {
        if (!j.contains(name)) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": missing field '" + name + "'");
        }
        return j.at(name);
    };

    SessionRecord rec;
    try {
        rec.user_id = field("user_id").get<int>();
        rec.day = field("day").get<int>();
        rec.video_id = field("video_id").get<int>();
        rec.category = category_from_string(field("category").get<std::string>());
        rec.label = label_from_string(field("label").get<std::string>());

        const auto& s = field("summary");
        rec.summary.text = s.at("text").get<std::string>();
        rec.summary.sentence_count = s.at("sentence_count").get<int>();
        rec.summary.disfluency_count = s.at("disfluency_count").get<int>();
        rec.summary.source_video_id = s.at("source_video_id").get<int>();

        const auto& qa = field("qa");
        rec.qa.n_questions = qa.at("n_questions").get<int>();
        rec.qa.n_correct = qa.at("n_correct").get<int>();
        rec.qa.question_types = qa.at("question_types").get<std::vector<std::string>>();

        const auto& b = field("behaviors");
        rec.behaviors.watch_time_s = b.at("watch_time_s").get<double>();
        rec.behaviors.skipped_s = b.at("skipped_s").get<double>();
        rec.behaviors.pauses = b.at("pauses").get<int>();
        rec.behaviors.replays = b.at("replays").get<int>();
        rec.behaviors.reaction_time_s = b.at("reaction_time_s").get<double>();
        rec.behaviors.liked = b.at("liked").get<int>();
        rec.behaviors.shared = b.at("shared").get<int>();
        rec.behaviors.churn_pct = b.at("churn_pct").get<double>();
        rec.behaviors.logins_per_day = b.at("logins_per_day").get<double>();

        rec.coherence_clean = field("coherence_clean").get<double>();
        rec.coherence_noisy = field("coherence_noisy").get<double>();
        for (const auto& name : field("confounds_applied")) {
            rec.confounds_applied.push_back(confound_from_string(name.get<std::string>()));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    return rec;
}

}  // namespace

std::string manifest_path(const std::string& dataset_path) {
    return dataset_path + ".manifest.json";
}

void save(const Dataset& dataset, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write dataset file: " + path);
    for (const auto& rec : dataset.records) {
        out << record_to_json(rec).dump() << '\n';
        if (!out) throw IoError("write failure (partial output) at: " + path);
    }
    out.flush();
    if (!out) throw IoError("write failure (partial output) at: " + path);

    nlohmann::ordered_json manifest;
    manifest["format"] = kDatasetFormat;
    manifest["format_version"] = kDatasetFormatVersion;
    manifest["code_version"] = kCodeVersion;
    manifest["corpus_version"] = TemplateCorpus::builtin().version;
    manifest["master_seed"] = dataset.config.master_seed;
    manifest["config_hash"] = dataset.config.config_hash();
    manifest["record_count"] = dataset.records.size();
    manifest["config"] = nlohmann::ordered_json::parse(dataset.config.to_json());

    std::ofstream mout(manifest_path(path), std::ios::binary);
    if (!mout) throw IoError("cannot write manifest: " + manifest_path(path));
    mout << manifest.dump(2) << '\n';
}

Dataset load(const std::string& path) {
    std::ifstream min(manifest_path(path), std::ios::binary);
    if (!min) throw IoError("missing manifest: " + manifest_path(path));
    nlohmann::json manifest;
    try {
        min >> manifest;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("manifest invalid: ") + e.what());
    }
    if (manifest.value("format", "") != kDatasetFormat) {
        throw ParseError("not a dataset manifest: " + manifest_path(path));
    }

    Dataset ds;
    ds.config = SimConfig::from_json(manifest.at("config").dump());
    const TemplateCorpus corpus = TemplateCorpus::builtin();
    ds.catalog = build_catalog(ds.config,
                               derive_seed(ds.config.master_seed, hash_tag("catalog")),
                               corpus);
    ds.users = sample_population(ds.config.total_users, ds.config.effective_mix(),
                                 ds.config.effective_confound_rates(),
                                 ds.config.master_seed, ds.config.total_days);
    for (const auto& user : ds.users) {
        ds.schedules.push_back(build_schedule(user, ds.config.total_days));
    }

    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open dataset file: " + path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
        ds.records.push_back(record_from_json(j, line_no, ds.load_warnings));
    }
    return ds;
}

}  // namespace cogsim
