#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cogsim/dataset.hpp"

using namespace cogsim;

namespace {

SimConfig small_config() {
    SimConfig c;
    c.total_users = 12;
    c.total_days = 80;
    c.master_seed = 4242;
    return c;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("simulation is deterministic in memory and on disk") {
    const SimConfig config = small_config();
    const Dataset a = simulate(config);
    const Dataset b = simulate(config);
    REQUIRE(a.records.size() == b.records.size());
    CHECK(a.records == b.records);

    const std::string pa = "det_a.jsonl";
    const std::string pb = "det_b.jsonl";
    save(a, pa);
    save(b, pb);
    CHECK(slurp(pa) == slurp(pb));
    CHECK(slurp(manifest_path(pa)) == slurp(manifest_path(pb)));
    std::remove(pa.c_str());
    std::remove(pb.c_str());
    std::remove(manifest_path(pa).c_str());
    std::remove(manifest_path(pb).c_str());
}

TEST_CASE("per-user-day record counts are zero or videos_per_day") {
    const Dataset ds = simulate(small_config());
    std::map<std::pair<int, int>, int> counts;
    for (const auto& rec : ds.records) {
        ++counts[{rec.user_id, rec.day}];
    }
    for (const auto& [key, count] : counts) {
        CHECK(count == ds.config.videos_per_day);
    }
    CHECK(ds.records.size() <= static_cast<std::size_t>(ds.config.total_users) *
                                   static_cast<std::size_t>(ds.config.total_days) *
                                   static_cast<std::size_t>(ds.config.videos_per_day));
}

TEST_CASE("every record label matches the user schedule") {
    const Dataset ds = simulate(small_config());
    std::map<int, const LabelSchedule*> schedules;
    for (std::size_t i = 0; i < ds.users.size(); ++i) {
        schedules[ds.users[i].user_id] = &ds.schedules[i];
    }
    for (const auto& rec : ds.records) {
        CHECK(rec.label == schedules.at(rec.user_id)->at_day(rec.day));
        CHECK(rec.coherence_clean >= 0.0);
        CHECK(rec.coherence_clean <= 1.0);
        CHECK(rec.coherence_noisy >= 0.0);
        CHECK(rec.coherence_noisy <= 1.0);
        CHECK(rec.behaviors.watch_time_s <=
              ds.catalog[static_cast<std::size_t>(rec.video_id)].duration_s);
    }
}

TEST_CASE("daily videos come from at most categories_per_day categories") {
    const Dataset ds = simulate(small_config());
    std::map<std::pair<int, int>, std::set<VideoCategory>> day_cats;
    for (const auto& rec : ds.records) {
        day_cats[{rec.user_id, rec.day}].insert(rec.category);
    }
    for (const auto& [key, cats] : day_cats) {
        CHECK(static_cast<int>(cats.size()) <= ds.config.categories_per_day);
    }
}

TEST_CASE("no repeated video within one user-day") {
    const Dataset ds = simulate(small_config());
    std::map<std::pair<int, int>, std::set<int>> day_videos;
    for (const auto& rec : ds.records) {
        auto& seen = day_videos[{rec.user_id, rec.day}];
        CHECK(seen.insert(rec.video_id).second);
    }
}

TEST_CASE("single user-day upper bound") {
    SimConfig config;
    config.total_users = 1;
    config.total_days = 76;  // minimum horizon
    config.master_seed = 7;
    const Dataset ds = simulate(config);
    CHECK(ds.records.size() <= 5u * 76u);
}

TEST_CASE("simulate_day is reproducible in isolation") {
    const SimConfig config = small_config();
    const Dataset ds = simulate(config);
    const TextGenerator textgen(TemplateCorpus::builtin());
    const CoherenceModel model;

    const UserProfile& user = ds.users[0];
    RngStream trait_rng = make_stream(config.master_seed, "traits",
                                      static_cast<std::uint64_t>(user.user_id));
    const UserTraits traits = sample_user_traits(config.noise, trait_rng);
    std::vector<double> churn(kNumLabels, 0.0);
    for (CognitiveLabel l : all_labels()) {
        RngStream churn_rng = make_stream(config.master_seed, "churn",
                                          static_cast<std::uint64_t>(user.user_id),
                                          static_cast<std::uint64_t>(l));
        const Range& r = behavior_ranges(l).churn_pct;
        churn[static_cast<std::size_t>(l)] = churn_rng.uniform_real(r.lo, r.hi);
    }
    for (int day = 1; day <= 10; ++day) {
        const auto once = simulate_day(user, ds.schedules[0], day, ds.catalog, config,
                                       textgen, model, traits, churn);
        const auto twice = simulate_day(user, ds.schedules[0], day, ds.catalog, config,
                                        textgen, model, traits, churn);
        CHECK(once == twice);
    }
}

TEST_CASE("dataset round-trips through JSONL exactly") {
    SimConfig config = small_config();
    config.total_users = 6;
    const Dataset ds = simulate(config);
    const std::string path = "roundtrip.jsonl";
    save(ds, path);
    const Dataset back = load(path);
    CHECK(back.load_warnings.empty());
    REQUIRE(back.records.size() == ds.records.size());
    CHECK(back.records == ds.records);
    CHECK(back.config.config_hash() == ds.config.config_hash());
    std::remove(path.c_str());
    std::remove(manifest_path(path).c_str());
}

TEST_CASE("truncated line raises a parse error naming the line") {
    SimConfig config = small_config();
    config.total_users = 3;
    const Dataset ds = simulate(config);
    const std::string path = "truncated.jsonl";
    save(ds, path);

    std::string content = slurp(path);
    content.resize(content.size() / 2);  // cut mid-line
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << content;
    }
    CHECK_THROWS_AS(load(path), ParseError);
    std::remove(path.c_str());
    std::remove(manifest_path(path).c_str());
}

TEST_CASE("unknown extra fields are accepted with a warning") {
    SimConfig config = small_config();
    config.total_users = 3;
    config.total_days = 76;
    const Dataset ds = simulate(config);
    const std::string path = "extrafield.jsonl";
    save(ds, path);

    // append an extension field to the first line
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    std::string rest((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    in.close();
    REQUIRE(first.back() == '}');
    first.pop_back();
    first += ",\"future_field\":42}";
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << first << '\n' << rest;
    }
    const Dataset back = load(path);
    REQUIRE(!back.load_warnings.empty());
    CHECK(back.load_warnings[0].find("future_field") != std::string::npos);
    CHECK(back.records.size() == ds.records.size());
    std::remove(path.c_str());
    std::remove(manifest_path(path).c_str());
}

TEST_CASE("missing fields raise parse errors with the field name") {
    const std::string path = "missingfield.jsonl";
    SimConfig config = small_config();
    config.total_users = 3;
    const Dataset ds = simulate(config);
    save(ds, path);
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << "{\"user_id\": 1}\n";
    }
    try {
        load(path);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("line 1") != std::string::npos);
        CHECK(msg.find("day") != std::string::npos);
    }
    std::remove(path.c_str());
    std::remove(manifest_path(path).c_str());
}

TEST_CASE("progressing users lose clean coherence after onset (text backend)") {
    SimConfig config;
    config.total_users = 30;
    config.total_days = 120;
    config.master_seed = 90125;
    config.backend = CoherenceBackend::Text;
    const Dataset ds = simulate(config);

    int users_checked = 0;
    for (std::size_t i = 0; i < ds.users.size(); ++i) {
        const auto& user = ds.users[i];
        std::optional<int> onset;
        if (user.kind == ProgressionProfileKind::MildProgressor) onset = user.transitions.d1;
        if (user.kind == ProgressionProfileKind::GradualDecliner) onset = user.transitions.d3;
        if (!onset) continue;
        double pre = 0.0, post = 0.0;
        long long pre_n = 0, post_n = 0;
        for (const auto& rec : ds.records) {
            if (rec.user_id != user.user_id) continue;
            if (rec.day < *onset) {
                pre += rec.coherence_clean;
                ++pre_n;
            } else {
                post += rec.coherence_clean;
                ++post_n;
            }
        }
        if (pre_n < 10 || post_n < 10) continue;
        ++users_checked;
        CHECK(post / post_n < pre / pre_n);
    }
    CHECK(users_checked >= 5);
}

TEST_CASE("zero-session days exist for impaired stages") {
    SimConfig config;
    config.total_users = 40;
    config.total_days = 100;
    config.master_seed = 5150;
    const Dataset ds = simulate(config);
    std::set<std::pair<int, int>> active;
    for (const auto& rec : ds.records) active.insert({rec.user_id, rec.day});
    CHECK(active.size() <
          static_cast<std::size_t>(config.total_users) *
              static_cast<std::size_t>(config.total_days));
}
