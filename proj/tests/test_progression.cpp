#include <doctest.h>

#include <set>

#include "cogsim/progression.hpp"

using namespace cogsim;

TEST_CASE("stable profiles sample no transitions") {
    RngStream rng = make_stream(1, "t");
    for (auto kind : {ProgressionProfileKind::StableHealthy,
                      ProgressionProfileKind::StableMCI,
                      ProgressionProfileKind::StableEarlyAD}) {
        CHECK(sample_transition_days(kind, 200, rng).empty());
    }
}

TEST_CASE("gradual decliner draws ordered transition days in bounds") {
    RngStream rng = make_stream(2, "t");
    for (int i = 0; i < 1000; ++i) {
        const auto t = sample_transition_days(ProgressionProfileKind::GradualDecliner,
                                              200, rng);
        REQUIRE(t.d3.has_value());
        REQUIRE(t.d4.has_value());
        CHECK(*t.d3 >= 20);
        CHECK(*t.d3 <= 30);
        CHECK(*t.d4 >= 45);
        CHECK(*t.d4 <= 55);
        CHECK(*t.d3 < *t.d4);
    }
}

TEST_CASE("fast decliner draws in bounds") {
    RngStream rng = make_stream(3, "t");
    for (int i = 0; i < 1000; ++i) {
        const auto t =
            sample_transition_days(ProgressionProfileKind::FastDecliner, 200, rng);
        REQUIRE(t.d2.has_value());
        REQUIRE(t.d5.has_value());
        CHECK(*t.d2 >= 25);
        CHECK(*t.d2 <= 35);
        CHECK(*t.d5 >= 60);
        CHECK(*t.d5 <= 75);
    }
}

TEST_CASE("mild progressor onset mean is 40 over many draws") {
    RngStream rng = make_stream(4, "t");
    double sum = 0.0;
    const int n = 10000;
    std::set<int> seen;
    for (int i = 0; i < n; ++i) {
        const auto t =
            sample_transition_days(ProgressionProfileKind::MildProgressor, 200, rng);
        sum += *t.d1;
        seen.insert(*t.d1);
    }
    CHECK(sum / n == doctest::Approx(40.0).epsilon(0.0125));  // 40 +- 0.5
    // inclusive endpoints are reachable
    CHECK(seen.count(35) == 1);
    CHECK(seen.count(45) == 1);
}

TEST_CASE("short horizons are rejected") {
    RngStream rng = make_stream(5, "t");
    CHECK_THROWS_AS(
        sample_transition_days(ProgressionProfileKind::FastDecliner, 75, rng),
        ConfigError);
    CHECK_NOTHROW(sample_transition_days(ProgressionProfileKind::FastDecliner, 76, rng));
}

TEST_CASE("piecewise labels for a gradual decliner") {
    TransitionDays t;
    t.d3 = 25;
    t.d4 = 50;
    const auto kind = ProgressionProfileKind::GradualDecliner;
    CHECK(label_at(kind, t, 10) == CognitiveLabel::Healthy);
    CHECK(label_at(kind, t, 24) == CognitiveLabel::Healthy);
    CHECK(label_at(kind, t, 25) == CognitiveLabel::MCI);  // lower-inclusive
    CHECK(label_at(kind, t, 30) == CognitiveLabel::MCI);
    CHECK(label_at(kind, t, 49) == CognitiveLabel::MCI);
    CHECK(label_at(kind, t, 50) == CognitiveLabel::EarlyAD);
    CHECK(label_at(kind, t, 60) == CognitiveLabel::EarlyAD);
    CHECK(label_at(kind, t, 200) == CognitiveLabel::EarlyAD);
}

TEST_CASE("stable MCI is constant") {
    TransitionDays t;
    CHECK(label_at(ProgressionProfileKind::StableMCI, t, 1) == CognitiveLabel::MCI);
    CHECK(label_at(ProgressionProfileKind::StableMCI, t, 200) == CognitiveLabel::MCI);
}

TEST_CASE("fast decliner boundary days") {
    TransitionDays t;
    t.d2 = 30;
    t.d5 = 70;
    const auto kind = ProgressionProfileKind::FastDecliner;
    CHECK(label_at(kind, t, 29) == CognitiveLabel::MCI);
    CHECK(label_at(kind, t, 30) == CognitiveLabel::EarlyAD);
    CHECK(label_at(kind, t, 69) == CognitiveLabel::EarlyAD);
    CHECK(label_at(kind, t, 70) == CognitiveLabel::ModAD);
}

TEST_CASE("label_at rejects out-of-range days") {
    TransitionDays t;
    CHECK_THROWS_AS(label_at(ProgressionProfileKind::StableMCI, t, 0), InputError);
}

TEST_CASE("mild progressor schedule day counts") {
    UserProfile u;
    u.user_id = 1;
    u.kind = ProgressionProfileKind::MildProgressor;
    u.transitions.d1 = 40;
    const auto schedule = build_schedule(u, 200);
    int healthy = 0;
    int mci = 0;
    for (int d = 1; d <= 200; ++d) {
        if (schedule.at_day(d) == CognitiveLabel::Healthy) ++healthy;
        if (schedule.at_day(d) == CognitiveLabel::MCI) ++mci;
    }
    CHECK(healthy == 39);
    CHECK(mci == 161);
}

TEST_CASE("stable early AD schedule is constant") {
    UserProfile u;
    u.user_id = 2;
    u.kind = ProgressionProfileKind::StableEarlyAD;
    const auto schedule = build_schedule(u, 200);
    for (int d = 1; d <= 200; ++d) {
        CHECK(schedule.at_day(d) == CognitiveLabel::EarlyAD);
    }
}

TEST_CASE("schedules never recover over random profiles and seeds") {
    for (int trial = 0; trial < 10000; ++trial) {
        RngStream pick = make_stream(777, "mono", static_cast<std::uint64_t>(trial));
        const auto kind = all_profiles()[static_cast<std::size_t>(
            pick.uniform_int(0, kNumProfiles - 1))];
        UserProfile u;
        u.user_id = trial;
        u.kind = kind;
        RngStream rng = make_stream(888, "mono-days", static_cast<std::uint64_t>(trial));
        u.transitions = sample_transition_days(kind, 200, rng);
        const auto schedule = build_schedule(u, 200);
        for (int d = 2; d <= 200; ++d) {
            CHECK(severity(schedule.at_day(d)) >= severity(schedule.at_day(d - 1)));
        }
    }
}

TEST_CASE("uniform transition draws hit both endpoints across seeds") {
    std::set<int> d3_seen, d4_seen;
    for (int seed = 0; seed < 3000; ++seed) {
        RngStream rng = make_stream(static_cast<std::uint64_t>(seed), "endpoints");
        const auto t = sample_transition_days(ProgressionProfileKind::GradualDecliner,
                                              200, rng);
        d3_seen.insert(*t.d3);
        d4_seen.insert(*t.d4);
    }
    CHECK(d3_seen.count(20) == 1);
    CHECK(d3_seen.count(30) == 1);
    CHECK(d4_seen.count(45) == 1);
    CHECK(d4_seen.count(55) == 1);
}

TEST_CASE("schedules never emit SevAD") {
    for (int trial = 0; trial < 2000; ++trial) {
        RngStream rng = make_stream(31, "sev", static_cast<std::uint64_t>(trial));
        UserProfile u;
        u.user_id = trial;
        u.kind = ProgressionProfileKind::FastDecliner;  // deepest trajectory
        u.transitions = sample_transition_days(u.kind, 200, rng);
        const auto schedule = build_schedule(u, 200);
        for (int d = 1; d <= 200; ++d) {
            CHECK(schedule.at_day(d) != CognitiveLabel::SevAD);
        }
    }
}
