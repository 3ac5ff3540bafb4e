#include <doctest.h>

#include <cmath>

#include "cogsim/behaviors.hpp"

using namespace cogsim;

namespace {

VideoMetadata video_of(int duration) {
    VideoMetadata v;
    v.video_id = 0;
    v.duration_s = duration;
    v.reference_summary = "x.";
    return v;
}

}  // namespace

TEST_CASE("pre-noise samples stay inside their stage ranges, 10k draws per stage") {
    for (CognitiveLabel label : all_labels()) {
        const BehaviorRanges& r = behavior_ranges(label);
        RngStream rng = make_stream(100, "rows", static_cast<std::uint64_t>(label));
        for (int i = 0; i < 10000; ++i) {
            const BehaviorSample s = sample_behaviors(label, rng);
            CHECK(r.watch_time_s.contains(s.watch_time_s));
            CHECK(r.skipped_s.contains(s.skipped_s));
            CHECK(r.pauses.contains(s.pauses));
            CHECK(r.replays.contains(s.replays));
            CHECK(r.reaction_time_s.contains(s.reaction_time_s));
            CHECK((s.liked == 0 || s.liked == 1));
            CHECK((s.shared == 0 || s.shared == 1));
            CHECK(r.churn_pct.contains(s.churn_pct));
            CHECK(r.logins_per_day.contains(s.logins_per_day));
        }
    }
}

TEST_CASE("healthy row properties") {
    RngStream rng = make_stream(101, "healthy");
    long long liked = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const BehaviorSample s = sample_behaviors(CognitiveLabel::Healthy, rng);
        CHECK(s.watch_time_s >= 85.0);
        CHECK(s.watch_time_s <= 100.0);
        CHECK(s.reaction_time_s >= 4.0);
        CHECK(s.reaction_time_s <= 6.0);
        liked += s.liked;
    }
    // like probability is uniform in [0.65, 0.80] -> mean 0.725
    const double like_rate = static_cast<double>(liked) / n;
    CHECK(like_rate > 0.65);
    CHECK(like_rate < 0.80);
}

TEST_CASE("severe-stage row properties") {
    RngStream rng = make_stream(102, "sevad");
    long long shared = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const BehaviorSample s = sample_behaviors(CognitiveLabel::SevAD, rng);
        CHECK(s.watch_time_s >= 10.0);
        CHECK(s.watch_time_s <= 20.0);
        shared += s.shared;
    }
    CHECK(static_cast<double>(shared) / n <= 0.03);
}

TEST_CASE("MCI watch time mean sits at the range midpoint") {
    RngStream rng = make_stream(103, "mci");
    double sum = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        sum += sample_behaviors(CognitiveLabel::MCI, rng).watch_time_s;
    }
    CHECK(sum / n == doctest::Approx(70.0).epsilon(1.0 / 70.0));  // 70 +- 1
}

TEST_CASE("watch time clips to video duration") {
    RngStream rng = make_stream(104, "clip");
    const VideoMetadata v = video_of(50);
    for (int i = 0; i < 1000; ++i) {
        const BehaviorSample s = sample_behaviors(CognitiveLabel::Healthy, v, rng);
        CHECK(s.watch_time_s <= 50.0);
    }
}

TEST_CASE("confounds compose and clip") {
    RngStream rng = make_stream(105, "conf");
    BehaviorSample s;
    s.watch_time_s = 60.0;
    s.replays = 2;
    s.liked = 1;

    const VideoMetadata v = video_of(80);
    const auto identity = apply_confound(s, {}, v, rng);
    CHECK(identity == s);

    const auto slow = apply_confound(s, {ConfoundKind::SlowViewer}, v, rng);
    CHECK(slow.watch_time_s == doctest::Approx(80.0));  // 90 clipped to duration

    const auto replayer = apply_confound(s, {ConfoundKind::ImpulsiveReplayer}, v, rng);
    CHECK(replayer.replays == 5);

    // LowLiker suppresses a set like with probability 0.7
    int kept = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        kept += apply_confound(s, {ConfoundKind::LowLiker}, v, rng).liked;
    }
    CHECK(static_cast<double>(kept) / n == doctest::Approx(0.3).epsilon(0.05));
}

TEST_CASE("zero noise spec is the identity") {
    RngStream rng = make_stream(106, "noise");
    const NoiseSpec none = NoiseSpec::none();
    CHECK(!none.enabled());
    BehaviorSample s;
    s.watch_time_s = 70.0;
    s.skipped_s = 3.0;
    s.pauses = 2;
    s.replays = 1;
    s.reaction_time_s = 5.0;
    s.liked = 1;
    s.shared = 0;
    s.churn_pct = 1.0;
    s.logins_per_day = 2.5;
    const auto [noisy, coh] = inject_noise(s, 0.5, none, CognitiveLabel::Healthy, rng);
    CHECK(noisy == s);
    CHECK(coh == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("attenuation factors reproduce the calibrated degraded means") {
    NoiseSpec spec;
    const double healthy = spec.attenuation[0] * 0.932;
    const double mci = spec.attenuation[1] * 0.878;
    const double early = spec.attenuation[2] * 0.741;
    CHECK(std::abs(healthy - 0.801) <= 0.002);
    CHECK(std::abs(mci - 0.421) <= 0.002);
    CHECK(std::abs(early - 0.506) <= 0.002);
}

TEST_CASE("raw noisy coherence has the configured jitter spread") {
    NoiseSpec spec;
    spec.sigma = 0.3;
    spec.attenuation.fill(1.0);
    RngStream rng = make_stream(107, "sigma");
    const int n = 10000;
    double sum = 0.0;
    double sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double v = noisy_coherence_raw(0.5, spec, CognitiveLabel::Healthy, rng);
        sum += v;
        sq += v * v;
    }
    const double mean = sum / n;
    const double sd = std::sqrt(sq / n - mean * mean);
    CHECK(sd == doctest::Approx(0.3).epsilon(1.0 / 30.0));  // 0.3 +- 0.01
    CHECK(mean == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("behavior noise is mean-preserving before clipping") {
    NoiseSpec spec;
    spec.delta = 0.1;
    RngStream rng = make_stream(108, "meanpreserve");
    const CognitiveLabel label = CognitiveLabel::MCI;
    const BehaviorRanges& r = behavior_ranges(label);
    const int n = 10000;
    double watch_shift = 0.0, skip_shift = 0.0, react_shift = 0.0;
    for (int i = 0; i < n; ++i) {
        BehaviorSample s = sample_behaviors(label, rng);
        const BehaviorSample noisy = inject_behavior_noise(s, spec, label, rng);
        watch_shift += noisy.watch_time_s - s.watch_time_s;
        skip_shift += noisy.skipped_s - s.skipped_s;
        react_shift += noisy.reaction_time_s - s.reaction_time_s;
    }
    CHECK(std::abs(watch_shift / n) < 0.01 * r.watch_time_s.width());
    CHECK(std::abs(skip_shift / n) < 0.01 * r.skipped_s.width());
    CHECK(std::abs(react_shift / n) < 0.01 * r.reaction_time_s.width());
}

TEST_CASE("noisy coherence is clipped to the unit interval") {
    NoiseSpec spec;
    spec.sigma = 0.5;
    RngStream rng = make_stream(109, "clipcoh");
    BehaviorSample s;
    for (int i = 0; i < 2000; ++i) {
        const auto [noisy, coh] = inject_noise(s, 0.9, spec, CognitiveLabel::Healthy, rng);
        CHECK(coh >= 0.0);
        CHECK(coh <= 1.0);
    }
}

TEST_CASE("trait shift moves metrics along the severity direction") {
    RngStream rng = make_stream(110, "traits");
    const VideoMetadata v = video_of(90);
    BehaviorSample s;
    s.watch_time_s = 90.0;
    s.skipped_s = 2.0;
    s.pauses = 1;
    s.replays = 0;
    s.reaction_time_s = 5.0;
    s.liked = 1;
    s.shared = 1;
    s.churn_pct = 1.0;
    s.logins_per_day = 2.5;

    const auto shifted = apply_trait_shift(s, 1.0, v, rng);
    CHECK(shifted.watch_time_s < s.watch_time_s);
    CHECK(shifted.skipped_s > s.skipped_s);
    CHECK(shifted.reaction_time_s > s.reaction_time_s);
    CHECK(shifted.churn_pct > s.churn_pct);
    CHECK(shifted.logins_per_day < s.logins_per_day);

    const auto identity = apply_trait_shift(s, 0.0, v, rng);
    CHECK(identity == s);
}

TEST_CASE("user traits are disabled by the clean spec") {
    RngStream rng = make_stream(111, "traits2");
    const auto t = sample_user_traits(NoiseSpec::none(), rng);
    CHECK(t.behavior_shift == 0.0);
    CHECK(t.coherence_offset == 0.0);
    CHECK(t.degradation_scale == 1.0);
}

TEST_CASE("noise spec validation") {
    NoiseSpec bad;
    bad.sigma = -0.1;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    NoiseSpec att;
    att.attenuation[1] = 0.0;
    CHECK_THROWS_AS(att.validate(), ConfigError);
    CHECK_NOTHROW(NoiseSpec{}.validate());
}
