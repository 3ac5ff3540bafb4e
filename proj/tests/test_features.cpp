#include <doctest.h>

#include <cmath>

#include "cogsim/features.hpp"

using namespace cogsim;

namespace {

SessionRecord make_session(int user, int day, int video, double coherence,
                           double watch = 50.0, int sentences = 2, int disfl = 0) {
    SessionRecord rec;
    rec.user_id = user;
    rec.day = day;
    rec.video_id = video;
    rec.label = CognitiveLabel::Healthy;
    rec.summary.text = "x. y.";
    rec.summary.sentence_count = sentences;
    rec.summary.disfluency_count = disfl;
    rec.behaviors.watch_time_s = watch;
    rec.behaviors.skipped_s = 2.0;
    rec.behaviors.pauses = 1;
    rec.behaviors.replays = 1;
    rec.behaviors.reaction_time_s = 5.0;
    rec.behaviors.liked = 1;
    rec.behaviors.shared = 0;
    rec.behaviors.churn_pct = 1.0;
    rec.behaviors.logins_per_day = 2.0;
    rec.coherence_clean = coherence;
    rec.coherence_noisy = coherence;
    return rec;
}

}  // namespace

TEST_CASE("entropy oracle fixtures exact to 1e-9") {
    CHECK(std::abs(behavioral_entropy({1, 1, 1, 1, 1}) - 1.6094379124341003) <= 1e-9);
    CHECK(std::abs(behavioral_entropy({7, 0, 0, 0, 0}) - 0.0) <= 1e-9);
    CHECK(std::abs(behavioral_entropy({1, 1, 0, 0, 0}) - 0.6931471805599453) <= 1e-9);
}

TEST_CASE("entropy bounds and errors") {
    CHECK_THROWS_AS(behavioral_entropy({0, 0, 0, 0, 0}), DegenerateInputError);
    CHECK_THROWS_AS(behavioral_entropy({-1, 1, 0, 0, 0}), InputError);
    RngStream rng = make_stream(1, "entropy");
    for (int i = 0; i < 5000; ++i) {
        EventCounts counts;
        for (auto& c : counts) c = rng.uniform_int(0, 40);
        bool all_zero = true;
        for (auto c : counts) all_zero = all_zero && c == 0;
        if (all_zero) counts[0] = 1;
        const double h = behavioral_entropy(counts);
        CHECK(h >= 0.0);
        CHECK(h <= std::log(5.0) + 1e-12);
    }
}

TEST_CASE("engagement decay on a constant series") {
    const auto fit = engagement_decay({{0, 4.0}, {1, 4.0}, {2, 4.0}});
    for (double r : fit.ratios) CHECK(r == doctest::Approx(1.0));
    CHECK(std::abs(fit.lambda_hat) <= 1e-12);
}

TEST_CASE("engagement decay recovers the rate of a noiseless exponential") {
    std::vector<std::pair<int, double>> series;
    const double lambda = 0.1;
    for (int d = 0; d <= 30; ++d) {
        series.emplace_back(d, 5.0 * std::exp(-lambda * d));
    }
    const auto fit = engagement_decay(series);
    CHECK(std::abs(fit.lambda_hat - 0.1) <= 1e-9);
}

TEST_CASE("engagement decay half-life identity") {
    const double lambda = 0.2;
    const int half_life_day = 4;  // ln2/0.2 ~ 3.47; use exact value at d
    const double ratio = std::exp(-lambda * half_life_day);
    const auto fit = engagement_decay({{0, 2.0}, {half_life_day, 2.0 * ratio}});
    CHECK(fit.ratios[1] == doctest::Approx(ratio).epsilon(1e-12));
    CHECK(std::abs(fit.lambda_hat - lambda) <= 1e-9);
}

TEST_CASE("engagement decay error paths") {
    CHECK_THROWS_AS(engagement_decay({{0, 1.0}}), InputError);
    CHECK_THROWS_AS(engagement_decay({{0, 0.0}, {1, 1.0}}), DegenerateInputError);
    CHECK_THROWS_AS(engagement_decay({{0, 1.0}, {1, 0.0}, {2, 0.0}}), FitError);
}

TEST_CASE("semantic drift fixtures") {
    CHECK(semantic_drift_baseline(0.9, 0.7, 0.0) == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(semantic_drift_baseline(0.5, 0.5, 0.0) == doctest::Approx(0.0));
    CHECK(std::abs(semantic_drift_baseline(0.932, 0.421, 0.0) - 0.511) <= 1e-12);
    CHECK_THROWS_AS(semantic_drift_baseline(0.9, std::nan(""), 0.0), InputError);
}

TEST_CASE("embedding drift bounds") {
    EmbeddingVector a;
    a.values = {1.0, 0.0};
    EmbeddingVector b;
    b.values = {0.0, 1.0};
    EmbeddingVector c;
    c.values = {-1.0, 0.0};
    CHECK(semantic_drift_embedding(a, a) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(semantic_drift_embedding(a, b) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(semantic_drift_embedding(a, c) == doctest::Approx(2.0).epsilon(1e-12));
    EmbeddingVector z;
    z.values = {0.0, 0.0};
    CHECK_THROWS_AS(semantic_drift_embedding(a, z), DegenerateInputError);
}

TEST_CASE("parametric coherence calibration: clean and degraded means") {
    const CoherenceModel model;
    struct Row {
        CognitiveLabel label;
        double clean;
        double noisy;
    };
    const Row rows[] = {{CognitiveLabel::Healthy, 0.932, 0.801},
                        {CognitiveLabel::MCI, 0.878, 0.421},
                        {CognitiveLabel::EarlyAD, 0.741, 0.506}};
    for (const auto& row : rows) {
        RngStream rng = make_stream(2, "coh", static_cast<std::uint64_t>(row.label));
        double clean_sum = 0.0;
        double noisy_sum = 0.0;
        const int n = 10000;
        for (int i = 0; i < n; ++i) {
            clean_sum += model.sample(row.label, CoherenceMode::Clean, rng);
            noisy_sum += model.sample(row.label, CoherenceMode::Noisy, rng);
        }
        CHECK(std::abs(clean_sum / n - row.clean) <= 0.01);
        CHECK(std::abs(noisy_sum / n - row.noisy) <= 0.01);
    }
}

TEST_CASE("zero-spread parametric draws equal the mean exactly") {
    CoherenceModel model;
    model.spread = 0.0;
    RngStream rng = make_stream(3, "coh0");
    for (int i = 0; i < 10; ++i) {
        CHECK(model.sample(CognitiveLabel::MCI, CoherenceMode::Clean, rng) ==
              doctest::Approx(0.878).epsilon(1e-12));
    }
}

TEST_CASE("coherence requires non-empty inputs") {
    Summary s;
    s.text = "";
    VideoMetadata v;
    v.reference_summary = "words here.";
    CHECK_THROWS_AS(coherence(s, v), DegenerateInputError);
    s.text = "words here.";
    v.reference_summary = "";
    CHECK_THROWS_AS(coherence(s, v), DegenerateInputError);
}

TEST_CASE("identical summary and reference score one") {
    Summary s;
    s.text = "The news clip covered the vote.";
    VideoMetadata v;
    v.reference_summary = "The news clip covered the vote.";
    CHECK(coherence(s, v) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("fuse over identical sessions has zero slope and drift structure") {
    std::vector<SessionRecord> window;
    for (int day = 1; day <= 3; ++day) {
        for (int k = 0; k < 2; ++k) window.push_back(make_session(1, day, 0, 0.8));
    }
    const std::vector<int> durations = {100};
    UserBaseline baseline;
    baseline.coherence = 0.8;
    baseline.watch_norm = 0.5;
    const FeatureVector f = fuse(window, baseline, durations);
    CHECK(std::abs(f.drift_slope) <= 1e-12);
    CHECK(f.coherence_mean == doctest::Approx(0.8));
    CHECK(std::abs(f.semantic_drift) <= 1e-12);  // window equals baseline
    CHECK(f.decay_ratio == doctest::Approx(1.0));
}

TEST_CASE("fuse disfluency frequency is a recountable ratio") {
    std::vector<SessionRecord> window;
    window.push_back(make_session(1, 1, 0, 0.9, 50.0, 2, 1));
    window.push_back(make_session(1, 1, 0, 0.9, 50.0, 3, 2));
    window.push_back(make_session(1, 2, 0, 0.9, 50.0, 1, 0));
    const std::vector<int> durations = {100};
    UserBaseline baseline;
    baseline.coherence = 0.9;
    baseline.watch_norm = 0.5;
    const FeatureVector f = fuse(window, baseline, durations);
    CHECK(f.disfluency_freq == doctest::Approx(3.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("fuse rejects empty windows") {
    const std::vector<int> durations = {100};
    CHECK_THROWS_AS(fuse({}, UserBaseline{}, durations), InputError);
}

TEST_CASE("fuse computes a negative slope on declining coherence") {
    std::vector<SessionRecord> window;
    window.push_back(make_session(1, 1, 0, 0.9));
    window.push_back(make_session(1, 2, 0, 0.8));
    window.push_back(make_session(1, 3, 0, 0.7));
    const std::vector<int> durations = {100};
    UserBaseline baseline;
    baseline.coherence = 0.9;
    baseline.watch_norm = 0.5;
    const FeatureVector f = fuse(window, baseline, durations);
    CHECK(f.drift_slope == doctest::Approx(-0.1).epsilon(1e-9));
    CHECK(f.semantic_drift == doctest::Approx(0.1).epsilon(1e-9));
}

TEST_CASE("extract_windows emits one row per active day with window aggregation") {
    std::vector<SessionRecord> records;
    // user 1 active on days 1, 2, 10 (two records each)
    for (int day : {1, 2, 10}) {
        for (int k = 0; k < 2; ++k) {
            records.push_back(make_session(1, day, 0, 0.9 - 0.05 * day));
        }
    }
    const std::vector<int> durations = {100};
    const auto rows = extract_windows(records, durations, 7);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].day == 1);
    CHECK(rows[1].day == 2);
    CHECK(rows[2].day == 10);
    // day 10's window cannot reach days 1-2
    CHECK(rows[2].features.coherence_mean == doctest::Approx(0.4).epsilon(1e-9));
    // day 2's window includes day 1
    CHECK(rows[1].features.coherence_mean == doctest::Approx(0.825).epsilon(1e-9));
}

TEST_CASE("feature vector array round-trip preserves order") {
    FeatureVector f;
    f.coherence_mean = 0.1;
    f.semantic_drift = 0.2;
    f.drift_slope = 0.3;
    f.disfluency_freq = 0.4;
    f.behavioral_entropy = 0.5;
    f.decay_ratio = 0.6;
    f.watch_time_mean = 0.7;
    f.skipped_mean = 0.8;
    f.pauses_mean = 0.9;
    f.replays_mean = 1.0;
    f.reaction_time_mean = 1.1;
    f.like_rate = 1.2;
    f.share_rate = 1.3;
    f.churn_pct = 1.4;
    f.logins_per_day = 1.5;
    const auto arr = f.to_array();
    const FeatureVector g = FeatureVector::from_array(arr);
    CHECK(g.to_array() == arr);
    CHECK(feature_names().size() == arr.size());
}
