#include "cogsim/features.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace cogsim {

double coherence(const Summary& summary, const VideoMetadata& video) {
    if (summary.text.empty()) {
        throw DegenerateInputError("coherence: empty summary text");
    }
    if (video.reference_summary.empty()) {
        throw DegenerateInputError("coherence: empty reference summary");
    }
    const EmbeddingVector s = embed(summary.text);
    const EmbeddingVector r = embed(video.reference_summary);
    return cosine(s, r);
}

double CoherenceModel::sample(CognitiveLabel label, CoherenceMode mode,
                              RngStream& rng) const {
    const double mu = mean(label, mode);
    const double draw = spread > 0.0 ? rng.normal(mu, spread) : mu;
    return std::clamp(draw, 0.0, 1.0);
}

double semantic_drift_baseline(double baseline_coherence, double day_coherence,
                               double epsilon) {
    if (!std::isfinite(baseline_coherence) || !std::isfinite(day_coherence) ||
        !std::isfinite(epsilon)) {
        throw InputError("semantic drift inputs must be finite");
    }
    return baseline_coherence - (day_coherence + epsilon);
}

double semantic_drift_embedding(const EmbeddingVector& day_embedding,
                                const EmbeddingVector& baseline_embedding) {
    return 1.0 - cosine(day_embedding, baseline_embedding);
}

double behavioral_entropy(const EventCounts& counts) {
    long long total = 0;
    for (long long c : counts) {
        if (c < 0) throw InputError("event counts must be >= 0");
        total += c;
    }
    if (total == 0) {
        throw DegenerateInputError("behavioral entropy of zero events is undefined");
    }
    double h = 0.0;
    for (long long c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(total);
        h -= p * std::log(p);
    }
    return h;
}

DecayFit engagement_decay(const std::vector<std::pair<int, double>>& watch_series) {
    if (watch_series.size() < 2) {
        throw InputError("engagement decay needs at least two observations");
    }
    const double base = watch_series.front().second;
    if (base <= 0.0) {
        throw DegenerateInputError("engagement decay baseline watch time must be > 0");
    }

    DecayFit fit;
    fit.ratios.reserve(watch_series.size());
    for (const auto& [day, watch] : watch_series) {
        fit.ratios.push_back(watch / base);
    }

    const int day0 = watch_series.front().first;
    double sxx = 0.0;
    double sxy = 0.0;
    bool any = false;
    for (std::size_t i = 1; i < watch_series.size(); ++i) {
        const double ratio = fit.ratios[i];
        if (ratio <= 0.0) continue;
        const double x = static_cast<double>(watch_series[i].first - day0);
        if (x <= 0.0) continue;
        const double y = std::log(ratio);
        sxx += x * x;
        sxy += x * y;
        any = true;
    }
    if (!any) {
        throw FitError("engagement decay: no positive ratios beyond the baseline");
    }
    fit.lambda_hat = -sxy / sxx;
    return fit;
}

std::array<double, kNumFeatures> FeatureVector::to_array() const {
    return {coherence_mean, semantic_drift, drift_slope,    disfluency_freq,
            behavioral_entropy, decay_ratio, watch_time_mean, skipped_mean,
            pauses_mean,    replays_mean,   reaction_time_mean, like_rate,
            share_rate,     churn_pct,      logins_per_day};
}

FeatureVector FeatureVector::from_array(const std::array<double, kNumFeatures>& a) {
    FeatureVector f;
    f.coherence_mean = a[0];
    f.semantic_drift = a[1];
    f.drift_slope = a[2];
    f.disfluency_freq = a[3];
    f.behavioral_entropy = a[4];
    f.decay_ratio = a[5];
    f.watch_time_mean = a[6];
    f.skipped_mean = a[7];
    f.pauses_mean = a[8];
    f.replays_mean = a[9];
    f.reaction_time_mean = a[10];
    f.like_rate = a[11];
    f.share_rate = a[12];
    f.churn_pct = a[13];
    f.logins_per_day = a[14];
    return f;
}

const std::array<std::string_view, kNumFeatures>& feature_names() {
    static const std::array<std::string_view, kNumFeatures> kNames = {
        "coherence_mean", "semantic_drift", "drift_slope", "disfluency_freq",
        "behavioral_entropy", "decay_ratio", "watch_time_mean", "skipped_mean",
        "pauses_mean", "replays_mean", "reaction_time_mean", "like_rate",
        "share_rate", "churn_pct", "logins_per_day"};
    return kNames;
}

const std::vector<int>& coherence_feature_indices() {
    // static coherence alone; the drift features belong to the fusion model
    static const std::vector<int> kIdx = {0};
    return kIdx;
}

const std::vector<int>& language_feature_indices() {
    static const std::vector<int> kIdx = {0, 1, 2, 3};
    return kIdx;
}

const std::vector<int>& behavior_feature_indices() {
    static const std::vector<int> kIdx = {4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14};
    return kIdx;
}

namespace {

double video_duration(const std::vector<int>& durations_by_video, int video_id) {
    if (video_id < 0 || video_id >= static_cast<int>(durations_by_video.size())) {
        throw InputError("unknown video id " + std::to_string(video_id));
    }
    return static_cast<double>(durations_by_video[static_cast<std::size_t>(video_id)]);
}

}  // namespace

namespace {

FeatureVector fuse_impl(const std::vector<const SessionRecord*>& window,
                        const UserBaseline& baseline,
                        const std::vector<int>& durations_by_video,
                        double drift_epsilon) {
    if (window.empty()) {
        throw InputError("fuse: window must contain at least one session");
    }

    FeatureVector f;
    EventCounts events = {0, 0, 0, 0, 0};
    std::map<int, std::pair<double, int>> coh_by_day;  // day -> (sum, count)
    double coh_sum = 0.0;
    double watch_norm_sum = 0.0;
    long long disfluencies = 0;
    long long sentences = 0;

    for (const SessionRecord* rec_ptr : window) {
        const SessionRecord& rec = *rec_ptr;
        const BehaviorSample& b = rec.behaviors;
        coh_sum += rec.coherence_noisy;
        auto& day_acc = coh_by_day[rec.day];
        day_acc.first += rec.coherence_noisy;
        day_acc.second += 1;

        disfluencies += rec.summary.disfluency_count;
        sentences += rec.summary.sentence_count;

        events[0] += b.pauses;
        events[1] += b.skipped_s >= 1.0 ? 1 : 0;
        events[2] += b.replays;
        events[3] += b.liked;
        events[4] += b.shared;

        f.watch_time_mean += b.watch_time_s;
        f.skipped_mean += b.skipped_s;
        f.pauses_mean += b.pauses;
        f.replays_mean += b.replays;
        f.reaction_time_mean += b.reaction_time_s;
        f.like_rate += b.liked;
        f.share_rate += b.shared;
        f.churn_pct += b.churn_pct;
        f.logins_per_day += b.logins_per_day;

        watch_norm_sum += b.watch_time_s / video_duration(durations_by_video, rec.video_id);
    }

    const double n = static_cast<double>(window.size());
    f.coherence_mean = coh_sum / n;
    f.watch_time_mean /= n;
    f.skipped_mean /= n;
    f.pauses_mean /= n;
    f.replays_mean /= n;
    f.reaction_time_mean /= n;
    f.like_rate /= n;
    f.share_rate /= n;
    f.churn_pct /= n;
    f.logins_per_day /= n;

    f.semantic_drift =
        semantic_drift_baseline(baseline.coherence, f.coherence_mean, drift_epsilon);
    f.disfluency_freq = sentences > 0
                            ? static_cast<double>(disfluencies) / static_cast<double>(sentences)
                            : 0.0;

    long long total_events = 0;
    for (long long c : events) total_events += c;
    f.behavioral_entropy = total_events > 0 ? behavioral_entropy(events) : 0.0;

    const double watch_norm_mean = watch_norm_sum / n;
    f.decay_ratio = baseline.watch_norm > 0.0 ? watch_norm_mean / baseline.watch_norm : 1.0;

    // least-squares slope of daily mean coherence vs day (with intercept)
    if (coh_by_day.size() >= 2) {
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        const double m = static_cast<double>(coh_by_day.size());
        for (const auto& [day, acc] : coh_by_day) {
            const double x = static_cast<double>(day);
            const double y = acc.first / acc.second;
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double denom = m * sxx - sx * sx;
        f.drift_slope = denom != 0.0 ? (m * sxy - sx * sy) / denom : 0.0;
    } else {
        f.drift_slope = 0.0;
    }

    return f;
}

}  // namespace

FeatureVector fuse(std::span<const SessionRecord> window,
                   const UserBaseline& baseline,
                   const std::vector<int>& durations_by_video,
                   double drift_epsilon) {
    std::vector<const SessionRecord*> ptrs;
    ptrs.reserve(window.size());
    for (const SessionRecord& rec : window) ptrs.push_back(&rec);
    return fuse_impl(ptrs, baseline, durations_by_video, drift_epsilon);
}

std::vector<FeatureRow> extract_windows(const std::vector<SessionRecord>& records,
                                        const std::vector<int>& durations_by_video,
                                        int window_days, double drift_sigma,
                                        std::uint64_t seed) {
    if (window_days < 1) throw InputError("window_days must be >= 1");

    // group per user, preserving (day, slot) order
    std::map<int, std::vector<const SessionRecord*>> by_user;
    for (const auto& rec : records) {
        by_user[rec.user_id].push_back(&rec);
    }

    std::vector<FeatureRow> rows;
    for (auto& [user_id, recs] : by_user) {
        std::stable_sort(recs.begin(), recs.end(),
                         [](const SessionRecord* a, const SessionRecord* b) {
                             return a->day < b->day;
                         });

        // baseline over the user's first <= 5 active days
        UserBaseline baseline;
        {
            int days_used = 0;
            int last_day = -1;
            double coh = 0.0, wn = 0.0;
            long long cnt = 0;
            for (const SessionRecord* r : recs) {
                if (r->day != last_day) {
                    if (days_used == 5) break;
                    ++days_used;
                    last_day = r->day;
                }
                coh += r->coherence_noisy;
                wn += r->behaviors.watch_time_s /
                      video_duration(durations_by_video, r->video_id);
                ++cnt;
            }
            if (cnt == 0) continue;
            baseline.coherence = coh / static_cast<double>(cnt);
            baseline.watch_norm = wn / static_cast<double>(cnt);
        }

        // one row per active day; window = trailing window_days days
        std::size_t lo = 0;
        std::size_t i = 0;
        std::vector<const SessionRecord*> window;
        while (i < recs.size()) {
            const int day = recs[i]->day;
            std::size_t j = i;
            while (j < recs.size() && recs[j]->day == day) ++j;

            while (lo < recs.size() && recs[lo]->day <= day - window_days) ++lo;

            window.assign(recs.begin() + static_cast<std::ptrdiff_t>(lo),
                          recs.begin() + static_cast<std::ptrdiff_t>(j));

            double drift_epsilon = 0.0;
            if (drift_sigma > 0.0) {
                RngStream eps_rng = make_stream(seed, "drift-noise",
                                                static_cast<std::uint64_t>(user_id),
                                                static_cast<std::uint64_t>(day));
                drift_epsilon = eps_rng.normal(0.0, drift_sigma);
            }
            FeatureRow row;
            row.user_id = user_id;
            row.day = day;
            row.label = recs[j - 1]->label;
            row.features = fuse_impl(window, baseline, durations_by_video, drift_epsilon);
            rows.push_back(std::move(row));
            i = j;
        }
    }
    return rows;
}

}  // namespace cogsim
