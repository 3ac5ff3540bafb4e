#include "cogsim/textgen.hpp"

#include <algorithm>
#include <cctype>

#include "cogsim/text.hpp"

namespace cogsim {

namespace {

void check_rate(double r, const char* name) {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw ConfigError(std::string(name) + " must be in [0, 1]");
    }
}

std::string capitalize(std::string s) {
    if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    return s;
}

std::string lowercase_first(std::string s) {
    if (!s.empty()) s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
    return s;
}

std::vector<std::string> split_words(const std::string& sentence) {
    std::vector<std::string> words;
    std::string current;
    for (char c : sentence) {
        if (c == ' ') {
            if (!current.empty()) {
                words.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) words.push_back(std::move(current));
    return words;
}

std::string join_words(const std::vector<std::string>& words) {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i > 0) out += ' ';
        out += words[i];
    }
    return out;
}

// Core of a word: lowercased alphanumerics, punctuation stripped.
std::string word_core(const std::string& word) {
    std::string core;
    for (unsigned char c : word) {
        if (std::isalnum(c)) core.push_back(static_cast<char>(std::tolower(c)));
    }
    return core;
}

const std::string& pick(const std::vector<std::string>& pool, RngStream& rng) {
    return pool[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(pool.size()) - 1))];
}

}  // namespace

void DegradationPolicy::validate() const {
    check_rate(filler_rate, "filler_rate");
    check_rate(vagueness_rate, "vagueness_rate");
    check_rate(offtopic_rate, "offtopic_rate");
}

DegradationPolicy DegradationPolicy::scaled(double factor) const {
    if (factor < 0.0) factor = 0.0;
    auto clamp01 = [](double r) { return r > 1.0 ? 1.0 : r; };
    DegradationPolicy p;
    p.filler_rate = clamp01(filler_rate * factor);
    p.vagueness_rate = clamp01(vagueness_rate * factor);
    p.offtopic_rate = clamp01(offtopic_rate * factor);
    return p;
}

void DegradationTable::validate() const {
    for (const auto& p : by_label) p.validate();
    for (std::size_t i = 1; i < by_label.size(); ++i) {
        const auto& lo = by_label[i - 1];
        const auto& hi = by_label[i];
        if (hi.filler_rate < lo.filler_rate ||
            hi.vagueness_rate < lo.vagueness_rate ||
            hi.offtopic_rate < lo.offtopic_rate) {
            throw ConfigError("degradation rates must be non-decreasing with severity");
        }
    }
}

DegradationTable DegradationTable::defaults() {
    DegradationTable t;
    t.by_label[0] = {0.00, 0.00, 0.00};  // Healthy
    t.by_label[1] = {0.10, 0.10, 0.10};  // MCI
    t.by_label[2] = {0.35, 0.30, 0.35};  // EarlyAD
    t.by_label[3] = {0.50, 0.85, 0.50};  // ModAD
    t.by_label[4] = {0.65, 0.90, 0.65};  // SevAD
    return t;
}

DisfluencyResult TextGenerator::inject_disfluencies(
    const std::vector<std::string>& sentences, const DegradationPolicy& policy,
    RngStream& rng) const {
    if (sentences.empty()) {
        throw InputError("inject_disfluencies needs at least one sentence");
    }
    policy.validate();

    DisfluencyResult result;
    result.sentences.reserve(sentences.size());

    for (const auto& sentence : sentences) {
        if (policy.offtopic_rate > 0.0 && rng.bernoulli(policy.offtopic_rate)) {
            std::string replacement = pick(corpus_.offtopic, rng);
            // stored without terminator, consistent with the inputs
            auto chunks = split_sentences(replacement);
            result.sentences.push_back(chunks.empty() ? replacement : chunks[0]);
            ++result.offtopic_count;
            continue;
        }

        auto words = split_words(sentence);

        if (policy.vagueness_rate > 0.0) {
            for (auto& word : words) {
                const std::string core = word_core(word);
                if (core.empty() || is_stopword(core)) continue;
                if (!rng.bernoulli(policy.vagueness_rate)) continue;
                // keep trailing punctuation, drop the rest of the word
                std::string tail;
                if (!word.empty() && !std::isalnum(static_cast<unsigned char>(word.back()))) {
                    tail = word.back();
                }
                word = pick(corpus_.vague, rng) + tail;
                ++result.vague_count;
            }
        }

        if (policy.filler_rate > 0.0 && rng.bernoulli(policy.filler_rate)) {
            const std::string filler = pick(corpus_.fillers, rng);
            const bool initial = words.empty() || rng.bernoulli(0.5);
            if (initial) {
                words.begin()[0] = lowercase_first(words[0]);
                words.insert(words.begin(), capitalize(filler) + ",");
            } else {
                const auto pos = static_cast<std::size_t>(rng.uniform_int(
                    1, static_cast<std::int64_t>(words.size()) - 1));
                words.insert(words.begin() + static_cast<std::ptrdiff_t>(pos),
                             filler + ",");
            }
            ++result.filler_count;
        }

        result.sentences.push_back(join_words(words));
    }
    return result;
}

Summary TextGenerator::generate_summary(const VideoMetadata& video,
                                         CognitiveLabel label,
                                         const DegradationPolicy& policy,
                                         RngStream& rng, int min_sentences,
                                         int max_sentences) const {
    (void)label;  // degradation comes entirely through the policy
    if (min_sentences < 1 || max_sentences < min_sentences) {
        throw ConfigError("summary sentence range invalid");
    }
    if (video.reference_summary.empty()) {
        throw InputError("video " + std::to_string(video.video_id) +
                         " has an empty reference summary");
    }

    const int n = static_cast<int>(rng.uniform_int(min_sentences, max_sentences));
    auto reference = split_sentences(video.reference_summary);

    std::vector<std::string> chosen;
    const int from_reference = std::min<int>(n, static_cast<int>(reference.size()));
    for (int i = 0; i < from_reference; ++i) chosen.push_back(reference[static_cast<std::size_t>(i)]);

    // Extra sentences restate the video's topic via the extension pool.
    const auto& ct = corpus_.for_category(video.category);
    std::string topic = video.tags.size() > 1 ? video.tags[1] : video.title;
    for (int i = from_reference; i < n; ++i) {
        std::string ext = fill_slot(pick(ct.extensions, rng), "{topic}", topic);
        auto chunks = split_sentences(ext);
        chosen.push_back(chunks.empty() ? ext : chunks[0]);
    }

    DisfluencyResult degraded = inject_disfluencies(chosen, policy, rng);

    Summary out;
    out.text = join_sentences(degraded.sentences);
    out.sentence_count = static_cast<int>(degraded.sentences.size());
    out.disfluency_count = degraded.disfluency_count();
    out.source_video_id = video.video_id;
    return out;
}

QARecord TextGenerator::generate_qa(const VideoMetadata& video,
                                    CognitiveLabel label, RngStream& rng,
                                    const QaAccuracyTable& qa) const {
    (void)video;
    QARecord record;
    record.n_questions = static_cast<int>(rng.uniform_int(2, 3));

    // sample question types without replacement
    std::array<int, 3> order = {0, 1, 2};
    for (int i = 2; i > 0; --i) {
        const int j = static_cast<int>(rng.uniform_int(0, i));
        std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    }
    for (int i = 0; i < record.n_questions; ++i) {
        record.question_types.emplace_back(kQuestionTypes[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
    }
    std::sort(record.question_types.begin(), record.question_types.end());

    const double p = qa.p_correct[static_cast<std::size_t>(label)];
    for (int i = 0; i < record.n_questions; ++i) {
        if (rng.bernoulli(p)) ++record.n_correct;
    }
    return record;
}

int TextGenerator::count_disfluencies(const std::string& text) const {
    const auto tokens = tokenize(text);

    // multi-word fillers are matched as token runs, longest first
    std::vector<std::vector<std::string>> filler_tokens;
    for (const auto& f : corpus_.fillers) filler_tokens.push_back(tokenize(f));
    std::sort(filler_tokens.begin(), filler_tokens.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });

    int count = 0;
    std::vector<bool> used(tokens.size(), false);
    for (const auto& phrase : filler_tokens) {
        if (phrase.empty()) continue;
        for (std::size_t i = 0; i + phrase.size() <= tokens.size(); ++i) {
            bool match = true;
            for (std::size_t k = 0; k < phrase.size(); ++k) {
                if (used[i + k] || tokens[i + k] != phrase[k]) {
                    match = false;
                    break;
                }
            }
            if (match) {
                for (std::size_t k = 0; k < phrase.size(); ++k) used[i + k] = true;
                ++count;
            }
        }
    }
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (used[i]) continue;
        for (const auto& v : corpus_.vague) {
            if (tokens[i] == v) {
                ++count;
                break;
            }
        }
    }
    return count;
}

}  // namespace cogsim
