#pragma once

#include <array>
#include <string>
#include <vector>

#include "cogsim/corpus.hpp"
#include "cogsim/domain.hpp"
#include "cogsim/rng.hpp"

namespace cogsim {

// Linguistic degradation rates for one stage. filler_rate is the chance a
// sentence receives one filler, vagueness_rate the per-content-token chance
// of replacement by a vague word, offtopic_rate the chance a sentence is
// replaced outright by an off-topic template.
struct DegradationPolicy {
    double filler_rate = 0.0;
    double vagueness_rate = 0.0;
    double offtopic_rate = 0.0;

    void validate() const;

    DegradationPolicy scaled(double factor) const;  // rates clamped to [0,1]
};

// Per-stage policy table. Healthy/MCI/EarlyAD rates anchor the stage-tied
// degradation frequencies; ModAD/SevAD extend the ladder monotonically and
// are plain defaults.
struct DegradationTable {
    std::array<DegradationPolicy, kNumLabels> by_label;

    const DegradationPolicy& for_label(CognitiveLabel l) const {
        return by_label[static_cast<std::size_t>(l)];
    }
    void validate() const;  // rates in range and non-decreasing with severity

    static DegradationTable defaults();
};

struct Summary {
    std::string text;
    int sentence_count = 0;
    int disfluency_count = 0;  // injected filler + vague tokens
    int source_video_id = 0;

    bool operator==(const Summary&) const = default;
};

struct QARecord {
    int n_questions = 0;  // 2 or 3
    int n_correct = 0;
    std::vector<std::string> question_types;  // subset of the three task types

    bool operator==(const QARecord&) const = default;
};

inline constexpr std::array<const char*, 3> kQuestionTypes = {
    "factual", "emotional", "sequencing"};

// Per-stage probability of answering one question correctly. Plain defaults,
// configurable; QA scores are logged but not used as classifier features.
struct QaAccuracyTable {
    std::array<double, kNumLabels> p_correct = {0.95, 0.75, 0.50, 0.35, 0.20};
};

struct DisfluencyResult {
    std::vector<std::string> sentences;
    int filler_count = 0;
    int vague_count = 0;
    int offtopic_count = 0;

    int disfluency_count() const { return filler_count + vague_count; }
};

class TextGenerator {
public:
    explicit TextGenerator(TemplateCorpus corpus) : corpus_(std::move(corpus)) {}

    const TemplateCorpus& corpus() const { return corpus_; }

    // Applies the policy sentence by sentence: off-topic replacement first
    // (a replaced sentence receives no further edits), then vague-word
    // substitution on content tokens, then at most one filler per sentence
    // at an initial or medial slot.
    DisfluencyResult inject_disfluencies(const std::vector<std::string>& sentences,
                                         const DegradationPolicy& policy,
                                         RngStream& rng) const;

    // Builds a 1-3 sentence summary from the video's reference description
    // (third sentence, when drawn, comes from the category extension pool and
    // reuses the video's topic tag), then degrades it per policy.
    Summary generate_summary(const VideoMetadata& video, CognitiveLabel label,
                             const DegradationPolicy& policy, RngStream& rng,
                             int min_sentences = 1, int max_sentences = 3) const;

    QARecord generate_qa(const VideoMetadata& video, CognitiveLabel label,
                         RngStream& rng,
                         const QaAccuracyTable& qa = QaAccuracyTable{}) const;

    // Recounts filler and vague tokens in generated text; used to check the
    // disfluency_count bookkeeping.
    int count_disfluencies(const std::string& text) const;

private:
    TemplateCorpus corpus_;
};

}  // namespace cogsim
