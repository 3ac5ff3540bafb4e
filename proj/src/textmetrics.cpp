#include "cogsim/textmetrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "cogsim/errors.hpp"
#include "cogsim/text.hpp"

namespace cogsim {

namespace {

using NgramCounts = std::map<std::string, int>;

NgramCounts count_ngrams(const std::vector<std::string>& tokens, int n) {
    NgramCounts counts;
    if (static_cast<int>(tokens.size()) < n) return counts;
    for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= tokens.size(); ++i) {
        std::string key = tokens[i];
        for (int k = 1; k < n; ++k) {
            key += '\x1f';
            key += tokens[i + static_cast<std::size_t>(k)];
        }
        ++counts[key];
    }
    return counts;
}

}  // namespace

SimilarityScore bleu(std::string_view candidate, std::string_view reference,
                     int max_n) {
    if (max_n < 1) throw InputError("bleu: max_n must be >= 1");
    const auto cand = tokenize(candidate);
    const auto ref = tokenize(reference);
    if (cand.empty()) return {0.0, true};
    if (ref.empty()) return {0.0, true};

    double log_sum = 0.0;
    for (int n = 1; n <= max_n; ++n) {
        const auto cand_counts = count_ngrams(cand, n);
        const auto ref_counts = count_ngrams(ref, n);
        long long matches = 0;
        long long total = 0;
        for (const auto& [gram, count] : cand_counts) {
            total += count;
            const auto it = ref_counts.find(gram);
            if (it != ref_counts.end()) {
                matches += std::min(count, it->second);
            }
        }
        double precision;
        if (matches > 0) {
            precision = static_cast<double>(matches) / static_cast<double>(total);
        } else {
            if (n == 1) return {0.0, false};  // no lexical overlap at all
            precision = 1.0 / (static_cast<double>(total) + 1.0);
        }
        log_sum += std::log(precision);
    }

    const double c = static_cast<double>(cand.size());
    const double r = static_cast<double>(ref.size());
    const double brevity = c >= r ? 1.0 : std::exp(1.0 - r / c);
    return {brevity * std::exp(log_sum / max_n), false};
}

SimilarityScore rouge_l(std::string_view candidate, std::string_view reference) {
    const auto cand = tokenize(candidate);
    const auto ref = tokenize(reference);
    if (cand.empty() || ref.empty()) return {0.0, true};

    // LCS length, rolling rows
    const std::size_t m = cand.size();
    const std::size_t n = ref.size();
    std::vector<int> prev(n + 1, 0);
    std::vector<int> curr(n + 1, 0);
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            if (cand[i - 1] == ref[j - 1]) {
                curr[j] = prev[j - 1] + 1;
            } else {
                curr[j] = std::max(prev[j], curr[j - 1]);
            }
        }
        std::swap(prev, curr);
    }
    const double lcs = prev[n];
    if (lcs == 0.0) return {0.0, false};

    const double p = lcs / static_cast<double>(m);
    const double r = lcs / static_cast<double>(n);
    return {2.0 * p * r / (p + r), false};
}

}  // namespace cogsim
