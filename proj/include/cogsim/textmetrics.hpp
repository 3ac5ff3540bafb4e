#pragma once

#include <string_view>

namespace cogsim {

struct SimilarityScore {
    double value = 0.0;
    bool degenerate = false;  // set when an input was empty
};

// Geometric mean of clipped n-gram precisions up to max_n, with brevity
// penalty. Add-one smoothing is applied only to orders with zero matches;
// a zero unigram precision yields 0 outright.
SimilarityScore bleu(std::string_view candidate, std::string_view reference,
                     int max_n = 4);

// LCS-based F1 (beta = 1) over tokens.
SimilarityScore rouge_l(std::string_view candidate, std::string_view reference);

}  // namespace cogsim
