#pragma once

#include <string_view>
#include <vector>

#include "cogsim/errors.hpp"

namespace cogsim {

inline constexpr int kEmbeddingDim = 256;

// L2-normalized hashed term-frequency vector; all-zero for empty text.
struct EmbeddingVector {
    std::vector<double> values;

    bool zero() const;
    double norm() const;
};

// Hashes lowercase word unigrams and bigrams into `dim` buckets with term
// frequency weights, then L2-normalizes. Deterministic.
EmbeddingVector embed(std::string_view text, int dim = kEmbeddingDim);

// Cosine of two non-zero vectors of equal dimension.
double cosine(const EmbeddingVector& a, const EmbeddingVector& b);

}  // namespace cogsim
