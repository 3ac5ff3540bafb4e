#include "cogsim/embedding.hpp"

#include <cmath>

#include "cogsim/rng.hpp"
#include "cogsim/text.hpp"

namespace cogsim {

bool EmbeddingVector::zero() const {
    for (double v : values) {
        if (v != 0.0) return false;
    }
    return true;
}

double EmbeddingVector::norm() const {
    double s = 0.0;
    for (double v : values) s += v * v;
    return std::sqrt(s);
}

EmbeddingVector embed(std::string_view text, int dim) {
    if (dim <= 0) throw InputError("embedding dimension must be positive");
    EmbeddingVector e;
    e.values.assign(static_cast<std::size_t>(dim), 0.0);

    const auto tokens = tokenize(text);
    // signed feature hashing: the sign bit decorrelates collisions so the
    // expected spurious overlap between unrelated texts is zero
    const auto add = [dim, &e](std::string_view s, double w) {
        const std::uint64_t h = hash_tag(s);
        const auto bucket = static_cast<std::size_t>(h % static_cast<std::uint64_t>(dim));
        const double sign = (h >> 63) ? -1.0 : 1.0;
        e.values[bucket] += sign * w;
    };
    for (const auto& t : tokens) {
        add(t, 1.0);
    }
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
        add(tokens[i] + "\x1f" + tokens[i + 1], 1.0);
    }

    const double n = e.norm();
    if (n > 0.0) {
        for (double& v : e.values) v /= n;
    }
    return e;
}

double cosine(const EmbeddingVector& a, const EmbeddingVector& b) {
    if (a.values.size() != b.values.size()) {
        throw InputError("cosine: dimension mismatch");
    }
    const double na = a.norm();
    const double nb = b.norm();
    if (na == 0.0 || nb == 0.0) {
        throw DegenerateInputError("cosine of a zero vector is undefined");
    }
    double dot = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        dot += a.values[i] * b.values[i];
    }
    const double c = dot / (na * nb);
    // guard against rounding creep just past the analytic bounds
    return c > 1.0 ? 1.0 : (c < -1.0 ? -1.0 : c);
}

}  // namespace cogsim
