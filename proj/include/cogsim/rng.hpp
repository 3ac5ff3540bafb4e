#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace cogsim {

// splitmix64 finalizer. Used to derive well-mixed child seeds from
// (seed, salt) pairs so that every (user, day, purpose) stream is
// statistically independent and reproducible across platforms.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
    return mix64(base ^ mix64(salt));
}

inline std::uint64_t hash_tag(std::string_view tag) {
    // FNV-1a, 64-bit.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Deterministic random stream. std::mt19937_64 output is fully specified by
// the standard; every distribution below is implemented by hand so that
// generated datasets are bit-identical across compilers and platforms.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 bits of precision.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform_real(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Inclusive integer range, unbiased via rejection.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next_u64());  // full range
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % span);
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Box-Muller; one draw per call, the companion variate is discarded to
    // keep the stream position a simple function of call count.
    double normal(double mean, double stddev) {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double z = std::sqrt(-2.0 * std::log(u1)) *
                         std::cos(2.0 * 3.14159265358979323846 * u2);
        return mean + stddev * z;
    }

    // Knuth's method; adequate for the small rates used here.
    int poisson(double lambda) {
        if (lambda <= 0.0) return 0;
        const double limit = std::exp(-lambda);
        int k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= uniform01();
        } while (p > limit);
        return k - 1;
    }

private:
    std::mt19937_64 engine_;
};

inline RngStream make_stream(std::uint64_t base, std::string_view purpose,
                             std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t s = derive_seed(base, hash_tag(purpose));
    s = derive_seed(s, a);
    s = derive_seed(s, b);
    return RngStream(s);
}

}  // namespace cogsim
