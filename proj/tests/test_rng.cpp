#include <doctest.h>

#include <cmath>
#include <set>

#include "cogsim/rng.hpp"

using namespace cogsim;

TEST_CASE("streams are deterministic and purpose-separated") {
    RngStream a = make_stream(42, "alpha", 1, 2);
    RngStream b = make_stream(42, "alpha", 1, 2);
    RngStream c = make_stream(42, "beta", 1, 2);
    bool diverged = false;
    for (int i = 0; i < 100; ++i) {
        const auto va = a.next_u64();
        CHECK(va == b.next_u64());
        if (va != c.next_u64()) diverged = true;
    }
    CHECK(diverged);
}

TEST_CASE("uniform_int covers inclusive endpoints") {
    RngStream rng = make_stream(7, "uniform-int");
    std::set<std::int64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        const auto v = rng.uniform_int(3, 8);
        CHECK(v >= 3);
        CHECK(v <= 8);
        seen.insert(v);
    }
    CHECK(seen.size() == 6);
}

TEST_CASE("uniform01 stays in [0, 1)") {
    RngStream rng = make_stream(9, "uniform01");
    for (int i = 0; i < 10000; ++i) {
        const double v = rng.uniform01();
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("normal moments") {
    RngStream rng = make_stream(11, "normal");
    const int n = 200000;
    double sum = 0.0;
    double sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double v = rng.normal(2.0, 3.0);
        sum += v;
        sq += v * v;
    }
    const double mean = sum / n;
    const double var = sq / n - mean * mean;
    CHECK(mean == doctest::Approx(2.0).epsilon(0.02));
    CHECK(std::sqrt(var) == doctest::Approx(3.0).epsilon(0.02));
}

TEST_CASE("poisson mean") {
    RngStream rng = make_stream(13, "poisson");
    const int n = 100000;
    long long total = 0;
    for (int i = 0; i < n; ++i) total += rng.poisson(2.5);
    CHECK(static_cast<double>(total) / n == doctest::Approx(2.5).epsilon(0.02));
}

TEST_CASE("bernoulli rate") {
    RngStream rng = make_stream(17, "bernoulli");
    int hits = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) hits += rng.bernoulli(0.3) ? 1 : 0;
    CHECK(static_cast<double>(hits) / n == doctest::Approx(0.3).epsilon(0.03));
}
