#include <doctest.h>

#include <cmath>
#include <vector>

#include "cogsim/rng.hpp"
#include "cogsim/stats.hpp"

using namespace cogsim;

TEST_CASE("cohens_d hand fixture: {1,2,3} vs {3,4,5} gives -2") {
    const std::vector<double> a = {1, 2, 3};
    const std::vector<double> b = {3, 4, 5};
    CHECK(std::abs(cohens_d(a, b) - (-2.0)) <= 1e-9);
}

TEST_CASE("cohens_d of identical groups is zero") {
    const std::vector<double> a = {1, 2, 3, 4};
    CHECK(std::abs(cohens_d(a, a)) <= 1e-12);
}

TEST_CASE("cohens_d scale invariance") {
    const std::vector<double> a = {1.0, 2.0, 3.5, 2.5};
    const std::vector<double> b = {4.0, 5.0, 6.5, 5.5};
    const double d = cohens_d(a, b);
    std::vector<double> a10, b10;
    for (double v : a) a10.push_back(10.0 * v);
    for (double v : b) b10.push_back(10.0 * v);
    CHECK(cohens_d(a10, b10) == doctest::Approx(d).epsilon(1e-12));
}

TEST_CASE("cohens_d degenerate input") {
    const std::vector<double> a = {2, 2, 2};
    CHECK_THROWS_AS(cohens_d(a, a), DegenerateInputError);
    const std::vector<double> single = {1};
    const std::vector<double> pair = {1, 2};
    CHECK_THROWS_AS(cohens_d(single, pair), InputError);
}

TEST_CASE("t distribution p-values match reference values") {
    // reference values computed with an independent statistics library
    CHECK(std::abs(student_t_two_sided_p(2.0, 10.0) - 0.07338803477074039) <= 1e-9);
    CHECK(std::abs(student_t_two_sided_p(0.5, 3.7) - 0.645335633319932) <= 1e-9);
    CHECK(std::abs(student_t_two_sided_p(5.2, 27.3) - 1.7248633597631702e-05) <= 1e-9);
    CHECK(student_t_two_sided_p(0.0, 5.0) == doctest::Approx(1.0));
}

TEST_CASE("welch fixture matches a reference implementation") {
    const std::vector<double> a = {2.1, 2.5, 2.3, 2.7, 2.4, 2.6};
    const std::vector<double> b = {1.9, 1.8, 2.0, 1.7, 2.2};
    const WelchResult r = welch_t(a, b);
    CHECK(std::abs(r.t - 4.166730111766839) <= 1e-9);
    CHECK(std::abs(r.df - 8.932763333636524) <= 1e-9);
    CHECK(std::abs(r.p_value - 0.0024633264507640342) <= 1e-9);

    const std::vector<double> c = {10.0, 11.0, 12.0, 13.0, 14.0};
    const std::vector<double> d = {10.5, 11.5, 12.5};
    const WelchResult r2 = welch_t(c, d);
    CHECK(std::abs(r2.t - 0.5477225575051662) <= 1e-9);
    CHECK(std::abs(r2.p_value - 0.6040266913860823) <= 1e-9);
}

TEST_CASE("welch of identical groups: t = 0, p = 1") {
    const std::vector<double> a = {1.0, 2.0, 3.0};
    const WelchResult r = welch_t(a, a);
    CHECK(r.t == doctest::Approx(0.0));
    CHECK(r.p_value == doctest::Approx(1.0));
}

TEST_CASE("welch on widely separated samples is decisive") {
    RngStream rng = make_stream(12, "welch");
    std::vector<double> a, b;
    for (int i = 0; i < 100; ++i) {
        a.push_back(rng.normal(0.0, 1.0));
        b.push_back(rng.normal(10.0, 1.0));
    }
    const WelchResult r = welch_t(a, b);
    CHECK(r.p_value < 1e-10);
}

TEST_CASE("welch antisymmetry") {
    const std::vector<double> a = {2.1, 2.5, 2.3, 2.7};
    const std::vector<double> b = {1.9, 1.8, 2.0};
    const WelchResult ab = welch_t(a, b);
    const WelchResult ba = welch_t(b, a);
    CHECK(ab.t == doctest::Approx(-ba.t).epsilon(1e-12));
    CHECK(ab.p_value == doctest::Approx(ba.p_value).epsilon(1e-12));
}

TEST_CASE("welch rejects all-constant groups") {
    const std::vector<double> a = {1, 1, 1};
    const std::vector<double> b = {2, 2, 2};
    CHECK_THROWS_AS(welch_t(a, b), DegenerateInputError);
}
