#pragma once

#include <span>
#include <string>

#include "cogsim/errors.hpp"

namespace cogsim {

struct WelchResult {
    double t = 0.0;
    double df = 0.0;
    double p_value = 1.0;
};

double mean(std::span<const double> xs);
double sample_variance(std::span<const double> xs);  // (n-1) denominator

// Standardized mean difference with (n-1)-weighted pooled standard deviation.
// Throws DegenerateInputError when the pooled variance is zero.
double cohens_d(std::span<const double> group_a, std::span<const double> group_b);

// Welch's unequal-variance t statistic with Welch-Satterthwaite degrees of
// freedom; two-sided p-value from a numerically integrated t density.
WelchResult welch_t(std::span<const double> group_a, std::span<const double> group_b);

// Two-sided p for |T| >= |t| under a t distribution with df degrees of
// freedom. Adaptive Simpson integration of the density, abs tol 1e-12.
double student_t_two_sided_p(double t, double df);

struct SeparabilityStat {
    std::string feature;
    std::string comparison;
    double cohens_d = 0.0;
    double t_statistic = 0.0;
    double p_value = 1.0;
};

}  // namespace cogsim
