#include "cogsim/stats.hpp"

#include <cmath>

#include "cogsim/errors.hpp"

namespace cogsim {

double mean(std::span<const double> xs) {
    if (xs.empty()) throw InputError("mean of empty sample");
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
    if (xs.size() < 2) throw InputError("variance needs n >= 2");
    const double m = mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size() - 1);
}

double cohens_d(std::span<const double> group_a, std::span<const double> group_b) {
    if (group_a.size() < 2 || group_b.size() < 2) {
        throw InputError("cohens_d needs n >= 2 per group");
    }
    const double na = static_cast<double>(group_a.size());
    const double nb = static_cast<double>(group_b.size());
    const double va = sample_variance(group_a);
    const double vb = sample_variance(group_b);
    const double pooled = ((na - 1.0) * va + (nb - 1.0) * vb) / (na + nb - 2.0);
    if (pooled <= 0.0) {
        throw DegenerateInputError("cohens_d: pooled variance is zero");
    }
    return (mean(group_a) - mean(group_b)) / std::sqrt(pooled);
}

namespace {

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm,
                        double fb, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, tol / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, tol / 2.0, depth - 1);
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol, int depth) {
    const double fa = f(a);
    const double fm = f(0.5 * (a + b));
    const double fb = f(b);
    return adaptive_simpson(f, a, b, fa, fm, fb, tol, depth);
}

}  // namespace

double student_t_two_sided_p(double t, double df) {
    if (df <= 0.0) throw InputError("degrees of freedom must be > 0");
    if (!std::isfinite(t)) return 0.0;
    const double at = std::abs(t);
    if (at == 0.0) return 1.0;

    const double log_norm = std::lgamma((df + 1.0) / 2.0) - std::lgamma(df / 2.0) -
                            0.5 * std::log(df * 3.14159265358979323846);
    const auto pdf = [df, log_norm](double x) {
        return std::exp(log_norm - (df + 1.0) / 2.0 * std::log1p(x * x / df));
    };
    // tail integral over x in [at, inf) via x = at + u/(1-u), u in [0, 1)
    const auto integrand = [&pdf, at](double u) {
        const double om = 1.0 - u;
        const double x = at + u / om;
        return pdf(x) / (om * om);
    };
    const double tail = adaptive_simpson(integrand, 0.0, 1.0 - 1e-12, 1e-12, 48);
    double p = 2.0 * tail;
    if (p < 0.0) p = 0.0;
    if (p > 1.0) p = 1.0;
    return p;
}

WelchResult welch_t(std::span<const double> group_a, std::span<const double> group_b) {
    if (group_a.size() < 2 || group_b.size() < 2) {
        throw InputError("welch_t needs n >= 2 per group");
    }
    const double na = static_cast<double>(group_a.size());
    const double nb = static_cast<double>(group_b.size());
    const double va = sample_variance(group_a);
    const double vb = sample_variance(group_b);
    if (va == 0.0 && vb == 0.0) {
        throw DegenerateInputError("welch_t: both groups have zero variance");
    }
    const double se2 = va / na + vb / nb;
    WelchResult r;
    r.t = (mean(group_a) - mean(group_b)) / std::sqrt(se2);
    r.df = se2 * se2 /
           ((va / na) * (va / na) / (na - 1.0) + (vb / nb) * (vb / nb) / (nb - 1.0));
    r.p_value = student_t_two_sided_p(r.t, r.df);
    return r;
}

}  // namespace cogsim
