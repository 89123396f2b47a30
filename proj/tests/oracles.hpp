#pragma once

#include <cmath>
#include <cstddef>
#include <span>

// Independent reference implementations used only by tests. They deliberately
// take different algorithmic routes than the library: raw-moment normal
// equations instead of centered sums, and quadrature of the t density instead
// of the incomplete-beta continued fraction.
namespace oracles {

struct OlsOracle {
    double alpha = 0.0;
    double beta = 0.0;
};

/// Textbook closed form: beta = (sum xy - n mean_x mean_y) / (sum x^2 - n mean_x^2).
inline OlsOracle ols_closed_form(std::span<const double> y, std::span<const double> x) {
    const auto n = static_cast<double>(x.size());
    double sum_x = 0.0;
    double sum_y = 0.0;
    double sum_xx = 0.0;
    double sum_xy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum_x += x[i];
        sum_y += y[i];
        sum_xx += x[i] * x[i];
        sum_xy += x[i] * y[i];
    }
    const double mean_x = sum_x / n;
    const double mean_y = sum_y / n;
    OlsOracle fit;
    fit.beta = (sum_xy - n * mean_x * mean_y) / (sum_xx - n * mean_x * mean_x);
    fit.alpha = mean_y - fit.beta * mean_x;
    return fit;
}

inline double t_pdf(double x, double df) {
    return std::exp(std::lgamma(0.5 * (df + 1.0)) - std::lgamma(0.5 * df) -
                    0.5 * std::log(df * M_PI) -
                    0.5 * (df + 1.0) * std::log1p(x * x / df));
}

namespace detail {

inline double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson(double (*f)(double, double), double df, double a, double b,
                               double fa, double fm, double fb, double whole, double eps,
                               int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm, df);
    const double frm = f(rm, df);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * eps) {
        return left + right + (left + right - whole) / 15.0;
    }
    return adaptive_simpson(f, df, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           adaptive_simpson(f, df, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

} // namespace detail

/// Integrates the t density from 0 to x with adaptive Simpson quadrature.
inline double t_cdf_quadrature(double x, double df) {
    if (x < 0.0) return 1.0 - t_cdf_quadrature(-x, df);
    const double fa = t_pdf(0.0, df);
    const double fb = t_pdf(x, df);
    const double fm = t_pdf(0.5 * x, df);
    const double whole = detail::simpson(0.0, x, fa, fm, fb);
    const double integral =
        detail::adaptive_simpson(t_pdf, df, 0.0, x, fa, fm, fb, whole, 1e-13, 48);
    return 0.5 + integral;
}

/// Two-sided critical value solved by bisection on the quadrature CDF.
inline double t_critical_quadrature(double alpha_two_sided, double df) {
    const double target = 1.0 - 0.5 * alpha_two_sided;
    double lo = 0.0;
    double hi = 1.0;
    while (t_cdf_quadrature(hi, df) < target) hi *= 2.0;
    for (int i = 0; i < 120; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (t_cdf_quadrature(mid, df) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace oracles
