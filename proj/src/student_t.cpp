#include "eventstudy/student_t.hpp"

#include "eventstudy/errors.hpp"

#include <cmath>
#include <limits>

namespace eventstudy {

namespace {

// std::lgamma writes the global signgam, which races when replications fit
// critical values in parallel; the reentrant form does not.
double log_gamma(double x) {
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

// Continued fraction for the incomplete beta function, modified Lentz
// iteration. Converges quickly for x < (a+1)/(a+b+2).
double incomplete_beta_cf(double a, double b, double x) {
    constexpr int kMaxIterations = 500;
    constexpr double kEps = 1e-15;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIterations; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    throw Error(ErrorCode::InvalidConfig, "incomplete beta continued fraction did not converge");
}

} // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0) || !(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorCode::InvalidConfig, "regularized_incomplete_beta domain error");
    }
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double log_front = log_gamma(a + b) - log_gamma(a) - log_gamma(b) +
                             a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * incomplete_beta_cf(a, b, x) / a;
    }
    return 1.0 - front * incomplete_beta_cf(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double df) {
    if (!(df > 0.0)) throw Error(ErrorCode::InvalidConfig, "degrees of freedom must be positive");
    if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
    if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
    const double x = df / (df + t * t);
    const double tail = 0.5 * regularized_incomplete_beta(0.5 * df, 0.5, x);
    return t >= 0.0 ? 1.0 - tail : tail;
}

double student_t_critical(double alpha_two_sided, double df) {
    if (!(df > 0.0)) throw Error(ErrorCode::InvalidConfig, "degrees of freedom must be positive");
    if (!(alpha_two_sided > 0.0 && alpha_two_sided <= 1.0)) {
        throw Error(ErrorCode::InvalidConfig, "alpha must lie in (0, 1]");
    }
    if (alpha_two_sided == 1.0) return 0.0;

    // Solve P(|T| > t) = alpha, i.e. CDF(t) = 1 - alpha/2, by bisection on the
    // upper tail. The tail is monotone, so 200 halvings reach full precision
    // from any bracket.
    const double target_tail = 0.5 * alpha_two_sided;
    auto tail = [df](double t) {
        return 0.5 * regularized_incomplete_beta(0.5 * df, 0.5, df / (df + t * t));
    };

    double lo = 0.0;
    double hi = 1.0;
    while (tail(hi) > target_tail) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) break;
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (tail(mid) > target_tail) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace eventstudy
