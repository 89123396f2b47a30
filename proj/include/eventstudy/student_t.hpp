#pragma once

namespace eventstudy {

/// Regularized incomplete beta function I_x(a, b) for a, b > 0, x in [0, 1].
/// Continued-fraction evaluation (modified Lentz), accurate to ~1e-14.
double regularized_incomplete_beta(double a, double b, double x);

/// CDF of Student's t distribution with df > 0 degrees of freedom.
double student_t_cdf(double t, double df);

/// Two-sided critical value: the t >= 0 with
/// P(|T| > t) = alpha_two_sided. alpha in (0, 1]; alpha = 1 yields 0.
double student_t_critical(double alpha_two_sided, double df);

} // namespace eventstudy
