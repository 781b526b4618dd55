#pragma once

namespace chunkorder {

/// Regularized upper incomplete gamma Q(s, x) = Gamma(s, x) / Gamma(s).
/// Series for x < s + 1, Lentz continued fraction otherwise.
/// Requires s > 0 and x >= 0 (DomainError otherwise).
double regularized_gamma_q(double s, double x);

/// Regularized lower incomplete gamma P(s, x) = 1 - Q(s, x).
double regularized_gamma_p(double s, double x);

/// Regularized incomplete beta I_x(a, b). Continued fraction evaluated on
/// whichever side of x = (a + 1) / (a + b + 2) converges fast.
/// Requires a > 0, b > 0, x in [0, 1] (DomainError otherwise).
double regularized_incomplete_beta(double a, double b, double x);

/// Survival function of the chi-square distribution: Q(df / 2, x / 2).
double chi_square_sf(double x, double df);

/// Two-sided p for a t statistic: I_{df / (t^2 + df)}(df / 2, 1 / 2).
double student_t_two_sided_p(double t, double df);

}  // namespace chunkorder
