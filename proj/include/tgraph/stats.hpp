#pragma once

namespace tgraph::stats {

/// Regularized lower incomplete gamma P(a, x) for a > 0, x >= 0.
///
/// Uses the power series when x < a + 1 and the Lentz continued fraction for
/// Q otherwise, each iterated to an absolute accuracy of 1e-10 or better.
double regularized_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double regularized_gamma_q(double a, double x);

/// P(X <= x) for X chi-square with `df` degrees of freedom.
double chi_square_cdf(double x, double df);

/// Upper tail P(X > x), the goodness-of-fit p-value.
double chi_square_sf(double x, double df);

}  // namespace tgraph::stats
