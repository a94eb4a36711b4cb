#pragma once

namespace bcipher::special {

/// Complementary error function.
double erfc(double x);

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
/// Requires a > 0 and x >= 0; throws std::domain_error otherwise.
double igamc(double a, double x);

/// Regularized lower incomplete gamma P(a, x) = 1 - Q(a, x).
double igam(double a, double x);

/// Standard normal cumulative distribution.
double normal_cdf(double x);

} // namespace bcipher::special
