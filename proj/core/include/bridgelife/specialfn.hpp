#pragma once

namespace bridgelife::specialfn {

/// Error function, rational-approximation implementation (no dependency on
/// the platform libm flavor). Absolute error below 1e-14 on [0, 6].
double erf(double x);

/// Complementary error function.
double erfc(double x);

/// Inverse error function on (-1, 1). Bracketing plus Newton iteration on
/// erf; throws DomainError outside the open interval.
double erf_inv(double y);

/// Gamma function via a Lanczos approximation (g = 7, 9 terms).
double gamma(double x);

/// Natural log of |Gamma(x)| for x > 0.
double log_gamma(double x);

} // namespace bridgelife::specialfn
