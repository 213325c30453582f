#pragma once

namespace sincvfie::special {

/// Sine integral Si(x) = int_0^x sin(t)/t dt.
///
/// Maclaurin series for |x| <= 4, continued fraction for the auxiliary
/// functions f, g beyond that. Odd by construction; Si(+-inf) = +-pi/2 and
/// NaN propagates.
double sine_integral(double x);

/// ln Gamma(x) for x > 0 (Lanczos, g = 7, 9 terms). Throws DomainError otherwise.
double log_gamma(double x);

/// Euler beta function B(p, q), evaluated in log space.
double beta(double p, double q);

} // namespace sincvfie::special
