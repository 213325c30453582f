#pragma once

#include "sincvfie/transforms.hpp"

#include <span>

namespace sincvfie::basis {

/// S(j,h)(x) = sin(pi r) / (pi r), r = (x - jh)/h.
///
/// Grid offsets are detected as integers, so S(j,h)(ih) is exactly 1 for
/// i == j and exactly 0 otherwise. Returns 0 at +-inf.
double sinc_S(int j, double h, double x);

/// J(j,h)(x) = h (1/2 + Si(pi r)/pi), the Sinc indefinite-integration basis.
/// J(-inf) = 0 and J(+inf) = h. Near-integer offsets are snapped, so
/// J(j,h)(ih) depends only on i - j bit for bit.
double sinc_J(int j, double h, double x);

/// J(j,h)(ih) for the integer offset k = i - j.
double sinc_J_offset(int k, double h);

/// S(j,h)(x) for j = -N..N written to out (size 2N+1).
void sinc_row(int N, double h, double x, std::span<double> out);

/// Linear boundary bases. Throw DomainError outside [a, b].
double omega_a(const Interval& iv, double t);
double omega_b(const Interval& iv, double t);

} // namespace sincvfie::basis
