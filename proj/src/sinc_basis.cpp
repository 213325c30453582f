#include "sincvfie/sinc_basis.hpp"

#include "sincvfie/errors.hpp"
#include "sincvfie/special.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <string>

namespace sincvfie::basis {

using std::numbers::pi;

namespace {

// Offset r = (x - jh)/h, snapped to the nearest integer when it is one up to
// rounding in forming x and jh.
double grid_offset(int j, double h, double x)
{
    const double r = (x - j * h) / h;
    const double k = std::nearbyint(r);
    const double scale = std::max({1.0, std::abs(x / h), std::abs(static_cast<double>(j))});
    if (std::abs(r - k) < 1e-15 * scale)
        return k;
    return r;
}

double sinc_of_offset(double r)
{
    if (r == 0.0)
        return 1.0;
    if (r == std::nearbyint(r))
        return 0.0;
    const double z = pi * r;
    if (std::abs(z) < 1e-4) {
        const double z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sin(z) / z;
}

void check_inside(const Interval& iv, double t, const char* who)
{
    if (!iv.contains(t))
        throw DomainError(std::string(who) + ": t = " + std::to_string(t) + " outside interval");
}

} // namespace

double sinc_S(int j, double h, double x)
{
    if (std::isinf(x))
        return 0.0;
    return sinc_of_offset(grid_offset(j, h, x));
}

double sinc_J(int j, double h, double x)
{
    if (x == std::numeric_limits<double>::infinity())
        return h;
    if (x == -std::numeric_limits<double>::infinity())
        return 0.0;
    const double r = grid_offset(j, h, x);
    return h * (0.5 + special::sine_integral(pi * r) / pi);
}

double sinc_J_offset(int k, double h)
{
    return h * (0.5 + special::sine_integral(pi * static_cast<double>(k)) / pi);
}

void sinc_row(int N, double h, double x, std::span<double> out)
{
    if (out.size() != 2 * static_cast<std::size_t>(N) + 1)
        throw ContractError("sinc_row: output span must have 2N+1 entries");
    for (int j = -N; j <= N; ++j)
        out[static_cast<std::size_t>(j + N)] = sinc_S(j, h, x);
}

double omega_a(const Interval& iv, double t)
{
    check_inside(iv, t, "omega_a");
    // Complement of omega_b so that omega_a + omega_b == 1 exactly.
    return 1.0 - (t - iv.a()) / iv.length();
}

double omega_b(const Interval& iv, double t)
{
    check_inside(iv, t, "omega_b");
    return (t - iv.a()) / iv.length();
}

} // namespace sincvfie::basis
