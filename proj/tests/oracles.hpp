#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library paths it is meant to check (Si evaluation, assembly).

#include "sincvfie/sinc_basis.hpp"
#include "sincvfie/transforms.hpp"
#include "sincvfie/vfie_solver.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <vector>

namespace oracle {

/// int_a^b f by adaptive 61-point Gauss-Kronrod in long double.
template <class F>
long double integrate(F f, long double a, long double b)
{
    using boost::math::quadrature::gauss_kronrod;
    long double error = 0;
    return gauss_kronrod<long double, 61>::integrate(f, a, b, 12, 1e-17L, &error);
}

inline double sine_integral(double x)
{
    if (x == 0.0)
        return 0.0;
    auto sinc = [](long double t) { return t == 0.0L ? 1.0L : std::sin(t) / t; };
    // Split at multiples of pi so each panel holds one lobe.
    const long double ax = std::fabs(static_cast<long double>(x));
    const long double pi = 3.141592653589793238462643383279502884L;
    long double sum = 0.0L;
    long double lo = 0.0L;
    while (lo < ax) {
        const long double hi = std::min(ax, lo + pi);
        sum += integrate(sinc, lo, hi);
        lo = hi;
    }
    return static_cast<double>(x < 0 ? -sum : sum);
}

/// Distance in units in the last place between two doubles of the same sign.
inline std::uint64_t ulp_distance(double x, double y)
{
    if (x == y)
        return 0;
    if (std::isnan(x) || std::isnan(y))
        return std::numeric_limits<std::uint64_t>::max();
    auto key = [](double v) {
        std::int64_t i;
        std::memcpy(&i, &v, sizeof v);
        // Map to a monotone integer line.
        return i < 0 ? std::numeric_limits<std::int64_t>::min() - i : i;
    };
    const std::int64_t a = key(x), b = key(y);
    return a > b ? static_cast<std::uint64_t>(a - b) : static_cast<std::uint64_t>(b - a);
}

struct NaiveSystem {
    std::vector<std::vector<double>> A;
    std::vector<double> rhs;
};

/// (I - V - K) c = g written entry by entry from the element formulas.
inline NaiveSystem naive_new(const sincvfie::Problem& p, sincvfie::Method method, int N)
{
    using namespace sincvfie;
    const TransformKind kind = transform_of(method);
    const double d = kind == TransformKind::SE ? p.d_se : p.d_de;
    const double h = transforms::select_h(method, p.alpha, d, N);
    const int n = 2 * N + 1;
    NaiveSystem sys{std::vector<std::vector<double>>(n, std::vector<double>(n)), std::vector<double>(n)};
    for (int i = -N; i <= N; ++i) {
        const double ti = transforms::forward(kind, p.iv, i * h);
        for (int j = -N; j <= N; ++j) {
            const double tj = transforms::forward(kind, p.iv, j * h);
            const double wj = transforms::derivative(kind, p.iv, j * h);
            const double v = p.k1(ti, tj) * wj * basis::sinc_J(j, h, i * h);
            const double k = p.k2(ti, tj) * wj * h;
            sys.A[i + N][j + N] = (i == j ? 1.0 : 0.0) - v - k;
        }
        sys.rhs[i + N] = p.g(ti);
    }
    return sys;
}

namespace detail {

// Rows of the omega / S(j,h) / omega systems. `row_t` and `row_x` are the
// collocation point and its preimage (possibly infinite).
inline void naive_boundary_row(const sincvfie::Problem& p, sincvfie::TransformKind kind, int N,
                               double h, double row_t, double row_x, std::vector<double>& row)
{
    using namespace sincvfie;
    const Interval& iv = p.iv;
    const int n = 2 * N + 1;
    auto node = [&](int l) { return transforms::forward(kind, iv, l * h); };
    auto w = [&](int l) { return transforms::derivative(kind, iv, l * h); };

    // V_N[f](t) = sum_l k1(t, t_l) f(t_l) psi'(lh) J(l,h)(x),  K_N[f](t) = h sum_l k2 f psi'.
    auto V_of = [&](auto f) {
        double s = 0.0;
        for (int l = -N; l <= N; ++l) {
            if (w(l) == 0.0)
                continue;
            s += p.k1(row_t, node(l)) * f(node(l)) * w(l) * basis::sinc_J(l, h, row_x);
        }
        return s;
    };
    auto K_of = [&](auto f) {
        double s = 0.0;
        for (int l = -N; l <= N; ++l) {
            if (w(l) == 0.0)
                continue;
            s += p.k2(row_t, node(l)) * f(node(l)) * w(l);
        }
        return h * s;
    };
    auto wa = [&](double t) { return basis::omega_a(iv, t); };
    auto wb = [&](double t) { return basis::omega_b(iv, t); };

    row.assign(n, 0.0);
    row[0] = basis::omega_a(iv, row_t) - V_of(wa) - K_of(wa);
    row[n - 1] = basis::omega_b(iv, row_t) - V_of(wb) - K_of(wb);
    for (int j = -N + 1; j <= N - 1; ++j) {
        const double e = std::isinf(row_x) ? 0.0 : basis::sinc_S(j, h, row_x);
        double v = 0.0, k = 0.0;
        if (w(j) != 0.0) {
            v = p.k1(row_t, node(j)) * w(j) * basis::sinc_J(j, h, row_x);
            k = p.k2(row_t, node(j)) * w(j) * h;
        }
        row[j + N] = e - v - k;
    }
}

} // namespace detail

inline NaiveSystem naive_shamloo(const sincvfie::Problem& p, int N)
{
    using namespace sincvfie;
    const double h = transforms::select_h(Method::ShamlooSE, p.alpha, p.d_se, N);
    const int n = 2 * N + 1;
    NaiveSystem sys{std::vector<std::vector<double>>(n), std::vector<double>(n)};
    for (int i = -N; i <= N; ++i) {
        const double ti = transforms::forward(TransformKind::SE, p.iv, i * h);
        detail::naive_boundary_row(p, TransformKind::SE, N, h, ti, i * h, sys.A[i + N]);
        sys.rhs[i + N] = p.g(ti);
    }
    return sys;
}

inline NaiveSystem naive_johnogbonna(const sincvfie::Problem& p, int N)
{
    using namespace sincvfie;
    const double h = transforms::select_h(Method::JohnOgbonnaDE, p.alpha, p.d_de, N);
    const int n = 2 * N + 1;
    const double inf = std::numeric_limits<double>::infinity();
    NaiveSystem sys{std::vector<std::vector<double>>(n), std::vector<double>(n)};
    for (int i = -N; i <= N; ++i) {
        double ti, xi;
        if (i == -N) {
            ti = p.iv.a();
            xi = -inf;
        } else if (i == N) {
            ti = p.iv.b();
            xi = inf;
        } else {
            ti = transforms::forward(TransformKind::JO_DE, p.iv, i * h);
            xi = i * h;
        }
        detail::naive_boundary_row(p, TransformKind::JO_DE, N, h, ti, xi, sys.A[i + N]);
        sys.rhs[i + N] = p.g(ti);
    }
    return sys;
}

} // namespace oracle
