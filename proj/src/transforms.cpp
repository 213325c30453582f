#include "sincvfie/transforms.hpp"

#include "sincvfie/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace sincvfie {

using std::numbers::pi;

Interval::Interval(double a, double b) : a_(a), b_(b)
{
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw DomainError("Interval: need finite a < b, got [" + std::to_string(a) + ", "
                          + std::to_string(b) + "]");
}

std::string_view to_string(TransformKind kind)
{
    switch (kind) {
    case TransformKind::SE: return "SE";
    case TransformKind::DE: return "DE";
    case TransformKind::JO_DE: return "JO_DE";
    }
    throw ContractError("unknown TransformKind");
}

std::string_view to_string(Method method)
{
    switch (method) {
    case Method::NewSE: return "se-new";
    case Method::NewDE: return "de-new";
    case Method::ShamlooSE: return "se-shamloo";
    case Method::JohnOgbonnaDE: return "de-johnogbonna";
    }
    throw ContractError("unknown Method");
}

TransformKind transform_of(Method method)
{
    switch (method) {
    case Method::NewSE:
    case Method::ShamlooSE: return TransformKind::SE;
    case Method::NewDE: return TransformKind::DE;
    case Method::JohnOgbonnaDE: return TransformKind::JO_DE;
    }
    throw ContractError("unknown Method");
}

double max_strip_width(TransformKind kind)
{
    return kind == TransformKind::SE ? pi : pi / 2.0;
}

MeshParams MeshParams::make(TransformKind kind, int N, double h, double alpha, double d)
{
    if (N < 1)
        throw DomainError("MeshParams: N must be >= 1");
    if (!(h > 0.0) || !std::isfinite(h))
        throw DomainError("MeshParams: h must be positive and finite");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("MeshParams: alpha must lie in (0, 1]");
    if (!(d > 0.0 && d < max_strip_width(kind)))
        throw DomainError("MeshParams: d out of range for " + std::string(to_string(kind)));
    return MeshParams{N, h, alpha, d};
}

namespace transforms {

namespace {

// Argument of tanh: psi(x) = mid + half * tanh(phase(x)).
double phase(TransformKind kind, double x)
{
    switch (kind) {
    case TransformKind::SE: return 0.5 * x;
    case TransformKind::DE: return (pi / 2.0) * std::sinh(x);
    case TransformKind::JO_DE: return (pi / 4.0) * std::sinh(x);
    }
    throw ContractError("unknown TransformKind");
}

// Factor multiplying atanh((2t-a-b)/(b-a)) in the inverse of sinh-based maps.
double inverse_scale(TransformKind kind)
{
    return kind == TransformKind::DE ? 2.0 / pi : 4.0 / pi;
}

} // namespace

double forward(TransformKind kind, const Interval& iv, double x)
{
    if (std::isnan(x))
        return x;
    if (x == std::numeric_limits<double>::infinity())
        return iv.b();
    if (x == -std::numeric_limits<double>::infinity())
        return iv.a();
    const double y = phase(kind, x);
    // (1 + tanh(-|y|)) / 2 = 1 / (1 + e^{2|y|}): distance to the near endpoint.
    const double gap = iv.length() / (1.0 + std::exp(2.0 * std::abs(y)));
    const double t = y < 0.0 ? iv.a() + gap : iv.b() - gap;
    return std::clamp(t, iv.a(), iv.b());
}

double inverse(TransformKind kind, const Interval& iv, double t)
{
    if (!iv.contains(t))
        throw DomainError("transforms::inverse: t = " + std::to_string(t) + " outside interval");
    if (t == iv.a())
        return -std::numeric_limits<double>::infinity();
    if (t == iv.b())
        return std::numeric_limits<double>::infinity();
    // 2 atanh((2t - a - b)/(b - a)) = log((t - a)/(b - t))
    const double log_ratio = std::log((t - iv.a()) / (iv.b() - t));
    if (kind == TransformKind::SE)
        return log_ratio;
    return std::asinh(inverse_scale(kind) * 0.5 * log_ratio);
}

double derivative(TransformKind kind, const Interval& iv, double x)
{
    if (kind == TransformKind::SE) {
        // (b-a)/4 sech^2(x/2) = (b-a) e^{-|x|} / (1 + e^{-|x|})^2
        const double e = std::exp(-std::abs(x));
        return iv.length() * e / ((1.0 + e) * (1.0 + e));
    }
    const double scale = kind == TransformKind::DE ? pi / 2.0 : pi / 4.0;
    const double y = std::abs(scale * std::sinh(x));
    if (y > 350.0)
        return 0.0;
    // sech^2(y) = 4 e^{-2y} / (1 + e^{-2y})^2
    const double e = std::exp(-2.0 * y);
    const double sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
    return 0.5 * iv.length() * scale * std::cosh(x) * sech2;
}

double select_h(Method method, double alpha, double d, int N, SelectOptions options)
{
    if (N < 1)
        throw DomainError("select_h: N must be >= 1");
    const double n = static_cast<double>(N);
    auto check_alpha_d = [&](TransformKind kind) {
        if (!(alpha > 0.0 && alpha <= 1.0))
            throw DomainError("select_h: alpha must lie in (0, 1]");
        if (!(d > 0.0 && d < max_strip_width(kind)))
            throw DomainError("select_h: d out of range for " + std::string(to_string(kind)));
    };
    auto positive = [](double h) {
        if (!(h > 0.0) || !std::isfinite(h))
            throw DomainError("select_h: formula gives a non-positive mesh size");
        return h;
    };

    switch (method) {
    case Method::NewSE:
        check_alpha_d(TransformKind::SE);
        return std::sqrt(pi * d / (alpha * n));
    case Method::NewDE:
        check_alpha_d(TransformKind::DE);
        return positive(std::log(2.0 * d * n / alpha) / n);
    case Method::ShamlooSE:
        return pi / std::sqrt(n);
    case Method::JohnOgbonnaDE:
        if (options.johnogbonna_parametric) {
            check_alpha_d(TransformKind::JO_DE);
            return positive(std::log(4.0 * d * n / alpha) / n);
        }
        return positive(std::log(pi * n) / n);
    }
    throw ContractError("unknown Method");
}

std::vector<double> sinc_points(TransformKind kind, const Interval& iv, int N, double h)
{
    if (N < 1 || !(h > 0.0))
        throw DomainError("sinc_points: need N >= 1 and h > 0");
    std::vector<double> points;
    points.reserve(2 * static_cast<std::size_t>(N) + 1);
    for (int j = -N; j <= N; ++j)
        points.push_back(forward(kind, iv, j * h));
    return points;
}

} // namespace transforms
} // namespace sincvfie
