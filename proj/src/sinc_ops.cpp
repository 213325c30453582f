#include "sincvfie/sinc_ops.hpp"

#include "sincvfie/errors.hpp"
#include "sincvfie/sinc_basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sincvfie {

SincGrid::SincGrid(TransformKind kind, Interval iv, MeshParams mesh)
    : kind_(kind), iv_(iv), mesh_(mesh),
      points_(transforms::sinc_points(kind, iv, mesh.N, mesh.h))
{
    weights_.reserve(points_.size());
    for (int j = -mesh.N; j <= mesh.N; ++j)
        weights_.push_back(transforms::derivative(kind, iv, j * mesh.h));
}

std::size_t SincGrid::index(int j) const
{
    if (j < -mesh_.N || j > mesh_.N)
        throw ContractError("SincGrid: index " + std::to_string(j) + " out of range");
    return static_cast<std::size_t>(j + mesh_.N);
}

double SincGrid::abscissa(double t) const
{
    if (!iv_.contains(t))
        throw DomainError("SincGrid::abscissa: t = " + std::to_string(t) + " outside interval");
    if (t == iv_.a())
        return -std::numeric_limits<double>::infinity();
    if (t == iv_.b())
        return std::numeric_limits<double>::infinity();
    const auto it = std::lower_bound(points_.begin(), points_.end(), t);
    if (it != points_.end() && *it == t) {
        const auto i = static_cast<int>(it - points_.begin()) - mesh_.N;
        return i * mesh_.h;
    }
    return transforms::inverse(kind_, iv_, t);
}

SincGrid build_grid(TransformKind kind, const Interval& iv, Method method, double alpha,
                    double d, int N, transforms::SelectOptions options)
{
    const double h = transforms::select_h(method, alpha, d, N, options);
    return SincGrid(kind, iv, MeshParams::make(kind, N, h, alpha, d));
}

GeneralizedInterpolant::GeneralizedInterpolant(SincGrid grid, std::vector<double> samples)
    : grid_(std::move(grid)), samples_(std::move(samples))
{
    if (samples_.size() != grid_.size())
        throw ContractError("approximate: expected " + std::to_string(grid_.size())
                            + " samples, got " + std::to_string(samples_.size()));
    const Interval& iv = grid_.interval();
    const double left = samples_.front();
    const double right = samples_.back();
    sinc_coeffs_.resize(samples_.size());
    for (std::size_t j = 0; j < samples_.size(); ++j) {
        const double tj = grid_.points()[j];
        sinc_coeffs_[j] = samples_[j] - left * basis::omega_a(iv, tj) - right * basis::omega_b(iv, tj);
    }
}

double GeneralizedInterpolant::evaluate(double t) const
{
    const Interval& iv = grid_.interval();
    const double x = grid_.abscissa(t);
    double sum = boundary_left() * basis::omega_a(iv, t) + boundary_right() * basis::omega_b(iv, t);
    if (std::isinf(x))
        return sum;
    const int N = grid_.N();
    for (int j = -N; j <= N; ++j) {
        const double s = basis::sinc_S(j, grid_.h(), x);
        if (s != 0.0)
            sum += sinc_coeffs_[static_cast<std::size_t>(j + N)] * s;
    }
    return sum;
}

GeneralizedInterpolant approximate(const SincGrid& grid, std::vector<double> samples)
{
    return GeneralizedInterpolant(grid, std::move(samples));
}

GeneralizedInterpolant approximate(const SincGrid& grid, const UnivariateFn& f)
{
    std::vector<double> samples;
    samples.reserve(grid.size());
    for (double t : grid.points())
        samples.push_back(f(t));
    return GeneralizedInterpolant(grid, std::move(samples));
}

double evaluate(const GeneralizedInterpolant& interp, double t)
{
    return interp.evaluate(t);
}

namespace {

// Nodes whose transform saturated onto an endpoint carry negligible weight;
// skipping them keeps endpoint-singular integrands finite.
bool sampled(const SincGrid& grid, std::size_t j)
{
    const double t = grid.points()[j];
    return grid.weights()[j] != 0.0 && t != grid.interval().a() && t != grid.interval().b();
}

} // namespace

double quadrature(const SincGrid& grid, const UnivariateFn& f)
{
    double sum = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j)
        if (sampled(grid, j))
            sum += f(grid.points()[j]) * grid.weights()[j];
    return grid.h() * sum;
}

double indefinite(const SincGrid& grid, std::span<const double> samples, double t)
{
    if (samples.size() != grid.size())
        throw ContractError("indefinite: sample count does not match grid");
    const double x = grid.abscissa(t);
    const int N = grid.N();
    double sum = 0.0;
    for (int j = -N; j <= N; ++j) {
        const auto k = static_cast<std::size_t>(j + N);
        const double w = grid.weights()[k];
        if (w != 0.0)
            sum += samples[k] * w * basis::sinc_J(j, grid.h(), x);
    }
    return sum;
}

double indefinite(const SincGrid& grid, const UnivariateFn& f, double t)
{
    std::vector<double> samples(grid.size(), 0.0);
    for (std::size_t j = 0; j < grid.size(); ++j)
        if (sampled(grid, j))
            samples[j] = f(grid.points()[j]);
    return indefinite(grid, samples, t);
}

} // namespace sincvfie
