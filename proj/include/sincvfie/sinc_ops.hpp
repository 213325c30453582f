#pragma once

#include "sincvfie/transforms.hpp"

#include <functional>
#include <span>
#include <vector>

namespace sincvfie {

using UnivariateFn = std::function<double(double)>;

/// Sinc points t_j = psi(jh) and weights psi'(jh), j = -N..N, for one
/// transform on one interval. Immutable once built.
class SincGrid {
public:
    SincGrid(TransformKind kind, Interval iv, MeshParams mesh);

    TransformKind kind() const noexcept { return kind_; }
    const Interval& interval() const noexcept { return iv_; }
    const MeshParams& mesh() const noexcept { return mesh_; }
    int N() const noexcept { return mesh_.N; }
    double h() const noexcept { return mesh_.h; }
    std::size_t size() const noexcept { return points_.size(); }

    std::span<const double> points() const noexcept { return points_; }
    std::span<const double> weights() const noexcept { return weights_; }

    /// t_j and psi'(jh) by signed index j in [-N, N].
    double point(int j) const { return points_[index(j)]; }
    double weight(int j) const { return weights_[index(j)]; }

    /// psi^{-1}(t). Returns exactly ih when t is the stored Sinc point t_i,
    /// so the transform round trip never perturbs node evaluations.
    double abscissa(double t) const;

private:
    std::size_t index(int j) const;

    TransformKind kind_;
    Interval iv_;
    MeshParams mesh_;
    std::vector<double> points_;
    std::vector<double> weights_;
};

/// Grid for `kind` with h chosen by select_h for `method`.
SincGrid build_grid(TransformKind kind, const Interval& iv, Method method, double alpha,
                    double d, int N, transforms::SelectOptions options = {});

/// Generalized Sinc approximation: Sinc interpolation corrected by the
/// linear boundary bases omega_a, omega_b.
class GeneralizedInterpolant {
public:
    GeneralizedInterpolant(SincGrid grid, std::vector<double> samples);

    const SincGrid& grid() const noexcept { return grid_; }
    std::span<const double> samples() const noexcept { return samples_; }
    double boundary_left() const noexcept { return samples_.front(); }
    double boundary_right() const noexcept { return samples_.back(); }

    /// P_N[f](t) for t in [a, b]; O(n) per call.
    double evaluate(double t) const;

private:
    SincGrid grid_;
    std::vector<double> samples_;
    std::vector<double> sinc_coeffs_;
};

/// Throws ContractError unless samples.size() == grid.size().
GeneralizedInterpolant approximate(const SincGrid& grid, std::vector<double> samples);

/// Samples f at every Sinc point and builds the interpolant.
GeneralizedInterpolant approximate(const SincGrid& grid, const UnivariateFn& f);

double evaluate(const GeneralizedInterpolant& interp, double t);

/// h * sum_j f(t_j) psi'(jh). Endpoints are never sampled.
double quadrature(const SincGrid& grid, const UnivariateFn& f);

/// sum_j f(t_j) psi'(jh) J(j,h)(psi^{-1}(t)), approximating int_a^t f(s) ds.
double indefinite(const SincGrid& grid, const UnivariateFn& f, double t);

/// Same as above with f already sampled at the Sinc points.
double indefinite(const SincGrid& grid, std::span<const double> samples, double t);

} // namespace sincvfie
