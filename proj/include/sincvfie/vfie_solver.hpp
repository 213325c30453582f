#pragma once

#include "sincvfie/sinc_ops.hpp"
#include "sincvfie/transforms.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace sincvfie {

using BivariateFn = std::function<double(double, double)>;

/// Linear Volterra-Fredholm equation of the second kind on [a, b]:
///
///   u(t) - int_a^t k1(t,s) u(s) ds - int_a^b k2(t,s) u(s) ds = g(t)
///
/// alpha is the Hoelder exponent at the endpoints; d_se and d_de are the
/// strip half-widths used by the SE and DE mesh formulas.
struct Problem {
    Interval iv;
    BivariateFn k1;
    BivariateFn k2;
    UnivariateFn g;
    double alpha = 1.0;
    double d_se = 3.14;
    double d_de = 1.57;

    /// Throws DomainError/ContractError on bad parameters or missing maps.
    void validate() const;
};

/// Square row-major matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

    static DenseMatrix identity(std::size_t n);

    std::size_t order() const noexcept { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    std::span<const double> data() const noexcept { return data_; }
    std::span<double> data() noexcept { return data_; }

    std::vector<double> multiply(std::span<const double> x) const;
    double norm_inf() const;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

struct SolveOptions {
    // John-Ogbonna baseline: parametric h = log(4dN/alpha)/N instead of log(pi N)/N.
    bool johnogbonna_parametric_h = false;
};

/// The assembled collocation system E - V - K, kept in parts for inspection.
/// Index i (rows, collocation points) and j (columns, coefficients) run
/// over -N..N and are stored at offset +N.
struct CollocationSystem {
    Method method;
    SincGrid grid;
    std::vector<double> collocation_points;
    DenseMatrix E;
    DenseMatrix V;
    DenseMatrix K;
    DenseMatrix A;
    std::vector<double> rhs;
};

/// Sinc grid a method works on (transform, h, alpha and d taken from the problem).
SincGrid method_grid(const Problem& problem, Method method, int N, const SolveOptions& options = {});

/// (I - V - K) c = g at t_i = psi(ih) for NewSE or NewDE.
CollocationSystem assemble_new(const Problem& problem, Method method, int N);

/// Shamloo et al. system with the omega_a / S(j,h), |j| < N / omega_b basis.
CollocationSystem assemble_shamloo(const Problem& problem, int N);

/// John-Ogbonna system: same basis as Shamloo on the pi/4 DE map, collocated
/// at a, psi(ih) for |i| < N, and b. Samples k1, k2 and g at the endpoints.
CollocationSystem assemble_johnogbonna(const Problem& problem, int N, const SolveOptions& options = {});

CollocationSystem assemble(const Problem& problem, Method method, int N, const SolveOptions& options = {});

struct LinearSolution {
    std::vector<double> x;
    double rcond;
};

/// LU with partial pivoting. Throws SingularMatrixError on an exactly zero pivot.
LinearSolution solve_linear(const DenseMatrix& A, std::span<const double> rhs);

/// Approximate solution of a Problem produced by one of the four methods.
class DiscreteSolution {
public:
    DiscreteSolution(Method method, SincGrid grid, std::vector<double> coeffs, double rcond,
                     double residual_inf, double rhs_inf);

    Method method() const noexcept { return method_; }
    const SincGrid& grid() const noexcept { return grid_; }
    std::span<const double> coeffs() const noexcept { return coeffs_; }
    double coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j + grid_.N())); }
    double rcond() const noexcept { return rcond_; }
    /// rcond below 100 eps; the coefficients are still returned.
    bool ill_conditioned() const noexcept;
    /// ||A c - rhs||_inf of the solved system, and ||rhs||_inf.
    double residual_inf() const noexcept { return residual_inf_; }
    double rhs_inf() const noexcept { return rhs_inf_; }

    /// v_N(t) for the new methods, u_N(t) for the baselines. t in [a, b].
    double evaluate(double t) const;

private:
    Method method_;
    SincGrid grid_;
    std::vector<double> coeffs_;
    std::vector<double> sinc_coeffs_;
    double rcond_;
    double residual_inf_;
    double rhs_inf_;
};

DiscreteSolution solve(const Problem& problem, Method method, int N, const SolveOptions& options = {});

double evaluate_solution(const DiscreteSolution& sol, double t);

} // namespace sincvfie
