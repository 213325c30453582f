#include "sincvfie/vfie_solver.hpp"

#include "sincvfie/errors.hpp"
#include "sincvfie/sinc_basis.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace sincvfie {

namespace {

std::string describe_point(const char* what, double t, std::optional<double> s = std::nullopt)
{
    std::ostringstream os;
    os.precision(17);
    os << what << "(t=" << t;
    if (s)
        os << ", s=" << *s;
    os << ")";
    return os.str();
}

double checked_kernel(const BivariateFn& k, const char* name, double t, double s)
{
    const double v = k(t, s);
    if (!std::isfinite(v))
        throw AssemblyError(describe_point(name, t, s) + " is not finite");
    return v;
}

double checked_rhs(const UnivariateFn& g, double t)
{
    const double v = g(t);
    if (!std::isfinite(v))
        throw AssemblyError(describe_point("g", t) + " is not finite");
    return v;
}

double max_abs(std::span<const double> v)
{
    double m = 0.0;
    for (double x : v)
        m = std::max(m, std::abs(x));
    return m;
}

void subtract_into(DenseMatrix& A, const DenseMatrix& E, const DenseMatrix& V, const DenseMatrix& K)
{
    const auto e = E.data();
    const auto v = V.data();
    const auto k = K.data();
    auto a = A.data();
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = e[i] - v[i] - k[i];
}

// J(j,h)(ih) depends only on i - j; index k + 2N for k = i - j.
std::vector<double> j_offset_table(int N, double h)
{
    std::vector<double> table;
    table.reserve(4 * static_cast<std::size_t>(N) + 1);
    for (int k = -2 * N; k <= 2 * N; ++k)
        table.push_back(basis::sinc_J_offset(k, h));
    return table;
}

// Shamloo / John-Ogbonna structure: columns -N and N carry omega_a and
// omega_b, the middle columns S(j,h). The approximate operators are applied
// to each basis function through the Sinc quadrature nodes.
CollocationSystem assemble_boundary_basis(const Problem& problem, Method method, SincGrid grid,
                                          std::vector<double> coll_t, std::vector<double> coll_x)
{
    const Interval& iv = problem.iv;
    const int N = grid.N();
    const double h = grid.h();
    const auto n = grid.size();
    const auto last = n - 1;

    std::vector<double> omega_a_nodes(n), omega_b_nodes(n);
    for (std::size_t l = 0; l < n; ++l) {
        omega_a_nodes[l] = basis::omega_a(iv, grid.points()[l]);
        omega_b_nodes[l] = basis::omega_b(iv, grid.points()[l]);
    }

    DenseMatrix E(n), V(n), K(n);
    std::vector<double> rhs(n);
    std::vector<double> k1_row(n), k2_row(n), j_row(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double ti = coll_t[i];
        const double xi = coll_x[i];
        for (std::size_t l = 0; l < n; ++l) {
            const int jl = static_cast<int>(l) - N;
            if (grid.weights()[l] == 0.0) {
                k1_row[l] = k2_row[l] = j_row[l] = 0.0;
                continue;
            }
            k1_row[l] = checked_kernel(problem.k1, "k1", ti, grid.points()[l]);
            k2_row[l] = checked_kernel(problem.k2, "k2", ti, grid.points()[l]);
            j_row[l] = basis::sinc_J(jl, h, xi);
        }

        E(i, 0) = basis::omega_a(iv, ti);
        E(i, last) = basis::omega_b(iv, ti);
        for (std::size_t j = 1; j < last; ++j)
            E(i, j) = basis::sinc_S(static_cast<int>(j) - N, h, xi);

        // Middle columns: S(j,h) is a Kronecker delta on the nodes, so only
        // the l = j term of each operator survives.
        for (std::size_t j = 1; j < last; ++j) {
            const double w = grid.weights()[j];
            V(i, j) = k1_row[j] * w * j_row[j];
            K(i, j) = k2_row[j] * w * h;
        }

        double va = 0.0, vb = 0.0, ka = 0.0, kb = 0.0;
        for (std::size_t l = 0; l < n; ++l) {
            const double w = grid.weights()[l];
            va += k1_row[l] * omega_a_nodes[l] * w * j_row[l];
            vb += k1_row[l] * omega_b_nodes[l] * w * j_row[l];
            ka += k2_row[l] * omega_a_nodes[l] * w;
            kb += k2_row[l] * omega_b_nodes[l] * w;
        }
        V(i, 0) = va;
        V(i, last) = vb;
        K(i, 0) = h * ka;
        K(i, last) = h * kb;

        rhs[i] = checked_rhs(problem.g, ti);
    }

    DenseMatrix A(n);
    subtract_into(A, E, V, K);
    return CollocationSystem{method, std::move(grid), std::move(coll_t), std::move(E),
                             std::move(V), std::move(K), std::move(A), std::move(rhs)};
}

} // namespace

void Problem::validate() const
{
    if (!k1 || !k2 || !g)
        throw ContractError("Problem: k1, k2 and g must all be set");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("Problem: alpha must lie in (0, 1]");
    if (!(d_se > 0.0 && d_se < max_strip_width(TransformKind::SE)))
        throw DomainError("Problem: d_se must lie in (0, pi)");
    if (!(d_de > 0.0 && d_de < max_strip_width(TransformKind::DE)))
        throw DomainError("Problem: d_de must lie in (0, pi/2)");
}

DenseMatrix DenseMatrix::identity(std::size_t n)
{
    DenseMatrix I(n);
    for (std::size_t i = 0; i < n; ++i)
        I(i, i) = 1.0;
    return I;
}

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const
{
    if (x.size() != n_)
        throw ContractError("DenseMatrix::multiply: dimension mismatch");
    std::vector<double> y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n_; ++j)
            s += (*this)(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

double DenseMatrix::norm_inf() const
{
    double m = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n_; ++j)
            s += std::abs((*this)(i, j));
        m = std::max(m, s);
    }
    return m;
}

SincGrid method_grid(const Problem& problem, Method method, int N, const SolveOptions& options)
{
    problem.validate();
    const TransformKind kind = transform_of(method);
    const double d = kind == TransformKind::SE ? problem.d_se : problem.d_de;
    transforms::SelectOptions select;
    select.johnogbonna_parametric = options.johnogbonna_parametric_h;
    return build_grid(kind, problem.iv, method, problem.alpha, d, N, select);
}

CollocationSystem assemble_new(const Problem& problem, Method method, int N)
{
    if (method != Method::NewSE && method != Method::NewDE)
        throw ContractError("assemble_new: method must be NewSE or NewDE");
    SincGrid grid = method_grid(problem, method, N);
    const double h = grid.h();
    const auto n = grid.size();
    const auto jtab = j_offset_table(N, h);

    DenseMatrix V(n), K(n);
    std::vector<double> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double ti = grid.points()[i];
        for (std::size_t j = 0; j < n; ++j) {
            const double w = grid.weights()[j];
            if (w == 0.0)
                continue;
            const double tj = grid.points()[j];
            const double jij = jtab[i - j + 2 * static_cast<std::size_t>(N)];
            V(i, j) = checked_kernel(problem.k1, "k1", ti, tj) * w * jij;
            K(i, j) = checked_kernel(problem.k2, "k2", ti, tj) * w * h;
        }
        rhs[i] = checked_rhs(problem.g, ti);
    }

    DenseMatrix E = DenseMatrix::identity(n);
    DenseMatrix A(n);
    subtract_into(A, E, V, K);
    std::vector<double> coll(grid.points().begin(), grid.points().end());
    return CollocationSystem{method, std::move(grid), std::move(coll), std::move(E),
                             std::move(V), std::move(K), std::move(A), std::move(rhs)};
}

CollocationSystem assemble_shamloo(const Problem& problem, int N)
{
    SincGrid grid = method_grid(problem, Method::ShamlooSE, N);
    std::vector<double> coll_t(grid.points().begin(), grid.points().end());
    std::vector<double> coll_x;
    coll_x.reserve(coll_t.size());
    for (int i = -N; i <= N; ++i)
        coll_x.push_back(i * grid.h());
    return assemble_boundary_basis(problem, Method::ShamlooSE, std::move(grid), std::move(coll_t),
                                   std::move(coll_x));
}

CollocationSystem assemble_johnogbonna(const Problem& problem, int N, const SolveOptions& options)
{
    SincGrid grid = method_grid(problem, Method::JohnOgbonnaDE, N, options);
    std::vector<double> coll_t(grid.points().begin(), grid.points().end());
    std::vector<double> coll_x;
    coll_x.reserve(coll_t.size());
    for (int i = -N; i <= N; ++i)
        coll_x.push_back(i * grid.h());
    coll_t.front() = problem.iv.a();
    coll_t.back() = problem.iv.b();
    coll_x.front() = -std::numeric_limits<double>::infinity();
    coll_x.back() = std::numeric_limits<double>::infinity();
    return assemble_boundary_basis(problem, Method::JohnOgbonnaDE, std::move(grid),
                                   std::move(coll_t), std::move(coll_x));
}

CollocationSystem assemble(const Problem& problem, Method method, int N, const SolveOptions& options)
{
    switch (method) {
    case Method::NewSE:
    case Method::NewDE: return assemble_new(problem, method, N);
    case Method::ShamlooSE: return assemble_shamloo(problem, N);
    case Method::JohnOgbonnaDE: return assemble_johnogbonna(problem, N, options);
    }
    throw ContractError("unknown Method");
}

LinearSolution solve_linear(const DenseMatrix& A, std::span<const double> rhs)
{
    const auto n = A.order();
    if (rhs.size() != n)
        throw ContractError("solve_linear: rhs length does not match matrix order");
    using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const auto size = static_cast<Eigen::Index>(n);
    const Eigen::Map<const RowMajor> a(A.data().data(), size, size);
    const Eigen::Map<const Eigen::VectorXd> b(rhs.data(), size);

    const Eigen::PartialPivLU<RowMajor> lu(a);
    const auto diag = lu.matrixLU().diagonal();
    for (Eigen::Index i = 0; i < size; ++i)
        if (diag(i) == 0.0 || !std::isfinite(diag(i)))
            throw SingularMatrixError("solve_linear: zero pivot at step " + std::to_string(i));

    const Eigen::VectorXd x = lu.solve(b);
    return LinearSolution{std::vector<double>(x.data(), x.data() + x.size()), lu.rcond()};
}

DiscreteSolution::DiscreteSolution(Method method, SincGrid grid, std::vector<double> coeffs,
                                   double rcond, double residual_inf, double rhs_inf)
    : method_(method), grid_(std::move(grid)), coeffs_(std::move(coeffs)), rcond_(rcond),
      residual_inf_(residual_inf), rhs_inf_(rhs_inf)
{
    if (coeffs_.size() != grid_.size())
        throw ContractError("DiscreteSolution: coefficient count does not match grid");
    const Interval& iv = grid_.interval();
    const auto n = coeffs_.size();
    sinc_coeffs_.assign(n, 0.0);
    if (method_ == Method::NewSE || method_ == Method::NewDE) {
        for (std::size_t j = 0; j < n; ++j) {
            const double tj = grid_.points()[j];
            sinc_coeffs_[j] = coeffs_[j] - coeffs_.front() * basis::omega_a(iv, tj)
                            - coeffs_.back() * basis::omega_b(iv, tj);
        }
    } else {
        for (std::size_t j = 1; j + 1 < n; ++j)
            sinc_coeffs_[j] = coeffs_[j];
    }
}

bool DiscreteSolution::ill_conditioned() const noexcept
{
    return rcond_ < 1e2 * std::numeric_limits<double>::epsilon();
}

double DiscreteSolution::evaluate(double t) const
{
    const Interval& iv = grid_.interval();
    const double x = grid_.abscissa(t);
    double sum = coeffs_.front() * basis::omega_a(iv, t) + coeffs_.back() * basis::omega_b(iv, t);
    if (std::isinf(x))
        return sum;
    const int N = grid_.N();
    for (int j = -N; j <= N; ++j) {
        const double c = sinc_coeffs_[static_cast<std::size_t>(j + N)];
        if (c == 0.0)
            continue;
        const double s = basis::sinc_S(j, grid_.h(), x);
        if (s != 0.0)
            sum += c * s;
    }
    return sum;
}

DiscreteSolution solve(const Problem& problem, Method method, int N, const SolveOptions& options)
{
    CollocationSystem sys = assemble(problem, method, N, options);
    LinearSolution lin = solve_linear(sys.A, sys.rhs);
    const auto Ac = sys.A.multiply(lin.x);
    double residual = 0.0;
    for (std::size_t i = 0; i < Ac.size(); ++i)
        residual = std::max(residual, std::abs(Ac[i] - sys.rhs[i]));
    return DiscreteSolution(method, std::move(sys.grid), std::move(lin.x), lin.rcond, residual,
                            max_abs(sys.rhs));
}

double evaluate_solution(const DiscreteSolution& sol, double t)
{
    return sol.evaluate(t);
}

} // namespace sincvfie
