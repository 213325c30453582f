#pragma once

#include "sincvfie/vfie_solver.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sincvfie::bench {

/// Test equation with a known solution.
struct BuiltinExample {
    int id;
    Problem problem;
    UnivariateFn exact;
};

/// Example 1: k1 = k2 = ts on [0,1], u(t) = t, alpha = 1.
/// Example 2: k1 = s^{t+1/2}, k2 = (1-s)^t on [0,1], u(t) = sqrt(t), alpha = 1/2.
/// Both use d = 3.14 (SE) and d = 1.57 (DE). Throws ContractError for other ids.
BuiltinExample builtin(int id);

/// One row of a convergence sweep.
struct SweepRecord {
    Method method;
    int example;
    int N;
    double h;
    double max_error;
    double elapsed_seconds;
};

/// sup |exact - solution| over M equispaced points, endpoints included.
double max_error(const DiscreteSolution& sol, const UnivariateFn& exact, int M);

/// Solve `example` with `method` for every N in n_list (nonempty, increasing).
std::vector<SweepRecord> run_sweep(const BuiltinExample& example, Method method,
                                   const std::vector<int>& n_list, int M,
                                   const SolveOptions& options = {});
std::vector<SweepRecord> run_sweep(int example_id, Method method, const std::vector<int>& n_list,
                                   int M, const SolveOptions& options = {});

inline const std::vector<int> kDefaultNList{4, 8, 16, 24, 32, 48, 64, 96, 128};
inline constexpr int kDefaultEvalPoints = 4096;

/// CSV: header `method,example,N,h,max_error,elapsed_seconds`, LF endings,
/// reals in %.14e.
void emit_csv(const std::vector<SweepRecord>& records, std::ostream& out);
/// Throws IoError naming the path when the file cannot be written.
void emit_csv(const std::vector<SweepRecord>& records, const std::string& path);
std::vector<SweepRecord> parse_csv(std::istream& in);

Method parse_method(std::string_view name);

enum class RateModel {
    SE_root_exp,   // ln(err) - ln(N)/2 against sqrt(N)
    DE_almost_exp, // ln(err) against N / log(2dN/alpha)
};

struct RateFit {
    double slope;
    double r_squared;
    std::size_t points_used;
};

/// Records with max_error <= 1e-13 are dropped (saturated). Needs at least
/// four remaining points, otherwise DiagnosticError.
RateFit fit_rate(const std::vector<SweepRecord>& records, RateModel model, double alpha = 1.0,
                 double d = 1.57);

/// Predicted slope for the model: -sqrt(pi d alpha) (SE) or -pi d (DE).
double theoretical_slope(RateModel model, double alpha, double d);

struct SelfCheckResult {
    int example;
    double max_residual;
    std::vector<double> probes;
    std::vector<double> residuals;
};

/// Residual of the exact solution substituted into the equation, with both
/// integrals done by DE-Sinc rules at `N`, at `probes` equispaced points.
SelfCheckResult self_check(const BuiltinExample& example, int N = 48, int probes = 33);

} // namespace sincvfie::bench
