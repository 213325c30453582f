#include "sincvfie/bench.hpp"

#include "sincvfie/errors.hpp"
#include "sincvfie/special.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace sincvfie::bench {

namespace {

Problem example1_problem()
{
    Problem p{Interval(0.0, 1.0),
              [](double t, double s) { return t * s; },
              [](double t, double s) { return t * s; },
              [](double t) { return (2.0 / 3.0) * t - (1.0 / 3.0) * t * t * t * t; }};
    p.alpha = 1.0;
    return p;
}

double example2_g(double t)
{
    // t^{t+2}/(t+2) -> 0 as t -> 0
    const double power = t > 0.0 ? std::exp((t + 2.0) * std::log(t)) : 0.0;
    return std::sqrt(t) - power / (t + 2.0) - special::beta(1.5, t + 1.0);
}

Problem example2_problem()
{
    Problem p{Interval(0.0, 1.0),
              // s^{t+1/2}; s > 0 at every Sinc point, exp(-inf) = 0 at s = 0
              [](double t, double s) { return std::exp((t + 0.5) * std::log(s)); },
              [](double t, double s) { return std::pow(1.0 - s, t); },
              example2_g};
    p.alpha = 0.5;
    return p;
}

std::string format_real(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.14e", v);
    return buf;
}

struct LineFit {
    double slope;
    double r_squared;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y)
{
    const auto n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0)
        throw DiagnosticError("fit_rate: abscissae are all equal");
    const double slope = sxy / sxx;
    const double r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return {slope, r2};
}

} // namespace

BuiltinExample builtin(int id)
{
    switch (id) {
    case 1: return {1, example1_problem(), [](double t) { return t; }};
    case 2: return {2, example2_problem(), [](double t) { return std::sqrt(t); }};
    default: throw ContractError("unknown example id " + std::to_string(id) + " (expected 1 or 2)");
    }
}

double max_error(const DiscreteSolution& sol, const UnivariateFn& exact, int M)
{
    if (M < 2)
        throw ContractError("max_error: need at least 2 evaluation points");
    const Interval& iv = sol.grid().interval();
    const double step = iv.length() / static_cast<double>(M - 1);
    double worst = 0.0;
    for (int k = 0; k < M; ++k) {
        const double t = k == M - 1 ? iv.b() : iv.a() + k * step;
        worst = std::max(worst, std::abs(exact(t) - sol.evaluate(t)));
    }
    return worst;
}

std::vector<SweepRecord> run_sweep(const BuiltinExample& example, Method method,
                                   const std::vector<int>& n_list, int M,
                                   const SolveOptions& options)
{
    if (n_list.empty())
        throw ContractError("run_sweep: N list is empty");
    for (std::size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i] <= n_list[i - 1])
            throw ContractError("run_sweep: N list must be strictly increasing");

    std::vector<SweepRecord> records;
    records.reserve(n_list.size());
    for (int N : n_list) {
        const auto start = std::chrono::steady_clock::now();
        const DiscreteSolution sol = solve(example.problem, method, N, options);
        const auto stop = std::chrono::steady_clock::now();
        const double err = max_error(sol, example.exact, M);
        records.push_back({method, example.id, N, sol.grid().h(), err,
                           std::chrono::duration<double>(stop - start).count()});
    }
    return records;
}

std::vector<SweepRecord> run_sweep(int example_id, Method method, const std::vector<int>& n_list,
                                   int M, const SolveOptions& options)
{
    return run_sweep(builtin(example_id), method, n_list, M, options);
}

void emit_csv(const std::vector<SweepRecord>& records, std::ostream& out)
{
    out << "method,example,N,h,max_error,elapsed_seconds\n";
    for (const auto& r : records) {
        out << to_string(r.method) << ',' << r.example << ',' << r.N << ',' << format_real(r.h)
            << ',' << format_real(r.max_error) << ',' << format_real(r.elapsed_seconds) << '\n';
    }
}

void emit_csv(const std::vector<SweepRecord>& records, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    emit_csv(records, out);
    out.flush();
    if (!out)
        throw IoError("write to '" + path + "' failed");
}

Method parse_method(std::string_view name)
{
    for (Method m : {Method::NewSE, Method::NewDE, Method::ShamlooSE, Method::JohnOgbonnaDE})
        if (to_string(m) == name)
            return m;
    throw ContractError("unknown method '" + std::string(name) + "'");
}

std::vector<SweepRecord> parse_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != "method,example,N,h,max_error,elapsed_seconds")
        throw ContractError("parse_csv: missing or malformed header");
    std::vector<SweepRecord> records;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream row(line);
        std::string field[6];
        for (auto& f : field)
            if (!std::getline(row, f, ','))
                throw ContractError("parse_csv: short row '" + line + "'");
        records.push_back({parse_method(field[0]), std::stoi(field[1]), std::stoi(field[2]),
                           std::stod(field[3]), std::stod(field[4]), std::stod(field[5])});
    }
    return records;
}

RateFit fit_rate(const std::vector<SweepRecord>& records, RateModel model, double alpha, double d)
{
    std::vector<double> x, y;
    for (const auto& r : records) {
        if (!(r.max_error > 1e-13))
            continue;
        const double n = static_cast<double>(r.N);
        if (model == RateModel::SE_root_exp) {
            x.push_back(std::sqrt(n));
            y.push_back(std::log(r.max_error) - 0.5 * std::log(n));
        } else {
            x.push_back(n / std::log(2.0 * d * n / alpha));
            y.push_back(std::log(r.max_error));
        }
    }
    if (x.size() < 4)
        throw DiagnosticError("fit_rate: need at least 4 unsaturated records, have "
                              + std::to_string(x.size()));
    const LineFit fit = least_squares(x, y);
    return {fit.slope, fit.r_squared, x.size()};
}

double theoretical_slope(RateModel model, double alpha, double d)
{
    if (model == RateModel::SE_root_exp)
        return -std::sqrt(std::numbers::pi * d * alpha);
    return -std::numbers::pi * d;
}

SelfCheckResult self_check(const BuiltinExample& example, int N, int probes)
{
    const Problem& p = example.problem;
    const SincGrid grid = build_grid(TransformKind::DE, p.iv, Method::NewDE, p.alpha, p.d_de, N);
    std::vector<double> u_nodes(grid.size(), 0.0);
    for (std::size_t j = 0; j < grid.size(); ++j)
        u_nodes[j] = example.exact(grid.points()[j]);

    SelfCheckResult result{example.id, 0.0, {}, {}};
    const double step = p.iv.length() / static_cast<double>(probes - 1);
    std::vector<double> integrand(grid.size());
    for (int k = 0; k < probes; ++k) {
        const double t = k == probes - 1 ? p.iv.b() : p.iv.a() + k * step;
        for (std::size_t j = 0; j < grid.size(); ++j)
            integrand[j] = grid.weights()[j] == 0.0 ? 0.0 : p.k1(t, grid.points()[j]) * u_nodes[j];
        const double volterra = indefinite(grid, integrand, t);
        const double fredholm =
            quadrature(grid, [&](double s) { return p.k2(t, s) * example.exact(s); });
        const double r = example.exact(t) - volterra - fredholm - p.g(t);
        result.probes.push_back(t);
        result.residuals.push_back(r);
        result.max_residual = std::max(result.max_residual, std::abs(r));
    }
    return result;
}

} // namespace sincvfie::bench
