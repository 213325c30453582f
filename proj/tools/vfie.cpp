// vfie: solve the built-in Volterra-Fredholm examples and run convergence sweeps.
//
//   vfie bench --example 1 --method all --n-list 4,8,16 --eval-points 4096 --out ex1.csv --fit
//   vfie solve --example 2 --method de-new --n 32 --at 0.25
//
// Exit codes: 0 success, 2 usage error, 3 numerical failure, 4 I/O error.

#include "sincvfie/bench.hpp"
#include "sincvfie/errors.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace sincvfie;

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

const std::vector<std::string> kMethodNames{"se-new", "de-new", "se-shamloo", "de-johnogbonna"};

std::vector<Method> methods_for(const std::string& name)
{
    if (name == "all")
        return {Method::NewSE, Method::NewDE, Method::ShamlooSE, Method::JohnOgbonnaDE};
    return {bench::parse_method(name)};
}

void report_fit(const std::vector<bench::SweepRecord>& records, const bench::BuiltinExample& ex)
{
    const Method m = records.front().method;
    const bool se = transform_of(m) == TransformKind::SE;
    const auto model = se ? bench::RateModel::SE_root_exp : bench::RateModel::DE_almost_exp;
    const double d = se ? ex.problem.d_se : ex.problem.d_de;
    try {
        const auto fit = bench::fit_rate(records, model, ex.problem.alpha, d);
        std::printf("fit %-15s slope %+.4f (theory %+.4f)  r^2 %.5f  points %zu\n",
                    std::string(to_string(m)).c_str(), fit.slope,
                    bench::theoretical_slope(model, ex.problem.alpha, d), fit.r_squared,
                    fit.points_used);
    } catch (const DiagnosticError& e) {
        std::printf("fit %-15s skipped: %s\n", std::string(to_string(m)).c_str(), e.what());
    }
}

int run_self_check(const bench::BuiltinExample& ex)
{
    const auto res = bench::self_check(ex);
    const bool ok = res.max_residual <= 1e-8;
    std::printf("self-check example %d: max residual %.3e over %zu probes (%s)\n", ex.id,
                res.max_residual, res.probes.size(), ok ? "ok" : "FAILED");
    return ok ? 0 : kExitNumerical;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Sinc-collocation solvers for linear Volterra-Fredholm integral equations"};
    app.require_subcommand(1);

    int example = 1;
    std::string method = "all";
    std::vector<int> n_list = bench::kDefaultNList;
    int eval_points = bench::kDefaultEvalPoints;
    std::string out_path;
    bool want_self_check = false;
    bool want_fit = false;
    bool jo_parametric = false;

    auto* bench_cmd = app.add_subcommand("bench", "Run an N-sweep and write CSV");
    bench_cmd->add_option("--example", example, "Built-in example")->check(CLI::IsMember({1, 2}));
    bench_cmd->add_option("--method", method, "Method or 'all'")
        ->check(CLI::IsMember({"se-new", "de-new", "se-shamloo", "de-johnogbonna", "all"}));
    bench_cmd->add_option("--n-list", n_list, "Comma-separated N values")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--eval-points", eval_points, "Equispaced error grid size")
        ->check(CLI::Range(2, 1 << 24));
    bench_cmd->add_option("--out", out_path, "CSV destination ('-' for stdout)")->required();
    bench_cmd->add_flag("--self-check", want_self_check,
                        "Verify the example's transcription before sweeping");
    bench_cmd->add_flag("--fit", want_fit, "Print convergence-rate regressions");
    bench_cmd->add_flag("--jo-parametric-h", jo_parametric,
                        "John-Ogbonna baseline uses h = log(4dN/alpha)/N");

    int n = 16;
    double at = 0.5;
    auto* solve_cmd = app.add_subcommand("solve", "Solve once and print u_N(t)");
    solve_cmd->add_option("--example", example, "Built-in example")->check(CLI::IsMember({1, 2}));
    solve_cmd->add_option("--method", method, "Method")->required()->check(CLI::IsMember(kMethodNames));
    solve_cmd->add_option("--n", n, "Truncation index N")->required()->check(CLI::PositiveNumber);
    solve_cmd->add_option("--at", at, "Evaluation point t")->required();
    solve_cmd->add_flag("--jo-parametric-h", jo_parametric,
                        "John-Ogbonna baseline uses h = log(4dN/alpha)/N");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    SolveOptions options;
    options.johnogbonna_parametric_h = jo_parametric;

    try {
        const auto ex = bench::builtin(example);
        if (*solve_cmd) {
            if (!ex.problem.iv.contains(at)) {
                std::cerr << "vfie: --at must lie in [" << ex.problem.iv.a() << ", "
                          << ex.problem.iv.b() << "]\n";
                return kExitUsage;
            }
            const auto sol = solve(ex.problem, bench::parse_method(method), n, options);
            if (sol.ill_conditioned())
                std::cerr << "vfie: warning: system is ill-conditioned (rcond " << sol.rcond() << ")\n";
            std::printf("%.17g\n", sol.evaluate(at));
            return 0;
        }

        for (std::size_t i = 1; i < n_list.size(); ++i) {
            if (n_list[i] <= n_list[i - 1]) {
                std::cerr << "vfie: --n-list must be strictly increasing\n";
                return kExitUsage;
            }
        }
        if (want_self_check) {
            if (const int rc = run_self_check(ex); rc != 0)
                return rc;
        }

        std::vector<bench::SweepRecord> all;
        for (Method m : methods_for(method)) {
            auto records = bench::run_sweep(ex, m, n_list, eval_points, options);
            if (want_fit)
                report_fit(records, ex);
            all.insert(all.end(), records.begin(), records.end());
        }
        if (out_path == "-")
            bench::emit_csv(all, std::cout);
        else
            bench::emit_csv(all, out_path);
        return 0;
    } catch (const SingularMatrixError& e) {
        std::cerr << "vfie: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const AssemblyError& e) {
        std::cerr << "vfie: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const IoError& e) {
        std::cerr << "vfie: " << e.what() << '\n';
        return kExitIo;
    } catch (const ContractError& e) {
        std::cerr << "vfie: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "vfie: " << e.what() << '\n';
        return kExitUsage;
    }
}
