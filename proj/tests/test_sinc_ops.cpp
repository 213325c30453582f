#include "sincvfie/errors.hpp"
#include "sincvfie/sinc_ops.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace sincvfie;

namespace {

const Interval unit(0.0, 1.0);

SincGrid se_grid(int N, double alpha = 1.0, double d = 3.14)
{
    return build_grid(TransformKind::SE, unit, Method::NewSE, alpha, d, N);
}

SincGrid de_grid(int N, double alpha = 1.0, double d = 1.57)
{
    return build_grid(TransformKind::DE, unit, Method::NewDE, alpha, d, N);
}

double max_interp_error(const SincGrid& grid, const UnivariateFn& f, int M = 1001)
{
    const auto P = approximate(grid, f);
    double worst = 0.0;
    for (int k = 0; k < M; ++k) {
        const double t = k / static_cast<double>(M - 1);
        worst = std::max(worst, std::abs(P.evaluate(t) - f(t)));
    }
    return worst;
}

} // namespace

TEST_CASE("build_grid")
{
    const auto g = se_grid(1);
    CHECK(g.size() == 3);
    CHECK(g.point(0) == 0.5);
    // sqrt(pi * 3.14)
    CHECK(g.h() == doctest::Approx(3.14079622584336897).epsilon(1e-15));
    const auto g16 = de_grid(16);
    for (int j = 0; j <= 16; ++j)
        CHECK(g16.weight(j) == g16.weight(-j));
    for (double w : g16.weights())
        CHECK(w > 0.0);
    CHECK_THROWS_AS(build_grid(TransformKind::DE, unit, Method::NewDE, 1.0, 2.0, 8), DomainError);
    CHECK_THROWS_AS(g16.point(17), ContractError);
}

TEST_CASE("abscissa returns exact ih at Sinc points")
{
    for (const auto& g : {se_grid(32), de_grid(32)}) {
        for (int j = -32; j <= 32; ++j) {
            if (g.point(j) == 0.0 || g.point(j) == 1.0)
                continue; // saturated DE tail
            CHECK(g.abscissa(g.point(j)) == j * g.h());
        }
        CHECK(std::isinf(g.abscissa(0.0)));
        CHECK(g.abscissa(0.0) < 0.0);
        CHECK(g.abscissa(1.0) > 0.0);
    }
}

TEST_CASE("approximate reproduces constants")
{
    for (const auto& g : {se_grid(16), de_grid(16)}) {
        const auto P = approximate(g, [](double) { return 1.0; });
        for (int k = 0; k <= 1000; ++k)
            CHECK(std::abs(P.evaluate(k / 1000.0) - 1.0) <= 1e-13);
    }
}

TEST_CASE("approximate interpolates at nodes and endpoints")
{
    auto f = [](double t) { return std::exp(t) * std::cos(3 * t); };
    for (const auto& g : {se_grid(16), de_grid(16)}) {
        const auto P = approximate(g, f);
        for (int j = -16; j <= 16; ++j)
            CHECK(P.evaluate(g.point(j)) == doctest::Approx(f(g.point(j))).epsilon(1e-14));
        CHECK(P.evaluate(0.0) == P.boundary_left());
        CHECK(P.evaluate(1.0) == P.boundary_right());
        CHECK(P.evaluate(0.5) == doctest::Approx(f(0.5)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(approximate(se_grid(4), std::vector<double>(3, 0.0)), ContractError);
    CHECK_THROWS_AS(approximate(se_grid(4), [](double t) { return t; }).evaluate(1.5), DomainError);
}

TEST_CASE("approximate error for f(t) = t")
{
    CHECK(max_interp_error(se_grid(16), [](double t) { return t; }) <= 1e-3);
}

TEST_CASE("SE convergence rate for sqrt(t)(1-t)")
{
    // ln(err) against sqrt(N); theory slope -sqrt(pi d alpha)
    const double alpha = 0.5, d = 3.14;
    auto f = [](double t) { return std::sqrt(t) * (1.0 - t); };
    std::vector<double> xs, ys;
    for (int N : {8, 16, 32, 64, 128}) {
        xs.push_back(std::sqrt(static_cast<double>(N)));
        ys.push_back(std::log(max_interp_error(se_grid(N, alpha, d), f, 2001)));
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i] / xs.size();
        my += ys[i] / ys.size();
    }
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    const double slope = sxy / sxx;
    const double theory = -std::sqrt(std::numbers::pi * d * alpha);
    MESSAGE("SE interpolation slope " << slope << " (theory " << theory << ")");
    CHECK(slope == doctest::Approx(theory).epsilon(0.30));
}

TEST_CASE("DE beats SE for an analytic function")
{
    auto f = [](double t) { return 1.0 / (1.0 + t); };
    CHECK(max_interp_error(de_grid(32), f) < max_interp_error(se_grid(32), f));
}

TEST_CASE("quadrature")
{
    CHECK(quadrature(se_grid(16), [](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(std::abs(quadrature(de_grid(16), [](double s) { return s; }) - 0.5) <= 1e-8);
    // integrand singular at both ends; exact value pi
    const auto g = build_grid(TransformKind::DE, unit, Method::NewDE, 0.5, 1.57, 32);
    const double q = quadrature(g, [](double s) { return 1.0 / std::sqrt(s * (1.0 - s)); });
    CHECK(std::isfinite(q));
    CHECK(q == doctest::Approx(std::numbers::pi).epsilon(1e-8));
}

TEST_CASE("indefinite integration")
{
    auto f = [](double s) { return s; };
    const auto g = se_grid(32);
    CHECK(indefinite(g, f, 0.0) == 0.0);
    CHECK(std::abs(indefinite(g, f, 0.5) - 0.125) <= 1e-4);
    CHECK(indefinite(g, f, 1.0) == doctest::Approx(quadrature(g, f)).epsilon(1e-12));

    auto h = [](double s) { return std::cos(s) + s * s; };
    const auto gd = de_grid(32);
    for (double t : {0.1, 0.37, 0.8})
        CHECK(indefinite(gd, h, t) == doctest::Approx(std::sin(t) + t * t * t / 3).epsilon(1e-9));
    CHECK(indefinite(gd, h, 1.0) == doctest::Approx(quadrature(gd, h)).epsilon(1e-12));
    CHECK_THROWS_AS(indefinite(gd, std::vector<double>(3), 0.5), ContractError);
}
