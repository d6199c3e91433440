#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "stochdom/errors.hpp"
#include "stochdom/quadrature.hpp"

using namespace stochdom;

TEST_CASE("integrate is exact on low-degree polynomials", "[quadrature]") {
    const auto sq = [](double x) { return x * x; };
    const QuadratureResult q = integrate(sq, 0.0, 1.0, 1e-12);
    CHECK(std::abs(q.value - 1.0 / 3.0) < 1e-14);
    CHECK(q.error_estimate <= 1e-12);

    const auto cube = [](double x) { return x * x * x; };
    CHECK(std::abs(integrate(cube, 0.0, 2.0, 1e-12).value - 4.0) < 1e-12);
}

TEST_CASE("integrate handles smooth transcendental integrands", "[quadrature]") {
    const double pi = std::acos(-1.0);
    const QuadratureResult q =
        integrate([](double x) { return std::sin(x); }, 0.0, pi, 1e-11);
    CHECK(std::abs(q.value - 2.0) < 1e-10);
}

TEST_CASE("breakpoints split kinked integrands", "[quadrature]") {
    const auto kink = [](double x) { return std::abs(x - 0.5); };
    const QuadratureResult q = integrate(kink, 0.0, 1.0, 1e-12, {0.5});
    CHECK(std::abs(q.value - 0.25) < 1e-13);
}

TEST_CASE("breakpoints rescue integrands invisible to the initial probes",
          "[quadrature]") {
    // A spike of width ~1e-4 between the endpoints and the midpoint of
    // [0, 1]: without a cut near it the initial Simpson pass sees zero.
    const double mu = 0.3, sigma = 1e-4;
    const auto spike = [&](double x) {
        const double z = (x - mu) / sigma;
        return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * std::acos(-1.0)));
    };
    const QuadratureResult q = integrate(spike, 0.0, 1.0, 1e-9, {mu});
    CHECK(std::abs(q.value - 1.0) < 1e-8);
}

TEST_CASE("degenerate and invalid intervals", "[quadrature]") {
    const auto one = [](double) { return 1.0; };
    const QuadratureResult q = integrate(one, 2.0, 2.0, 1e-8);
    CHECK(q.value == 0.0);
    CHECK(q.error_estimate == 0.0);

    CHECK_THROWS_AS(integrate(one, 1.0, 0.0, 1e-8), input_error);
    CHECK_THROWS_AS(integrate(one, 0.0, 1.0, 0.0), input_error);
    CHECK_THROWS_AS(integrate(one, 0.0, 1.0, -1e-8), input_error);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(integrate(one, 0.0, inf, 1e-8), input_error);
}

TEST_CASE("unreachable tolerance throws with the best estimate attached",
          "[quadrature]") {
    // A jump at an irrational point can never be resolved to 1e-16 within
    // the depth budget; the error must carry the partial result.
    const double c = 1.0 / std::acos(-1.0);
    const auto step = [&](double x) { return x < c ? 0.0 : 1.0; };
    try {
        integrate(step, 0.0, 1.0, 1e-16);
        FAIL("expected numeric_error");
    } catch (const numeric_error& e) {
        CHECK(std::abs(e.best_estimate - (1.0 - c)) < 1e-9);
        CHECK(e.error_estimate > 0.0);
    }
}

TEST_CASE("error estimate is honest on a hard but reachable integrand",
          "[quadrature]") {
    // sqrt has unbounded derivative at 0; the adaptive refinement must both
    // converge and report an error bound that covers the true error.
    const QuadratureResult q =
        integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-9);
    CHECK(std::abs(q.value - 2.0 / 3.0) <= q.error_estimate + 1e-9);
}
