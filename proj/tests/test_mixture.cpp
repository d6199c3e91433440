#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "stochdom/errors.hpp"
#include "stochdom/mixture.hpp"
#include "stochdom/quadrature.hpp"
#include "test_support.hpp"

using namespace stochdom;

namespace {

// Quantile-spaced cuts so that density integrals see every component.
std::vector<double> quantile_cuts(const MixtureModel& m) {
    std::vector<double> cuts;
    for (int k = 1; k < 32; ++k) cuts.push_back(m.quantile(k / 32.0));
    return cuts;
}

MixtureModel crossing_uniform_pair_b() {
    return make_mixture({{0.9, make_uniform(0.1, 1.0)},
                         {0.1, make_uniform(-0.5, 0.0)}});
}

}  // namespace

TEST_CASE("pdf evaluates weighted component densities", "[mixture]") {
    CHECK(make_uniform(0.0, 1.0).pdf(0.5) == 1.0);

    const MixtureModel half =
        make_mixture({{0.5, make_uniform(0.0, 1.0)}, {0.5, make_uniform(1.0, 2.0)}});
    CHECK(half.pdf(1.5) == 0.5);

    CHECK(std::abs(make_gaussian(0.0, 1.0).pdf(0.0) - 0.3989423) < 1e-7);

    CHECK(make_uniform(0.0, 1.0).pdf(2.0) == 0.0);
    CHECK(make_uniform(0.0, 1.0).pdf(-1.0) == 0.0);
}

TEST_CASE("cdf evaluates weighted component distributions", "[mixture]") {
    CHECK(make_uniform(0.0, 1.0).cdf(0.25) == 0.25);
    CHECK(std::abs(make_gaussian(0.0, 1.0).cdf(0.0) - 0.5) < 1e-15);
    // Only the low component lies below 0.05; its weight is 0.1.
    CHECK(std::abs(crossing_uniform_pair_b().cdf(0.05) - 0.1) < 1e-12);
}

TEST_CASE("cdf is monotone and normalised on random mixtures", "[mixture]") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const MixtureModel m = testsupport::random_mixture(rng);
        const Interval t = m.truncated_support();
        double prev = -1.0;
        for (int k = 0; k <= 200; ++k) {
            const double x = t.lo + (t.hi - t.lo) * k / 200.0;
            const double c = m.cdf(x);
            CHECK(c >= prev);
            CHECK(c >= 0.0);
            CHECK(c <= 1.0);
            prev = c;
        }
        const QuadratureResult q = integrate([&](double x) { return m.pdf(x); },
                                             t.lo, t.hi, 1e-9, quantile_cuts(m));
        CHECK(std::abs(q.value - 1.0) < 1e-8);
    }
}

TEST_CASE("sampling is deterministic and in-support", "[mixture]") {
    const MixtureModel u = make_uniform(0.0, 1.0);
    const std::vector<double> v1 = sample(u, 5, 7);
    const std::vector<double> v2 = sample(u, 5, 7);
    REQUIRE(v1.size() == 5);
    CHECK(v1 == v2);
    for (double x : v1) {
        CHECK(x > 0.0);
        CHECK(x < 1.0);
    }

    const std::vector<double> g = sample(make_gaussian(0.0, 1.0), 100000, 1);
    const double mean = std::accumulate(g.begin(), g.end(), 0.0) / g.size();
    CHECK(std::abs(mean) < 0.02);
}

TEST_CASE("mixture sampling respects component weights", "[mixture]") {
    const MixtureModel m =
        make_mixture({{0.2, make_uniform(0.0, 1.0)}, {0.8, make_uniform(2.0, 3.0)}});
    const std::vector<double> v = sample(m, 50000, 99);
    std::size_t high = 0;
    for (double x : v) high += x > 1.5;
    CHECK(std::abs(static_cast<double>(high) / v.size() - 0.8) < 0.01);
}

TEST_CASE("affine transforms act on the law exactly", "[mixture]") {
    const MixtureModel u = make_uniform(0.0, 1.0);

    const MixtureModel shifted = transform(u, {1.0, 2.0});
    CHECK(shifted.support().lo == 2.0);
    CHECK(shifted.support().hi == 3.0);
    CHECK(shifted.cdf(2.5) == 0.5);

    const MixtureModel reflected = transform(u, {-1.0, 0.0});
    CHECK(reflected.support().lo == -1.0);
    CHECK(reflected.support().hi == 0.0);
    CHECK(std::abs(reflected.cdf(-0.25) - 0.75) < 1e-15);

    // scale*N(mu, sigma) + shift is the gaussian with transformed moments.
    const MixtureModel g = transform(make_gaussian(1.0, 2.0), {3.0, -1.0});
    const MixtureModel direct = make_gaussian(2.0, 6.0);
    for (double x : {-4.0, 0.0, 2.0, 5.0, 11.0}) {
        CHECK(std::abs(g.pdf(x) - direct.pdf(x)) < 1e-15);
        CHECK(std::abs(g.cdf(x) - direct.cdf(x)) < 1e-14);
    }

    CHECK_THROWS_AS(transform(u, {0.0, 1.0}), input_error);
}

TEST_CASE("quantile inverts the cdf", "[mixture]") {
    std::mt19937_64 rng(515);
    for (int trial = 0; trial < 10; ++trial) {
        const MixtureModel m = testsupport::random_mixture(rng);
        for (int k = 1; k < 20; ++k) {
            const double p = k / 20.0;
            CHECK(std::abs(m.cdf(m.quantile(p)) - p) < 1e-9);
        }
    }
    const MixtureModel u = make_uniform(2.0, 5.0);
    CHECK(u.quantile(0.0) == 2.0);
    CHECK(u.quantile(1.0) == 5.0);
    CHECK_THROWS_AS(u.quantile(-0.1), input_error);
    CHECK_THROWS_AS(u.quantile(1.1), input_error);
}

TEST_CASE("beta and lognormal components", "[mixture]") {
    const MixtureModel b = make_beta(2.0, 2.0);
    CHECK(std::abs(b.pdf(0.5) - 1.5) < 1e-12);
    CHECK(std::abs(b.cdf(0.5) - 0.5) < 1e-12);
    CHECK(b.support().lo == 0.0);
    CHECK(b.support().hi == 1.0);

    const MixtureModel ln = make_lognormal(0.0, 1.0);
    CHECK(std::abs(ln.cdf(1.0) - 0.5) < 1e-12);
    CHECK(std::abs(ln.pdf(1.0) - 0.3989423) < 1e-7);
    CHECK(std::abs(ln.quantile(0.5) - 1.0) < 1e-9);
}

TEST_CASE("model validation rejects bad components", "[mixture]") {
    CHECK_THROWS_AS(make_uniform(1.0, 1.0), input_error);
    CHECK_THROWS_AS(make_uniform(2.0, 1.0), input_error);
    CHECK_THROWS_AS(make_gaussian(0.0, 0.0), input_error);
    CHECK_THROWS_AS(make_gaussian(0.0, -1.0), input_error);
    CHECK_THROWS_AS(make_beta(0.0, 1.0), input_error);
    CHECK_THROWS_AS(make_lognormal(0.0, -0.5), input_error);
    CHECK_THROWS_AS(MixtureModel(std::vector<Component>{}), input_error);

    // Weights must sum to one.
    Component c;
    c.kind = ComponentKind::uniform;
    c.params = {0.0, 1.0};
    c.weight = 0.4;
    CHECK_THROWS_AS(MixtureModel({c, c}), input_error);
}

TEST_CASE("support intervals merge overlaps", "[mixture]") {
    const MixtureModel gap =
        make_mixture({{0.5, make_uniform(0.0, 1.0)}, {0.5, make_uniform(2.0, 3.0)}});
    const auto gi = gap.support_intervals();
    REQUIRE(gi.size() == 2);
    CHECK(gi[0].lo == 0.0);
    CHECK(gi[0].hi == 1.0);
    CHECK(gi[1].lo == 2.0);
    CHECK(gi[1].hi == 3.0);

    const MixtureModel joined =
        make_mixture({{0.5, make_uniform(0.0, 1.5)}, {0.5, make_uniform(1.0, 2.0)}});
    const auto ji = joined.support_intervals();
    REQUIRE(ji.size() == 1);
    CHECK(ji[0].lo == 0.0);
    CHECK(ji[0].hi == 2.0);
}

TEST_CASE("truncated support bounds the mass", "[mixture]") {
    const MixtureModel u = make_uniform(3.0, 4.0);
    const Interval tu = u.truncated_support();
    CHECK(tu.lo == 3.0);
    CHECK(tu.hi == 4.0);

    const MixtureModel g = make_gaussian(0.0, 1.0);
    const Interval tg = g.truncated_support();
    CHECK(g.cdf(tg.lo) <= 1e-11);
    CHECK(g.cdf(tg.hi) >= 1.0 - 1e-11);
    CHECK(tg.lo > -10.0);
    CHECK(tg.hi < 10.0);
}

TEST_CASE("JSON round trip preserves the law", "[mixture]") {
    const MixtureModel m = make_mixture(
        {{0.6, make_gaussian(0.5, 0.25)}, {0.4, transform(make_beta(2.0, 3.0), {2.0, 1.0})}});
    const MixtureModel back = mixture_from_json(mixture_to_json(m));
    REQUIRE(back.size() == m.size());
    for (double x : {0.2, 0.7, 1.3, 2.1, 2.9}) {
        CHECK(std::abs(back.pdf(x) - m.pdf(x)) < 1e-15);
        CHECK(std::abs(back.cdf(x) - m.cdf(x)) < 1e-15);
    }

    const std::string path = "test_mixture_roundtrip.json";
    save_mixture(m, path);
    const MixtureModel loaded = load_mixture(path);
    CHECK(std::abs(loaded.cdf(1.0) - m.cdf(1.0)) < 1e-15);
    std::remove(path.c_str());
}

TEST_CASE("JSON parse errors are input errors", "[mixture]") {
    CHECK_THROWS_AS(mixture_from_json("not json at all"), input_error);
    CHECK_THROWS_AS(mixture_from_json("{}"), input_error);
    CHECK_THROWS_AS(mixture_from_json(R"({"components": []})"), input_error);
    CHECK_THROWS_AS(
        mixture_from_json(
            R"({"components":[{"kind":"cauchy","params":[0,1],"weight":1}]})"),
        input_error);
    CHECK_THROWS_AS(
        mixture_from_json(R"({"components":[{"kind":"gaussian","weight":1}]})"),
        input_error);
}
