#include <cmath>
#include <vector>

#include "doctest.h"
#include "kepler/errors.hpp"
#include "kepler/sampling.hpp"
#include "kepler/solver.hpp"

using namespace kepler;

TEST_CASE("newton_step example") {
    CHECK(newton_step(OrbitPoint(0.5, 1.0), 1.0) ==
          doctest::Approx(1.5764693526547991484).epsilon(1e-15));
    CHECK(newton_step(OrbitPoint(0.0, 2.0), 0.3) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("iterations_for_digits") {
    CHECK(iterations_for_digits(1) == 3);
    CHECK(iterations_for_digits(15) == 6);
    CHECK(iterations_for_digits(307) == 10);
    CHECK_THROWS_AS(iterations_for_digits(0), DomainError);
    int prev = 0;
    for (int n = 1; n <= 400; ++n) {
        const int k = iterations_for_digits(n);
        CHECK(k >= prev);
        CHECK(std::ldexp(1.0, k) >= 1 + std::log2(kPi) + n * std::log2(10.0) - 1e-9);
        prev = k;
    }
}

TEST_CASE("solve examples") {
    const auto a = solve(0.0, kTwoPi + 1.0, ResidualTolerance{1e-14});
    CHECK(a.E == doctest::Approx(kTwoPi + 1.0).epsilon(1e-15));
    CHECK(a.iterations <= 1);
    CHECK(a.certified);

    const auto b = solve(0.9, 0.5, ResidualTolerance{1e-14});
    CHECK(std::abs(b.E - 1.3844127202021625769) < 1e-12);
    CHECK(b.iterations <= 10);
    CHECK(b.residual <= 1e-14);

    const auto c = solve(0.5, kPi);
    CHECK(c.E == doctest::Approx(kPi).epsilon(1e-15));

    const auto d = solve(0.5, 1.0, Digits{15});
    CHECK(std::abs(d.E - 1.4987011335178483141) < 1e-14);
    CHECK(d.iterations == iterations_for_digits(15));
    CHECK_FALSE(d.digits_capped);
}

TEST_CASE("solve handles negative and reflected anomalies") {
    const auto r = solve(0.5, -1.0);
    CHECK(std::abs(r.E + 1.4987011335178483141) < 1e-13);
    const auto s = solve(0.5, kTwoPi - 1.0);
    CHECK(std::abs(s.E - (kTwoPi - 1.4987011335178483141)) < 1e-13);
    CHECK(s.reduction.reflected);
}

TEST_CASE("digits beyond binary64 are capped") {
    const auto r = solve(0.5, 1.0, Digits{30});
    CHECK(r.digits_capped);
    CHECK(r.iterations == iterations_for_digits(kMaxBinary64Digits));
    CHECK_THROWS_AS(solve(0.5, 1.0, Digits{0}), DomainError);
}

TEST_CASE("solve domain errors") {
    CHECK_THROWS_AS(solve(1.0, 1.0), EccentricityOneError);
    CHECK_THROWS_AS(solve(-0.1, 1.0), DomainError);
    CHECK_THROWS_AS(solve(0.5, std::nan("")), DomainError);
}

TEST_CASE("custom provider is not certified") {
    StarterProvider prov{[](const OrbitPoint& p) {
        return StarterValue{p.M(), StarterKind::S1, StarterBranch::Single};
    }, false};
    const auto r = solve(0.2, 1.0, ResidualTolerance{1e-14}, prov);
    CHECK_FALSE(r.certified);
    CHECK(std::abs(r.E - 1.1853242038613385538) < 1e-13);
}

TEST_CASE("fixed-point baseline examples") {
    const OrbitPoint a(0.2, 1.0);
    const double ea = std::abs(fixed_point_baseline(a, 1.0, 5) - 1.1853242038613385538);
    CHECK(ea <= std::pow(0.2, 5) * std::abs(1.0 - 1.1853242038613385538));

    const OrbitPoint b(0.9, 0.1);
    const double eb = std::abs(fixed_point_baseline(b, 0.1, 20) - 0.63084352756315343106);
    CHECK(eb == doctest::Approx(0.0019235057598226897851).epsilon(1e-6));
    CHECK(eb > 1e-3);
}

TEST_CASE("bisection oracle") {
    CHECK(bisection_oracle(OrbitPoint(0.99, 0.001), 1e-15) ==
          doctest::Approx(0.088548596330182013019).epsilon(1e-13));
    CHECK(bisection_oracle(OrbitPoint(0.5, kPi / 2), 1e-15) ==
          doctest::Approx(2.0209799380897701923).epsilon(1e-14));
    CHECK_THROWS_AS(bisection_oracle(OrbitPoint(0.5, 1.0), 1e-16), DomainError);

    const OrbitPoint p(0.7, 2.0);
    int brackets = 0;
    bisection_oracle(p, 1e-12, [&](double lo, double hi) {
        ++brackets;
        CHECK(lo <= hi);
        CHECK(eval_f(p, lo) <= 0.0);
        CHECK(eval_f(p, hi) >= 0.0);
    });
    CHECK(brackets > 30);
}

TEST_CASE("Newton from the certified starter contracts quadratically") {
    const CounterRng rng(5);
    for (std::uint64_t n = 0; n < 1000; ++n) {
        const OrbitPoint p(rng.uniform(0.0, 0.999, n, 0), rng.uniform(0.0, kPi, n, 1));
        const double root = bisection_oracle(p, 1e-15);
        double E = thm1_starter(p).value;
        const double err0 = std::abs(E - root);
        for (int k = 1; k <= 4; ++k) {
            E = newton_step(p, E);
            CHECK(std::abs(E - root) <= std::pow(0.5, std::pow(2.0, k) - 1) * err0 + 1e-12);
        }
    }
}

TEST_CASE("fixed-point iteration contracts at rate e") {
    const CounterRng rng(6);
    for (std::uint64_t n = 0; n < 500; ++n) {
        const OrbitPoint p(rng.uniform(0.0, 0.999, n, 0), rng.uniform(0.0, kPi, n, 1));
        const double root = bisection_oracle(p, 1e-15);
        const double err0 = std::abs(p.M() - root);
        for (int k = 0; k < 20; ++k) {
            const double err = std::abs(fixed_point_baseline(p, p.M(), k) - root);
            CHECK(err <= std::pow(p.e(), k) * err0 + 1e-14);
        }
    }
}

TEST_CASE("solve agrees with bisection across the domain") {
    const CounterRng rng(9);
    for (std::uint64_t n = 0; n < 5000; ++n) {
        const double e = rng.uniform(0.0, 0.9999, n, 0);
        const double M = rng.uniform(-20.0, 20.0, n, 1);
        const auto r = solve(e, M);
        CHECK(r.residual <= 1e-14);
        CHECK(std::abs(r.E - e * std::sin(r.E) - M) <= 1e-12 * (1 + std::abs(M)));
        const double root = bisection_oracle(OrbitPoint(r.reduction.e, r.reduction.M), 1e-15);
        CHECK(std::abs(r.E_canonical - root) < 1e-12);
    }
}
