#include <cmath>

#include "doctest.h"
#include "kepler/alpha.hpp"
#include "kepler/errors.hpp"
#include "kepler/sampling.hpp"
#include "kepler/solver.hpp"

using namespace kepler;

TEST_CASE("alpha0 is 3 - 2 sqrt(2)") {
    CHECK(std::abs(alpha0() - 0.1715728752538099024) < 1e-15);
    CHECK(alpha0() < 0.1715729);
    CHECK(6 * alpha0() > 1.0);
}

TEST_CASE("beta examples") {
    const OrbitPoint p(0.5, 0.5);
    const double root = bisection_oracle(p, 1e-15);
    CHECK(beta(p, root) < 1e-15);
    CHECK(beta(OrbitPoint(0.0, 1.0), 2.0) == 1.0);
    CHECK(beta(OrbitPoint(0.5, 1.0), 1.0) == doctest::Approx(0.57646935265479914837).epsilon(1e-14));
}

TEST_CASE("gamma examples") {
    const auto zero = gamma(OrbitPoint(0.0, 1.0), 0.7);
    CHECK(zero.gamma == 0.0);
    CHECK(zero.argmax_k == 0);

    // At E = 0 only odd k contribute; for e/(1-e) = 3/8 the supremum is sqrt(1/16).
    const auto at_zero = gamma(OrbitPoint(3.0 / 11.0, 0.2), 0.0);
    CHECK(at_zero.gamma == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(at_zero.argmax_k == 3);

    const auto g = gamma(OrbitPoint(0.5, 1.0), 1.0);
    CHECK(g.gamma == doctest::Approx(0.28852824043700438056).epsilon(1e-14));
    CHECK(g.argmax_k == 4);

    const auto corner = gamma(OrbitPoint(0.99, 0.01), 0.5);
    CHECK(corner.gamma == doctest::Approx(1.8089011193451292067).epsilon(1e-14));
    CHECK(corner.argmax_k == 2);
}

TEST_CASE("gamma_bruteforce examples and errors") {
    CHECK(gamma_bruteforce(OrbitPoint(0.0, 1.0), 1.0, 50) == 0.0);
    const OrbitPoint a(0.5, 1.0);
    CHECK(std::abs(gamma_bruteforce(a, 1.0, 200) - gamma(a, 1.0).gamma) <= 1e-12);
    const OrbitPoint b(0.99, 0.01);
    CHECK(std::abs(gamma_bruteforce(b, 0.5, 200) - gamma(b, 0.5).gamma) <= 1e-12);
    CHECK_THROWS_AS(gamma_bruteforce(a, 1.0, 1), DomainError);
}

TEST_CASE("alpha_test examples") {
    const OrbitPoint p(0.5, 0.5);
    const double root = bisection_oracle(p, 1e-15);
    CHECK(alpha_test(p, root).passes);

    CHECK(alpha_test(OrbitPoint(0.9, 1.0), 2 * kPi / 3).passes);

    const auto r = alpha_test(OrbitPoint(0.5, 1.0), 1.0);
    CHECK(r.alpha == doctest::Approx(0.1663276879873481582).epsilon(1e-14));
    CHECK(r.passes);
    CHECK(r.alpha == r.beta * r.gamma);
}

TEST_CASE("exact zero of f gives beta = 0 and passes") {
    // e = 0, E = M is an exact root in binary64.
    const auto r = alpha_test(OrbitPoint(0.0, 1.25), 1.25);
    CHECK(r.beta == 0.0);
    CHECK(r.alpha == 0.0);
    CHECK(r.passes);
    // e > 0, E = pi with M = pi: f(pi) is 0 up to sin(pi) rounding.
    CHECK(alpha_test(OrbitPoint(0.7, kPi), kPi).passes);
}

TEST_CASE("direct and log-domain terms agree") {
    const CounterRng rng(21);
    for (std::uint64_t n = 0; n < 2000; ++n) {
        const double x = std::exp(rng.uniform(-40.0, 10.0, n));
        for (int k = 2; k <= 20; ++k) {
            const double d = detail::gamma_term_direct(x, k);
            const double l = detail::gamma_term_log(x, k);
            CHECK(std::abs(d - l) <= 1e-13 * std::max(1.0, d));
        }
    }
    CHECK_THROWS_AS(detail::gamma_term_direct(1.0, 21), DomainError);
}

TEST_CASE("stopping threshold k!/(k+1)^(k-1) is decreasing") {
    // Binary search the threshold through tail_is_decreasing and check monotonicity.
    double previous = INFINITY;
    for (int k = 2; k <= 60; ++k) {
        double lo = 0.0;
        double hi = 1.0;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            (detail::tail_is_decreasing(mid, k) ? hi : lo) = mid;
        }
        CHECK(hi < previous);
        previous = hi;
    }
}

TEST_CASE("gamma scan terminates quickly even for tiny magnitudes") {
    for (double x_scale : {1e-300, 1e-200, 1e-100, 1e-20, 1e-5}) {
        // e = x_scale, E = pi/4 makes both magnitudes ~ x_scale.
        const auto g = gamma(OrbitPoint(x_scale, 0.0), kPi / 4);
        CAPTURE(x_scale);
        CHECK(g.terms_evaluated <= 1000);
        CHECK(g.gamma > 0.0);
    }
}

TEST_CASE("gamma matches the brute-force oracle on random inputs") {
    const CounterRng rng(2024);
    for (std::uint64_t n = 0; n < 10000; ++n) {
        const OrbitPoint p(rng.uniform(0.0, 0.9999, n, 0), rng.uniform(0.0, kPi, n, 1));
        const double E = rng.uniform(0.0, kPi, n, 2);
        const double g = gamma(p, E).gamma;
        CHECK(std::abs(g - gamma_bruteforce(p, E, 200)) <= 1e-12 * std::max(1.0, g));
    }
}

TEST_CASE("gamma depends only on derivative magnitudes") {
    const CounterRng rng(8);
    for (std::uint64_t n = 0; n < 1000; ++n) {
        const OrbitPoint p(rng.uniform(0.0, 0.9999, n, 0), rng.uniform(0.0, kPi, n, 1));
        const double E = rng.uniform(0.0, kPi, n, 2);
        CHECK(std::abs(gamma(p, E).gamma - gamma(p, -E).gamma) <= 1e-15 * std::max(1.0, gamma(p, E).gamma));
    }
}

TEST_CASE("report invariants") {
    const CounterRng rng(77);
    for (std::uint64_t n = 0; n < 5000; ++n) {
        const OrbitPoint p(rng.uniform(0.0, 0.9999, n, 0), rng.uniform(0.0, kPi, n, 1));
        const auto r = alpha_test(p, rng.uniform(-1.0, 4.0, n, 2));
        CHECK(r.alpha == r.beta * r.gamma);
        CHECK(r.passes == (r.alpha < alpha0()));
        CHECK(r.beta >= 0.0);
        CHECK(r.gamma >= 0.0);
        if (r.gamma > 0.0) CHECK(r.gamma_argmax_k >= 2);
    }
}
