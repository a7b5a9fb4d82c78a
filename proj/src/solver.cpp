#include "kepler/solver.hpp"

#include <cmath>
#include <string>

#include "kepler/errors.hpp"

namespace kepler {

double newton_step(const OrbitPoint& p, double E) noexcept {
    return E - eval_f(p, E) / (1.0 - p.e() * std::cos(E));
}

int iterations_for_digits(int N) {
    if (N < 1) throw DomainError("digit count must be >= 1, got " + std::to_string(N));
    const double v = std::log2(1.0 + std::log2(kPi) + std::log2(10.0) * N);
    return static_cast<int>(std::ceil(v));
}

SolveResult solve(double e, double M_raw, SolveMode mode) {
    return solve(e, M_raw, mode, StarterProvider{thm1_starter, true});
}

SolveResult solve(double e, double M_raw, SolveMode mode, const StarterProvider& provider) {
    SolveResult result;
    result.reduction = reduce_anomaly(e, M_raw);
    const OrbitPoint p = result.reduction.canonical();
    result.starter = provider.starter(p);
    result.certified = provider.certified;

    double E = result.starter.value;
    if (const auto* digits = std::get_if<Digits>(&mode)) {
        if (digits->n < 1) throw DomainError("digit count must be >= 1");
        int n = digits->n;
        if (n > kMaxBinary64Digits) {
            n = kMaxBinary64Digits;
            result.digits_capped = true;
        }
        const int steps = iterations_for_digits(n);
        for (int i = 0; i < steps; ++i) E = newton_step(p, E);
        result.iterations = steps;
    } else {
        const double tau = std::get<ResidualTolerance>(mode).tau;
        if (!(tau > 0.0)) throw DomainError("residual tolerance must be positive");
        double previous = E;
        while (std::abs(eval_f(p, E)) > tau) {
            if (result.iterations == kResidualModeIterationCap) {
                throw ConvergenceError("Newton did not reach residual " + std::to_string(tau) +
                                       " within " +
                                       std::to_string(kResidualModeIterationCap) + " steps");
            }
            const double next = newton_step(p, E);
            ++result.iterations;
            // Stagnation (fixed point or 2-cycle) means binary64 cannot do better.
            if (next == E || next == previous) {
                E = next;
                break;
            }
            previous = E;
            E = next;
        }
    }
    result.E_canonical = E;
    result.residual = std::abs(eval_f(p, E));
    result.E = restore_anomaly(E, result.reduction);
    return result;
}

double fixed_point_baseline(const OrbitPoint& p, double E0, int n) {
    if (n < 0) throw DomainError("iteration count must be >= 0");
    double E = E0;
    for (int i = 0; i < n; ++i) E = p.M() + p.e() * std::sin(E);
    return E;
}

double bisection_oracle(const OrbitPoint& p, double tol,
                        const std::function<void(double, double)>& observer) {
    if (!(tol >= 1e-15)) throw DomainError("bisection tolerance must be >= 1e-15");
    double lo = 0.0;
    double hi = kPi;
    if (observer) observer(lo, hi);
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // adjacent doubles
        if (eval_f(p, mid) <= 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (observer) observer(lo, hi);
    }
    return 0.5 * (lo + hi);
}

}  // namespace kepler
