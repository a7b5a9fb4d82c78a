#pragma once

#include <functional>
#include <variant>

#include "kepler/core.hpp"
#include "kepler/starters.hpp"

namespace kepler {

/// Largest digit count binary64 can actually deliver.
inline constexpr int kMaxBinary64Digits = 15;
/// Safety cap for residual-mode iteration; never reached from a certified starter.
inline constexpr int kResidualModeIterationCap = 50;

struct Digits {
    int n = 15;
};

struct ResidualTolerance {
    double tau = 1e-14;
};

using SolveMode = std::variant<Digits, ResidualTolerance>;

struct SolveResult {
    double E = 0.0;           // eccentric anomaly congruent with the raw mean anomaly
    double E_canonical = 0.0; // solution of the reduced problem, in [0, pi]
    int iterations = 0;
    double residual = 0.0;    // |f(E_canonical)| on the canonical point
    StarterValue starter;
    bool certified = false;
    bool digits_capped = false;  // requested digits exceeded kMaxBinary64Digits
    AnomalyReduction reduction;
};

/// Supplies the starting value for a reduced problem.
struct StarterProvider {
    std::function<StarterValue(const OrbitPoint&)> starter;
    bool certified = false;
};

/// E - f(E)/f'(E).
double newton_step(const OrbitPoint& p, double E) noexcept;

/// ceil(log2(1 + log2(pi) + N log2(10))): Newton steps from a certified starter
/// (initial error <= pi) that reach 10^-N. Throws DomainError for N < 1.
int iterations_for_digits(int N);

/// Solves E - e sin E = M_raw for any finite M_raw using the piecewise certified starter.
SolveResult solve(double e, double M_raw, SolveMode mode = ResidualTolerance{});

/// As solve(), with a caller-chosen starter.
SolveResult solve(double e, double M_raw, SolveMode mode, const StarterProvider& provider);

/// n steps of E <- M + e sin E.
double fixed_point_baseline(const OrbitPoint& p, double E0, int n);

/// Plain bisection on [0, pi] until the bracket is narrower than tol (>= 1e-15).
/// The observer, if set, sees every bracket (lo, hi) including the initial one.
double bisection_oracle(const OrbitPoint& p, double tol,
                        const std::function<void(double lo, double hi)>& observer = {});

}  // namespace kepler
