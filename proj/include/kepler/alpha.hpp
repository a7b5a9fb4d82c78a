#pragma once

#include "kepler/core.hpp"

namespace kepler {

/// Smale's constant alpha_0 = 3 - 2 sqrt(2).
double alpha0() noexcept;

/// Newton step length |f(E)| / f'(E).
double beta(const OrbitPoint& p, double E_tilde) noexcept;

struct GammaResult {
    double gamma = 0.0;
    int argmax_k = 0;  // smallest k attaining the supremum, 0 when gamma == 0
    int terms_evaluated = 0;
};

/// gamma = sup_{k>=2} (|f^(k)(E)| / (k! f'(E)))^(1/(k-1)), computed exactly.
///
/// The higher derivatives of f only take the magnitudes e|sin E| (even k) and
/// e|cos E| (odd k). Each parity class is scanned upward and stops at the first
/// k where x >= k!/(k+1)^(k-1); from there on the full sequence
/// (x/k!)^(1/(k-1)) is decreasing, so no later term can exceed the running max.
GammaResult gamma(const OrbitPoint& p, double E_tilde) noexcept;

/// Same supremum truncated at k_max, every term evaluated in log domain.
/// Independent check for gamma(). Throws DomainError if k_max < 2.
double gamma_bruteforce(const OrbitPoint& p, double E_tilde, int k_max);

struct AlphaReport {
    double beta = 0.0;
    double gamma = 0.0;
    double alpha = 0.0;
    bool passes = false;  // alpha < alpha0(), strict
    int gamma_argmax_k = 0;
};

AlphaReport alpha_test(const OrbitPoint& p, double E_tilde) noexcept;

namespace detail {

/// (x / k!)^(1/(k-1)) via pow and an exact factorial, valid for 2 <= k <= 20.
double gamma_term_direct(double x, int k);
/// Same quantity through lgamma; valid for every k >= 2.
double gamma_term_log(double x, int k) noexcept;
/// True when x >= k!/(k+1)^(k-1), i.e. the tail from k on is decreasing.
bool tail_is_decreasing(double x, int k) noexcept;

}  // namespace detail
}  // namespace kepler
