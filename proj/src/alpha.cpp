#include "kepler/alpha.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "kepler/errors.hpp"

namespace kepler {
namespace {

constexpr int kDirectMaxK = 20;

constexpr std::array<double, kDirectMaxK + 1> make_factorials() {
    std::array<double, kDirectMaxK + 1> f{};
    f[0] = 1.0;
    for (int k = 1; k <= kDirectMaxK; ++k) f[k] = f[k - 1] * k;
    return f;
}

// Every entry is exact in binary64 (20! < 2^62 and carries 18 factors of two).
constexpr auto kFactorial = make_factorials();

double gamma_term(double x, int k) {
    return k <= kDirectMaxK ? detail::gamma_term_direct(x, k) : detail::gamma_term_log(x, k);
}

struct ClassMax {
    double value = 0.0;
    int k = 0;
    int terms = 0;
};

ClassMax scan_parity_class(double x, int first_k) {
    ClassMax best;
    if (x == 0.0) return best;
    for (int k = first_k;; k += 2) {
        const double t = gamma_term(x, k);
        ++best.terms;
        if (t > best.value) {
            best.value = t;
            best.k = k;
        }
        if (detail::tail_is_decreasing(x, k)) break;
    }
    return best;
}

}  // namespace

namespace detail {

double gamma_term_direct(double x, int k) {
    if (k < 2 || k > kDirectMaxK) throw DomainError("direct gamma term needs 2 <= k <= 20");
    if (k == 2) return x / 2.0;
    return std::pow(x / kFactorial[k], 1.0 / (k - 1));
}

double gamma_term_log(double x, int k) noexcept {
    return std::exp((std::log(x) - std::lgamma(k + 1.0)) / (k - 1));
}

bool tail_is_decreasing(double x, int k) noexcept {
    if (k <= kDirectMaxK) return x >= kFactorial[k] / std::pow(k + 1.0, k - 1);
    return std::log(x) >= std::lgamma(k + 1.0) - (k - 1) * std::log(k + 1.0);
}

}  // namespace detail

double alpha0() noexcept { return 3.0 - 2.0 * std::sqrt(2.0); }

double beta(const OrbitPoint& p, double E_tilde) noexcept {
    return std::abs(eval_f(p, E_tilde)) / (1.0 - p.e() * std::cos(E_tilde));
}

GammaResult gamma(const OrbitPoint& p, double E_tilde) noexcept {
    const double d = 1.0 - p.e() * std::cos(E_tilde);
    const double x_even = p.e() * std::abs(std::sin(E_tilde)) / d;
    const double x_odd = p.e() * std::abs(std::cos(E_tilde)) / d;

    const ClassMax even = scan_parity_class(x_even, 2);
    const ClassMax odd = scan_parity_class(x_odd, 3);

    GammaResult r;
    r.terms_evaluated = even.terms + odd.terms;
    if (even.value > odd.value || (even.value == odd.value && even.k != 0 && even.k < odd.k)) {
        r.gamma = even.value;
        r.argmax_k = even.k;
    } else {
        r.gamma = odd.value;
        r.argmax_k = odd.k;
    }
    return r;
}

double gamma_bruteforce(const OrbitPoint& p, double E_tilde, int k_max) {
    if (k_max < 2) throw DomainError("k_max must be >= 2, got " + std::to_string(k_max));
    const double d = 1.0 - p.e() * std::cos(E_tilde);
    const double log_even = std::log(p.e() * std::abs(std::sin(E_tilde)) / d);
    const double log_odd = std::log(p.e() * std::abs(std::cos(E_tilde)) / d);

    double best = -std::numeric_limits<double>::infinity();
    for (int k = 2; k <= k_max; ++k) {
        const double lx = (k % 2 == 0) ? log_even : log_odd;
        if (std::isinf(lx)) continue;  // magnitude is zero
        const double lt = (lx - std::lgamma(k + 1.0)) / (k - 1);
        if (lt > best) best = lt;
    }
    return std::isinf(best) ? 0.0 : std::exp(best);
}

AlphaReport alpha_test(const OrbitPoint& p, double E_tilde) noexcept {
    AlphaReport r;
    r.beta = beta(p, E_tilde);
    const GammaResult g = gamma(p, E_tilde);
    r.gamma = g.gamma;
    r.gamma_argmax_k = g.argmax_k;
    r.alpha = r.beta * r.gamma;
    r.passes = r.alpha < alpha0();
    return r;
}

}  // namespace kepler
