#pragma once

#include <numbers>
#include <utility>

namespace kepler {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A Kepler problem instance (e, M) in the canonical domain [0,1) x [0,pi].
class OrbitPoint {
public:
    /// Throws EccentricityOneError for e == 1, DomainError for anything else
    /// outside [0,1) x [0,pi] (including NaN).
    OrbitPoint(double e, double M);

    double e() const noexcept { return e_; }
    double M() const noexcept { return M_; }

    friend bool operator==(const OrbitPoint&, const OrbitPoint&) = default;

private:
    double e_;
    double M_;
};

/// Result of folding an arbitrary mean anomaly into [0, pi].
struct AnomalyReduction {
    double e = 0.0;
    double M = 0.0;          // canonical mean anomaly in [0, pi]
    bool reflected = false;  // principal angle was in (pi, 2pi)
    long long revolutions = 0;

    OrbitPoint canonical() const { return OrbitPoint(e, M); }
};

/// Semi-axes of the orbital ellipse.
class EllipseGeometry {
public:
    EllipseGeometry(double a, double b);
    static EllipseGeometry from_eccentricity(double a, double e);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }

private:
    double a_;
    double b_;
};

/// f(E) = E - e sin(E) - M.
double eval_f(const OrbitPoint& p, double E) noexcept;

/// k-th derivative of f at E, k >= 1. Signs follow the analytic cycle
/// f'' = e sin E, f''' = e cos E, f'''' = -e sin E, f^(5) = -e cos E, ...
double eval_f_derivative(const OrbitPoint& p, double E, int k);

/// Reduces a finite mean anomaly to [0, pi] using periodicity and the
/// reflection M -> 2pi - M. M_raw = 2pi k maps to M = 0.
AnomalyReduction reduce_anomaly(double e, double M_raw);

/// Inverse of reduce_anomaly applied to a canonical eccentric anomaly.
double restore_anomaly(double E_canonical, const AnomalyReduction& r) noexcept;

/// Planar position (a cos E, b sin E) relative to the ellipse centre.
std::pair<double, double> eccentric_to_position(const EllipseGeometry& g, double E) noexcept;

}  // namespace kepler
