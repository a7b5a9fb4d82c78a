#include "kepler/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kepler/errors.hpp"

namespace kepler {

OrbitPoint::OrbitPoint(double e, double M) : e_(e), M_(M) {
    if (e == 1.0) throw EccentricityOneError();
    if (!(e >= 0.0 && e < 1.0)) {
        throw DomainError("eccentricity must lie in [0, 1), got " + std::to_string(e));
    }
    if (!(M >= 0.0 && M <= kPi)) {
        throw DomainError("canonical mean anomaly must lie in [0, pi], got " + std::to_string(M));
    }
}

EllipseGeometry::EllipseGeometry(double a, double b) : a_(a), b_(b) {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("semi-major axis must be positive");
    if (!(b > 0.0 && b <= a)) throw DomainError("semi-minor axis must lie in (0, a]");
}

EllipseGeometry EllipseGeometry::from_eccentricity(double a, double e) {
    if (e == 1.0) throw EccentricityOneError();
    if (!(e >= 0.0 && e < 1.0)) throw DomainError("eccentricity must lie in [0, 1)");
    return EllipseGeometry(a, a * std::sqrt(1.0 - e * e));
}

double eval_f(const OrbitPoint& p, double E) noexcept {
    return E - p.e() * std::sin(E) - p.M();
}

double eval_f_derivative(const OrbitPoint& p, double E, int k) {
    if (k <= 0) throw DomainError("derivative order must be >= 1, got " + std::to_string(k));
    const double e = p.e();
    if (k == 1) return 1.0 - e * std::cos(E);
    switch ((k - 2) % 4) {
        case 0: return e * std::sin(E);
        case 1: return e * std::cos(E);
        case 2: return -e * std::sin(E);
        default: return -e * std::cos(E);
    }
}

AnomalyReduction reduce_anomaly(double e, double M_raw) {
    if (!std::isfinite(M_raw)) throw DomainError("mean anomaly must be finite");
    if (e == 1.0) throw EccentricityOneError();
    if (!(e >= 0.0 && e < 1.0)) throw DomainError("eccentricity must lie in [0, 1)");

    double turns = std::floor(M_raw / kTwoPi);
    double principal = M_raw - turns * kTwoPi;
    // floor() of a rounded quotient can be off by one near multiples of 2pi.
    if (principal >= kTwoPi) {
        principal -= kTwoPi;
        turns += 1.0;
    } else if (principal < 0.0) {
        principal += kTwoPi;
        turns -= 1.0;
    }

    AnomalyReduction r;
    r.e = e;
    r.revolutions = static_cast<long long>(turns);
    if (principal > kPi) {
        r.reflected = true;
        r.M = kTwoPi - principal;
    } else {
        r.M = principal;
    }
    // Guard the last ulp so the canonical point always validates.
    r.M = std::clamp(r.M, 0.0, kPi);
    return r;
}

double restore_anomaly(double E_canonical, const AnomalyReduction& r) noexcept {
    const double turns = static_cast<double>(r.revolutions);
    if (r.reflected) return kTwoPi * (turns + 1.0) - E_canonical;
    return kTwoPi * turns + E_canonical;
}

std::pair<double, double> eccentric_to_position(const EllipseGeometry& g, double E) noexcept {
    return {g.a() * std::cos(E), g.b() * std::sin(E)};
}

}  // namespace kepler
