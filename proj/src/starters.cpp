#include "kepler/starters.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "kepler/alpha.hpp"
#include "kepler/errors.hpp"

namespace kepler {
namespace {

constexpr double kThreeElevenths = 3.0 / 11.0;
constexpr double kThreeFifths = 3.0 / 5.0;

struct KindName {
    StarterKind kind;
    std::string_view name;
};

constexpr std::array<KindName, 17> kKindNames{{
    {StarterKind::S1, "s1"},
    {StarterKind::S2, "s2"},
    {StarterKind::S3, "s3"},
    {StarterKind::S4, "s4"},
    {StarterKind::S5, "s5"},
    {StarterKind::S6, "s6"},
    {StarterKind::S7, "s7"},
    {StarterKind::S8, "s8"},
    {StarterKind::S9, "s9"},
    {StarterKind::S10, "s10"},
    {StarterKind::Zero, "zero"},
    {StarterKind::Pi, "pi"},
    {StarterKind::TwoPiOver3, "two-pi-over-3"},
    {StarterKind::PiOver2, "pi-over-2"},
    {StarterKind::MOver1MinusE, "m-over-1-minus-e"},
    {StarterKind::CubeRootCorner, "cube-root"},
    {StarterKind::Thm1, "thm1"},
}};

struct RegionName {
    RegionId id;
    std::string_view name;
};

constexpr std::array<RegionName, 15> kRegionNames{{
    {RegionId::R1, "r1"},
    {RegionId::R2, "r2"},
    {RegionId::R3, "r3"},
    {RegionId::R4, "r4"},
    {RegionId::R5, "r5"},
    {RegionId::R6, "r6"},
    {RegionId::R7, "r7"},
    {RegionId::ThmEM, "thm-em"},
    {RegionId::ThmE2pi3, "thm-e2pi3"},
    {RegionId::ThmEpi2, "thm-epi2"},
    {RegionId::Thm1BranchM, "thm1-branch-m"},
    {RegionId::Thm1BranchTwoPiOver3, "thm1-branch-two-pi-over-3"},
    {RegionId::Thm1BranchPiOver2, "thm1-branch-pi-over-2"},
    {RegionId::Thm1BranchMOver1MinusE, "thm1-branch-m-over-1-minus-e"},
    {RegionId::Thm1BranchCubeRoot, "thm1-branch-cube-root"},
}};

bool is_classical(StarterKind kind) {
    return kind >= StarterKind::S1 && kind <= StarterKind::S10;
}

// Table 1, S10: s - q/s with r = 3M/e, q = 2(1-e)/e, s = (sqrt(r^2 + q^3) + r)^(1/3).
double cardano_s10(double e, double M) {
    if (e == 0.0) throw DomainError("S10 is undefined at e = 0");
    const double r = 3.0 * M / e;
    const double q = 2.0 * (1.0 - e) / e;
    const double s = std::cbrt(std::sqrt(r * r + q * q * q) + r);
    const double value = s - q / s;
    if (!std::isfinite(value)) throw DomainError("S10 overflows for e = " + std::to_string(e));
    return value;
}

double s3(double e, double M) { return M + e * std::sin(M) * (1.0 + e * std::cos(M)); }
double s4(double e, double M) { return M + e; }
double s6(double e, double M) { return M + e * (kPi - M) / (1.0 + e); }

// Raw conditions of the piecewise branches.
bool branch_m(double e, double M) { return e <= 0.5 || M >= 2.0 * kPi / 3.0; }
bool branch_two_pi_over_3(double e, double M) {
    return e >= 0.5 && M >= kPi / 4.0 && M <= 2.0 * kPi / 3.0;
}
bool branch_pi_over_2(double e, double M) { return e >= 0.5 && M >= kPi / 7.0 && M <= kPi / 4.0; }
bool branch_m_over_1_minus_e(double e, double M) {
    return e >= 0.5 && M <= kPi / 7.0 && M < m_over_1_minus_e_bound(e);
}

}  // namespace

std::string_view to_string(StarterKind kind) noexcept {
    if (kind == StarterKind::Table) return "table";
    for (const auto& kn : kKindNames) {
        if (kn.kind == kind) return kn.name;
    }
    return "?";
}

std::string_view to_string(StarterBranch branch) noexcept {
    switch (branch) {
        case StarterBranch::Single: return "single";
        case StarterBranch::M: return "M";
        case StarterBranch::TwoPiOver3: return "two-pi-over-3";
        case StarterBranch::PiOver2: return "pi-over-2";
        case StarterBranch::MOver1MinusE: return "m-over-1-minus-e";
        case StarterBranch::CubeRoot: return "cube-root";
    }
    return "?";
}

std::string_view to_string(RegionId region) noexcept {
    for (const auto& rn : kRegionNames) {
        if (rn.id == region) return rn.name;
    }
    return "?";
}

std::optional<StarterKind> parse_starter_kind(std::string_view name) noexcept {
    for (const auto& kn : kKindNames) {
        if (kn.name == name) return kn.kind;
    }
    return std::nullopt;
}

std::optional<RegionId> parse_region_id(std::string_view name) noexcept {
    for (const auto& rn : kRegionNames) {
        if (rn.name == name) return rn.id;
    }
    return std::nullopt;
}

const std::vector<StarterKind>& all_starter_kinds() {
    static const std::vector<StarterKind> kinds = [] {
        std::vector<StarterKind> v;
        for (const auto& kn : kKindNames) v.push_back(kn.kind);
        return v;
    }();
    return kinds;
}

const std::vector<RegionId>& theorem_regions() {
    static const std::vector<RegionId> regions{
        RegionId::R1, RegionId::R2, RegionId::R3, RegionId::R4, RegionId::R5,
        RegionId::R6, RegionId::R7, RegionId::ThmEM, RegionId::ThmE2pi3, RegionId::ThmEpi2,
    };
    return regions;
}

double cube_root_corner(double e, double M) {
    if (!(e > 0.0)) throw DomainError("cube-root starter needs e > 0");
    if (!(M > 0.0)) throw DomainError("cube-root starter needs M > 0");
    const double c = std::cbrt(6.0 * M * e * e);
    return c / e - 2.0 * (1.0 - e) / c;
}

double m_over_1_minus_e_bound(double e) {
    return std::pow(12.0 * alpha0(), 0.25) * std::pow(1.0 - e, 1.5) / std::sqrt(e);
}

StarterValue classical_starter(StarterKind kind, const OrbitPoint& p) {
    if (!is_classical(kind)) {
        throw DomainError("not a Table 1 starter: " + std::string(to_string(kind)));
    }
    const double e = p.e();
    const double M = p.M();
    double v = 0.0;
    switch (kind) {
        case StarterKind::S1: v = M; break;
        case StarterKind::S2: v = M + e * std::sin(M); break;
        case StarterKind::S3: v = s3(e, M); break;
        case StarterKind::S4: v = s4(e, M); break;
        case StarterKind::S5:
            v = M + e * std::sin(M) / (1.0 - std::sin(M + e) + std::sin(M));
            break;
        case StarterKind::S6: v = s6(e, M); break;
        case StarterKind::S7: v = std::min({M / (1.0 - e), s4(e, M), s6(e, M)}); break;
        case StarterKind::S8: {
            const double base = s3(e, M);
            v = base + std::pow(e, 4) * (kPi - base) / (20.0 * kPi);
            break;
        }
        case StarterKind::S9:
            v = M + e * std::sin(M) / std::sqrt(1.0 - 2.0 * e * std::cos(M) + e * e);
            break;
        case StarterKind::S10: v = cardano_s10(e, M); break;
        default: break;
    }
    return {v, kind, StarterBranch::Single};
}

StarterValue analytic_starter(StarterKind kind, const OrbitPoint& p) {
    double v = 0.0;
    switch (kind) {
        case StarterKind::Zero: v = 0.0; break;
        case StarterKind::Pi: v = kPi; break;
        case StarterKind::TwoPiOver3: v = 2.0 * kPi / 3.0; break;
        case StarterKind::PiOver2: v = kPi / 2.0; break;
        case StarterKind::MOver1MinusE: v = p.M() / (1.0 - p.e()); break;
        case StarterKind::CubeRootCorner: v = cube_root_corner(p.e(), p.M()); break;
        default:
            throw DomainError("not an analytic starter: " + std::string(to_string(kind)));
    }
    return {v, kind, StarterBranch::Single};
}

StarterValue thm1_starter(const OrbitPoint& p) {
    const double e = p.e();
    const double M = p.M();
    StarterValue sv;
    sv.kind = StarterKind::Thm1;
    if (branch_m(e, M)) {
        sv.value = M;
        sv.branch = StarterBranch::M;
    } else if (branch_two_pi_over_3(e, M)) {
        sv.value = 2.0 * kPi / 3.0;
        sv.branch = StarterBranch::TwoPiOver3;
    } else if (branch_pi_over_2(e, M)) {
        sv.value = kPi / 2.0;
        sv.branch = StarterBranch::PiOver2;
    } else if (branch_m_over_1_minus_e(e, M)) {
        sv.value = M / (1.0 - e);
        sv.branch = StarterBranch::MOver1MinusE;
    } else {
        // M = 0 always satisfies branch 4 because its bound is positive for e < 1.
        if (M == 0.0) throw std::logic_error("cube-root branch reached with M = 0");
        sv.value = cube_root_corner(e, M);
        sv.branch = StarterBranch::CubeRoot;
    }
    return sv;
}

StarterValue evaluate_starter(StarterKind kind, const OrbitPoint& p) {
    if (kind == StarterKind::Thm1) return thm1_starter(p);
    if (is_classical(kind)) return classical_starter(kind, p);
    if (kind == StarterKind::Table) throw DomainError("table starter needs a LookupTable");
    return analytic_starter(kind, p);
}

bool in_region(RegionId region, const OrbitPoint& p) {
    const double e = p.e();
    const double M = p.M();
    const double a0 = alpha0();
    const double sqrt6 = std::sqrt(6.0);
    switch (region) {
        case RegionId::R1:
            return M <= 4.0 * a0 * (1.0 - e) && e <= kThreeElevenths;
        case RegionId::R2:
            return e >= kThreeElevenths &&
                   M <= sqrt6 * a0 * std::pow(1.0 - e, 1.5) / std::sqrt(e);
        case RegionId::R3:
            return e <= kThreeFifths && kPi - 4.0 * a0 * (1.0 + e) < M;
        case RegionId::R4:
            return e >= kThreeFifths &&
                   kPi - sqrt6 * a0 * std::pow(1.0 + e, 1.5) / std::sqrt(e) < M;
        case RegionId::ThmEM:
            return e <= 0.5 || M >= 2.0 * kPi / 3.0 || in_region(RegionId::R2, p);
        case RegionId::R5: {
            if (e > kThreeElevenths) return false;
            if (e == 0.0) return true;  // both bounds are +infinity
            const double b4 = m_over_1_minus_e_bound(e);
            const double b3 = std::cbrt(24.0 * a0) * std::pow(1.0 - e, 4.0 / 3.0) / std::cbrt(e);
            return M < std::min(b4, b3);
        }
        case RegionId::R6:
            return e >= kThreeElevenths && M < m_over_1_minus_e_bound(e);
        case RegionId::R7: {
            if (e < kThreeElevenths) return false;
            const double lower =
                8.0 * std::pow(1.0 - e, 1.5) / (27.0 * sqrt6 * a0 * std::sqrt(e));
            return lower < M && M <= kPi / 7.0;
        }
        case RegionId::ThmE2pi3:
            return M >= kPi / 4.0 && M <= 2.0 * kPi / 3.0 && e >= 0.5;
        case RegionId::ThmEpi2:
            return M >= kPi / 7.0 && M <= kPi / 4.0 && e >= 0.5;
        case RegionId::Thm1BranchM: return branch_m(e, M);
        case RegionId::Thm1BranchTwoPiOver3: return branch_two_pi_over_3(e, M);
        case RegionId::Thm1BranchPiOver2: return branch_pi_over_2(e, M);
        case RegionId::Thm1BranchMOver1MinusE: return branch_m_over_1_minus_e(e, M);
        case RegionId::Thm1BranchCubeRoot:
            return !branch_m(e, M) && !branch_two_pi_over_3(e, M) && !branch_pi_over_2(e, M) &&
                   !branch_m_over_1_minus_e(e, M);
    }
    return false;
}

StarterKind starter_for_region(RegionId region) {
    switch (region) {
        case RegionId::R1:
        case RegionId::R2: return StarterKind::Zero;
        case RegionId::R3:
        case RegionId::R4: return StarterKind::Pi;
        case RegionId::ThmEM:
        case RegionId::Thm1BranchM: return StarterKind::S1;
        case RegionId::R5:
        case RegionId::R6:
        case RegionId::Thm1BranchMOver1MinusE: return StarterKind::MOver1MinusE;
        case RegionId::R7:
        case RegionId::Thm1BranchCubeRoot: return StarterKind::CubeRootCorner;
        case RegionId::ThmE2pi3:
        case RegionId::Thm1BranchTwoPiOver3: return StarterKind::TwoPiOver3;
        case RegionId::ThmEpi2:
        case RegionId::Thm1BranchPiOver2: return StarterKind::PiOver2;
    }
    throw DomainError("unknown region");
}

ContainmentReport containment_checks(long long samples_per_axis) {
    if (samples_per_axis < 2) throw DomainError("containment_checks needs >= 2 samples per axis");
    ContainmentReport report;
    const double a0 = alpha0();
    report.constant_inequality =
        std::pow(12.0 * a0, 0.25) > 8.0 / (27.0 * std::sqrt(6.0) * a0);
    report.holds = report.constant_inequality;

    const long long n = samples_per_axis;
    auto lattice = [&](double e_lo, double e_hi, bool e_hi_open, double m_hi, auto&& check) {
        for (long long i = 0; i < n; ++i) {
            const double t = e_hi_open ? static_cast<double>(i) / n
                                       : static_cast<double>(i) / (n - 1);
            const double e = e_lo + (e_hi - e_lo) * t;
            for (long long j = 0; j < n; ++j) {
                const double M = m_hi * static_cast<double>(j) / (n - 1);
                check(OrbitPoint(e, M));
                ++report.samples;
            }
        }
    };
    auto fail = [&](std::string what, const OrbitPoint& p) {
        report.holds = false;
        if (report.counterexamples.size() < 32) {
            report.counterexamples.push_back({std::move(what), p.e(), p.M()});
        }
    };

    lattice(0.0, kThreeElevenths, false, 4.0 * a0, [&](const OrbitPoint& p) {
        if (in_region(RegionId::R1, p) && !in_region(RegionId::R5, p)) fail("R1 not in R5", p);
    });
    const double r2_m_max = std::sqrt(6.0) * a0 * std::pow(1.0 - kThreeElevenths, 1.5) /
                            std::sqrt(kThreeElevenths);
    lattice(kThreeElevenths, 1.0, true, r2_m_max, [&](const OrbitPoint& p) {
        if (in_region(RegionId::R2, p) && !in_region(RegionId::R6, p)) fail("R2 not in R6", p);
    });
    lattice(0.5, 1.0, true, kPi / 7.0, [&](const OrbitPoint& p) {
        if (thm1_starter(p).branch == StarterBranch::CubeRoot && !in_region(RegionId::R7, p)) {
            fail("cube-root branch outside R7", p);
        }
    });
    return report;
}

}  // namespace kepler
