#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kepler/core.hpp"

namespace kepler {

enum class StarterKind {
    S1, S2, S3, S4, S5, S6, S7, S8, S9, S10,
    Zero, Pi, TwoPiOver3, PiOver2, MOver1MinusE, CubeRootCorner,
    Thm1,
    Table,  // piecewise-constant lookup table; not evaluable without a table
};

/// Which formula produced a starter. Only the piecewise starter has more than one.
enum class StarterBranch {
    Single,
    M,
    TwoPiOver3,
    PiOver2,
    MOver1MinusE,
    CubeRoot,
};

struct StarterValue {
    double value = 0.0;
    StarterKind kind = StarterKind::S1;
    StarterBranch branch = StarterBranch::Single;
};

enum class RegionId {
    R1, R2, R3, R4, R5, R6, R7,
    ThmEM,       // where E = M is certified
    ThmE2pi3,    // where E = 2pi/3 is certified
    ThmEpi2,     // where E = pi/2 is certified
    // The raw (unordered) conditions of the five piecewise branches.
    Thm1BranchM,
    Thm1BranchTwoPiOver3,
    Thm1BranchPiOver2,
    Thm1BranchMOver1MinusE,
    Thm1BranchCubeRoot,  // complement of the other four
};

std::string_view to_string(StarterKind kind) noexcept;
std::string_view to_string(StarterBranch branch) noexcept;
std::string_view to_string(RegionId region) noexcept;
std::optional<StarterKind> parse_starter_kind(std::string_view name) noexcept;
std::optional<RegionId> parse_region_id(std::string_view name) noexcept;

const std::vector<StarterKind>& all_starter_kinds();
const std::vector<RegionId>& theorem_regions();  // R1..R7, ThmEM, ThmE2pi3, ThmEpi2

/// Table 1 starters S1..S10. Throws DomainError for other kinds and for S10 at e = 0.
StarterValue classical_starter(StarterKind kind, const OrbitPoint& p);

/// Constant and closed-form starters analysed region by region.
/// MOver1MinusE needs e < 1; CubeRootCorner needs e > 0 and M > 0.
StarterValue analytic_starter(StarterKind kind, const OrbitPoint& p);

/// The piecewise starter certified on all of [0,1) x [0,pi]. First match wins:
///   1. M        if e <= 1/2 or M >= 2pi/3
///   2. 2pi/3    if e >= 1/2 and pi/4 <= M <= 2pi/3
///   3. pi/2     if e >= 1/2 and pi/7 <= M <= pi/4
///   4. M/(1-e)  if e >= 1/2, M <= pi/7 and M < (12 a0)^(1/4) (1-e)^(3/2) / sqrt(e)
///   5. cbrt(6 M e^2)/e - 2(1-e)/cbrt(6 M e^2) otherwise
StarterValue thm1_starter(const OrbitPoint& p);

/// Dispatches to whichever of the three families owns `kind`.
StarterValue evaluate_starter(StarterKind kind, const OrbitPoint& p);

/// Cube-root starter shared by the piecewise starter and the table corner.
double cube_root_corner(double e, double M);

/// Bound on M below which M/(1-e) is certified: (12 a0)^(1/4) (1-e)^(3/2) / sqrt(e).
double m_over_1_minus_e_bound(double e);

bool in_region(RegionId region, const OrbitPoint& p);

/// Starter certified on a theorem region (e.g. R1 -> Zero, R7 -> CubeRootCorner).
StarterKind starter_for_region(RegionId region);

struct Counterexample {
    std::string what;
    double e = 0.0;
    double M = 0.0;
};

struct ContainmentReport {
    bool holds = true;
    long long samples = 0;
    bool constant_inequality = false;  // (12 a0)^(1/4) > 8 / (27 sqrt6 a0)
    std::vector<Counterexample> counterexamples;
};

/// Dense-samples R1 in R5, R2 in R6 and "branch 5 with e >= 1/2, M <= pi/7
/// lies in R7" on a samples_per_axis^2 lattice.
ContainmentReport containment_checks(long long samples_per_axis = 1000);

}  // namespace kepler
