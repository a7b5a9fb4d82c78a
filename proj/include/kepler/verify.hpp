#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kepler {

struct VerifyOptions {
    long long samples = 0;  // 0 = the suite's default
    std::uint64_t seed = 1;
    unsigned threads = 0;
};

struct VerifyReport {
    std::string suite;
    bool passed = true;
    long long checked = 0;
    long long failures = 0;
    std::vector<std::string> lines;  // human-readable findings, one per line
};

/// Theorem regions sampled with Halton points, each against its certified
/// starter, plus the region containments. Default 10^4 samples per region.
VerifyReport verify_regions(const VerifyOptions& options);

/// Quadratic Newton contraction from the piecewise starter and the linear
/// rate of the fixed-point iteration, against a bisection root. Default 10^3 points.
VerifyReport verify_contraction(const VerifyOptions& options);

/// Piecewise starter passes the alpha-test at random points and its cube-root
/// branch stays inside R7. Default 10^6 points.
VerifyReport verify_thm1(const VerifyOptions& options);

/// S1..S9 fail somewhere in [0.99, 1) x (0, 0.05]; S10 and the piecewise starter do not.
VerifyReport verify_corner(const VerifyOptions& options);

/// eps = 0.5 table: entry invariants and alpha-test at random points outside the
/// corner (default 10^4), plus the corner extension with eps = 0.09.
VerifyReport verify_lookup(const VerifyOptions& options);

/// Dispatches by name: regions, contraction, thm1, corner, lookup.
/// Throws DomainError for an unknown suite.
VerifyReport run_suite(std::string_view name, const VerifyOptions& options);

}  // namespace kepler
