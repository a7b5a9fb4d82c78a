#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "kepler/core.hpp"
#include "kepler/starters.hpp"

namespace kepler {

inline constexpr char kTableMagic[4] = {'K', 'A', 'L', 'T'};
inline constexpr std::uint32_t kTableFormatVersion = 1;
inline constexpr std::size_t kTableHeaderBytes = 24;

/// Piecewise-constant certified starter on an N x (N+1) grid.
///
/// Entry (i, j) approximates the root of g(E) = E - (i/N) sin E - pi j / N with
/// pi j / N <= E <= pi and |g(E)| < 1/N. Any (e, M) outside the corner
/// [1-eps, 1) x [0, acos(1-eps)] is served by entry (floor(N e), ceil(M N / pi)).
class LookupTable {
public:
    LookupTable(double eps, std::uint64_t N, std::vector<double> entries);

    double eps() const noexcept { return eps_; }
    std::uint64_t N() const noexcept { return N_; }
    std::size_t rows() const noexcept { return static_cast<std::size_t>(N_); }
    std::size_t cols() const noexcept { return static_cast<std::size_t>(N_) + 1; }
    double at(std::size_t i, std::size_t j) const { return entries_.at(i * cols() + j); }
    const std::vector<double>& entries() const noexcept { return entries_; }

    /// Residual of entry (i, j) in its defining equation.
    double entry_residual(std::size_t i, std::size_t j) const;
    /// Bounds and residual check for one entry.
    bool entry_valid(std::size_t i, std::size_t j) const;

    bool in_corner(double e, double M) const noexcept;

    friend bool operator==(const LookupTable&, const LookupTable&) = default;

private:
    double eps_;
    std::uint64_t N_;
    std::vector<double> entries_;
};

/// Smallest N with N > (pi + 2) / (2 a0 eps^2). Throws DomainError unless 0 < eps < 1.
std::uint64_t table_size_for_eps(double eps);

/// eps below which the corner can be served by the M/(1-e) and cube-root formulas:
/// 1 - cos(pi/7).
double corner_extension_limit() noexcept;

/// Bisects every entry on [pi j / N, pi] until |g| < 1/N. Rows are built in
/// parallel; the result does not depend on the thread count.
LookupTable build_table(double eps, unsigned threads = 0);

/// Starter for p. Inside the corner this falls back to M/(1-e) or the cube-root
/// starter, which requires eps < corner_extension_limit(); otherwise throws
/// UnsupportedRegionError.
StarterValue table_starter(const LookupTable& t, const OrbitPoint& p);

/// Binary format (little-endian): "KALT", u32 version, f64 eps, u64 N,
/// then N (N+1) f64 entries row-major (i outer, j inner).
std::vector<std::uint8_t> serialize(const LookupTable& t);
/// Throws CorruptFormatError on bad magic, version, size or entry invariants.
LookupTable deserialize(std::span<const std::uint8_t> bytes);

void save_table(const LookupTable& t, const std::string& path);
LookupTable load_table(const std::string& path);

/// {"eps": ..., "N": ..., "entries": [...]} with entries row-major.
void write_table_json(const LookupTable& t, std::ostream& out);

}  // namespace kepler
