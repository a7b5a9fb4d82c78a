#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "kepler/core.hpp"
#include "kepler/starters.hpp"

namespace kepler {

enum class CellStatus : std::uint8_t { Fail, Pass, NotApplicable };

/// alpha-test outcome for one starter on the grid e = i/n (i < n), M = pi j/n (j <= n).
class RegionMap {
public:
    RegionMap(int grid_n, StarterKind starter);

    int grid_n() const noexcept { return grid_n_; }
    StarterKind starter() const noexcept { return starter_; }
    std::size_t rows() const noexcept { return static_cast<std::size_t>(grid_n_); }
    std::size_t cols() const noexcept { return static_cast<std::size_t>(grid_n_) + 1; }
    std::size_t size() const noexcept { return rows() * cols(); }

    double e_at(std::size_t i) const noexcept;
    double M_at(std::size_t j) const noexcept;

    CellStatus status(std::size_t i, std::size_t j) const { return status_.at(i * cols() + j); }
    double alpha(std::size_t i, std::size_t j) const { return alpha_.at(i * cols() + j); }
    void set(std::size_t i, std::size_t j, CellStatus s, double alpha);

private:
    int grid_n_;
    StarterKind starter_;
    std::vector<CellStatus> status_;
    std::vector<double> alpha_;
};

struct SweepSummary {
    StarterKind starter = StarterKind::S1;
    long long cells = 0;
    long long passing = 0;
    long long not_applicable = 0;
    double pass_fraction = 0.0;  // passing / cells; not-applicable cells count as failures
    /// Failing cells in the corner zone e >= 1/2, M <= pi/7.
    std::vector<std::pair<double, double>> corner_failures;
};

/// Evaluates the alpha-test at every grid node. Cells where the starter is
/// undefined (S10 at e = 0, cube root at M = 0 ...) are NotApplicable.
RegionMap sweep(StarterKind kind, int grid_n, unsigned threads = 0);

SweepSummary summarize(const RegionMap& map);

/// Theorem region on which `kind` is certified, if any. S10 and the piecewise
/// starter are certified everywhere their formula is defined.
std::optional<std::function<bool(const OrbitPoint&)>> certified_region(StarterKind kind);

/// Searches [e_min, 1) x (0, M_max] on successively refined grids
/// (2x2, 4x4, ... up to max_level x max_level) for a point where the starter
/// fails the alpha-test. Returns the first failure found.
std::optional<std::pair<double, double>> find_corner_failure(StarterKind kind, double e_min,
                                                             double M_max, int max_level = 512);

/// CSV header `e,M,alpha,passes`, one row per cell, i outer and j inner,
/// reals with 17 significant digits. passes is 1 or 0; not-applicable cells
/// carry alpha = nan and passes = 0.
void write_region_csv(const RegionMap& map, std::ostream& out);
/// Binary PGM (P5), width grid_n + 1, height grid_n, row i = eccentricity index.
/// 255 = pass, 0 = fail, 128 = not applicable.
void write_region_pgm(const RegionMap& map, std::ostream& out);
/// CSV `e,M,in_region` for the starter's certified region on the same grid.
void write_region_mask_csv(const RegionMap& map, std::ostream& out);

/// Opens `path` (binary) and runs `writer`; I/O failures throw with the path.
void write_to_file(const std::string& path, const std::function<void(std::ostream&)>& writer);

}  // namespace kepler
