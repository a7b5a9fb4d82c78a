#include "kepler/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>

#include "kepler/alpha.hpp"
#include "kepler/errors.hpp"
#include "kepler/sampling.hpp"

namespace kepler {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool in_corner_zone(double e, double M) { return e >= 0.5 && M <= kPi / 7.0; }

// alpha-test for one starter; NotApplicable when the formula is undefined there.
std::pair<CellStatus, double> evaluate_cell(StarterKind kind, const OrbitPoint& p) {
    double value = 0.0;
    try {
        value = evaluate_starter(kind, p).value;
    } catch (const DomainError&) {
        return {CellStatus::NotApplicable, kNaN};
    }
    const AlphaReport r = alpha_test(p, value);
    return {r.passes ? CellStatus::Pass : CellStatus::Fail, r.alpha};
}

}  // namespace

RegionMap::RegionMap(int grid_n, StarterKind starter) : grid_n_(grid_n), starter_(starter) {
    if (grid_n < 2) throw DomainError("grid_n must be >= 2");
    status_.assign(size(), CellStatus::Fail);
    alpha_.assign(size(), kNaN);
}

double RegionMap::e_at(std::size_t i) const noexcept {
    return static_cast<double>(i) / static_cast<double>(grid_n_);
}

double RegionMap::M_at(std::size_t j) const noexcept {
    if (j == cols() - 1) return kPi;
    return kPi * static_cast<double>(j) / static_cast<double>(grid_n_);
}

void RegionMap::set(std::size_t i, std::size_t j, CellStatus s, double alpha) {
    status_.at(i * cols() + j) = s;
    alpha_.at(i * cols() + j) = alpha;
}

RegionMap sweep(StarterKind kind, int grid_n, unsigned threads) {
    RegionMap map(grid_n, kind);
    parallel_for(map.rows(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t j = 0; j < map.cols(); ++j) {
                const auto [status, alpha] = evaluate_cell(kind, OrbitPoint(map.e_at(i), map.M_at(j)));
                map.set(i, j, status, alpha);
            }
        }
    });
    return map;
}

SweepSummary summarize(const RegionMap& map) {
    SweepSummary s;
    s.starter = map.starter();
    s.cells = static_cast<long long>(map.size());
    for (std::size_t i = 0; i < map.rows(); ++i) {
        for (std::size_t j = 0; j < map.cols(); ++j) {
            switch (map.status(i, j)) {
                case CellStatus::Pass: ++s.passing; break;
                case CellStatus::NotApplicable: ++s.not_applicable; break;
                case CellStatus::Fail:
                    if (in_corner_zone(map.e_at(i), map.M_at(j))) {
                        s.corner_failures.emplace_back(map.e_at(i), map.M_at(j));
                    }
                    break;
            }
        }
    }
    s.pass_fraction = static_cast<double>(s.passing) / static_cast<double>(s.cells);
    return s;
}

std::optional<std::function<bool(const OrbitPoint&)>> certified_region(StarterKind kind) {
    auto either = [](RegionId a, RegionId b) {
        return [a, b](const OrbitPoint& p) { return in_region(a, p) || in_region(b, p); };
    };
    auto one = [](RegionId a) { return [a](const OrbitPoint& p) { return in_region(a, p); }; };
    switch (kind) {
        case StarterKind::S1: return one(RegionId::ThmEM);
        case StarterKind::Zero: return either(RegionId::R1, RegionId::R2);
        case StarterKind::Pi: return either(RegionId::R3, RegionId::R4);
        case StarterKind::MOver1MinusE: return either(RegionId::R5, RegionId::R6);
        case StarterKind::TwoPiOver3: return one(RegionId::ThmE2pi3);
        case StarterKind::PiOver2: return one(RegionId::ThmEpi2);
        case StarterKind::CubeRootCorner: return one(RegionId::R7);
        case StarterKind::S10: return [](const OrbitPoint& p) { return p.e() > 0.0; };
        case StarterKind::Thm1: return [](const OrbitPoint&) { return true; };
        default: return std::nullopt;
    }
}

std::optional<std::pair<double, double>> find_corner_failure(StarterKind kind, double e_min,
                                                             double M_max, int max_level) {
    if (!(e_min < 1.0) || e_min < 0.0) throw DomainError("e_min must lie in [0, 1)");
    if (!(M_max > 0.0) || M_max > kPi) throw DomainError("M_max must lie in (0, pi]");
    for (int n = 2; n <= max_level; n *= 2) {
        for (int i = 0; i < n; ++i) {
            const double e = e_min + (1.0 - e_min) * static_cast<double>(i) / n;
            for (int j = 1; j <= n; ++j) {
                const double M = M_max * static_cast<double>(j) / n;
                if (evaluate_cell(kind, OrbitPoint(e, M)).first == CellStatus::Fail) {
                    return std::make_pair(e, M);
                }
            }
        }
    }
    return std::nullopt;
}

void write_region_csv(const RegionMap& map, std::ostream& out) {
    out << "e,M,alpha,passes\n";
    for (std::size_t i = 0; i < map.rows(); ++i) {
        const std::string e = format_real(map.e_at(i));
        for (std::size_t j = 0; j < map.cols(); ++j) {
            out << e << ',' << format_real(map.M_at(j)) << ',' << format_real(map.alpha(i, j))
                << ',' << (map.status(i, j) == CellStatus::Pass ? '1' : '0') << '\n';
        }
    }
}

void write_region_pgm(const RegionMap& map, std::ostream& out) {
    out << "P5\n" << map.cols() << ' ' << map.rows() << "\n255\n";
    std::string row(map.cols(), '\0');
    for (std::size_t i = 0; i < map.rows(); ++i) {
        for (std::size_t j = 0; j < map.cols(); ++j) {
            unsigned char shade = 0;
            switch (map.status(i, j)) {
                case CellStatus::Pass: shade = 255; break;
                case CellStatus::NotApplicable: shade = 128; break;
                case CellStatus::Fail: shade = 0; break;
            }
            row[j] = static_cast<char>(shade);
        }
        out.write(row.data(), static_cast<std::streamsize>(row.size()));
    }
}

void write_region_mask_csv(const RegionMap& map, std::ostream& out) {
    const auto region = certified_region(map.starter());
    out << "e,M,in_region\n";
    for (std::size_t i = 0; i < map.rows(); ++i) {
        for (std::size_t j = 0; j < map.cols(); ++j) {
            const OrbitPoint p(map.e_at(i), map.M_at(j));
            const bool inside = region && (*region)(p);
            out << format_real(p.e()) << ',' << format_real(p.M()) << ',' << (inside ? '1' : '0')
                << '\n';
        }
    }
}

void write_to_file(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    writer(out);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace kepler
