#include "kepler/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <string>

#include "kepler/alpha.hpp"
#include "kepler/errors.hpp"
#include "kepler/lookup.hpp"
#include "kepler/sampling.hpp"
#include "kepler/solver.hpp"
#include "kepler/starters.hpp"
#include "kepler/sweep.hpp"

namespace kepler {
namespace {

constexpr int kMaxReportedFailures = 10;

std::string fmt(const char* pattern, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

long long samples_or(const VerifyOptions& o, long long fallback) {
    return o.samples > 0 ? o.samples : fallback;
}

void record_failure(VerifyReport& r, const std::string& line) {
    r.passed = false;
    ++r.failures;
    if (r.failures <= kMaxReportedFailures) r.lines.push_back(line);
}

struct Box {
    double e_lo, e_hi, m_lo, m_hi;
};

// Bounding box that contains the region; points are kept by rejection.
Box bounding_box(RegionId region) {
    const double a0 = alpha0();
    const double s6 = std::sqrt(6.0);
    const double e311 = 3.0 / 11.0;
    switch (region) {
        case RegionId::R1: return {0.0, e311, 0.0, 4.0 * a0};
        case RegionId::R2:
            return {e311, 1.0, 0.0, s6 * a0 * std::pow(1.0 - e311, 1.5) / std::sqrt(e311)};
        case RegionId::R3: return {0.0, 0.6, kPi - 4.0 * a0 * 1.6, kPi};
        case RegionId::R4:
            return {0.6, 1.0, std::max(0.0, kPi - s6 * a0 * std::pow(2.0, 1.5) / std::sqrt(0.6)),
                    kPi};
        case RegionId::R5: return {0.0, e311, 0.0, kPi};
        case RegionId::R6: return {e311, 1.0, 0.0, kPi};
        case RegionId::R7: return {e311, 1.0, 0.0, kPi / 7.0};
        case RegionId::ThmE2pi3: return {0.5, 1.0, kPi / 4.0, 2.0 * kPi / 3.0};
        case RegionId::ThmEpi2: return {0.5, 1.0, kPi / 7.0, kPi / 4.0};
        default: return {0.0, 1.0, 0.0, kPi};
    }
}

// Points in [e_lo, e_hi) x [m_lo, m_hi] from the (2, 3) Halton sequence.
OrbitPoint halton_point(const Box& b, std::uint64_t index) {
    const double e = b.e_lo + (b.e_hi - b.e_lo) * halton(index, 2);
    const double M = b.m_lo + (b.m_hi - b.m_lo) * halton(index, 3);
    return OrbitPoint(std::min(e, std::nextafter(1.0, 0.0)), std::clamp(M, 0.0, kPi));
}

OrbitPoint random_point(const CounterRng& rng, std::uint64_t k, double e_max) {
    return OrbitPoint(rng.uniform(0.0, e_max, k, 0), rng.uniform(0.0, kPi, k, 1));
}

}  // namespace

VerifyReport verify_regions(const VerifyOptions& options) {
    VerifyReport report;
    report.suite = "regions";
    const long long per_region = samples_or(options, 10'000);
    for (RegionId region : theorem_regions()) {
        const StarterKind starter = starter_for_region(region);
        const Box box = bounding_box(region);
        long long accepted = 0;
        long long region_failures = 0;
        const long long max_draws = per_region * 1000;
        for (std::uint64_t k = 1; accepted < per_region && static_cast<long long>(k) <= max_draws;
             ++k) {
            const OrbitPoint p = halton_point(box, k);
            if (!in_region(region, p)) continue;
            ++accepted;
            const AlphaReport a = alpha_test(p, evaluate_starter(starter, p).value);
            if (!a.passes) {
                ++region_failures;
                record_failure(report, fmt("%s: starter %s fails at e=%.17g M=%.17g alpha=%.17g",
                                           std::string(to_string(region)).c_str(),
                                           std::string(to_string(starter)).c_str(), p.e(), p.M(),
                                           a.alpha));
            }
        }
        report.checked += accepted;
        if (accepted < per_region) {
            record_failure(report, fmt("%s: only %lld interior samples found",
                                       std::string(to_string(region)).c_str(), accepted));
        }
        report.lines.push_back(fmt("%-10s starter %-16s samples %lld failures %lld",
                                   std::string(to_string(region)).c_str(),
                                   std::string(to_string(starter)).c_str(), accepted,
                                   region_failures));
    }

    const ContainmentReport c = containment_checks(1000);
    report.checked += c.samples;
    if (!c.holds) {
        for (const auto& ce : c.counterexamples) {
            record_failure(report, fmt("containment: %s at e=%.17g M=%.17g", ce.what.c_str(),
                                       ce.e, ce.M));
        }
        if (!c.constant_inequality) record_failure(report, "(12 a0)^(1/4) > 8/(27 sqrt6 a0) fails");
    }
    report.lines.push_back(fmt("containments (R1 in R5, R2 in R6, cube-root branch in R7): %s "
                               "over %lld lattice points",
                               c.holds ? "hold" : "VIOLATED", c.samples));
    return report;
}

VerifyReport verify_contraction(const VerifyOptions& options) {
    VerifyReport report;
    report.suite = "contraction";
    const long long n_points = samples_or(options, 1000);
    const CounterRng rng(options.seed);
    long long residual_increases = 0;
    for (long long k = 0; k < n_points; ++k) {
        const OrbitPoint p = random_point(rng, static_cast<std::uint64_t>(k), 0.999);
        const double root = bisection_oracle(p, 1e-15);
        const double start = thm1_starter(p).value;
        const double e0 = std::abs(start - root);

        double E = start;
        double previous_residual = std::abs(eval_f(p, E));
        for (int n = 1; n <= 4; ++n) {
            E = newton_step(p, E);
            const double bound = std::pow(0.5, std::pow(2.0, n) - 1.0) * e0 + 1e-12;
            ++report.checked;
            if (std::abs(E - root) > bound) {
                record_failure(report, fmt("newton n=%d e=%.17g M=%.17g error %.3e > bound %.3e",
                                           n, p.e(), p.M(), std::abs(E - root), bound));
            }
            const double residual = std::abs(eval_f(p, E));
            if (n >= 2 && residual > previous_residual) ++residual_increases;
            previous_residual = residual;
        }

        E = p.M();
        for (int n = 0; n < 20; ++n) {
            const double next = fixed_point_baseline(p, E, 1);
            ++report.checked;
            if (std::abs(next - root) > p.e() * std::abs(E - root) + 1e-14) {
                record_failure(report, fmt("fixed point n=%d e=%.17g M=%.17g not linear", n, p.e(),
                                           p.M()));
            }
            E = next;
        }
    }
    report.lines.push_back(fmt("quadratic contraction n=1..4 and fixed-point rate n=0..19 on %lld "
                               "points",
                               n_points));
    report.lines.push_back(fmt("newton residual increased after the first step %lld times "
                               "(informational)",
                               residual_increases));
    return report;
}

VerifyReport verify_thm1(const VerifyOptions& options) {
    VerifyReport report;
    report.suite = "thm1";
    const long long n_points = samples_or(options, 1'000'000);
    const CounterRng rng(options.seed);
    std::mutex mutex;
    std::vector<long long> failing;
    long long cube_outside_r7 = 0;
    parallel_for(static_cast<std::size_t>(n_points), options.threads,
                 [&](std::size_t begin, std::size_t end) {
                     std::vector<long long> local;
                     long long local_outside = 0;
                     for (std::size_t k = begin; k < end; ++k) {
                         const OrbitPoint p = random_point(rng, k, 1.0);
                         const StarterValue s = thm1_starter(p);
                         if (!alpha_test(p, s.value).passes) local.push_back(static_cast<long long>(k));
                         if (s.branch == StarterBranch::CubeRoot && !in_region(RegionId::R7, p)) {
                             ++local_outside;
                         }
                     }
                     std::lock_guard lock(mutex);
                     failing.insert(failing.end(), local.begin(), local.end());
                     cube_outside_r7 += local_outside;
                 });
    std::sort(failing.begin(), failing.end());
    report.checked = n_points;
    for (long long k : failing) {
        const OrbitPoint p = random_point(rng, static_cast<std::uint64_t>(k), 1.0);
        record_failure(report, fmt("alpha-test fails at e=%.17g M=%.17g", p.e(), p.M()));
    }
    if (cube_outside_r7 > 0) {
        record_failure(report, fmt("%lld cube-root branch points outside R7", cube_outside_r7));
    }
    report.lines.push_back(fmt("piecewise starter: %lld random points, %zu alpha-test failures",
                               n_points, failing.size()));
    return report;
}

VerifyReport verify_corner(const VerifyOptions&) {
    VerifyReport report;
    report.suite = "corner";
    const std::vector<StarterKind> must_fail{StarterKind::S1, StarterKind::S2, StarterKind::S3,
                                             StarterKind::S4, StarterKind::S5, StarterKind::S6,
                                             StarterKind::S7, StarterKind::S8, StarterKind::S9};
    for (StarterKind kind : must_fail) {
        ++report.checked;
        const auto hit = find_corner_failure(kind, 0.99, 0.05);
        const std::string name(to_string(kind));
        if (hit) {
            report.lines.push_back(fmt("%-5s fails at e=%.17g M=%.17g", name.c_str(), hit->first,
                                       hit->second));
        } else {
            record_failure(report, fmt("%s: no failing point found near the corner", name.c_str()));
        }
    }
    for (StarterKind kind : {StarterKind::S10, StarterKind::Thm1}) {
        ++report.checked;
        const auto hit = find_corner_failure(kind, 0.99, 0.05);
        const std::string name(to_string(kind));
        if (hit) {
            record_failure(report, fmt("%s unexpectedly fails at e=%.17g M=%.17g", name.c_str(),
                                       hit->first, hit->second));
        } else {
            report.lines.push_back(fmt("%-5s no failure in [0.99, 1) x (0, 0.05]", name.c_str()));
        }
    }
    return report;
}

VerifyReport verify_lookup(const VerifyOptions& options) {
    VerifyReport report;
    report.suite = "lookup";
    const long long n_points = samples_or(options, 10'000);
    const CounterRng rng(options.seed);

    const LookupTable table = build_table(0.5, options.threads);
    long long bad_entries = 0;
    for (std::size_t i = 0; i < table.rows(); ++i) {
        for (std::size_t j = 0; j < table.cols(); ++j) {
            ++report.checked;
            if (!table.entry_valid(i, j)) ++bad_entries;
        }
    }
    if (bad_entries > 0) record_failure(report, fmt("%lld invalid table entries", bad_entries));

    const double residual_bound = (kPi + 2.0) / static_cast<double>(table.N());
    long long outside = 0;
    for (std::uint64_t k = 0; outside < n_points; ++k) {
        const OrbitPoint p = random_point(rng, k, 1.0);
        if (table.in_corner(p.e(), p.M())) continue;
        ++outside;
        ++report.checked;
        const double start = table_starter(table, p).value;
        if (!alpha_test(p, start).passes) {
            record_failure(report, fmt("table starter fails at e=%.17g M=%.17g", p.e(), p.M()));
        }
        if (!(std::abs(eval_f(p, start)) < residual_bound)) {
            record_failure(report, fmt("residual bound (pi+2)/N violated at e=%.17g M=%.17g",
                                       p.e(), p.M()));
        }
    }
    report.lines.push_back(fmt("eps=0.5 table (N=%llu): %lld entries checked, %lld samples outside "
                               "the corner",
                               static_cast<unsigned long long>(table.N()),
                               static_cast<long long>(table.entries().size()), outside));

    // The corner extension needs eps < 1 - cos(pi/7) ~ 0.0990.
    const LookupTable fine = build_table(0.09, options.threads);
    const double corner_m = std::acos(1.0 - fine.eps());
    const long long corner_points = std::max<long long>(1, n_points / 10);
    for (long long k = 0; k < corner_points; ++k) {
        const OrbitPoint p(rng.uniform(1.0 - fine.eps(), 1.0, k, 2),
                           rng.uniform(0.0, corner_m, k, 3));
        ++report.checked;
        if (!alpha_test(p, table_starter(fine, p).value).passes) {
            record_failure(report, fmt("corner extension fails at e=%.17g M=%.17g", p.e(), p.M()));
        }
    }
    report.lines.push_back(fmt("eps=0.09 corner extension: %lld samples", corner_points));
    return report;
}

VerifyReport run_suite(std::string_view name, const VerifyOptions& options) {
    if (name == "regions") return verify_regions(options);
    if (name == "contraction") return verify_contraction(options);
    if (name == "thm1") return verify_thm1(options);
    if (name == "corner") return verify_corner(options);
    if (name == "lookup") return verify_lookup(options);
    throw DomainError("unknown verification suite: " + std::string(name));
}

}  // namespace kepler
