#include "kepler/lookup.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include "json.hpp"
#include <ostream>
#include <string>

#include "kepler/alpha.hpp"
#include "kepler/errors.hpp"
#include "kepler/sampling.hpp"

namespace kepler {
namespace {

constexpr int kSpotChecks = 100;
constexpr std::uint64_t kSpotCheckSeed = 0x4b414c54;  // "KALT"
constexpr std::uint64_t kMaxTableN = 1u << 20;

void check_eps(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw DomainError("eps must lie in (0, 1), got " + std::to_string(eps));
    }
}

double grid_anomaly(std::uint64_t j, std::uint64_t N) {
    return j == N ? kPi : kPi * static_cast<double>(j) / static_cast<double>(N);
}

double table_entry(std::uint64_t i, std::uint64_t j, std::uint64_t N) {
    const double e = static_cast<double>(i) / static_cast<double>(N);
    const double M = grid_anomaly(j, N);
    const double tol = 1.0 / static_cast<double>(N);
    auto g = [&](double E) { return E - e * std::sin(E) - M; };

    double lo = M;
    double hi = kPi;
    if (std::abs(g(lo)) < tol) return lo;
    // g(lo) <= 0 <= g(hi) and |g'| <= 2, so ~log2(2 pi N) halvings suffice.
    for (int step = 0; step < 200; ++step) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if (std::abs(gm) < tol) return mid;
        if (gm <= 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    throw ConvergenceError("table entry bisection did not converge");
}

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T value) {
    using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
    const U bits = std::bit_cast<U>(value);
    for (std::size_t b = 0; b < sizeof(U); ++b) {
        out.push_back(static_cast<std::uint8_t>(bits >> (8 * b)));
    }
}

template <typename T>
T get_le(std::span<const std::uint8_t> bytes, std::size_t offset) {
    using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
    U bits = 0;
    for (std::size_t b = 0; b < sizeof(U); ++b) {
        bits |= static_cast<U>(bytes[offset + b]) << (8 * b);
    }
    return std::bit_cast<T>(bits);
}

}  // namespace

LookupTable::LookupTable(double eps, std::uint64_t N, std::vector<double> entries)
    : eps_(eps), N_(N), entries_(std::move(entries)) {
    check_eps(eps);
    if (N == 0 || N > kMaxTableN) throw DomainError("table size N out of range");
    if (entries_.size() != rows() * cols()) throw DomainError("entry count must be N (N+1)");
}

double LookupTable::entry_residual(std::size_t i, std::size_t j) const {
    const double e = static_cast<double>(i) / static_cast<double>(N_);
    const double E = at(i, j);
    return E - e * std::sin(E) - grid_anomaly(j, N_);
}

bool LookupTable::entry_valid(std::size_t i, std::size_t j) const {
    const double E = at(i, j);
    return std::isfinite(E) && E >= grid_anomaly(j, N_) && E <= kPi &&
           std::abs(entry_residual(i, j)) < 1.0 / static_cast<double>(N_);
}

bool LookupTable::in_corner(double e, double M) const noexcept {
    return e >= 1.0 - eps_ && M <= std::acos(1.0 - eps_);
}

std::uint64_t table_size_for_eps(double eps) {
    check_eps(eps);
    const double bound = (kPi + 2.0) / (2.0 * alpha0() * eps * eps);
    if (!(bound < static_cast<double>(kMaxTableN))) {
        throw DomainError("eps too small: table would exceed " + std::to_string(kMaxTableN) +
                          " rows");
    }
    return static_cast<std::uint64_t>(std::floor(bound)) + 1;
}

double corner_extension_limit() noexcept { return 1.0 - std::cos(kPi / 7.0); }

LookupTable build_table(double eps, unsigned threads) {
    const std::uint64_t N = table_size_for_eps(eps);
    const std::size_t cols = static_cast<std::size_t>(N) + 1;
    std::vector<double> entries(static_cast<std::size_t>(N) * cols);
    parallel_for(static_cast<std::size_t>(N), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t j = 0; j < cols; ++j) entries[i * cols + j] = table_entry(i, j, N);
        }
    });
    return LookupTable(eps, N, std::move(entries));
}

StarterValue table_starter(const LookupTable& t, const OrbitPoint& p) {
    const double e = p.e();
    const double M = p.M();
    StarterValue sv;
    sv.kind = StarterKind::Table;
    if (t.in_corner(e, M)) {
        if (!(t.eps() < corner_extension_limit())) {
            throw UnsupportedRegionError(
                "point lies in the excluded corner and eps >= 1 - cos(pi/7) does not allow "
                "the corner extension");
        }
        // Here e >= 1 - eps > 1/2 and M <= acos(1 - eps) < pi/7.
        if (M < m_over_1_minus_e_bound(e)) {
            sv.value = M / (1.0 - e);
            sv.branch = StarterBranch::MOver1MinusE;
        } else {
            sv.value = cube_root_corner(e, M);
            sv.branch = StarterBranch::CubeRoot;
        }
        return sv;
    }
    const auto N = static_cast<double>(t.N());
    const auto i = std::min<std::size_t>(static_cast<std::size_t>(std::floor(N * e)), t.rows() - 1);
    const auto j = std::min<std::size_t>(static_cast<std::size_t>(std::ceil(M * N / kPi)),
                                         t.cols() - 1);
    sv.value = t.at(i, j);
    return sv;
}

std::vector<std::uint8_t> serialize(const LookupTable& t) {
    std::vector<std::uint8_t> out;
    out.reserve(kTableHeaderBytes + 8 * t.entries().size());
    out.insert(out.end(), std::begin(kTableMagic), std::end(kTableMagic));
    put_le(out, kTableFormatVersion);
    put_le(out, t.eps());
    put_le(out, t.N());
    for (double v : t.entries()) put_le(out, v);
    return out;
}

LookupTable deserialize(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kTableHeaderBytes) throw CorruptFormatError("truncated table header");
    if (!std::equal(std::begin(kTableMagic), std::end(kTableMagic), bytes.begin(),
                    [](char a, std::uint8_t b) { return static_cast<std::uint8_t>(a) == b; })) {
        throw CorruptFormatError("bad magic, not a KALT table");
    }
    const auto version = get_le<std::uint32_t>(bytes, 4);
    if (version != kTableFormatVersion) {
        throw CorruptFormatError("unsupported table version " + std::to_string(version));
    }
    const auto eps = get_le<double>(bytes, 8);
    const auto N = get_le<std::uint64_t>(bytes, 16);
    if (!(eps > 0.0 && eps < 1.0)) throw CorruptFormatError("eps outside (0, 1)");
    if (N == 0 || N > kMaxTableN) throw CorruptFormatError("table size N out of range");
    if (!(static_cast<double>(N) > (kPi + 2.0) / (2.0 * alpha0() * eps * eps))) {
        throw CorruptFormatError("N too small for eps");
    }
    const std::size_t count = static_cast<std::size_t>(N) * (static_cast<std::size_t>(N) + 1);
    if (bytes.size() != kTableHeaderBytes + 8 * count) {
        throw CorruptFormatError("size mismatch: expected " +
                                 std::to_string(kTableHeaderBytes + 8 * count) + " bytes, got " +
                                 std::to_string(bytes.size()));
    }
    std::vector<double> entries(count);
    for (std::size_t k = 0; k < count; ++k) {
        entries[k] = get_le<double>(bytes, kTableHeaderBytes + 8 * k);
    }
    LookupTable t(eps, N, std::move(entries));

    const CounterRng rng(kSpotCheckSeed);
    for (int s = 0; s < kSpotChecks; ++s) {
        const auto i = static_cast<std::size_t>(rng.bits(s, 0) % t.rows());
        const auto j = static_cast<std::size_t>(rng.bits(s, 1) % t.cols());
        if (!t.entry_valid(i, j)) {
            throw CorruptFormatError("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                     ") violates the table invariants");
        }
    }
    return t;
}

void save_table(const LookupTable& t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    const auto bytes = serialize(t);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

LookupTable load_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                          std::istreambuf_iterator<char>());
    return deserialize(bytes);
}

void write_table_json(const LookupTable& t, std::ostream& out) {
    nlohmann::json j;
    j["eps"] = t.eps();
    j["N"] = t.N();
    j["entries"] = t.entries();
    out << j.dump() << '\n';
}

}  // namespace kepler
