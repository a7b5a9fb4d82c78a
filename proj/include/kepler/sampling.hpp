#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace kepler {

/// Counter-based generator: the n-th draw depends only on (seed, stream, n),
/// so results do not depend on how work is split across threads.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    std::uint64_t bits(std::uint64_t counter, std::uint64_t stream = 0) const noexcept;
    /// Uniform in [0, 1) with 53 random bits.
    double uniform(std::uint64_t counter, std::uint64_t stream = 0) const noexcept;
    double uniform(double lo, double hi, std::uint64_t counter,
                   std::uint64_t stream = 0) const noexcept;

private:
    std::uint64_t seed_;
};

/// Radical inverse of index in the given prime base; Halton point coordinate.
double halton(std::uint64_t index, unsigned base) noexcept;

/// Runs body(begin, end) over [0, n) split into contiguous chunks on up to
/// `threads` workers (0 = hardware concurrency).
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace kepler
