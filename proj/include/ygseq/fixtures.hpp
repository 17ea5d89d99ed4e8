#ifndef YGSEQ_FIXTURES_HPP
#define YGSEQ_FIXTURES_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace ygseq::fixtures {

// Reference autocorrelation values for the generated sequences at k = 2, 3, 4.
// Each array is one repeating block of AC(tau), tau = 1..4(2^k + 1); the full
// off-peak profile is this block repeated 2^k - 1 times with the final -4
// falling outside tau <= N - 1.

inline constexpr std::array<std::int64_t, 20> kAutocorrBlockK2 = {
    -4, 0, -4, 4,  0, 0, -4, 4,  -4, 0, -4, 4,  -4, 0, 0, 4,  -4, 0, -4, -4,
};

inline constexpr std::array<std::int64_t, 36> kAutocorrBlockK3 = {
    -4, 0, -4, 4,  -4, 0, -4, 4,  0, 0, -4, 4,  -4, 0, -4, 4,  -4, 0, -4, 4,
    -4, 0, -4, 4,  -4, 0, 0, 4,   -4, 0, -4, 4,  -4, 0, -4, -4,
};

inline constexpr std::array<std::int64_t, 68> kAutocorrBlockK4 = {
    -4, 0, -4, 4,  -4, 0, -4, 4,  -4, 0, -4, 4,  -4, 0, -4, 4,  0, 0, -4, 4,
    -4, 0, -4, 4,  -4, 0, -4, 4,  -4, 0, -4, 4,  -4, 0, -4, 4,  -4, 0, -4, 4,
    -4, 0, -4, 4,  -4, 0, -4, 4,  -4, 0, 0, 4,   -4, 0, -4, 4,  -4, 0, -4, 4,
    -4, 0, -4, 4,  -4, 0, -4, -4,
};

// Complete off-peak profile for k = 1 (outside the k > 1 theorem scope).
inline constexpr std::array<std::int64_t, 11> kAutocorrK1 = {
    -4, 0, 0, 4, -4, 0, -4, 4, 0, 0, -4,
};

// 2-adic complexity comparison rows for k = 1..8: reported lower bounds
// (hard expectation) and published actual values (informational).
inline constexpr std::array<std::int64_t, 8> kAdicBounds = {
    6, 55, 240, 1020, 4072, 16367, 65504, 262123,
};
inline constexpr std::array<std::int64_t, 8> kAdicActuals = {
    8, 60, 250, 1020, 4082, 16380, 65530, 262140,
};

/// Expected AC(tau) for tau = 1..count, expanded from the repeating block
/// for the given k (2, 3 or 4).
std::vector<std::int64_t> expected_autocorr(unsigned k, std::uint32_t count);

} // namespace ygseq::fixtures

#endif
