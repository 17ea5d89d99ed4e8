#ifndef YGSEQ_CORRELATE_HPP
#define YGSEQ_CORRELATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ygseq/seqgen.hpp"

namespace ygseq {

/// The full autocorrelation vector AC(tau), tau = 0..N-1.
struct AutocorrProfile {
    std::uint32_t period = 0;
    std::vector<std::int64_t> values;
};

enum class OptimalityClass {
    Perfect,           // off-peak values in {0}
    OptimalValueMod0,  // {0, 4} or {0, -4}, N = 0 mod 4
    OptimalMagnitude,  // {0, 4, -4}, N = 0 mod 4
    IdealTwoLevel,     // {-1}, N = 3 mod 4
    OptimalMod1,       // {1, -3}, N = 1 mod 4
    OptimalMod2,       // {2, -2}, N = 2 mod 4
    None,
};

std::string to_string(OptimalityClass c);

/// AC(tau) = sum_t (-1)^(s_t + s_{t+tau}), computed index by index.
std::int64_t autocorrelation(const BinarySeq& seq, std::uint32_t tau);

/// Single-tau fast path: N - 2*popcount(s xor rotate(s, tau)) over packed
/// words of a doubled bit buffer.
std::int64_t autocorrelation_fast(const BinarySeq& seq, std::uint32_t tau);

/// All of AC(0..N-1) via the packed fast path, optionally splitting the tau
/// range across `workers` threads (0 = hardware concurrency). Output is
/// independent of the worker count.
AutocorrProfile full_profile(const BinarySeq& seq, unsigned workers = 1);

/// AC(0..max_tau) only, sharing one packed buffer across taus.
std::vector<std::int64_t> profile_prefix(const BinarySeq& seq,
                                         std::uint32_t max_tau);

OptimalityClass classify_optimality(const AutocorrProfile& profile);

/// tau together with its residue triple and the value the four-valued
/// autocorrelation law predicts for a Yu-Gong sequence of parameter k.
struct TauClass {
    std::uint32_t tau = 0;
    std::uint32_t x = 0;  // tau mod 2^2k - 1
    std::uint32_t y = 0;  // tau mod 2^k + 1
    std::uint32_t v = 0;  // tau mod 4
    std::int64_t predicted = 0;
};

/// Applies the case split on (x, y, v). The cases are asserted mutually
/// exclusive and exhaustive at every call. Requires 1 <= tau < N, k >= 2.
TauClass predict_yu_gong(std::uint32_t tau, unsigned k);

struct Theorem1Report {
    unsigned k = 0;
    int delta = 0;
    bool pass = false;
    /// Human-readable mismatch descriptions, empty iff pass.
    std::vector<std::string> failures;
};

/// Checks, for the Yu-Gong sequence of parameter k over ctx:
///  - predicted = measured autocorrelation at every tau in [1, N-1];
///  - periodicity AC(t1) = AC(t2) whenever t1 = t2 mod 4(2^k+1), and
///    AC(4(2^k+1) i) = -4 for i = 1..2^k-2;
///  - the block quadruples S_1..S_{2^k+1} and their multiplicities.
Theorem1Report verify_theorem1(unsigned k, int delta, const FieldContext& ctx,
                               unsigned workers = 1);

} // namespace ygseq

#endif
