#ifndef YGSEQ_ADIC_HPP
#define YGSEQ_ADIC_HPP

#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ygseq/seqgen.hpp"

namespace ygseq {

using BigInt = mpz_class;

/// Thrown when a computation would exceed the configured size cap.
struct ResourceCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class BoundCase {
    PrimeKMod0,    // k = 0 mod 4 and 2^(2k-1) - 2^k + 1 prime: complexity = N
    EvenK,         // complexity > N - log2(N) + 1
    OddK,          // complexity > N - 2 log2(N) + 4
    OutOfTheorem,  // k = 1
};

std::string to_string(BoundCase c);

/// The sequence read as a little-endian N-bit integer, S(2) = sum s_i 2^i.
BigInt s_of_two(const BinarySeq& seq);

/// T(2^(N-1)) mod 2^N - 1, i.e. T(x) = sum (-1)^(s_i) x^i evaluated at the
/// inverse of 2, kept as a canonical nonnegative residue.
BigInt t_of_half(const BinarySeq& seq);

struct AdicReport {
    std::uint32_t period = 0;
    BigInt s2;
    BigInt g;  // gcd(S(2), 2^N - 1)
    BigInt f;  // (2^N - 1) / g, the reduced denominator
    std::uint64_t phi2 = 0;

    // Filled only when the sequence is tagged as Yu-Gong with known k.
    std::optional<BoundCase> bound_case;
    std::optional<std::int64_t> bound;
    std::optional<long double> threshold;
};

/// Exact 2-adic complexity: phi2 = floor(log2(f + 1)).
AdicReport two_adic_complexity(const BinarySeq& seq,
                               std::optional<unsigned> yu_gong_k = {});

struct Theorem3Bound {
    BoundCase label = BoundCase::OutOfTheorem;
    std::int64_t reported = 0;      // floor of the threshold
    long double threshold = 0.0L;   // strict lower bound (= N in the prime case)
};

Theorem3Bound theorem3_bound(unsigned k);

struct CongruenceRecord {
    std::string label;
    BigInt modulus;
    BigInt expected;  // canonical residue in [0, modulus)
    BigInt actual;
    bool pass = false;
};

struct CongruenceReport {
    unsigned k = 0;
    bool pass = false;
    std::vector<CongruenceRecord> records;
};

/// Verifies the product P = S(2) T(2^(N-1)) mod 2^N - 1 against its closed
/// forms: the full key identity mod 2^N - 1, the residue mod 15 determined
/// by k mod 4, the residue mod the cofactor (2^N-1)/(2^(4(2^k+1))-1), the
/// residue mod 2^(4(2^k+1)) - 1, and the residues mod its coprime factors
/// (2^(2(2^k+1))+1)/5, 2^(2^k+1)+1 and 2^(2^k+1)-1.
CongruenceReport verify_congruences(const BinarySeq& seq, unsigned k);

/// The weighted autocorrelation sum over one shift-period,
/// sum_{tau=1}^{4(2^k+1)} AC(tau) 2^tau, computed two ways: directly from
/// measured values and from the closed form
/// 8 { 3 (2^(4(2^k+1)) - 1)/15 + 2^(2^k) + 2^(3*2^k+2) - 2^(4(2^k+1)) }.
std::pair<BigInt, BigInt> weighted_ac_sum(unsigned k,
                                          const std::vector<std::int64_t>& ac_values);

struct Lemma2Report {
    unsigned k = 0;
    BigInt base_term;      // 2^(2k-1) - 2^k + 1
    bool base_term_prime = false;
    BigInt gcd_quintic;    // gcd(base_term, (2^(2(2^k+1)) + 1)/5)
    BigInt gcd_mersenne;   // gcd(2^(k-1) - 1, 2^(2^k+1) + 1)
    bool clause1_pass = false;  // 5 | gcd_quintic iff k = 2 mod 4; 5 does not divide for k = 0 mod 4
    bool clause2_pass = false;  // gcd_quintic = 1 when base_term prime and k = 0 mod 4, else < 2^(2k-1)
    bool clause3_pass = false;  // gcd_mersenne = 1 for even k, else < 2^(k-1)
    bool pass = false;
};

/// Evaluates both gcds exactly and each clause of the gcd lemma.
/// Throws ResourceCapError when k exceeds size_cap.
Lemma2Report lemma2_checks(unsigned k, unsigned size_cap = 16);

/// Deterministic Miller-Rabin below 3.317e24, 64 pseudo-random rounds above.
bool is_probable_prime(const BigInt& n);

/// All k <= max_k with k = 0 mod 4 and 2^(2k-1) - 2^k + 1 prime.
std::vector<unsigned> scan_prime_k(unsigned max_k);

struct ConjectureEntry {
    unsigned k = 0;
    BigInt gcd_value;       // gcd(2^(2k-1)-2^k+1, (2^(2(2^k+1))+1)/5)
    bool counterexample = false;
    bool skipped = false;   // size cap exceeded
};

std::vector<ConjectureEntry> conjecture_scan(const std::vector<unsigned>& ks,
                                             unsigned size_cap = 16);

/// Output of 2-adic rational approximation on a bit prefix: p/q with q odd
/// and positive whose 2-adic expansion reproduces the first matched_bits
/// input bits, minimizing max(|p|, |q|).
struct RationalApprox {
    BigInt p;
    BigInt q;
    std::uint32_t matched_bits = 0;
};

RationalApprox rational_approximation(const std::vector<std::uint8_t>& bits);

/// Runs rational approximation on a (2N+2)-bit prefix of seq and converts the
/// reduced denominator to a complexity figure, floor(log2(q_hat + 1)).
/// Independent of the s_of_two / gcd route.
std::uint64_t phi2_from_prefix(const BinarySeq& seq);

} // namespace ygseq

#endif
