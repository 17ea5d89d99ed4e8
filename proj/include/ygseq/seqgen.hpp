#ifndef YGSEQ_SEQGEN_HPP
#define YGSEQ_SEQGEN_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ygseq/gf2k.hpp"

namespace ygseq {

/// A periodic binary sequence of period N, bit-packed into 64-bit words.
/// All index accesses reduce mod N.
class BinarySeq {
public:
    explicit BinarySeq(std::uint32_t period);
    BinarySeq(std::initializer_list<int> bits);

    static BinarySeq from_ascii(std::string_view bits);

    std::uint32_t period() const { return period_; }

    bool get(std::uint64_t t) const {
        t %= period_;
        return (words_[t >> 6] >> (t & 63)) & 1;
    }
    void set(std::uint32_t t, bool v);

    std::uint64_t weight() const;
    BinarySeq rotated(std::uint32_t tau) const;  // s'(t) = s(t + tau)

    /// '0'/'1' string, index 0 first.
    std::string to_ascii() const;
    /// Packed hex, two digits per byte, LSB of the first byte = s_0.
    std::string to_hex() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    bool operator==(const BinarySeq& o) const = default;

private:
    std::uint32_t period_;
    std::vector<std::uint64_t> words_;
};

/// Per-column cyclic shift amounts over Z_v, with a distinguished infinity
/// entry marking a zero column.
struct ShiftSeq {
    static constexpr std::uint32_t kInfinity = 0xFFFFFFFFu;

    std::uint32_t modulus = 0;
    std::vector<std::uint32_t> entries;

    std::size_t length() const { return entries.size(); }
};

/// Ingredients of an interleaved sequence: a period-v base, a length-w shift
/// sequence over Z_v (or infinity), and an optional period-w indicator added
/// column-wise.
struct InterleaveSpec {
    BinarySeq base;
    ShiftSeq shifts;
    std::optional<BinarySeq> indicator;
};

/// The m-sequence b_t = Tr_1^n(alpha^t) of period 2^n - 1 for the field's
/// primitive element alpha.
BinarySeq m_sequence(const FieldContext& ctx);

/// Splits the degree-2k m-sequence into its (2^k - 1, 2^k + 1) interleaved
/// form: base a'_i = Tr_1^k(beta^i) with beta = alpha^(2^k + 1), and shifts
/// e' with e'_0 = infinity and beta^(e'_j) = Tr_k^2k(alpha^j) for j >= 1.
std::pair<BinarySeq, ShiftSeq> decompose_m_sequence(unsigned k,
                                                    const FieldContext& ctx);

/// The shift sequence e over Z_4 of length 2^2k - 1, flattened row-major
/// from the (2^k - 1) x (2^k + 1) matrix with entries
///   e_{i,0} = 3i + delta (mod 4),   e_{i,j} = 3(i + j) (mod 4) for j >= 1.
ShiftSeq shift_matrix(unsigned k, int delta);

/// Row-major interleave: s[i*w + j] = base[(i + e_j) mod v] xor indicator[j],
/// with column j all-zero when e_j is infinity.
BinarySeq interleave(const InterleaveSpec& spec);

/// A generated Yu-Gong sequence together with its parameters.
struct YuGongSeq {
    BinarySeq bits;
    unsigned k = 0;
    int delta = +1;
    std::uint64_t modulus = 0;
    /// False for k = 1, which is generated but sits outside the
    /// autocorrelation theorem's k > 1 requirement.
    bool in_theorem_scope = true;

    std::uint32_t period() const { return bits.period(); }
};

/// Builds the period-4(2^2k - 1) sequence with base (0,1,1,1), shifts from
/// shift_matrix(k, delta), and the degree-2k m-sequence as indicator.
YuGongSeq yu_gong(unsigned k, int delta = +1,
                  const FieldContext* ctx = nullptr);

} // namespace ygseq

#endif
