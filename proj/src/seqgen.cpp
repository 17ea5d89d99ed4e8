#include "ygseq/seqgen.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace ygseq {

BinarySeq::BinarySeq(std::uint32_t period)
    : period_(period), words_((std::size_t{period} + 63) / 64, 0) {
    if (period == 0) throw std::invalid_argument("period must be >= 1");
}

BinarySeq::BinarySeq(std::initializer_list<int> bits)
    : BinarySeq(static_cast<std::uint32_t>(bits.size())) {
    std::uint32_t t = 0;
    for (int b : bits) set(t++, b != 0);
}

BinarySeq BinarySeq::from_ascii(std::string_view bits) {
    BinarySeq s(static_cast<std::uint32_t>(bits.size()));
    for (std::uint32_t t = 0; t < s.period_; ++t) {
        char c = bits[t];
        if (c != '0' && c != '1')
            throw std::invalid_argument("sequence string may contain only 0/1");
        s.set(t, c == '1');
    }
    return s;
}

void BinarySeq::set(std::uint32_t t, bool v) {
    t %= period_;
    std::uint64_t mask = 1ull << (t & 63);
    if (v)
        words_[t >> 6] |= mask;
    else
        words_[t >> 6] &= ~mask;
}

std::uint64_t BinarySeq::weight() const {
    std::uint64_t w = 0;
    for (std::uint64_t word : words_) w += std::popcount(word);
    return w;
}

BinarySeq BinarySeq::rotated(std::uint32_t tau) const {
    BinarySeq r(period_);
    for (std::uint32_t t = 0; t < period_; ++t) r.set(t, get(t + tau));
    return r;
}

std::string BinarySeq::to_ascii() const {
    std::string s(period_, '0');
    for (std::uint32_t t = 0; t < period_; ++t)
        if (get(t)) s[t] = '1';
    return s;
}

std::string BinarySeq::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    std::uint32_t nbytes = (period_ + 7) / 8;
    out.reserve(2 * nbytes);
    for (std::uint32_t i = 0; i < nbytes; ++i) {
        unsigned byte = (words_[i / 8] >> ((i % 8) * 8)) & 0xFF;
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0xF]);
    }
    return out;
}

BinarySeq m_sequence(const FieldContext& ctx) {
    if (ctx.degree() < 2)
        throw std::invalid_argument("m_sequence needs a field of degree >= 2");
    BinarySeq b(ctx.order());
    for (std::uint32_t t = 0; t < ctx.order(); ++t)
        b.set(t, ctx.trace_bit(ctx.exp(t)));
    return b;
}

std::pair<BinarySeq, ShiftSeq> decompose_m_sequence(unsigned k,
                                                    const FieldContext& ctx) {
    if (k < 2) throw std::invalid_argument("decompose_m_sequence needs k >= 2");
    if (ctx.degree() != 2 * k)
        throw std::invalid_argument("field degree must equal 2k");

    const std::uint32_t sub_order = (1u << k) - 1;      // order of beta
    const std::uint32_t step = (1u << k) + 1;           // beta = alpha^step

    // absolute trace of the subfield GF(2^k), evaluated inside ctx
    auto sub_trace = [&ctx, k](FieldElem y) {
        FieldElem acc = y, z = y;
        for (unsigned i = 1; i < k; ++i) {
            z = ctx.mul(z, z);
            acc = ctx.add(acc, z);
        }
        return acc != 0;
    };

    BinarySeq base(sub_order);
    for (std::uint32_t i = 0; i < sub_order; ++i)
        base.set(i, sub_trace(ctx.exp(std::uint64_t{i} * step)));

    ShiftSeq shifts;
    shifts.modulus = sub_order;
    shifts.entries.resize(step, ShiftSeq::kInfinity);
    for (std::uint32_t j = 1; j < step; ++j) {
        FieldElem tr = ctx.trace(k, ctx.exp(j));
        auto lg = ctx.dlog(tr);
        if (!lg)
            throw std::logic_error("subfield trace vanished on a coset leader");
        if (*lg % step != 0)
            throw std::logic_error("subfield trace fell outside the subfield");
        shifts.entries[j] = (*lg / step) % sub_order;
    }
    return {std::move(base), std::move(shifts)};
}

ShiftSeq shift_matrix(unsigned k, int delta) {
    if (k < 1) throw std::invalid_argument("shift_matrix needs k >= 1");
    if (delta != 1 && delta != -1)
        throw std::invalid_argument("delta must be +1 or -1");

    const std::uint32_t rows = (1u << k) - 1;
    const std::uint32_t cols = (1u << k) + 1;
    ShiftSeq e;
    e.modulus = 4;
    e.entries.resize(std::size_t{rows} * cols);
    const std::uint32_t d = (delta == 1) ? 1 : 3;  // delta mod 4
    for (std::uint32_t i = 0; i < rows; ++i) {
        e.entries[std::size_t{i} * cols] = (3 * i + d) % 4;
        for (std::uint32_t j = 1; j < cols; ++j)
            e.entries[std::size_t{i} * cols + j] = (3 * (i + j)) % 4;
    }
    return e;
}

BinarySeq interleave(const InterleaveSpec& spec) {
    const std::uint32_t v = spec.base.period();
    const std::uint32_t w = static_cast<std::uint32_t>(spec.shifts.length());
    if (spec.shifts.modulus != v)
        throw std::invalid_argument("shift modulus must equal the base period");
    if (spec.indicator && spec.indicator->period() != w)
        throw std::invalid_argument("indicator period must equal the shift length");
    for (std::uint32_t s : spec.shifts.entries)
        if (s != ShiftSeq::kInfinity && s >= v)
            throw std::invalid_argument("finite shift entry out of range");

    BinarySeq out(v * w);
    for (std::uint32_t i = 0; i < v; ++i) {
        for (std::uint32_t j = 0; j < w; ++j) {
            std::uint32_t e = spec.shifts.entries[j];
            bool bit = (e == ShiftSeq::kInfinity)
                           ? false
                           : spec.base.get(std::uint64_t{i} + e);
            if (spec.indicator) bit ^= spec.indicator->get(j);
            out.set(i * w + j, bit);
        }
    }
    return out;
}

YuGongSeq yu_gong(unsigned k, int delta, const FieldContext* ctx) {
    if (k < 1) throw std::invalid_argument("yu_gong needs k >= 1");
    std::optional<FieldContext> owned;
    if (!ctx) {
        owned.emplace(FieldContext::build(2 * k));
        ctx = &*owned;
    }
    if (ctx->degree() != 2 * k)
        throw std::invalid_argument("field degree must equal 2k");

    InterleaveSpec spec{
        BinarySeq{0, 1, 1, 1},
        shift_matrix(k, delta),
        m_sequence(*ctx),
    };
    YuGongSeq out{interleave(spec), k, delta, ctx->modulus(), k > 1};
    return out;
}

} // namespace ygseq
