#ifndef YGSEQ_GF2K_HPP
#define YGSEQ_GF2K_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace ygseq {

/// Element of GF(2^n), stored as an n-bit polynomial residue.
using FieldElem = std::uint32_t;

/// A binary extension field GF(2^n) with exp/log tables over a primitive
/// modulus. Immutable after construction; safe for concurrent reads.
class FieldContext {
public:
    /// Builds GF(2^n). When no modulus is given, the lexicographically
    /// smallest primitive polynomial of degree n is chosen, so the default
    /// field per degree is deterministic.
    ///
    /// Throws std::invalid_argument if n is out of [1, 32] or the supplied
    /// modulus is not irreducible / not primitive (the message names which).
    static FieldContext build(unsigned degree,
                              std::optional<std::uint64_t> modulus = {});

    unsigned degree() const { return degree_; }
    std::uint64_t modulus() const { return modulus_; }

    /// Multiplicative group order, 2^n - 1.
    std::uint32_t order() const { return order_; }

    /// The class of x (primitive by construction).
    FieldElem generator() const { return 2; }

    FieldElem add(FieldElem a, FieldElem b) const { return a ^ b; }
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;
    FieldElem pow(FieldElem a, std::uint64_t e) const;

    /// generator^i, i taken mod 2^n - 1.
    FieldElem exp(std::uint64_t i) const { return exp_table_[i % order_]; }

    /// Discrete log base the generator; nullopt for 0 (the "infinity"
    /// outcome consumed by shift sequences).
    std::optional<std::uint32_t> dlog(FieldElem x) const;

    /// Tr_m^n(x) = x + x^(2^m) + ... ; m must divide n. The result lies in
    /// the subfield of size 2^m (asserted).
    FieldElem trace(unsigned m, FieldElem x) const;

    /// Absolute trace Tr_1^n as a bit.
    bool trace_bit(FieldElem x) const { return trace(1, x) != 0; }

private:
    FieldContext() = default;

    unsigned degree_ = 0;
    std::uint64_t modulus_ = 0;
    std::uint32_t order_ = 0;
    std::vector<FieldElem> exp_table_;       // size order(), exp_table_[i] = x^i
    std::vector<std::uint32_t> log_table_;   // size 2^n, log_table_[0] unused
};

/// Carry-less multiply of a and b reduced mod f (degree n <= 32).
std::uint64_t gf2_polymulmod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t f, unsigned n);

bool gf2_poly_irreducible(std::uint64_t f, unsigned n);
bool gf2_poly_primitive(std::uint64_t f, unsigned n);

/// The `count` smallest primitive polynomials of degree n, ascending.
std::vector<std::uint64_t> primitive_polynomials(unsigned n, unsigned count);

} // namespace ygseq

#endif
