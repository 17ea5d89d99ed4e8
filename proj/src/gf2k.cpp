#include "ygseq/gf2k.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace ygseq {

namespace {

unsigned poly_degree(std::uint64_t f) {
    unsigned d = 0;
    while (f >>= 1) ++d;
    return d;
}

// x^e mod f in GF(2)[x].
std::uint64_t polypowmod(std::uint64_t base, std::uint64_t e,
                         std::uint64_t f, unsigned n) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = gf2_polymulmod(r, base, f, n);
        base = gf2_polymulmod(base, base, f, n);
        e >>= 1;
    }
    return r;
}

std::uint64_t polygcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        // a mod b by long division
        unsigned db = poly_degree(b);
        while (a && poly_degree(a) >= db) {
            a ^= b << (poly_degree(a) - db);
        }
        std::swap(a, b);
    }
    return a;
}

std::vector<std::uint32_t> prime_factors_u32(std::uint64_t v) {
    std::vector<std::uint32_t> ps;
    for (std::uint64_t p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
        if (v % p == 0) {
            ps.push_back(static_cast<std::uint32_t>(p));
            while (v % p == 0) v /= p;
        }
    }
    if (v > 1) ps.push_back(static_cast<std::uint32_t>(v));
    return ps;
}

} // namespace

std::uint64_t gf2_polymulmod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t f, unsigned n) {
    while (a >> n) a ^= f << (poly_degree(a) - n);
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> n) a ^= f;
    }
    return r;
}

bool gf2_poly_irreducible(std::uint64_t f, unsigned n) {
    if (n == 0 || poly_degree(f) != n) return false;
    if ((f & 1) == 0) return f == 2;  // divisible by x
    // Rabin test: x^(2^n) == x mod f, and gcd(x^(2^(n/q)) - x, f) = 1
    // for every prime q dividing n.
    std::uint64_t xq = 2;
    for (unsigned i = 0; i < n; ++i) xq = gf2_polymulmod(xq, xq, f, n);
    if (xq != 2) return false;
    for (std::uint32_t q : prime_factors_u32(n)) {
        std::uint64_t t = 2;
        for (unsigned i = 0; i < n / q; ++i) t = gf2_polymulmod(t, t, f, n);
        if (polygcd(t ^ 2ull, f) != 1) return false;
    }
    return true;
}

bool gf2_poly_primitive(std::uint64_t f, unsigned n) {
    if (!gf2_poly_irreducible(f, n)) return false;
    std::uint64_t order = (n == 32) ? 0xFFFFFFFFull : ((1ull << n) - 1);
    for (std::uint32_t p : prime_factors_u32(order)) {
        if (polypowmod(2, order / p, f, n) == 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> primitive_polynomials(unsigned n, unsigned count) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = (1ull << n) | 1; f < (1ull << (n + 1)) && out.size() < count;
         f += 2) {
        if (gf2_poly_primitive(f, n)) out.push_back(f);
    }
    return out;
}

FieldContext FieldContext::build(unsigned degree,
                                 std::optional<std::uint64_t> modulus) {
    if (degree < 1 || degree > 32)
        throw std::invalid_argument("field degree must be in [1, 32]");

    std::uint64_t f;
    if (modulus) {
        f = *modulus;
        if (poly_degree(f) != degree) {
            std::ostringstream os;
            os << "modulus 0x" << std::hex << f << " does not have degree "
               << std::dec << degree;
            throw std::invalid_argument(os.str());
        }
        if (!gf2_poly_irreducible(f, degree)) {
            std::ostringstream os;
            os << "modulus 0x" << std::hex << f << " is not irreducible";
            throw std::invalid_argument(os.str());
        }
        if (!gf2_poly_primitive(f, degree)) {
            std::ostringstream os;
            os << "modulus 0x" << std::hex << f
               << " is irreducible but not primitive (x does not generate the"
                  " multiplicative group)";
            throw std::invalid_argument(os.str());
        }
    } else {
        auto found = primitive_polynomials(degree, 1);
        if (found.empty())
            throw std::invalid_argument("no primitive polynomial found");
        f = found.front();
    }

    FieldContext ctx;
    ctx.degree_ = degree;
    ctx.modulus_ = f;
    ctx.order_ = (degree == 32) ? 0xFFFFFFFFu
                                : static_cast<std::uint32_t>((1ull << degree) - 1);
    ctx.exp_table_.resize(ctx.order_);
    ctx.log_table_.assign(std::size_t{ctx.order_} + 1, 0);
    std::uint64_t b = 1;
    for (std::uint32_t i = 0; i < ctx.order_; ++i) {
        ctx.exp_table_[i] = static_cast<FieldElem>(b);
        ctx.log_table_[b] = i;
        b <<= 1;
        if (b >> degree) b ^= f;
    }
    if (b != 1)
        throw std::invalid_argument("modulus failed the full-cycle check");
    return ctx;
}

FieldElem FieldContext::mul(FieldElem a, FieldElem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t s = std::uint64_t{log_table_[a]} + log_table_[b];
    if (s >= order_) s -= order_;
    return exp_table_[s];
}

FieldElem FieldContext::inv(FieldElem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    std::uint32_t l = log_table_[a];
    return exp_table_[(order_ - l) % order_];
}

FieldElem FieldContext::pow(FieldElem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint64_t l = (std::uint64_t{log_table_[a]} * (e % order_)) % order_;
    return exp_table_[l];
}

std::optional<std::uint32_t> FieldContext::dlog(FieldElem x) const {
    if (x == 0) return std::nullopt;
    if (x > order_) throw std::domain_error("element outside the field");
    return log_table_[x];
}

FieldElem FieldContext::trace(unsigned m, FieldElem x) const {
    if (m == 0 || degree_ % m != 0)
        throw std::invalid_argument("trace target degree must divide the field degree");
    FieldElem acc = x;
    FieldElem y = x;
    for (unsigned step = 1; step < degree_ / m; ++step) {
        for (unsigned i = 0; i < m; ++i) y = mul(y, y);
        acc = add(acc, y);
    }
    // result must be fixed by the subfield Frobenius
    FieldElem check = acc;
    for (unsigned i = 0; i < m; ++i) check = mul(check, check);
    assert(check == acc);
    return acc;
}

} // namespace ygseq
