#include <doctest.h>

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>

#include "ygseq/gf2k.hpp"

using namespace ygseq;

namespace {

// Independent polynomial arithmetic for cross-checking the table-backed
// field: schoolbook multiply then long division, no shared code paths.
std::uint64_t ref_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f,
                         unsigned n) {
    std::uint64_t prod = 0;
    for (unsigned i = 0; i < 2 * n; ++i)
        if ((b >> i) & 1) prod ^= a << i;
    for (int d = 2 * n; d >= static_cast<int>(n); --d)
        if ((prod >> d) & 1) prod ^= f << (d - n);
    return prod;
}

// Multiplicative order of x mod f by brute iteration; 0 when x never
// returns to 1 (x not a unit, or f reducible with x trapped).
std::uint32_t ref_order_of_x(std::uint64_t f, unsigned n) {
    const std::uint64_t x = ref_mulmod(1, 2, f, n);
    if (x == 0) return 0;
    std::uint64_t acc = x;
    for (std::uint32_t i = 1; i <= (1u << n); ++i) {
        if (acc == 1) return i;
        acc = ref_mulmod(acc, x, f, n);
    }
    return 0;
}

} // namespace

TEST_CASE("default modulus is the smallest primitive polynomial") {
    // Oracle: scan all degree-4 polynomials and find the first whose x has
    // full order 15 via independent arithmetic.
    std::uint64_t smallest = 0;
    for (std::uint64_t f = 0x10; f < 0x20 && !smallest; ++f)
        if (ref_order_of_x(f, 4) == 15) smallest = f;
    CHECK(smallest == 0x13);

    auto ctx = FieldContext::build(4);
    CHECK(ctx.modulus() == 0x13);
    CHECK(FieldContext::build(2).modulus() == 0x7);
}

TEST_CASE("non-primitive or malformed moduli are rejected") {
    // x^4 + x^3 + x^2 + x + 1: x has order 5, not 15
    CHECK(ref_order_of_x(0x1F, 4) == 5);
    CHECK_THROWS_WITH_AS(FieldContext::build(4, 0x1F),
                         doctest::Contains("not primitive"),
                         std::invalid_argument);
    // x^4 + 1 = (x + 1)^4
    CHECK_THROWS_WITH_AS(FieldContext::build(4, 0x11),
                         doctest::Contains("not irreducible"),
                         std::invalid_argument);
    CHECK_THROWS_AS(FieldContext::build(0), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext::build(33), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext::build(4, 0x13000), std::invalid_argument);
}

TEST_CASE("multiplication agrees with independent polynomial arithmetic") {
    for (unsigned n : {3u, 4u, 6u, 8u}) {
        auto ctx = FieldContext::build(n);
        std::mt19937 rng(n);
        for (int i = 0; i < 200; ++i) {
            FieldElem a = rng() & ctx.order();
            FieldElem b = rng() & ctx.order();
            CHECK(ctx.mul(a, b) == ref_mulmod(a, b, ctx.modulus(), n));
        }
    }
}

TEST_CASE("exp/log round-trips over the whole group") {
    for (unsigned n = 2; n <= 10; ++n) {
        auto ctx = FieldContext::build(n);
        std::set<FieldElem> seen;
        for (std::uint32_t i = 0; i < ctx.order(); ++i) {
            FieldElem x = ctx.exp(i);
            seen.insert(x);
            REQUIRE(ctx.dlog(x) == i);
        }
        CHECK(seen.size() == ctx.order());  // all distinct, all nonzero hit
        CHECK(ctx.dlog(0) == std::nullopt);
        CHECK(ctx.dlog(1) == 0u);
        CHECK(ctx.dlog(ctx.generator()) == 1u);
    }
}

TEST_CASE("dlog on a hand-computed power") {
    auto ctx = FieldContext::build(4, 0x13);
    // alpha^14 = alpha^(-1) = alpha^3 + 1 since alpha^4 = alpha + 1
    CHECK(ctx.dlog(0b1001) == 14u);
}

TEST_CASE("trace values from the definition") {
    auto ctx = FieldContext::build(4, 0x13);
    CHECK(ctx.trace(1, 1) == 0);  // 1+1+1+1
    CHECK(ctx.trace(2, 1) == 0);  // 1+1
    // Tr_1^4(alpha) = alpha + alpha^2 + alpha^4 + alpha^8 by table lookup
    FieldElem alpha = ctx.generator();
    FieldElem expect = ctx.add(ctx.add(ctx.exp(1), ctx.exp(2)),
                               ctx.add(ctx.exp(4), ctx.exp(8)));
    CHECK(ctx.trace(1, alpha) == expect);
    CHECK(ctx.trace(1, alpha) == 0);

    CHECK_THROWS_AS(ctx.trace(3, 1), std::invalid_argument);
}

TEST_CASE("trace linearity") {
    for (unsigned n : {4u, 6u, 8u, 12u}) {
        auto ctx = FieldContext::build(n);
        std::mt19937 rng(7 * n);
        for (int i = 0; i < 100; ++i) {
            FieldElem x = rng() & ctx.order();
            FieldElem y = rng() & ctx.order();
            for (unsigned m = 1; m <= n; ++m) {
                if (n % m) continue;
                CHECK(ctx.trace(m, ctx.add(x, y)) ==
                      ctx.add(ctx.trace(m, x), ctx.trace(m, y)));
            }
        }
    }
}

TEST_CASE("trace transitivity, exhaustive up to degree 8") {
    // Tr_1^m of a subfield element, summed over the subfield's own Frobenius.
    auto subfield_abs_trace = [](const FieldContext& ctx, unsigned m,
                                 FieldElem y) {
        FieldElem acc = y, z = y;
        for (unsigned i = 1; i < m; ++i) {
            z = ctx.mul(z, z);
            acc = ctx.add(acc, z);
        }
        return acc;
    };
    for (unsigned n = 2; n <= 8; ++n) {
        auto ctx = FieldContext::build(n);
        for (unsigned m = 2; m < n; ++m) {
            if (n % m) continue;
            for (std::uint32_t x = 0; x <= ctx.order(); ++x) {
                REQUIRE(ctx.trace(1, x) ==
                        subfield_abs_trace(ctx, m, ctx.trace(m, x)));
            }
        }
    }
}

TEST_CASE("absolute trace is balanced") {
    for (unsigned n = 2; n <= 8; ++n) {
        auto ctx = FieldContext::build(n);
        std::uint32_t ones = 0;
        for (std::uint32_t x = 0; x <= ctx.order(); ++x)
            ones += ctx.trace(1, x) != 0;
        CHECK(ones == (1u << (n - 1)));
    }
}

TEST_CASE("primitive polynomial enumeration is ascending and valid") {
    auto polys = primitive_polynomials(6, 3);
    REQUIRE(polys.size() == 3);
    CHECK(polys[0] < polys[1]);
    CHECK(polys[1] < polys[2]);
    for (auto f : polys) CHECK(ref_order_of_x(f, 6) == 63);
}
