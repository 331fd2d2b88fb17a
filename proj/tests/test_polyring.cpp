#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "u3cyclic/chain_ring.hpp"
#include "u3cyclic/gf2m.hpp"
#include "u3cyclic/polyring.hpp"

using namespace u3c;

namespace {

PolyS random_poly(const FieldCtx& ctx, unsigned sigma, std::mt19937& rng) {
    PolyS f = poly_zero(ctx, sigma);
    const uint32_t mask = (1u << ctx.m) - 1;
    for (auto& c : f.coeffs)
        c = re(ctx, rng() & mask, rng() & mask, rng() & mask);
    return f;
}

}  // namespace

TEST_SUITE("polyring") {

TEST_CASE("butterfly basis change is involutive, exhaustive sigma=2 m=1") {
    const FieldCtx ctx = FieldCtx::make(1);
    for (uint32_t idx = 0; idx < (1u << 12); ++idx) {
        PolyS f = poly_zero(ctx, 2);
        for (unsigned i = 0; i < 4; ++i)
            f.coeffs[i] = re(ctx, idx >> (3 * i) & 1, idx >> (3 * i + 1) & 1,
                             idx >> (3 * i + 2) & 1);
        CHECK(poly_eq(from_xp1(to_xp1(f)), f));
    }
}

TEST_CASE("butterfly round-trip, random sigma/m") {
    std::mt19937 rng(7);
    for (unsigned sigma = 2; sigma <= 5; ++sigma)
        for (unsigned m = 1; m <= 3; ++m) {
            const FieldCtx ctx = FieldCtx::make(m);
            for (int rep = 0; rep < 20; ++rep) {
                const PolyS f = random_poly(ctx, sigma, rng);
                CHECK(poly_eq(from_xp1(to_xp1(f)), f));
            }
        }
}

TEST_CASE("(x+1)-basis identities: nilpotency and the all-ones top power") {
    for (unsigned sigma = 2; sigma <= 4; ++sigma) {
        const FieldCtx ctx = FieldCtx::make(1);
        const unsigned n = 1u << sigma;
        // (x+1)^n = x^n + 1 = 0 in S.
        CHECK(poly_eq(poly_xp1_pow(ctx, sigma, n, ring_one(ctx)),
                      poly_zero(ctx, sigma)));
        // (x+1)^(n-1) has all binomial coefficients odd: the all-ones poly.
        const PolyS top = poly_xp1_pow(ctx, sigma, n - 1, ring_one(ctx));
        for (const auto& c : top.coeffs) CHECK(c.a.bits == 1);
        // x^n = 1.
        CHECK(poly_eq(poly_xpow(ctx, sigma, n), poly_one(ctx, sigma)));
    }
}

TEST_CASE("multiplication: commutative, associative, distributive (random)") {
    std::mt19937 rng(11);
    const FieldCtx ctx = FieldCtx::make(2);
    for (int rep = 0; rep < 30; ++rep) {
        const PolyS f = random_poly(ctx, 3, rng);
        const PolyS g = random_poly(ctx, 3, rng);
        const PolyS h = random_poly(ctx, 3, rng);
        CHECK(poly_eq(poly_mul(f, g), poly_mul(g, f)));
        CHECK(poly_eq(poly_mul(poly_mul(f, g), h),
                      poly_mul(f, poly_mul(g, h))));
        CHECK(poly_eq(poly_mul(f, poly_add(g, h)),
                      poly_add(poly_mul(f, g), poly_mul(f, h))));
        CHECK(poly_eq(poly_mul(f, poly_one(ctx, 3)), f));
    }
}

TEST_CASE("units of S: nonzero field-layer coefficient sum") {
    const FieldCtx ctx = FieldCtx::make(1);
    // 1 + x sums to 0 in the field layer: a zero divisor.
    PolyS f = poly_add(poly_one(ctx, 2), poly_xpow(ctx, 2, 1));
    CHECK(!is_unit_in_S(f));
    CHECK(is_unit_in_S(poly_xpow(ctx, 2, 3)));
    CHECK(is_unit_in_S(poly_one(ctx, 2)));
    // u alone is nilpotent, 1 + u(x + x^2) is a unit.
    PolyS g = poly_one(ctx, 2);
    g.coeffs[1] = re(ctx, 0, 1, 0);
    g.coeffs[2] = re(ctx, 0, 1, 0);
    CHECK(is_unit_in_S(g));
    PolyS h = poly_zero(ctx, 2);
    h.coeffs[0] = re(ctx, 0, 1, 0);
    CHECK(!is_unit_in_S(h));
}

TEST_CASE("poly weights sum coefficient weights") {
    std::mt19937 rng(13);
    const FieldCtx ctx = FieldCtx::make(2);
    const TraceOrthogonalBasis B = find_tob(ctx);
    for (int rep = 0; rep < 20; ++rep) {
        const PolyS f = random_poly(ctx, 2, rng);
        unsigned lee = 0, ham = 0;
        for (const auto& c : f.coeffs) {
            lee += lee_weight_ring(c, B);
            ham += c.is_zero() ? 0 : 1;
        }
        CHECK(lee_weight_poly(f, B) == lee);
        CHECK(hamming_weight_poly(f) == ham);
    }
}

TEST_CASE("scale by a unit preserves membership-relevant shape") {
    // (1+u) * u (x+1)^l = u(x+1)^l + u^2(x+1)^l: the collapse element lives
    // in every ideal containing u(x+1)^l, with Lee weight wt((x+1)^l).
    const FieldCtx ctx = FieldCtx::make(1);
    const TraceOrthogonalBasis B = find_tob(ctx);
    for (unsigned sigma = 2; sigma <= 3; ++sigma)
        for (unsigned l = 0; l < (1u << (sigma - 1)); ++l) {
            const PolyS up = poly_xp1_pow(ctx, sigma, l, re(ctx, 0, 1, 0));
            const PolyS collapsed =
                poly_scale(re(ctx, 1, 1, 0), up);  // (1+u) * u(x+1)^l
            const PolyS field = poly_xp1_pow(ctx, sigma, l, ring_one(ctx));
            CHECK(lee_weight_poly(collapsed, B) ==
                  hamming_weight_poly(field));
        }
}

TEST_CASE("to_string frozen form") {
    const FieldCtx ctx = FieldCtx::make(1);
    PolyS f = poly_xp1_pow(ctx, 2, 2, ring_one(ctx));  // (x+1)^2 = 1 + x^2
    CHECK(to_string(f) ==
          "(0x1+u*0x0+u^2*0x0)*x^0 + (0x1+u*0x0+u^2*0x0)*x^2");
    CHECK(to_string(poly_zero(ctx, 2)) == "0");
}

}  // TEST_SUITE
