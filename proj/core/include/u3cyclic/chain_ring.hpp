// The local chain ring R = GF(2^m) + u GF(2^m) + u^2 GF(2^m) with u^3 = 0.
#pragma once

#include <cstdint>
#include <string>

#include "u3cyclic/gf2m.hpp"

namespace u3c {

// a + u*b + u^2*c. Units are exactly the elements with a != 0 (R is local
// with maximal ideal <u>).
struct RingElement {
    FieldElement a, b, c;

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
    bool is_unit() const { return !a.is_zero(); }
};

RingElement re(const FieldCtx& ctx, uint32_t a, uint32_t b, uint32_t c);
RingElement ring_zero(const FieldCtx& ctx);
RingElement ring_one(const FieldCtx& ctx);

RingElement ring_add(RingElement x, RingElement y);
// (a1 a2) + u (a1 b2 + b1 a2) + u^2 (a1 c2 + b1 b2 + c1 a2); u^3 and higher vanish.
RingElement ring_mul(RingElement x, RingElement y);
// Inverse of a unit via the truncated geometric series on the nilpotent part;
// throws std::domain_error on non-units.
RingElement ring_inverse(RingElement x);
// Scalar action of GF(2^m) on R.
RingElement ring_scale(FieldElement s, RingElement x);

// Lee weight wt(a+b+c) + wt(b+c) + wt(b); range [0, 3m], 0 iff x = 0.
unsigned lee_weight_ring(RingElement x, const TraceOrthogonalBasis& B);

// Gray image: tob-coords of (a+b+c | b+c | b), 3m bits, coordinate-major
// within the returned word (block k occupies bits [k*m, (k+1)*m)).
// F_2-linear; its Hamming weight equals lee_weight_ring.
uint64_t gray_map(RingElement x, const TraceOrthogonalBasis& B);

// Textual form "a+u*b+u^2*c" with hex field elements.
std::string to_string(RingElement x);

}  // namespace u3c
