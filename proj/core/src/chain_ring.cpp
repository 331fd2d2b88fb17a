#include "u3cyclic/chain_ring.hpp"

#include <bit>
#include <stdexcept>

namespace u3c {

RingElement re(const FieldCtx& ctx, uint32_t a, uint32_t b, uint32_t c) {
    return RingElement{fe(ctx, a), fe(ctx, b), fe(ctx, c)};
}

RingElement ring_zero(const FieldCtx& ctx) { return re(ctx, 0, 0, 0); }
RingElement ring_one(const FieldCtx& ctx) { return re(ctx, 1, 0, 0); }

RingElement ring_add(RingElement x, RingElement y) {
    return RingElement{add(x.a, y.a), add(x.b, y.b), add(x.c, y.c)};
}

RingElement ring_mul(RingElement x, RingElement y) {
    FieldElement a = mul(x.a, y.a);
    FieldElement b = add(mul(x.a, y.b), mul(x.b, y.a));
    FieldElement c = add(add(mul(x.a, y.c), mul(x.b, y.b)), mul(x.c, y.a));
    return RingElement{a, b, c};
}

RingElement ring_inverse(RingElement x) {
    if (!x.is_unit()) throw std::domain_error("ring element is not a unit (a = 0)");
    // x = a (1 + u s + u^2 t) with s = b/a, t = c/a;
    // (1 + n)^(-1) = 1 + n + n^2 for nilpotent n of index 3.
    FieldElement ai = inv(x.a);
    FieldElement s = mul(x.b, ai), t = mul(x.c, ai);
    // (1 + u s + u^2 t)^(-1) = 1 + u s + u^2 (t + s^2) in characteristic 2.
    RingElement unit_inv{fe(*x.a.ctx, 1), s, add(t, mul(s, s))};
    return ring_scale(ai, unit_inv);
}

RingElement ring_scale(FieldElement s, RingElement x) {
    return RingElement{mul(s, x.a), mul(s, x.b), mul(s, x.c)};
}

unsigned lee_weight_ring(RingElement x, const TraceOrthogonalBasis& B) {
    return static_cast<unsigned>(std::popcount(gray_map(x, B)));
}

uint64_t gray_map(RingElement x, const TraceOrthogonalBasis& B) {
    const unsigned m = x.a.ctx->m;
    FieldElement abc = add(add(x.a, x.b), x.c);
    FieldElement bc = add(x.b, x.c);
    uint64_t g = tob_coords(abc, B);
    g |= uint64_t{tob_coords(bc, B)} << m;
    g |= uint64_t{tob_coords(x.b, B)} << (2 * m);
    return g;
}

std::string to_string(RingElement x) {
    return to_hex(x.a) + "+u*" + to_hex(x.b) + "+u^2*" + to_hex(x.c);
}

}  // namespace u3c
