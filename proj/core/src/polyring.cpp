#include "u3cyclic/polyring.hpp"

#include <stdexcept>

namespace u3c {

namespace {

void require_sigma(unsigned sigma) {
    if (sigma < 1 || sigma > kMaxSigma)
        throw std::invalid_argument("sigma out of range [1,5]");
}

void require_compatible(const PolyS& f, const PolyS& g) {
    if (f.n != g.n) throw std::invalid_argument("polynomial length mismatch");
    if (f.ctx == nullptr || g.ctx == nullptr || !(*f.ctx == *g.ctx))
        throw std::invalid_argument("polynomial field context mismatch");
}

// Superset-XOR butterfly: out[k] = sum over supersets j of k of in[j].
// Involutive over F_2; equals multiplication by the binomial-parity matrix
// C(j,k) mod 2 in either direction of the power <-> (x+1) basis change.
void sierpinski(std::vector<RingElement>& v) {
    const size_t n = v.size();
    for (size_t bit = 1; bit < n; bit <<= 1)
        for (size_t i = 0; i < n; ++i)
            if (!(i & bit)) v[i] = ring_add(v[i], v[i | bit]);
}

}  // namespace

PolyS poly_zero(const FieldCtx& ctx, unsigned sigma) {
    require_sigma(sigma);
    unsigned n = 1u << sigma;
    return PolyS{sigma, n, std::vector<RingElement>(n, ring_zero(ctx)), &ctx};
}

PolyS poly_one(const FieldCtx& ctx, unsigned sigma) {
    PolyS f = poly_zero(ctx, sigma);
    f.coeffs[0] = ring_one(ctx);
    return f;
}

PolyS poly_xpow(const FieldCtx& ctx, unsigned sigma, unsigned k) {
    PolyS f = poly_zero(ctx, sigma);
    f.coeffs[k % f.n] = ring_one(ctx);
    return f;
}

PolyS poly_xp1_pow(const FieldCtx& ctx, unsigned sigma, unsigned e, RingElement r) {
    PolyS f = poly_zero(ctx, sigma);
    if (e > f.n) throw std::invalid_argument("(x+1) exponent out of range [0,n]");
    if (e == f.n) return f;  // (x+1)^n = x^n + 1 = 0
    // (x+1)^e = sum over subsets j of e of x^j (Lucas).
    for (unsigned j = 0; j < f.n; ++j)
        if ((j & e) == j) f.coeffs[j] = r;
    return f;
}

PolyS poly_add(const PolyS& f, const PolyS& g) {
    require_compatible(f, g);
    PolyS h = f;
    for (unsigned i = 0; i < f.n; ++i) h.coeffs[i] = ring_add(h.coeffs[i], g.coeffs[i]);
    return h;
}

PolyS poly_mul(const PolyS& f, const PolyS& g) {
    require_compatible(f, g);
    PolyS h = poly_zero(*f.ctx, f.sigma);
    for (unsigned i = 0; i < f.n; ++i) {
        if (f.coeffs[i].is_zero()) continue;
        for (unsigned j = 0; j < g.n; ++j) {
            if (g.coeffs[j].is_zero()) continue;
            unsigned k = (i + j) & (f.n - 1);
            h.coeffs[k] = ring_add(h.coeffs[k], ring_mul(f.coeffs[i], g.coeffs[j]));
        }
    }
    return h;
}

PolyS poly_scale(RingElement r, const PolyS& f) {
    PolyS h = f;
    for (auto& c : h.coeffs) c = ring_mul(r, c);
    return h;
}

bool poly_eq(const PolyS& f, const PolyS& g) {
    if (f.n != g.n || !(*f.ctx == *g.ctx)) return false;
    for (unsigned i = 0; i < f.n; ++i) {
        const RingElement &a = f.coeffs[i], &b = g.coeffs[i];
        if (a.a.bits != b.a.bits || a.b.bits != b.b.bits || a.c.bits != b.c.bits)
            return false;
    }
    return true;
}

XPlusOneCoeffs to_xp1(const PolyS& f) {
    XPlusOneCoeffs g{f.sigma, f.n, f.coeffs, f.ctx};
    sierpinski(g.coeffs);
    return g;
}

PolyS from_xp1(const XPlusOneCoeffs& g) {
    PolyS f{g.sigma, g.n, g.coeffs, g.ctx};
    sierpinski(f.coeffs);
    return f;
}

bool is_unit_in_S(const PolyS& f) {
    FieldElement s = fe(*f.ctx, 0);
    for (const auto& c : f.coeffs) s = add(s, c.a);
    return !s.is_zero();
}

unsigned lee_weight_poly(const PolyS& f, const TraceOrthogonalBasis& B) {
    unsigned w = 0;
    for (const auto& c : f.coeffs) w += lee_weight_ring(c, B);
    return w;
}

unsigned hamming_weight_poly(const PolyS& f) {
    unsigned w = 0;
    for (const auto& c : f.coeffs) w += !c.is_zero();
    return w;
}

std::string to_string(const PolyS& f) {
    std::string s;
    for (unsigned i = 0; i < f.n; ++i) {
        if (f.coeffs[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + to_string(f.coeffs[i]) + ")*x^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

}  // namespace u3c
