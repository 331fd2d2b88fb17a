// The ambient ring S = R[x]/(x^n - 1) with n = 2^sigma: cyclic-convolution
// arithmetic, the (x+1)-adic representation, unit test, and weights.
//
// In characteristic 2, x^n - 1 = (x+1)^n, so {(x+1)^k : 0 <= k < n} is a
// second basis; the change of basis is the binomial-parity involution.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "u3cyclic/chain_ring.hpp"

namespace u3c {

inline constexpr unsigned kMaxSigma = 5;  // n = 2^sigma <= 32

// Power-basis element of S (canonical representation for equality).
struct PolyS {
    unsigned sigma = 1;
    unsigned n = 2;                    // always 2^sigma
    std::vector<RingElement> coeffs;   // degree 0..n-1
    const FieldCtx* ctx = nullptr;
};

// The same data in the basis {(x+1)^k : 0 <= k < n}.
struct XPlusOneCoeffs {
    unsigned sigma = 1;
    unsigned n = 2;
    std::vector<RingElement> coeffs;
    const FieldCtx* ctx = nullptr;
};

PolyS poly_zero(const FieldCtx& ctx, unsigned sigma);
PolyS poly_one(const FieldCtx& ctx, unsigned sigma);
// x^k (k taken mod n).
PolyS poly_xpow(const FieldCtx& ctx, unsigned sigma, unsigned k);
// r * (x+1)^e; e in [0, n] (e = n gives 0).
PolyS poly_xp1_pow(const FieldCtx& ctx, unsigned sigma, unsigned e, RingElement r);

PolyS poly_add(const PolyS& f, const PolyS& g);
// Cyclic convolution (x^n = 1).
PolyS poly_mul(const PolyS& f, const PolyS& g);
PolyS poly_scale(RingElement r, const PolyS& f);
bool poly_eq(const PolyS& f, const PolyS& g);

// Basis changes; both directions are the same involutive superset-XOR
// (Sierpinski) butterfly applied to each of the a/b/c layers.
XPlusOneCoeffs to_xp1(const PolyS& f);
PolyS from_xp1(const XPlusOneCoeffs& g);

// Unit test in S: the natural reduction mod <x+1, u> (field part evaluated
// at x = 1) must be nonzero, i.e. sum of the a-layer coefficients != 0.
bool is_unit_in_S(const PolyS& f);

// Sum of coefficient Lee weights == Hamming weight of the 3mn-bit Gray image.
unsigned lee_weight_poly(const PolyS& f, const TraceOrthogonalBasis& B);
// Count of nonzero RingElement coefficients.
unsigned hamming_weight_poly(const PolyS& f);

// Textual form "coeff*x^k + ..." with RingElement syntax; zero prints "0".
std::string to_string(const PolyS& f);

}  // namespace u3c
