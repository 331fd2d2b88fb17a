// Typed constructors and validators for the eight families of cyclic codes
// over R of length 2^sigma, including the smallest-integer parameters
// L, U, V, W, L1 (closed forms; the oracle re-derives them definitionally).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "u3cyclic/polyring.hpp"

namespace u3c {

// A unit polynomial given in the (x+1) basis: coeffs[k] is the field
// coefficient of (x+1)^k. Empty vector is the distinguished ZERO; otherwise
// coeffs[0] != 0, which makes the lift to S a unit.
struct UnitPoly {
    std::vector<uint32_t> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    // Exact comparison with the constant 1 in the (x+1) basis.
    bool is_one() const;

    static UnitPoly zero() { return {}; }
    static UnitPoly one() { return UnitPoly{{1}}; }

    bool operator==(const UnitPoly&) const = default;
};

// Tagged description of one code. Fields are meaningful per type:
//   Type 1: which (0 -> <0>, 1 -> <1>)
//   Type 2: ell
//   Type 3: ell, t, z                      <u(x+1)^ell + u^2(x+1)^t z>
//   Type 4: ell, t, mu, z                  adds u^2(x+1)^mu
//   Type 5: alpha, T1, T2, z1, z2          <(x+1)^a + u(x+1)^T1 z1 + u^2(x+1)^T2 z2>
//   Type 6: + omega                        adds u^2(x+1)^omega
//   Type 7: + beta, T3, z3                 adds u(x+1)^beta + u^2(x+1)^T3 z3
//   Type 8: + omega                        adds u^2(x+1)^omega
// Exponents of absent unit polynomials must be 0 (canonical form).
struct CodeSpec {
    unsigned sigma = 2;
    unsigned m = 1;
    int type = 1;
    int which = 0;
    int ell = 0, t = 0, mu = 0;
    int alpha = 0, beta = 0, omega = 0;
    int T1 = 0, T2 = 0, T3 = 0;
    UnitPoly z, z1, z2, z3;

    unsigned n() const { return 1u << sigma; }

    bool operator==(const CodeSpec&) const = default;
};

// Smallest-integer parameters; -1 where not applicable for the type.
struct DerivedParams {
    int L = -1, U = -1, V = -1, W = -1, L1 = -1;

    bool operator==(const DerivedParams&) const = default;
};

// Closed forms for L, U, V, W, L1. Depends only on exponents and which unit
// polynomials are nonzero. Precondition: spec shape is valid.
DerivedParams smallest_params_formula(const CodeSpec& spec);

// Every violated constraint, rendered with both sides evaluated
// (e.g. "mu < L violated (mu=3, L=3)"). Empty result means valid.
std::vector<std::string> validate(const CodeSpec& spec);
void validate_or_throw(const CodeSpec& spec);

// Lift of a UnitPoly into S (sum of coeffs[k] * (x+1)^k in the a-layer).
PolyS lift_unit(const UnitPoly& z, const FieldCtx& ctx, unsigned sigma);

// The 0..3 ideal generators in the power basis. Precondition: valid spec.
std::vector<PolyS> generators(const CodeSpec& spec, const FieldCtx& ctx);

// Every valid spec for the requested types in a fixed deterministic order.
// Exponent tuples are exhaustive. Unit-polynomial coefficient assignments
// are exhaustive when their count per exponent tuple is <= budget (or when
// budget == 0), else `budget` distinct assignments are sampled with `seed`.
std::vector<CodeSpec> enumerate_specs(unsigned sigma, unsigned m,
                                      const std::vector<int>& types,
                                      uint64_t budget = 0, uint64_t seed = 1);

// JSON round-trip (bit-exact: fixed key order, canonical form).
std::string spec_to_json(const CodeSpec& spec);
CodeSpec spec_from_json(const std::string& text);

}  // namespace u3c
