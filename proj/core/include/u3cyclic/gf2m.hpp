// Arithmetic in GF(2^m), the trace map, and trace orthogonal bases.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace u3c {

// Returns the lexicographically least irreducible polynomial of degree m
// over F_2, encoded with bit i holding the coefficient of x^i.
uint32_t least_irreducible(unsigned m);

// Irreducibility over F_2 by trial division against every polynomial of
// degree 1..deg(p)/2.
bool is_irreducible(uint32_t p);

// GF(2^m) described by an irreducible modulus, 1 <= m <= 16.
struct FieldCtx {
    unsigned m = 1;
    uint32_t modulus = 0x2;  // bit i = coefficient of x^i; bit m always set

    // Field with the shipped modulus table (least_irreducible).
    static FieldCtx make(unsigned m);
    // Field with an explicit modulus; rejects reducible or ill-sized input.
    static FieldCtx with_modulus(unsigned m, uint32_t modulus);

    bool operator==(const FieldCtx&) const = default;
};

// Value-semantic element of a FieldCtx; bits < 2^m in the polynomial basis.
struct FieldElement {
    uint32_t bits = 0;
    const FieldCtx* ctx = nullptr;

    bool is_zero() const { return bits == 0; }
};

// Range-checked constructor.
FieldElement fe(const FieldCtx& ctx, uint32_t bits);

FieldElement add(FieldElement a, FieldElement b);  // XOR
FieldElement mul(FieldElement a, FieldElement b);  // carry-less product mod modulus
FieldElement inv(FieldElement a);                  // a != 0
FieldElement fe_pow(FieldElement a, uint64_t e);

// Tr(x) = x + x^2 + x^4 + ... + x^(2^(m-1)); lands in {0, 1}.
FieldElement trace(FieldElement x);

// Basis {zeta_1..zeta_m} of GF(2^m) over F_2 with Tr(zeta_i * zeta_j) = delta_ij.
struct TraceOrthogonalBasis {
    std::vector<FieldElement> elems;
    const FieldCtx* ctx = nullptr;
};

// Deterministic search (lexicographic DFS over candidate elements); the
// result always satisfies the Gram-identity invariant. m <= 16.
TraceOrthogonalBasis find_tob(const FieldCtx& ctx);

// First `count` ordered trace orthogonal bases in the same DFS order;
// used to compare weights across bases.
std::vector<TraceOrthogonalBasis> distinct_tobs(const FieldCtx& ctx, size_t count);

// Coordinates of x on B, bit i = coefficient of zeta_(i+1) = Tr(x * zeta_(i+1)).
uint32_t tob_coords(FieldElement x, const TraceOrthogonalBasis& B);

// Number of nonzero TOB coordinates; 0 <= result <= m, 0 iff x = 0.
unsigned lee_weight_field(FieldElement x, const TraceOrthogonalBasis& B);

// Textual forms: elements as hex ("0x3"), modulus as a bit string ("111").
std::string bits_to_hex(uint32_t bits);
uint32_t hex_to_bits(const std::string& s);
std::string to_hex(FieldElement x);
FieldElement parse_hex(const FieldCtx& ctx, const std::string& s);
std::string modulus_bit_string(const FieldCtx& ctx);

}  // namespace u3c
