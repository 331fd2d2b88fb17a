// Ground truth for the distance theorems: the code as an F_2-span of Gray
// images, exact minimum weights by Gray-code enumeration, ideal membership,
// and the definitional smallest exponents that Theorem-style closed forms
// are audited against.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "u3cyclic/codespec.hpp"

namespace u3c {

// Hard structural cap: the Gray image of one codeword is 3*m*n bits and must
// fit in two machine words.
inline constexpr unsigned kMaxSpanBits = 96;

// Enumeration budget: spans of larger dimension are refused rather than
// sampled (2^26 is ~67M codewords). Full-rank spans are exempt — the unit
// ideal contains weight-1 vectors, so no enumeration is needed.
inline constexpr unsigned kOracleBudget = 26;

// Pinned bit layout of one codeword: coordinate-major, with coordinate i
// occupying bits [3m*i, 3m*(i+1)) as tob-coords of (a+b+c | b+c | b).
inline constexpr const char* kSpanLayoutTag = "cm-abc-bc-b";

// One 3mn-bit row, little-endian within and across the two words.
using BitRow = std::array<uint64_t, 2>;

// F_2-span of the code's Gray image, in reduced row echelon form with pivots
// at the lowest set bit, rows in ascending pivot order. The representation is
// canonical: two spans are the same code iff their rows are equal.
struct BinarySpan {
    unsigned sigma = 2;
    unsigned m = 1;
    unsigned nbits = 0;  // 3 * m * 2^sigma
    std::vector<BitRow> rows;

    unsigned k() const { return unsigned(rows.size()); }
};

// Exact minima plus the first codewords attaining them in enumeration order.
struct OracleReport {
    unsigned d_lee = 0;
    unsigned d_hamming = 0;
    PolyS witness_lee;
    PolyS witness_hamming;
    unsigned k = 0;
    uint64_t enumerated = 0;
};

// The span of {zeta_j * u^e * x^i * g : field basis zeta_j, e in {0,1,2},
// 0 <= i < n, generators g}, i.e. the full R-module generated, Gray-imaged.
// Verifies shift- and u-closure of the result. Throws std::runtime_error
// with a "capacity:" prefix when 3*m*n > kMaxSpanBits or when the resulting
// k exceeds `budget` without reaching full rank.
BinarySpan build_span(const CodeSpec& spec, const TraceOrthogonalBasis& B,
                      unsigned budget = kOracleBudget);

// Exact d_lee (min bit weight) and d_hamming (min count of nonzero 3m-bit
// coordinate blocks) over all 2^k - 1 nonzero codewords, visited in reflected
// Gray-code order over the basis rows (one XOR per step). Witnesses are the
// first codewords attaining each minimum. k = 0 reports both distances as 0;
// k = nbits reports both as 1 without enumerating.
OracleReport min_weights(const BinarySpan& span, const TraceOrthogonalBasis& B);

// True iff gray(f) reduces to zero against the span's rows. Throws
// std::invalid_argument when f or B disagree with the span's sigma/m.
bool membership(const PolyS& f, const BinarySpan& span,
                const TraceOrthogonalBasis& B);

// The two membership forms behind the smallest-integer parameters.
enum class SmallestForm {
    u2_xp1,        // u^2 (x+1)^e in the span
    u_xp1_free_u2  // u (x+1)^e + u^2 g(x) in the span for SOME g in S
};

// Minimal e in [0, 2^sigma] satisfying the form; 2^sigma means only the zero
// multiple qualifies. The existential form is decided in the quotient by the
// u^2-layer: per coordinate the Gray blocks collapse to coords(a)|coords(b),
// and membership is tested against the projected span.
int smallest_exponent(const BinarySpan& span, SmallestForm form,
                      const TraceOrthogonalBasis& B);

// Definitional counterpart of smallest_params_formula, re-derived from
// membership scans against the generator subsets each parameter is defined
// over (L1 against the second generator alone, W without the u^2(x+1)^omega
// generator, U and V against the first generator for types with more).
DerivedParams smallest_params_oracle(const CodeSpec& spec,
                                     const TraceOrthogonalBasis& B);

// d_lee recomputed per basis (span + enumeration under each); constant by
// the TOB-invariance property.
std::vector<unsigned> min_weights_multibasis(
    const CodeSpec& spec, const std::vector<TraceOrthogonalBasis>& bases);

// Second, slower oracle for tiny codes: closes the generator set under
// addition and the R[x]-scalar action entirely in polynomial arithmetic
// (never touching the bit-matrix), then minimizes lee_weight_poly. Throws a
// "capacity:" error when the closure would exceed `element_cap` elements.
unsigned min_lee_direct(const CodeSpec& spec, const TraceOrthogonalBasis& B,
                        size_t element_cap = 4096);

// Text form: one header line "u3span sigma=S m=M layout=TAG k=K" followed by
// k hex rows (bit 0 least significant), lowest pivot first.
std::string span_to_text(const BinarySpan& span);
// Inverse; validates the layout tag, row width, and RREF shape.
BinarySpan span_from_text(const std::string& text);

// Fixed-key-order JSON with witnesses rendered through to_string.
std::string report_to_json(const OracleReport& report);

}  // namespace u3c
