#include "u3cyclic/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace u3c {

namespace {

using u128 = unsigned __int128;

u128 to_u128(BitRow r) { return (u128(r[1]) << 64) | r[0]; }
BitRow to_bitrow(u128 w) { return {uint64_t(w), uint64_t(w >> 64)}; }

unsigned popcount128(u128 w) {
    return unsigned(std::popcount(uint64_t(w)) + std::popcount(uint64_t(w >> 64)));
}

// Count of nonzero `blockbits`-wide blocks; `lowmask` has a 1 at the lowest
// bit of every block. OR-folds each block onto its lowest bit.
unsigned block_count(u128 w, unsigned blockbits, u128 lowmask) {
    u128 f = w;
    for (unsigned j = 1; j < blockbits; ++j) f |= w >> j;
    return popcount128(f & lowmask);
}

u128 gray_row(const PolyS& f, const TraceOrthogonalBasis& B) {
    const unsigned span = 3 * B.ctx->m;
    u128 w = 0;
    for (unsigned i = 0; i < f.n; ++i)
        w |= u128(gray_map(f.coeffs[i], B)) << (span * i);
    return w;
}

FieldElement from_coords(uint32_t coords, const TraceOrthogonalBasis& B) {
    FieldElement x = fe(*B.ctx, 0);
    for (unsigned j = 0; j < B.elems.size(); ++j)
        if (coords >> j & 1u) x = add(x, B.elems[j]);
    return x;
}

PolyS gray_preimage(u128 w, unsigned sigma, const TraceOrthogonalBasis& B) {
    const FieldCtx& ctx = *B.ctx;
    const unsigned m = ctx.m;
    const uint32_t mmask = (m == 32) ? ~0u : ((1u << m) - 1);
    PolyS f = poly_zero(ctx, sigma);
    for (unsigned i = 0; i < f.n; ++i) {
        const auto block = uint64_t(w >> (3 * m * i));
        const FieldElement abc = from_coords(uint32_t(block) & mmask, B);
        const FieldElement bc = from_coords(uint32_t(block >> m) & mmask, B);
        const FieldElement b = from_coords(uint32_t(block >> 2 * m) & mmask, B);
        f.coeffs[i].a = add(abc, bc);
        f.coeffs[i].b = b;
        f.coeffs[i].c = add(bc, b);
    }
    return f;
}

// RREF accumulator over u128 rows, pivots (lowest set bit) strictly
// ascending, every pivot column cleared in all other rows. Optionally keeps
// each row's polynomial preimage in step (the Gray map is injective and
// F_2-linear, so row == gray(preimage) is maintained by mirroring XORs).
struct RawSpan {
    unsigned sigma = 2;
    unsigned m = 1;
    unsigned nbits = 0;
    std::vector<u128> rows;
    std::vector<PolyS> pre;  // empty when preimages are not tracked

    u128 reduce(u128 v) const {
        for (u128 r : rows) {
            const u128 pivot = r & (~r + 1);
            if (v & pivot) v ^= r;
        }
        return v;
    }

    void insert(u128 v, const PolyS* f) {
        PolyS acc;
        if (f) acc = *f;
        for (size_t j = 0; j < rows.size(); ++j) {
            const u128 pivot = rows[j] & (~rows[j] + 1);
            if (v & pivot) {
                v ^= rows[j];
                if (f) acc = poly_add(acc, pre[j]);
            }
        }
        if (v == 0) return;
        const u128 pivot = v & (~v + 1);
        for (size_t j = 0; j < rows.size(); ++j)
            if (rows[j] & pivot) {
                rows[j] ^= v;
                if (f) pre[j] = poly_add(pre[j], acc);
            }
        const auto pos = std::lower_bound(rows.begin(), rows.end(), v,
                                          [](u128 a, u128 b) {
                                              return (a & (~a + 1)) < (b & (~b + 1));
                                          });
        const size_t idx = size_t(pos - rows.begin());
        rows.insert(pos, v);
        if (f) pre.insert(pre.begin() + long(idx), acc);
    }
};

PolyS shift_by_x(const PolyS& f) {
    PolyS g = f;
    for (unsigned i = 0; i < f.n; ++i) g.coeffs[(i + 1) % f.n] = f.coeffs[i];
    return g;
}

// Span of the full R[x]-module generated by `gens`, with preimages tracked
// and the shift/u-closure invariants verified.
RawSpan raw_span(const std::vector<PolyS>& gens, unsigned sigma,
                 const TraceOrthogonalBasis& B) {
    const FieldCtx& ctx = *B.ctx;
    RawSpan s;
    s.sigma = sigma;
    s.m = ctx.m;
    s.nbits = 3 * ctx.m * (1u << sigma);
    if (s.nbits > kMaxSpanBits)
        throw std::runtime_error("capacity: gray image is " +
                                 std::to_string(s.nbits) + " bits; limit " +
                                 std::to_string(kMaxSpanBits));
    for (const PolyS& g : gens)
        for (unsigned e = 0; e < 3; ++e)
            for (unsigned j = 0; j < ctx.m; ++j) {
                const uint32_t zeta = B.elems[j].bits;
                const RingElement scalar =
                    re(ctx, e == 0 ? zeta : 0, e == 1 ? zeta : 0,
                       e == 2 ? zeta : 0);
                PolyS f = poly_scale(scalar, g);
                for (unsigned i = 0; i < f.n; ++i) {
                    s.insert(gray_row(f, B), &f);
                    f = shift_by_x(f);
                }
            }
    const RingElement uu = re(ctx, 0, 1, 0);
    for (const PolyS& f : s.pre) {
        if (s.reduce(gray_row(shift_by_x(f), B)) != 0)
            throw std::logic_error("span is not closed under shift");
        if (s.reduce(gray_row(poly_scale(uu, f), B)) != 0)
            throw std::logic_error("span is not closed under u");
    }
    return s;
}

RawSpan raw_of(const BinarySpan& span) {
    RawSpan s;
    s.sigma = span.sigma;
    s.m = span.m;
    s.nbits = span.nbits;
    s.rows.reserve(span.rows.size());
    for (BitRow r : span.rows) s.rows.push_back(to_u128(r));
    return s;
}

int scan_u2(const RawSpan& s, const TraceOrthogonalBasis& B) {
    const FieldCtx& ctx = *B.ctx;
    const unsigned n = 1u << s.sigma;
    for (unsigned e = 0; e < n; ++e) {
        const PolyS f = poly_xp1_pow(ctx, s.sigma, e, re(ctx, 0, 0, 1));
        if (s.reduce(gray_row(f, B)) == 0) return int(e);
    }
    return int(n);
}

// Quotient by the u^2-layer: per coordinate the survivor of a+ub+u^2c is
// (a, b), encoded as coords(a)|coords(b) in 2m bits. In Gray blocks that is
// (block1 xor block2 | block3).
u128 project_mod_u2(u128 w, unsigned m, unsigned n) {
    const uint64_t mmask = (1ull << m) - 1;
    u128 out = 0;
    for (unsigned i = 0; i < n; ++i) {
        const auto block = uint64_t(w >> (3 * m * i));
        const uint64_t a = (block ^ (block >> m)) & mmask;
        const uint64_t b = (block >> 2 * m) & mmask;
        out |= u128(a | (b << m)) << (2 * m * i);
    }
    return out;
}

int scan_u_mod_u2(const RawSpan& s, const TraceOrthogonalBasis& B) {
    const FieldCtx& ctx = *B.ctx;
    const unsigned n = 1u << s.sigma;
    RawSpan proj;
    for (u128 r : s.rows) proj.insert(project_mod_u2(r, s.m, n), nullptr);
    for (unsigned e = 0; e < n; ++e) {
        const PolyS f = poly_xp1_pow(ctx, s.sigma, e, re(ctx, 0, 1, 0));
        if (proj.reduce(project_mod_u2(gray_row(f, B), s.m, n)) == 0)
            return int(e);
    }
    return int(n);
}

void check_layout(const BinarySpan& span, const TraceOrthogonalBasis& B) {
    if (B.ctx->m != span.m)
        throw std::invalid_argument("layout mismatch: span has m=" +
                                    std::to_string(span.m) + ", basis has m=" +
                                    std::to_string(B.ctx->m));
}

struct Best {
    unsigned weight = std::numeric_limits<unsigned>::max();
    uint64_t index = 0;  // Gray counter at which `weight` was first attained
    u128 word = 0;

    void offer(unsigned w, uint64_t i, u128 cw) {
        if (w < weight) {
            weight = w;
            index = i;
            word = cw;
        }
    }

    void merge(const Best& other) {
        if (other.weight < weight ||
            (other.weight == weight && other.index < index))
            *this = other;
    }
};

struct SegmentResult {
    Best lee, ham;
};

// Walks Gray counters [first, last]: after counter i the codeword is the
// XOR of rows[j] over the set bits j of i ^ (i >> 1).
SegmentResult enumerate_segment(const std::vector<u128>& rows,
                                uint64_t first, uint64_t last,
                                unsigned blockbits, u128 lowmask) {
    SegmentResult out;
    u128 cw = 0;
    const uint64_t entry = (first - 1) ^ ((first - 1) >> 1);
    for (unsigned j = 0; j < rows.size(); ++j)
        if (entry >> j & 1u) cw ^= rows[j];
    for (uint64_t i = first; i <= last; ++i) {
        cw ^= rows[std::countr_zero(i)];
        out.lee.offer(popcount128(cw), i, cw);
        out.ham.offer(block_count(cw, blockbits, lowmask), i, cw);
    }
    return out;
}

}  // namespace

BinarySpan build_span(const CodeSpec& spec, const TraceOrthogonalBasis& B,
                      unsigned budget) {
    if (B.ctx->m != spec.m)
        throw std::invalid_argument("layout mismatch: spec has m=" +
                                    std::to_string(spec.m) + ", basis has m=" +
                                    std::to_string(B.ctx->m));
    validate_or_throw(spec);
    const RawSpan s = raw_span(generators(spec, *B.ctx), spec.sigma, B);
    const unsigned k = unsigned(s.rows.size());
    if (k != s.nbits && k > budget)
        throw std::runtime_error("capacity: span dimension k=" +
                                 std::to_string(k) + " exceeds budget " +
                                 std::to_string(budget));
    BinarySpan out;
    out.sigma = s.sigma;
    out.m = s.m;
    out.nbits = s.nbits;
    out.rows.reserve(s.rows.size());
    for (u128 r : s.rows) out.rows.push_back(to_bitrow(r));
    return out;
}

OracleReport min_weights(const BinarySpan& span,
                         const TraceOrthogonalBasis& B) {
    check_layout(span, B);
    const FieldCtx& ctx = *B.ctx;
    const unsigned n = 1u << span.sigma;
    const unsigned k = span.k();
    OracleReport rep;
    rep.k = k;
    rep.witness_lee = poly_zero(ctx, span.sigma);
    rep.witness_hamming = poly_zero(ctx, span.sigma);
    if (k == 0) return rep;
    if (k == span.nbits) {
        // Unit ideal: the identity rows are weight-1 codewords, and the very
        // first Gray step visits rows[0].
        rep.d_lee = rep.d_hamming = 1;
        rep.witness_lee = gray_preimage(to_u128(span.rows[0]), span.sigma, B);
        rep.witness_hamming = rep.witness_lee;
        return rep;
    }
    if (k > kOracleBudget)
        throw std::runtime_error("capacity: span dimension k=" +
                                 std::to_string(k) + " exceeds budget " +
                                 std::to_string(kOracleBudget));

    std::vector<u128> rows;
    rows.reserve(k);
    for (BitRow r : span.rows) rows.push_back(to_u128(r));
    const unsigned blockbits = 3 * span.m;
    u128 lowmask = 0;
    for (unsigned i = 0; i < n; ++i) lowmask |= u128(1) << (blockbits * i);

    const uint64_t total = (uint64_t(1) << k) - 1;
    unsigned nworkers = std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
    if (k < 20) nworkers = 1;

    SegmentResult result;
    if (nworkers == 1) {
        result = enumerate_segment(rows, 1, total, blockbits, lowmask);
    } else {
        std::vector<SegmentResult> parts(nworkers);
        std::vector<std::thread> pool;
        const uint64_t chunk = total / nworkers;
        for (unsigned w = 0; w < nworkers; ++w) {
            const uint64_t first = 1 + w * chunk;
            const uint64_t last = (w + 1 == nworkers) ? total : first + chunk - 1;
            pool.emplace_back([&, w, first, last] {
                parts[w] = enumerate_segment(rows, first, last, blockbits, lowmask);
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& p : parts) {
            result.lee.merge(p.lee);
            result.ham.merge(p.ham);
        }
    }
    rep.d_lee = result.lee.weight;
    rep.d_hamming = result.ham.weight;
    rep.witness_lee = gray_preimage(result.lee.word, span.sigma, B);
    rep.witness_hamming = gray_preimage(result.ham.word, span.sigma, B);
    rep.enumerated = total;
    return rep;
}

bool membership(const PolyS& f, const BinarySpan& span,
                const TraceOrthogonalBasis& B) {
    check_layout(span, B);
    if (f.sigma != span.sigma || f.ctx->m != span.m)
        throw std::invalid_argument("layout mismatch: element is sigma=" +
                                    std::to_string(f.sigma) + " m=" +
                                    std::to_string(f.ctx->m) + ", span is sigma=" +
                                    std::to_string(span.sigma) + " m=" +
                                    std::to_string(span.m));
    return raw_of(span).reduce(gray_row(f, B)) == 0;
}

int smallest_exponent(const BinarySpan& span, SmallestForm form,
                      const TraceOrthogonalBasis& B) {
    check_layout(span, B);
    const RawSpan s = raw_of(span);
    return form == SmallestForm::u2_xp1 ? scan_u2(s, B) : scan_u_mod_u2(s, B);
}

DerivedParams smallest_params_oracle(const CodeSpec& spec,
                                     const TraceOrthogonalBasis& B) {
    if (B.ctx->m != spec.m)
        throw std::invalid_argument("layout mismatch: spec has m=" +
                                    std::to_string(spec.m) + ", basis has m=" +
                                    std::to_string(B.ctx->m));
    validate_or_throw(spec);
    const FieldCtx& ctx = *B.ctx;
    const std::vector<PolyS> gens = generators(spec, ctx);
    const auto span_of = [&](std::vector<PolyS> subset) {
        return raw_span(std::move(subset), spec.sigma, B);
    };
    DerivedParams d;
    switch (spec.type) {
        case 3:
            d.L = scan_u2(span_of(gens), B);
            break;
        case 4:
            d.L = scan_u2(span_of({gens[0]}), B);
            break;
        case 5: {
            const RawSpan s = span_of(gens);
            d.U = scan_u_mod_u2(s, B);
            d.V = scan_u2(s, B);
            break;
        }
        case 6: {
            const RawSpan s = span_of({gens[0]});
            d.U = scan_u_mod_u2(s, B);
            d.V = scan_u2(s, B);
            break;
        }
        case 7:
            d.U = scan_u_mod_u2(span_of({gens[0]}), B);
            d.W = scan_u2(span_of(gens), B);
            break;
        case 8:
            d.U = scan_u_mod_u2(span_of({gens[0]}), B);
            d.W = scan_u2(span_of({gens[0], gens[1]}), B);
            d.L1 = scan_u2(span_of({gens[1]}), B);
            break;
        default:
            break;
    }
    return d;
}

std::vector<unsigned> min_weights_multibasis(
    const CodeSpec& spec, const std::vector<TraceOrthogonalBasis>& bases) {
    std::vector<unsigned> out;
    out.reserve(bases.size());
    for (const auto& B : bases)
        out.push_back(min_weights(build_span(spec, B), B).d_lee);
    return out;
}

unsigned min_lee_direct(const CodeSpec& spec, const TraceOrthogonalBasis& B,
                        size_t element_cap) {
    validate_or_throw(spec);
    const FieldCtx& ctx = *B.ctx;
    const unsigned n = 1u << spec.sigma;

    const auto key_of = [&](const PolyS& f) {
        std::vector<uint32_t> key;
        key.reserve(3 * f.n);
        for (const RingElement& r : f.coeffs) {
            key.push_back(r.a.bits);
            key.push_back(r.b.bits);
            key.push_back(r.c.bits);
        }
        return key;
    };

    std::set<std::vector<uint32_t>> seen;
    std::vector<PolyS> elems{poly_zero(ctx, spec.sigma)};
    seen.insert(key_of(elems[0]));
    for (const PolyS& g : generators(spec, ctx))
        for (unsigned e = 0; e < 3; ++e)
            for (unsigned j = 0; j < ctx.m; ++j) {
                const uint32_t zeta = B.elems[j].bits;
                const RingElement scalar =
                    re(ctx, e == 0 ? zeta : 0, e == 1 ? zeta : 0,
                       e == 2 ? zeta : 0);
                PolyS move = poly_scale(scalar, g);
                for (unsigned i = 0; i < n; ++i) {
                    if (!seen.count(key_of(move))) {
                        // New independent move doubles the closure.
                        if (2 * elems.size() > element_cap)
                            throw std::runtime_error(
                                "capacity: ring closure exceeds " +
                                std::to_string(element_cap) + " elements");
                        const size_t count = elems.size();
                        for (size_t s = 0; s < count; ++s) {
                            PolyS sum = poly_add(elems[s], move);
                            seen.insert(key_of(sum));
                            elems.push_back(std::move(sum));
                        }
                    }
                    move = shift_by_x(move);
                }
            }
    unsigned best = 0;
    for (const PolyS& f : elems) {
        const unsigned w = lee_weight_poly(f, B);
        if (w != 0 && (best == 0 || w < best)) best = w;
    }
    return best;
}

std::string span_to_text(const BinarySpan& span) {
    std::ostringstream os;
    os << "u3span sigma=" << span.sigma << " m=" << span.m
       << " layout=" << kSpanLayoutTag << " k=" << span.k() << "\n";
    const unsigned digits = (span.nbits + 3) / 4;
    for (BitRow r : span.rows) {
        const u128 w = to_u128(r);
        for (unsigned d = digits; d-- > 0;)
            os << "0123456789abcdef"[unsigned(w >> (4 * d)) & 0xf];
        os << "\n";
    }
    return os.str();
}

BinarySpan span_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string magic, field;
    is >> magic;
    if (magic != "u3span")
        throw std::invalid_argument("span text must start with 'u3span'");
    const auto take = [&](const std::string& name) {
        is >> field;
        if (field.rfind(name + "=", 0) != 0)
            throw std::invalid_argument("span header: expected " + name +
                                        "=..., got '" + field + "'");
        return field.substr(name.size() + 1);
    };
    BinarySpan span;
    span.sigma = unsigned(std::stoul(take("sigma")));
    span.m = unsigned(std::stoul(take("m")));
    const std::string layout = take("layout");
    const unsigned k = unsigned(std::stoul(take("k")));
    if (layout != kSpanLayoutTag)
        throw std::invalid_argument("unknown span layout '" + layout + "'");
    if (span.sigma < 1 || span.sigma > kMaxSigma || span.m < 1 || span.m > 16)
        throw std::invalid_argument("span header out of range");
    span.nbits = 3 * span.m * (1u << span.sigma);
    if (span.nbits > kMaxSpanBits || k > span.nbits)
        throw std::invalid_argument("span header out of range");
    const unsigned digits = (span.nbits + 3) / 4;
    u128 prev_pivot = 0;
    std::vector<u128> rows;
    for (unsigned i = 0; i < k; ++i) {
        std::string hex;
        if (!(is >> hex) || hex.size() != digits)
            throw std::invalid_argument("span row " + std::to_string(i) +
                                        ": expected " + std::to_string(digits) +
                                        " hex digits");
        u128 w = 0;
        for (char ch : hex) {
            const char* hexdigits = "0123456789abcdef";
            const char* p = std::char_traits<char>::find(hexdigits, 16, ch);
            if (!p) throw std::invalid_argument("span row: bad hex digit");
            w = (w << 4) | u128(p - hexdigits);
        }
        if (w == 0 || (span.nbits < 128 && (w >> span.nbits) != 0))
            throw std::invalid_argument("span row " + std::to_string(i) +
                                        " out of range");
        const u128 pivot = w & (~w + 1);
        if (i > 0 && pivot <= prev_pivot)
            throw std::invalid_argument("span rows must have ascending pivots");
        prev_pivot = pivot;
        rows.push_back(w);
    }
    for (size_t i = 0; i < rows.size(); ++i) {
        const u128 pivot = rows[i] & (~rows[i] + 1);
        for (size_t j = 0; j < rows.size(); ++j)
            if (j != i && (rows[j] & pivot))
                throw std::invalid_argument("span rows are not in RREF");
    }
    span.rows.reserve(rows.size());
    for (u128 w : rows) span.rows.push_back(to_bitrow(w));
    return span;
}

std::string report_to_json(const OracleReport& report) {
    nlohmann::ordered_json j;
    j["d_lee"] = report.d_lee;
    j["d_hamming"] = report.d_hamming;
    j["witness_lee"] = to_string(report.witness_lee);
    j["witness_hamming"] = to_string(report.witness_hamming);
    j["k"] = report.k;
    j["enumerated"] = report.enumerated;
    return j.dump(2);
}

}  // namespace u3c
