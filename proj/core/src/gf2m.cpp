#include "u3cyclic/gf2m.hpp"

#include <bit>
#include <cstdio>
#include <stdexcept>

namespace u3c {

namespace {

int poly_degree(uint64_t p) { return p ? 64 - std::countl_zero(p) - 1 : -1; }

uint64_t poly_mod(uint64_t a, uint64_t p) {
    const int dp = poly_degree(p);
    int da;
    while ((da = poly_degree(a)) >= dp) a ^= p << (da - dp);
    return a;
}

// One modulus per degree, the lexicographically least irreducible.
constexpr uint32_t kModulusTable[17] = {
    0,      0x2,    0x7,    0xb,    0x13,   0x25,   0x43,    0x83,   0x11b,
    0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003,  0x1002b,
};

void require_same_field(FieldElement a, FieldElement b) {
    if (a.ctx == nullptr || b.ctx == nullptr)
        throw std::invalid_argument("field element without context");
    if (!(*a.ctx == *b.ctx))
        throw std::invalid_argument("field context mismatch");
}

}  // namespace

bool is_irreducible(uint32_t p) {
    const int m = poly_degree(p);
    if (m < 1) return false;
    for (uint32_t d = 2; d < (1u << (m / 2 + 1)); ++d) {
        if (poly_degree(d) < 1) continue;
        if (poly_mod(p, d) == 0) return false;
    }
    return true;
}

uint32_t least_irreducible(unsigned m) {
    if (m < 1 || m > 16) throw std::invalid_argument("degree out of range [1,16]");
    for (uint32_t t = 1u << m;; ++t)
        if (is_irreducible(t)) return t;
}

FieldCtx FieldCtx::make(unsigned m) {
    if (m < 1 || m > 16) throw std::invalid_argument("m out of range [1,16]");
    return FieldCtx{m, kModulusTable[m]};
}

FieldCtx FieldCtx::with_modulus(unsigned m, uint32_t modulus) {
    if (m < 1 || m > 16) throw std::invalid_argument("m out of range [1,16]");
    if (poly_degree(modulus) != static_cast<int>(m))
        throw std::invalid_argument("modulus degree does not match m");
    if (!is_irreducible(modulus))
        throw std::invalid_argument("modulus is reducible over F_2");
    return FieldCtx{m, modulus};
}

FieldElement fe(const FieldCtx& ctx, uint32_t bits) {
    if (bits >= (1u << ctx.m)) throw std::invalid_argument("element bits out of range");
    return FieldElement{bits, &ctx};
}

FieldElement add(FieldElement a, FieldElement b) {
    require_same_field(a, b);
    return FieldElement{a.bits ^ b.bits, a.ctx};
}

FieldElement mul(FieldElement a, FieldElement b) {
    require_same_field(a, b);
    // Carry-less 32x32 product, then reduction mod the modulus.
    uint64_t prod = 0;
    uint64_t x = a.bits, y = b.bits;
    while (y) {
        prod ^= x << std::countr_zero(y);
        y &= y - 1;
    }
    return FieldElement{static_cast<uint32_t>(poly_mod(prod, a.ctx->modulus)), a.ctx};
}

FieldElement fe_pow(FieldElement a, uint64_t e) {
    FieldElement r{1, a.ctx};
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FieldElement inv(FieldElement a) {
    if (a.is_zero()) throw std::domain_error("zero has no inverse");
    // a^(2^m - 2) = a^(-1) in GF(2^m).
    return fe_pow(a, (uint64_t{1} << a.ctx->m) - 2);
}

FieldElement trace(FieldElement x) {
    FieldElement acc = x, sq = x;
    for (unsigned i = 1; i < x.ctx->m; ++i) {
        sq = mul(sq, sq);
        acc = add(acc, sq);
    }
    return acc;
}

namespace {

// DFS for ordered bases (zeta_1..zeta_m) with Tr(zeta_i zeta_j) = delta_ij,
// candidates tried in increasing bit order. Existence is guaranteed, so the
// search always completes; the step budget guards against implementation bugs.
bool tob_dfs(const FieldCtx& ctx, std::vector<uint32_t>& chosen,
             std::vector<std::vector<FieldElement>>& out, size_t want,
             uint64_t& steps) {
    const uint32_t q = 1u << ctx.m;
    if (chosen.size() == ctx.m) {
        std::vector<FieldElement> basis;
        for (uint32_t b : chosen) basis.push_back(FieldElement{b, &ctx});
        out.push_back(std::move(basis));
        return out.size() >= want;
    }
    for (uint32_t cand = 1; cand < q; ++cand) {
        if (++steps > (uint64_t{1} << 28))
            throw std::runtime_error("trace orthogonal basis search budget exhausted");
        FieldElement x{cand, &ctx};
        if (trace(mul(x, x)).bits != 1) continue;
        bool ok = true;
        for (uint32_t z : chosen)
            if (trace(mul(x, FieldElement{z, &ctx})).bits != 0) { ok = false; break; }
        if (!ok) continue;
        chosen.push_back(cand);
        if (tob_dfs(ctx, chosen, out, want, steps)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

TraceOrthogonalBasis find_tob(const FieldCtx& ctx) {
    auto found = distinct_tobs(ctx, 1);
    return std::move(found.front());
}

std::vector<TraceOrthogonalBasis> distinct_tobs(const FieldCtx& ctx, size_t count) {
    std::vector<std::vector<FieldElement>> raw;
    std::vector<uint32_t> chosen;
    uint64_t steps = 0;
    tob_dfs(ctx, chosen, raw, count, steps);
    if (raw.empty()) throw std::runtime_error("no trace orthogonal basis found");
    std::vector<TraceOrthogonalBasis> out;
    for (auto& elems : raw) out.push_back(TraceOrthogonalBasis{std::move(elems), &ctx});
    return out;
}

uint32_t tob_coords(FieldElement x, const TraceOrthogonalBasis& B) {
    require_same_field(x, FieldElement{0, B.ctx});
    uint32_t coords = 0;
    for (size_t i = 0; i < B.elems.size(); ++i)
        coords |= trace(mul(x, B.elems[i])).bits << i;
    return coords;
}

unsigned lee_weight_field(FieldElement x, const TraceOrthogonalBasis& B) {
    return static_cast<unsigned>(std::popcount(tob_coords(x, B)));
}

std::string bits_to_hex(uint32_t bits) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", bits);
    return buf;
}

uint32_t hex_to_bits(const std::string& s) {
    size_t pos = 0;
    unsigned long v = std::stoul(s, &pos, 16);
    if (pos != s.size()) throw std::invalid_argument("trailing junk in field element: " + s);
    if (v > 0xfffffffful) throw std::invalid_argument("field element out of range: " + s);
    return static_cast<uint32_t>(v);
}

std::string to_hex(FieldElement x) { return bits_to_hex(x.bits); }

FieldElement parse_hex(const FieldCtx& ctx, const std::string& s) {
    uint32_t v = hex_to_bits(s);
    if (v >= (1u << ctx.m)) throw std::invalid_argument("field element out of range: " + s);
    return FieldElement{v, &ctx};
}

std::string modulus_bit_string(const FieldCtx& ctx) {
    std::string s;
    for (int i = poly_degree(ctx.modulus); i >= 0; --i)
        s += (ctx.modulus >> i) & 1 ? '1' : '0';
    return s;
}

}  // namespace u3c
