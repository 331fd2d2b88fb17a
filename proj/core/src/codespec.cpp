#include "u3cyclic/codespec.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "u3cyclic/chain_ring.hpp"
#include "u3cyclic/gf2m.hpp"

namespace u3c {

using ordered_json = nlohmann::ordered_json;

bool UnitPoly::is_one() const {
    if (coeffs.empty() || coeffs[0] != 1) return false;
    for (size_t k = 1; k < coeffs.size(); ++k)
        if (coeffs[k] != 0) return false;
    return true;
}

DerivedParams smallest_params_formula(const CodeSpec& s) {
    DerivedParams d;
    const int nn = int(s.n());
    const bool zq = !s.z.is_zero();
    const bool z1q = !s.z1.is_zero();
    const bool z2q = !s.z2.is_zero();
    const bool z3q = !s.z3.is_zero();

    switch (s.type) {
        case 3:
        case 4:
            d.L = zq ? std::min(s.ell, nn + s.t - s.ell) : s.ell;
            break;
        case 5:
        case 6:
        case 7:
        case 8:
            d.U = z1q ? std::min(s.alpha, nn + s.T1 - s.alpha) : s.alpha;
            break;
        default:
            break;
    }
    if (s.type == 5 || s.type == 6) {
        if (z1q)
            d.V = std::min(s.alpha, nn + s.T1 - s.alpha);
        else if (z2q)
            d.V = std::min(s.alpha, nn + s.T2 - s.alpha);
        else
            d.V = s.alpha;
    }
    if (s.type == 7 || s.type == 8) {
        // Smallest W with u^2(x+1)^W in the two-generator ideal; the four
        // branches are checked in this order.
        if ((!z1q && !z2q && !z3q) || (z1q && !z3q))
            d.W = s.beta;
        else if (!z1q && !z3q && z2q)
            d.W = std::min(s.beta, nn + s.T2 - s.alpha);
        else if ((!z1q && !z2q && z3q) || (z1q && z3q))
            d.W = std::min(s.beta, nn + s.T3 - s.beta);
        else  // z1 == 0, z2 != 0, z3 != 0
            d.W = std::min({s.beta, nn + s.T2 - s.alpha, nn + s.T3 - s.beta});
    }
    if (s.type == 8)
        d.L1 = z3q ? std::min(s.beta, nn + s.T3 - s.beta) : s.beta;
    return d;
}

namespace {

std::string str(long v) { return std::to_string(v); }

// Shared checks on one unit polynomial: coefficient alphabet, leading
// coefficient, and the count bound (coefficients past the bound are
// rejected, never truncated). max_coeffs < 0 means the bound constraint
// itself is already violated upstream; skip the count check then.
void check_unit(std::vector<std::string>& out, const char* name,
                const UnitPoly& z, unsigned m, long max_coeffs) {
    if (z.is_zero()) return;
    const uint32_t q = (m >= 32) ? 0 : (1u << m);
    if (z.coeffs[0] == 0)
        out.push_back(std::string(name) + "[0] != 0 violated (" + name +
                      "[0]=0x0)");
    for (size_t k = 0; k < z.coeffs.size(); ++k)
        if (z.coeffs[k] >= q)
            out.push_back(std::string(name) + " coefficients below 2^m " +
                          "violated (" + name + "[" + str(long(k)) +
                          "]=" + bits_to_hex(z.coeffs[k]) + ", m=" + str(m) +
                          ")");
    if (max_coeffs >= 0 && long(z.coeffs.size()) > max_coeffs)
        out.push_back(std::string(name) + " has too many coefficients (" +
                      str(long(z.coeffs.size())) + " > " + str(max_coeffs) +
                      ")");
}

// Exponents that are meaningless for the type must sit at 0 so that every
// ideal has exactly one spec encoding.
void check_canonical_zero(std::vector<std::string>& out, const char* name,
                          int value) {
    if (value != 0)
        out.push_back(std::string(name) + " == 0 for this type violated (" +
                      name + "=" + str(value) + ")");
}

void check_unit_absent(std::vector<std::string>& out, const char* name,
                       const UnitPoly& z) {
    if (!z.is_zero())
        out.push_back(std::string(name) + " == zero for this type violated");
}

}  // namespace

std::vector<std::string> validate(const CodeSpec& s) {
    std::vector<std::string> out;
    if (s.sigma < 1 || s.sigma > kMaxSigma) {
        out.push_back("sigma in [1," + str(kMaxSigma) + "] violated (sigma=" +
                      str(s.sigma) + ")");
        return out;
    }
    if (s.m < 1 || s.m > 16) {
        out.push_back("m in [1,16] violated (m=" + str(s.m) + ")");
        return out;
    }
    if (s.type < 1 || s.type > 8) {
        out.push_back("type in [1,8] violated (type=" + str(s.type) + ")");
        return out;
    }
    const int nn = int(s.n());
    const bool zq = !s.z.is_zero();
    const bool z1q = !s.z1.is_zero();
    const bool z2q = !s.z2.is_zero();
    const bool z3q = !s.z3.is_zero();
    const DerivedParams d = smallest_params_formula(s);

    // Negative exponents are never meaningful.
    for (auto [name, v] : {std::pair<const char*, int>{"ell", s.ell},
                           {"t", s.t},
                           {"mu", s.mu},
                           {"alpha", s.alpha},
                           {"beta", s.beta},
                           {"omega", s.omega},
                           {"T1", s.T1},
                           {"T2", s.T2},
                           {"T3", s.T3},
                           {"which", s.which}})
        if (v < 0)
            out.push_back(std::string(name) + " >= 0 violated (" + name +
                          "=" + str(v) + ")");
    if (!out.empty()) return out;

    // Canonical-form requirements for fields the type does not use.
    if (s.type != 1) check_canonical_zero(out, "which", s.which);
    if (s.type < 2 || s.type > 4) check_canonical_zero(out, "ell", s.ell);
    if (s.type != 3 && s.type != 4) {
        check_canonical_zero(out, "t", s.t);
        check_unit_absent(out, "z", s.z);
    }
    if (s.type != 4) check_canonical_zero(out, "mu", s.mu);
    if (s.type < 5) {
        check_canonical_zero(out, "alpha", s.alpha);
        check_canonical_zero(out, "T1", s.T1);
        check_canonical_zero(out, "T2", s.T2);
        check_unit_absent(out, "z1", s.z1);
        check_unit_absent(out, "z2", s.z2);
    }
    if (s.type != 7 && s.type != 8) {
        check_canonical_zero(out, "beta", s.beta);
        check_canonical_zero(out, "T3", s.T3);
        check_unit_absent(out, "z3", s.z3);
    }
    if (s.type != 6 && s.type != 8) check_canonical_zero(out, "omega", s.omega);

    // Exponents attached to an absent unit polynomial are equally dead.
    auto dead_exponent = [&](const char* name, int v, bool present) {
        if (!present && v != 0)
            out.push_back(std::string(name) + " == 0 when its unit is zero "
                          "violated (" + name + "=" + str(v) + ")");
    };

    switch (s.type) {
        case 1:
            if (s.which != 0 && s.which != 1)
                out.push_back("which in {0,1} violated (which=" +
                              str(s.which) + ")");
            break;
        case 2:
            if (s.ell > nn - 1)
                out.push_back("ell <= 2^sigma - 1 violated (ell=" + str(s.ell) +
                              ", 2^sigma-1=" + str(nn - 1) + ")");
            break;
        case 3:
            if (s.ell > nn - 1)
                out.push_back("ell <= 2^sigma - 1 violated (ell=" + str(s.ell) +
                              ", 2^sigma-1=" + str(nn - 1) + ")");
            dead_exponent("t", s.t, zq);
            if (zq) {
                if (!(s.t < d.L))
                    out.push_back("t < L violated (t=" + str(s.t) +
                                  ", L=" + str(d.L) + ")");
                check_unit(out, "z", s.z, s.m, long(d.L) - s.t);
            }
            break;
        case 4:
            if (s.ell > nn - 1)
                out.push_back("ell <= 2^sigma - 1 violated (ell=" + str(s.ell) +
                              ", 2^sigma-1=" + str(nn - 1) + ")");
            if (!(s.mu < d.L))
                out.push_back("mu < L violated (mu=" + str(s.mu) +
                              ", L=" + str(d.L) + ")");
            dead_exponent("t", s.t, zq);
            if (zq) {
                if (!(s.t < s.mu))
                    out.push_back("t < mu violated (t=" + str(s.t) +
                                  ", mu=" + str(s.mu) + ")");
                check_unit(out, "z", s.z, s.m, long(s.mu) - s.t);
            }
            break;
        case 5:
            if (s.alpha > nn - 1)
                out.push_back("alpha <= 2^sigma - 1 violated (alpha=" +
                              str(s.alpha) + ", 2^sigma-1=" + str(nn - 1) +
                              ")");
            if (!(0 < d.V))
                out.push_back("0 < V violated (V=" + str(d.V) + ")");
            dead_exponent("T1", s.T1, z1q);
            dead_exponent("T2", s.T2, z2q);
            if (z1q) {
                if (!(s.T1 < d.U))
                    out.push_back("T1 < U violated (T1=" + str(s.T1) +
                                  ", U=" + str(d.U) + ")");
                check_unit(out, "z1", s.z1, s.m, long(d.U) - s.T1);
            }
            if (z2q) {
                if (!(s.T2 < d.V))
                    out.push_back("T2 < V violated (T2=" + str(s.T2) +
                                  ", V=" + str(d.V) + ")");
                check_unit(out, "z2", s.z2, s.m, long(d.V) - s.T2);
            }
            break;
        case 6:
            if (s.alpha > nn - 1)
                out.push_back("alpha <= 2^sigma - 1 violated (alpha=" +
                              str(s.alpha) + ", 2^sigma-1=" + str(nn - 1) +
                              ")");
            if (!(0 < d.V))
                out.push_back("0 < V violated (V=" + str(d.V) + ")");
            if (!(s.omega < d.V))
                out.push_back("omega < V violated (omega=" + str(s.omega) +
                              ", V=" + str(d.V) + ")");
            dead_exponent("T1", s.T1, z1q);
            dead_exponent("T2", s.T2, z2q);
            if (z1q) {
                if (!(s.T1 < d.U))
                    out.push_back("T1 < U violated (T1=" + str(s.T1) +
                                  ", U=" + str(d.U) + ")");
                check_unit(out, "z1", s.z1, s.m, long(d.U) - s.T1);
            }
            if (z2q) {
                if (!(s.T2 < s.omega))
                    out.push_back("T2 < omega violated (T2=" + str(s.T2) +
                                  ", omega=" + str(s.omega) + ")");
                check_unit(out, "z2", s.z2, s.m, long(s.omega) - s.T2);
            }
            break;
        case 7:
            if (s.alpha > nn - 1)
                out.push_back("alpha <= 2^sigma - 1 violated (alpha=" +
                              str(s.alpha) + ", 2^sigma-1=" + str(nn - 1) +
                              ")");
            if (!(s.beta < d.U))
                out.push_back("beta < U violated (beta=" + str(s.beta) +
                              ", U=" + str(d.U) + ")");
            if (!(d.W <= s.beta))
                out.push_back("W <= beta violated (W=" + str(d.W) +
                              ", beta=" + str(s.beta) + ")");
            dead_exponent("T1", s.T1, z1q);
            dead_exponent("T2", s.T2, z2q);
            dead_exponent("T3", s.T3, z3q);
            if (z1q) {
                if (!(s.T1 < s.beta))
                    out.push_back("T1 < beta violated (T1=" + str(s.T1) +
                                  ", beta=" + str(s.beta) + ")");
                check_unit(out, "z1", s.z1, s.m, long(s.beta) - s.T1);
            }
            if (z2q) {
                if (!(s.T2 < d.W))
                    out.push_back("T2 < W violated (T2=" + str(s.T2) +
                                  ", W=" + str(d.W) + ")");
                check_unit(out, "z2", s.z2, s.m, long(d.W) - s.T2);
            }
            if (z3q) {
                if (!(s.T3 < d.W))
                    out.push_back("T3 < W violated (T3=" + str(s.T3) +
                                  ", W=" + str(d.W) + ")");
                check_unit(out, "z3", s.z3, s.m, long(d.W) - s.T3);
            }
            break;
        case 8:
            if (s.alpha > nn - 1)
                out.push_back("alpha <= 2^sigma - 1 violated (alpha=" +
                              str(s.alpha) + ", 2^sigma-1=" + str(nn - 1) +
                              ")");
            if (!(s.beta < d.U))
                out.push_back("beta < U violated (beta=" + str(s.beta) +
                              ", U=" + str(d.U) + ")");
            if (!(d.L1 <= s.beta))
                out.push_back("L1 <= beta violated (L1=" + str(d.L1) +
                              ", beta=" + str(s.beta) + ")");
            if (!(d.W <= d.L1))
                out.push_back("W <= L1 violated (W=" + str(d.W) +
                              ", L1=" + str(d.L1) + ")");
            if (!(s.omega < d.W))
                out.push_back("omega < W violated (omega=" + str(s.omega) +
                              ", W=" + str(d.W) + ")");
            dead_exponent("T1", s.T1, z1q);
            dead_exponent("T2", s.T2, z2q);
            dead_exponent("T3", s.T3, z3q);
            if (z1q) {
                if (!(s.T1 < s.beta))
                    out.push_back("T1 < beta violated (T1=" + str(s.T1) +
                                  ", beta=" + str(s.beta) + ")");
                check_unit(out, "z1", s.z1, s.m, long(s.beta) - s.T1);
            }
            if (z2q) {
                if (!(s.T2 < s.omega))
                    out.push_back("T2 < omega violated (T2=" + str(s.T2) +
                                  ", omega=" + str(s.omega) + ")");
                check_unit(out, "z2", s.z2, s.m, long(s.omega) - s.T2);
            }
            if (z3q) {
                if (!(s.T3 < s.omega))
                    out.push_back("T3 < omega violated (T3=" + str(s.T3) +
                                  ", omega=" + str(s.omega) + ")");
                check_unit(out, "z3", s.z3, s.m, long(s.omega) - s.T3);
            }
            break;
        default:
            break;
    }
    return out;
}

void validate_or_throw(const CodeSpec& s) {
    auto v = validate(s);
    if (v.empty()) return;
    std::string msg = "invalid spec:";
    for (const auto& line : v) msg += "\n  " + line;
    throw std::invalid_argument(msg);
}

PolyS lift_unit(const UnitPoly& z, const FieldCtx& ctx, unsigned sigma) {
    PolyS acc = poly_zero(ctx, sigma);
    for (size_t k = 0; k < z.coeffs.size(); ++k) {
        if (z.coeffs[k] == 0) continue;
        RingElement c = re(ctx, z.coeffs[k], 0, 0);
        acc = poly_add(acc, poly_xp1_pow(ctx, sigma, unsigned(k), c));
    }
    return acc;
}

namespace {

// (x+1)^e scaled by u^layer, optionally times a lifted unit polynomial.
PolyS term(const FieldCtx& ctx, unsigned sigma, unsigned layer, int e,
           const UnitPoly* unit) {
    RingElement u_pow = re(ctx, layer == 0, layer == 1, layer == 2);
    PolyS p = poly_xp1_pow(ctx, sigma, unsigned(e), u_pow);
    if (unit) p = poly_mul(p, lift_unit(*unit, ctx, sigma));
    return p;
}

}  // namespace

std::vector<PolyS> generators(const CodeSpec& s, const FieldCtx& ctx) {
    if (ctx.m != s.m)
        throw std::invalid_argument("field context does not match spec m");
    const unsigned sg = s.sigma;
    std::vector<PolyS> g;
    switch (s.type) {
        case 1:
            if (s.which == 1) g.push_back(poly_one(ctx, sg));
            break;
        case 2:
            g.push_back(term(ctx, sg, 2, s.ell, nullptr));
            break;
        case 3:
        case 4:
            g.push_back(poly_add(term(ctx, sg, 1, s.ell, nullptr),
                                 term(ctx, sg, 2, s.t, &s.z)));
            if (s.type == 4) g.push_back(term(ctx, sg, 2, s.mu, nullptr));
            break;
        case 5:
        case 6:
        case 7:
        case 8:
            g.push_back(poly_add(
                poly_add(term(ctx, sg, 0, s.alpha, nullptr),
                         term(ctx, sg, 1, s.T1, &s.z1)),
                term(ctx, sg, 2, s.T2, &s.z2)));
            if (s.type == 7 || s.type == 8)
                g.push_back(poly_add(term(ctx, sg, 1, s.beta, nullptr),
                                     term(ctx, sg, 2, s.T3, &s.z3)));
            if (s.type == 6 || s.type == 8)
                g.push_back(term(ctx, sg, 2, s.omega, nullptr));
            break;
        default:
            throw std::invalid_argument("type in [1,8] violated");
    }
    return g;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

constexpr uint64_t kExhaustiveCap = uint64_t(1) << 22;

// Number of unit polynomials with at most max_coeffs coefficients in
// canonical (trailing zeros trimmed) form, saturating.
uint64_t count_units(uint64_t q, long max_coeffs) {
    if (max_coeffs <= 0) return 0;
    uint64_t total = q - 1;  // one coefficient
    uint64_t run = q - 1;    // (q-1)^2 * q^(len-2) for len >= 2
    for (long len = 2; len <= max_coeffs; ++len) {
        run = (len == 2) ? run * (q - 1) : run * q;
        if (run > kExhaustiveCap * 4) return UINT64_MAX;
        total += run;
        if (total > kExhaustiveCap * 4) return UINT64_MAX;
    }
    return total;
}

// All canonical unit polynomials with at most max_coeffs coefficients,
// ordered by length, then lexicographically by coefficient vector.
std::vector<UnitPoly> all_units(uint32_t q, long max_coeffs) {
    std::vector<UnitPoly> out;
    std::vector<uint32_t> c;
    for (long len = 1; len <= max_coeffs; ++len) {
        c.assign(size_t(len), 0);
        c[0] = 1;
        if (len > 1) c[size_t(len) - 1] = 1;
        while (true) {
            out.push_back(UnitPoly{c});
            // Odometer increment respecting nonzero first/last digits.
            long k = len - 1;
            for (; k >= 0; --k) {
                if (c[size_t(k)] + 1 < q) {
                    ++c[size_t(k)];
                    break;
                }
                c[size_t(k)] = (k == 0 || (k == len - 1 && len > 1)) ? 1 : 0;
            }
            if (k < 0) break;
        }
    }
    return out;
}

UnitPoly random_unit(std::mt19937_64& rng, uint32_t q, long max_coeffs) {
    long len = 1 + long(rng() % uint64_t(max_coeffs));
    std::vector<uint32_t> c(size_t(len), 0);
    c[0] = 1 + uint32_t(rng() % (q - 1));
    for (long k = 1; k < len - 1; ++k) c[size_t(k)] = uint32_t(rng() % q);
    if (len > 1) c[size_t(len) - 1] = 1 + uint32_t(rng() % (q - 1));
    return UnitPoly{c};
}

// Emits every coefficient assignment for the unit-polynomial slots listed in
// `slots` (pointer into the spec + max coefficient count), exhaustively when
// that is affordable within `budget`, else `budget` sampled assignments.
void fill_units(CodeSpec base, std::vector<std::pair<UnitPoly CodeSpec::*, long>> slots,
                uint32_t q, uint64_t budget, std::mt19937_64& rng,
                std::vector<CodeSpec>& out) {
    if (slots.empty()) {
        out.push_back(base);
        return;
    }
    uint64_t total = 1;
    for (auto& [mem, bound] : slots) {
        uint64_t c = count_units(q, bound);
        total = (c == 0 || total > UINT64_MAX / c) ? UINT64_MAX : total * c;
    }
    const bool exhaustive = (budget == 0) ? true : (total <= budget);
    if (exhaustive) {
        if (total > kExhaustiveCap)
            throw std::runtime_error(
                "capacity: exhaustive unit enumeration needs " +
                std::to_string(total) + " assignments per exponent tuple; "
                "set a budget");
        std::vector<std::vector<UnitPoly>> lists;
        for (auto& [mem, bound] : slots) lists.push_back(all_units(q, bound));
        std::vector<size_t> idx(slots.size(), 0);
        while (true) {
            CodeSpec s = base;
            for (size_t i = 0; i < slots.size(); ++i)
                s.*(slots[i].first) = lists[i][idx[i]];
            out.push_back(s);
            size_t k = slots.size();
            while (k > 0) {
                --k;
                if (++idx[k] < lists[k].size()) break;
                idx[k] = 0;
                if (k == 0) return;
            }
        }
    }
    std::set<std::vector<std::vector<uint32_t>>> seen;
    uint64_t attempts = 0;
    while (seen.size() < budget && attempts < 64 * budget) {
        ++attempts;
        std::vector<std::vector<uint32_t>> key;
        CodeSpec s = base;
        for (auto& [mem, bound] : slots) {
            UnitPoly up = random_unit(rng, q, bound);
            key.push_back(up.coeffs);
            s.*mem = up;
        }
        if (seen.insert(key).second) out.push_back(s);
    }
}

}  // namespace

std::vector<CodeSpec> enumerate_specs(unsigned sigma, unsigned m,
                                      const std::vector<int>& types,
                                      uint64_t budget, uint64_t seed) {
    if (sigma < 1 || sigma > kMaxSigma)
        throw std::invalid_argument("sigma in [1," +
                                    std::to_string(kMaxSigma) + "] violated");
    if (m < 1 || m > 16) throw std::invalid_argument("m in [1,16] violated");
    std::vector<int> ts = types;
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (int t : ts)
        if (t < 1 || t > 8)
            throw std::invalid_argument("type in [1,8] violated (type=" +
                                        std::to_string(t) + ")");

    const int nn = 1 << sigma;
    const uint32_t q = 1u << m;
    std::mt19937_64 rng(seed);
    std::vector<CodeSpec> out;

    CodeSpec base;
    base.sigma = sigma;
    base.m = m;

    auto push_checked = [&](CodeSpec s,
                            std::vector<std::pair<UnitPoly CodeSpec::*, long>>
                                slots) {
        if (!validate(s).empty()) return;
        DerivedParams d = smallest_params_formula(s);
        // Recompute each slot's coefficient bound from the derived params.
        for (auto& [mem, bound] : slots) {
            if (mem == &CodeSpec::z)
                bound = (s.type == 3) ? long(d.L) - s.t : long(s.mu) - s.t;
            else if (mem == &CodeSpec::z1)
                bound = (s.type >= 7) ? long(s.beta) - s.T1 : long(d.U) - s.T1;
            else if (mem == &CodeSpec::z2)
                bound = (s.type == 5)   ? long(d.V) - s.T2
                        : (s.type == 7) ? long(d.W) - s.T2
                                        : long(s.omega) - s.T2;
            else
                bound = (s.type == 7) ? long(d.W) - s.T3
                                      : long(s.omega) - s.T3;
        }
        fill_units(s, std::move(slots), q, budget, rng, out);
    };

    for (int ty : ts) {
        CodeSpec s = base;
        s.type = ty;
        switch (ty) {
            case 1:
                for (int w : {0, 1}) {
                    s.which = w;
                    out.push_back(s);
                }
                break;
            case 2:
                for (s.ell = 0; s.ell < nn; ++s.ell) out.push_back(s);
                break;
            case 3:
                for (int zp = 0; zp < 2; ++zp)
                    for (s.ell = 0; s.ell < nn; ++s.ell)
                        for (s.t = 0; s.t <= (zp ? s.ell - 1 : 0); ++s.t) {
                            s.z = zp ? UnitPoly::one() : UnitPoly::zero();
                            if (zp)
                                push_checked(s, {{&CodeSpec::z, 1}});
                            else if (validate(s).empty())
                                out.push_back(s);
                        }
                break;
            case 4:
                for (int zp = 0; zp < 2; ++zp)
                    for (s.ell = 0; s.ell < nn; ++s.ell)
                        for (s.mu = 0; s.mu < s.ell; ++s.mu)
                            for (s.t = 0; s.t <= (zp ? s.mu - 1 : 0); ++s.t) {
                                s.z = zp ? UnitPoly::one() : UnitPoly::zero();
                                if (zp)
                                    push_checked(s, {{&CodeSpec::z, 1}});
                                else if (validate(s).empty())
                                    out.push_back(s);
                            }
                break;
            case 5:
                for (int pat = 0; pat < 4; ++pat) {
                    const bool p1 = pat & 2, p2 = pat & 1;
                    for (s.alpha = 1; s.alpha < nn; ++s.alpha)
                        for (s.T1 = 0; s.T1 <= (p1 ? s.alpha - 1 : 0); ++s.T1)
                            for (s.T2 = 0; s.T2 <= (p2 ? s.alpha - 1 : 0);
                                 ++s.T2) {
                                s.z1 = p1 ? UnitPoly::one() : UnitPoly::zero();
                                s.z2 = p2 ? UnitPoly::one() : UnitPoly::zero();
                                std::vector<std::pair<UnitPoly CodeSpec::*,
                                                      long>> slots;
                                if (p1) slots.push_back({&CodeSpec::z1, 1});
                                if (p2) slots.push_back({&CodeSpec::z2, 1});
                                if (slots.empty()) {
                                    if (validate(s).empty()) out.push_back(s);
                                } else {
                                    push_checked(s, std::move(slots));
                                }
                            }
                }
                break;
            case 6:
                for (int pat = 0; pat < 4; ++pat) {
                    const bool p1 = pat & 2, p2 = pat & 1;
                    for (s.alpha = 1; s.alpha < nn; ++s.alpha)
                        for (s.omega = 0; s.omega < s.alpha; ++s.omega)
                            for (s.T1 = 0; s.T1 <= (p1 ? s.alpha - 1 : 0);
                                 ++s.T1)
                                for (s.T2 = 0;
                                     s.T2 <= (p2 ? s.omega - 1 : 0); ++s.T2) {
                                    s.z1 = p1 ? UnitPoly::one()
                                              : UnitPoly::zero();
                                    s.z2 = p2 ? UnitPoly::one()
                                              : UnitPoly::zero();
                                    std::vector<std::pair<
                                        UnitPoly CodeSpec::*, long>> slots;
                                    if (p1) slots.push_back({&CodeSpec::z1, 1});
                                    if (p2) slots.push_back({&CodeSpec::z2, 1});
                                    if (slots.empty()) {
                                        if (validate(s).empty())
                                            out.push_back(s);
                                    } else {
                                        push_checked(s, std::move(slots));
                                    }
                                }
                }
                break;
            case 7:
            case 8:
                for (int pat = 0; pat < 8; ++pat) {
                    const bool p1 = pat & 4, p2 = pat & 2, p3 = pat & 1;
                    for (s.alpha = 1; s.alpha < nn; ++s.alpha)
                        for (s.beta = 0; s.beta <= s.alpha; ++s.beta)
                            for (s.omega = 0;
                                 s.omega < ((ty == 8) ? s.beta : 1);
                                 ++s.omega)
                                for (s.T1 = 0;
                                     s.T1 <= (p1 ? s.beta - 1 : 0); ++s.T1)
                                    for (s.T2 = 0;
                                         s.T2 <= (p2 ? s.beta - 1 : 0);
                                         ++s.T2)
                                        for (s.T3 = 0;
                                             s.T3 <= (p3 ? s.beta - 1 : 0);
                                             ++s.T3) {
                                            s.z1 = p1 ? UnitPoly::one()
                                                      : UnitPoly::zero();
                                            s.z2 = p2 ? UnitPoly::one()
                                                      : UnitPoly::zero();
                                            s.z3 = p3 ? UnitPoly::one()
                                                      : UnitPoly::zero();
                                            std::vector<std::pair<
                                                UnitPoly CodeSpec::*, long>>
                                                slots;
                                            if (p1)
                                                slots.push_back(
                                                    {&CodeSpec::z1, 1});
                                            if (p2)
                                                slots.push_back(
                                                    {&CodeSpec::z2, 1});
                                            if (p3)
                                                slots.push_back(
                                                    {&CodeSpec::z3, 1});
                                            if (slots.empty()) {
                                                if (validate(s).empty())
                                                    out.push_back(s);
                                            } else {
                                                push_checked(
                                                    s, std::move(slots));
                                            }
                                        }
                }
                break;
            default:
                break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON round-trip
// ---------------------------------------------------------------------------

namespace {

ordered_json unit_to_json(const UnitPoly& z) {
    if (z.is_zero()) return "zero";
    ordered_json arr = ordered_json::array();
    for (uint32_t c : z.coeffs) arr.push_back(bits_to_hex(c));
    return arr;
}

UnitPoly unit_from_json(const ordered_json& j, const std::string& name) {
    if (j.is_string()) {
        if (j.get<std::string>() == "zero") return UnitPoly::zero();
        throw std::invalid_argument("unit " + name +
                                    ": expected \"zero\" or a hex array");
    }
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("unit " + name +
                                    ": expected \"zero\" or a nonempty array");
    UnitPoly z;
    for (const auto& e : j) {
        if (!e.is_string())
            throw std::invalid_argument("unit " + name +
                                        ": coefficients must be hex strings");
        z.coeffs.push_back(hex_to_bits(e.get<std::string>()));
    }
    return z;
}

int int_field(const ordered_json& j, const std::string& key) {
    if (!j.contains(key))
        throw std::invalid_argument("missing field \"" + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_number_integer() || v.get<int64_t>() < 0 ||
        v.get<int64_t>() > INT32_MAX)
        throw std::invalid_argument("field \"" + key +
                                    "\" must be a non-negative integer");
    return int(v.get<int64_t>());
}

const std::vector<std::string>& param_keys(int type) {
    static const std::vector<std::string> keys[9] = {
        {},
        {"which"},
        {"ell"},
        {"ell", "t"},
        {"ell", "t", "mu"},
        {"alpha", "T1", "T2"},
        {"alpha", "omega", "T1", "T2"},
        {"alpha", "beta", "T1", "T2", "T3"},
        {"alpha", "beta", "omega", "T1", "T2", "T3"},
    };
    return keys[type];
}

const std::vector<std::string>& unit_keys(int type) {
    static const std::vector<std::string> keys[9] = {
        {}, {}, {}, {"z"}, {"z"},
        {"z1", "z2"}, {"z1", "z2"},
        {"z1", "z2", "z3"}, {"z1", "z2", "z3"},
    };
    return keys[type];
}

void require_exact_keys(const ordered_json& j,
                        const std::vector<std::string>& keys,
                        const std::string& where) {
    for (const auto& item : j.items())
        if (std::find(keys.begin(), keys.end(), item.key()) == keys.end())
            throw std::invalid_argument("unknown key \"" + item.key() +
                                        "\" in " + where);
    for (const auto& k : keys)
        if (!j.contains(k))
            throw std::invalid_argument("missing key \"" + k + "\" in " +
                                        where);
}

}  // namespace

std::string spec_to_json(const CodeSpec& s) {
    ordered_json j;
    j["sigma"] = s.sigma;
    j["m"] = s.m;
    j["type"] = s.type;
    ordered_json params = ordered_json::object();
    for (const auto& k : param_keys(s.type)) {
        if (k == "which")
            params[k] = s.which ? "one" : "zero";
        else if (k == "ell")
            params[k] = s.ell;
        else if (k == "t")
            params[k] = s.t;
        else if (k == "mu")
            params[k] = s.mu;
        else if (k == "alpha")
            params[k] = s.alpha;
        else if (k == "beta")
            params[k] = s.beta;
        else if (k == "omega")
            params[k] = s.omega;
        else if (k == "T1")
            params[k] = s.T1;
        else if (k == "T2")
            params[k] = s.T2;
        else if (k == "T3")
            params[k] = s.T3;
    }
    j["params"] = params;
    ordered_json units = ordered_json::object();
    for (const auto& k : unit_keys(s.type)) {
        if (k == "z")
            units[k] = unit_to_json(s.z);
        else if (k == "z1")
            units[k] = unit_to_json(s.z1);
        else if (k == "z2")
            units[k] = unit_to_json(s.z2);
        else if (k == "z3")
            units[k] = unit_to_json(s.z3);
    }
    j["units"] = units;
    return j.dump();
}

CodeSpec spec_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("JSON parse error: ") +
                                    e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("spec must be an object");
    require_exact_keys(j, {"sigma", "m", "type", "params", "units"}, "spec");

    CodeSpec s;
    s.sigma = unsigned(int_field(j, "sigma"));
    s.m = unsigned(int_field(j, "m"));
    s.type = int_field(j, "type");
    if (s.type < 1 || s.type > 8)
        throw std::invalid_argument("type in [1,8] violated (type=" +
                                    std::to_string(s.type) + ")");
    const auto& params = j.at("params");
    const auto& units = j.at("units");
    if (!params.is_object() || !units.is_object())
        throw std::invalid_argument("params and units must be objects");
    require_exact_keys(params, param_keys(s.type), "params");
    require_exact_keys(units, unit_keys(s.type), "units");

    for (const auto& k : param_keys(s.type)) {
        if (k == "which") {
            const auto& w = params.at(k);
            if (w.is_string() && w.get<std::string>() == "zero")
                s.which = 0;
            else if (w.is_string() && w.get<std::string>() == "one")
                s.which = 1;
            else
                throw std::invalid_argument(
                    "params.which must be \"zero\" or \"one\"");
        } else if (k == "ell")
            s.ell = int_field(params, k);
        else if (k == "t")
            s.t = int_field(params, k);
        else if (k == "mu")
            s.mu = int_field(params, k);
        else if (k == "alpha")
            s.alpha = int_field(params, k);
        else if (k == "beta")
            s.beta = int_field(params, k);
        else if (k == "omega")
            s.omega = int_field(params, k);
        else if (k == "T1")
            s.T1 = int_field(params, k);
        else if (k == "T2")
            s.T2 = int_field(params, k);
        else if (k == "T3")
            s.T3 = int_field(params, k);
    }
    for (const auto& k : unit_keys(s.type)) {
        if (k == "z")
            s.z = unit_from_json(units.at(k), k);
        else if (k == "z1")
            s.z1 = unit_from_json(units.at(k), k);
        else if (k == "z2")
            s.z2 = unit_from_json(units.at(k), k);
        else if (k == "z3")
            s.z3 = unit_from_json(units.at(k), k);
    }
    return s;
}

}  // namespace u3c
