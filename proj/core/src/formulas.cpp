#include "u3cyclic/formulas.hpp"

#include <stdexcept>

namespace u3c {

// ---------------------------------------------------------------------------
// Base distance table for <(x+1)^ell> over F_{2^m}
// ---------------------------------------------------------------------------

unsigned base_hamming(unsigned sigma, unsigned ell, int* gamma_out) {
    if (gamma_out) *gamma_out = -1;
    const unsigned nn = 1u << sigma;
    if (ell > nn) throw std::invalid_argument("ell <= 2^sigma violated");
    if (ell == 0) return 1;
    if (ell == nn) return 0;
    if (ell <= nn / 2) return 2;
    for (unsigned g = 1; g + 1 <= sigma; ++g) {
        const unsigned ws = nn - (nn >> g) + 1;
        const unsigned we = nn - (nn >> g) + (nn >> (g + 1));
        if (ws <= ell && ell <= we) {
            if (gamma_out) *gamma_out = int(g);
            return 1u << (g + 1);
        }
    }
    throw std::logic_error("base distance table has a gap");
}

unsigned base_lee(unsigned sigma, unsigned ell, int* gamma_out) {
    return base_hamming(sigma, ell, gamma_out);  // the two tables coincide
}

bool base_table_tiles(unsigned sigma) {
    const unsigned nn = 1u << sigma;
    for (unsigned ell = 0; ell <= nn; ++ell) {
        unsigned regions = 0;
        if (ell == 0) ++regions;
        if (1 <= ell && ell <= nn / 2) ++regions;
        if (ell == nn) ++regions;
        for (unsigned g = 1; g + 1 <= sigma; ++g) {
            const unsigned ws = nn - (nn >> g) + 1;
            const unsigned we = nn - (nn >> g) + (nn >> (g + 1));
            if (ws <= ell && ell <= we) ++regions;
        }
        if (regions != 1) return false;
    }
    return true;
}

int reduction_exponent(const CodeSpec& s) {
    const DerivedParams d = smallest_params_formula(s);
    switch (s.type) {
        case 1: return s.which == 1 ? 0 : int(s.n());
        case 2: return s.ell;
        case 3: return d.L;
        case 4: return s.mu;
        case 5: return d.V;
        case 6: return s.omega;
        case 7: return d.W;
        case 8: return s.omega;
        default: throw std::invalid_argument("type in [1,8] violated");
    }
}

DistanceResult hamming_distance(const CodeSpec& s) {
    static const char* kSource[9] = {nullptr, nullptr, "thm3",   "thm6",
                                     "thm10", "thm14", "thm24",  "thm34",
                                     "thm62"};
    DistanceResult r;
    r.kind = Coverage::Exact;
    if (s.type == 1) {
        r.value = s.which == 1 ? 1 : 0;
        r.source = s.which == 1 ? "type1/one" : "type1/zero";
        r.lo = r.hi = r.value;
        return r;
    }
    int gamma = -1;
    r.value = long(base_hamming(s.sigma, unsigned(reduction_exponent(s)), &gamma));
    r.lo = r.hi = r.value;
    r.gamma = gamma;
    r.source = kSource[s.type];
    return r;
}

DistanceResult lee_bounds_sandwich(const CodeSpec& s) {
    const long b = long(base_hamming(s.sigma, unsigned(reduction_exponent(s))));
    DistanceResult r;
    r.kind = Coverage::Bounds;
    r.lo = b;
    r.hi = 2 * b;
    r.source = "sandwich";
    return r;
}

// ---------------------------------------------------------------------------
// Lee distance clause tables
// ---------------------------------------------------------------------------

namespace {

// Everything a clause guard looks at, as plain signed integers. Conditions
// with halves are stated in doubled form (e.g. alpha <= 2^(sigma-2) + T2/2
// becomes 2*alpha <= H + T2), which keeps all guards integral.
struct Ctx {
    unsigned sigma;
    long N, H;  // 2^sigma and 2^(sigma-1)
    long ell, t, mu, alpha, beta, omega, T1, T2, T3;
    long L, U, V, W, L1;
    bool z_one, z1_one, z2_one;
};

using Matches = std::vector<DistanceResult>;

void X(Matches& m, const char* thm, int clause, long v, int gamma = -1) {
    DistanceResult r;
    r.kind = Coverage::Exact;
    r.value = r.lo = r.hi = v;
    r.source = std::string(thm) + "/clause" + std::to_string(clause);
    r.gamma = gamma;
    m.push_back(r);
}

void B(Matches& m, const char* thm, int clause, long lo, long hi, int gamma) {
    DistanceResult r;
    r.kind = Coverage::Bounds;
    r.lo = lo;
    r.hi = hi;
    r.source = std::string(thm) + "/clause" + std::to_string(clause);
    r.gamma = gamma;
    m.push_back(r);
}

// Iterates the tail windows [ws, we] for gamma = 1..sigma-1.
template <typename F>
void for_windows(const Ctx& c, F f) {
    for (unsigned g = 1; g + 1 <= c.sigma; ++g)
        f(int(g), c.N - (c.N >> g) + 1, c.N - (c.N >> g) + (c.N >> (g + 1)));
}

bool in_high(const Ctx& c, long x) { return c.H + 1 <= x && x <= c.N - 1; }

// --- Type 2 -----------------------------------------------------------------

void thm5(const Ctx& c, Matches& m) {
    if (c.ell == 0) X(m, "thm5", 1, 2);
    if (1 <= c.ell && c.ell <= c.H) X(m, "thm5", 2, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.ell && c.ell <= we) X(m, "thm5", 3, 4L << g, g);
    });
}

// --- Type 3 -----------------------------------------------------------------

void thm7(const Ctx& c, Matches& m) {
    if (c.ell == 0) X(m, "thm7", 1, 3);
    if (1 <= c.ell && c.ell <= c.H) X(m, "thm7", 2, 6);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.ell && c.ell <= we) X(m, "thm7", 3, 3L * (2L << g), g);
    });
}

void thm8(const Ctx& c, Matches& m) {
    if (1 < c.ell && c.ell <= c.H) X(m, "thm8", 1, 4);
    if (in_high(c, c.ell) && c.ell >= c.H + c.t) X(m, "thm8", 2, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.ell && c.ell <= we && 2 * c.ell <= c.N + c.t)
            B(m, "thm8", 3, 2L << g, 4L << g, g);
    });
}

void thm9(const Ctx& c, Matches& m) {
    if (1 <= c.ell && c.ell <= c.N - 1) X(m, "thm9", 1, 4);
}

// --- Type 4 -----------------------------------------------------------------

void thm11(const Ctx& c, Matches& m) {
    if (1 <= c.ell && c.ell <= c.H && c.mu == 0) X(m, "thm11", 1, 2);
    if (1 <= c.mu && c.mu < c.ell && c.ell <= c.H) X(m, "thm11", 2, 4);
    if (in_high(c, c.ell) && c.mu == 0) X(m, "thm11", 3, 2);
    if (in_high(c, c.ell) && 1 <= c.mu && c.mu <= c.H) X(m, "thm11", 4, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.mu && c.mu < c.ell && c.ell <= we)
            B(m, "thm11", 5, 2L << g, 4L << g, g);
    });
}

void thm12(const Ctx& c, Matches& m) {
    if (1 < c.mu && c.mu < c.ell && c.ell <= c.H) X(m, "thm12", 1, 4);
    if (in_high(c, c.ell) && 1 < c.mu && c.mu <= c.H) X(m, "thm12", 2, 4);
    if (c.H + 1 <= c.mu && c.mu < c.ell && c.ell <= c.N - 1 &&
        c.ell >= c.H + c.t)
        X(m, "thm12", 3, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.mu && c.mu < c.ell && c.ell <= we)
            B(m, "thm12", 4, 2L << g, 4L << g, g);
    });
}

void thm13(const Ctx& c, Matches& m) {
    if (0 < c.mu && c.mu < c.L && c.L <= c.ell && c.ell <= c.N - 1)
        X(m, "thm13", 1, 4);
}

// --- Type 5 -----------------------------------------------------------------

void thm15(const Ctx& c, Matches& m) {
    if (1 <= c.alpha && c.alpha <= c.H) X(m, "thm15", 1, 2);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.alpha && c.alpha <= we) X(m, "thm15", 2, 2L << g, g);
    });
}

void thm16(const Ctx& c, Matches& m) {
    if (1 <= c.alpha && 4 * c.alpha <= c.N) X(m, "thm16", 1, 2);
    if (c.z2_one && c.alpha == c.H) X(m, "thm16", 2, 2);
    if (m.empty()) X(m, "thm16", 3, 4);
}

void thm17(const Ctx& c, Matches& m) {
    if (1 < c.alpha && c.alpha <= c.H && 2 * c.alpha <= c.H + c.T2)
        X(m, "thm17", 1, 2);
    if (1 < c.alpha && c.alpha <= c.H && 2 * c.alpha > c.H + c.T2)
        X(m, "thm17", 2, 4);
    if (in_high(c, c.alpha) && c.alpha >= c.H + c.T2) X(m, "thm17", 3, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.alpha && c.alpha <= we && 2 * c.alpha <= we + c.T2)
            X(m, "thm17", 4, 2L << g, g);
    });
}

void thm18(const Ctx& c, Matches& m) {
    if (c.H >= 3 * c.alpha) X(m, "thm18", 1, 2);
    if (c.z1_one && c.alpha == c.H) X(m, "thm18", 2, 3);
    if (m.empty()) X(m, "thm18", 3, 4);
}

void thm19(const Ctx& c, Matches& m) {
    if (1 < c.alpha && c.alpha <= c.H && 2 * c.alpha <= c.H + c.T1 &&
        3 * c.alpha <= c.H + 2 * c.T1)
        X(m, "thm19", 1, 2);
    if (1 < c.alpha && c.alpha <= c.H &&
        (2 * c.alpha > c.H + c.T1 || 3 * c.alpha > c.H + 2 * c.T1))
        X(m, "thm19", 2, 4);
    if (in_high(c, c.alpha) && c.alpha >= c.H + c.T1) X(m, "thm19", 3, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.alpha && c.alpha <= we && 2 * c.alpha <= we + c.T1 &&
            3 * c.alpha <= we + 2 * c.T1)
            X(m, "thm19", 4, 2L << g, g);
    });
}

void thm20(const Ctx& c, Matches& m) {
    if (3 * c.alpha <= c.H) X(m, "thm20", 1, 2);
    if (c.z1_one && c.z2_one && c.alpha == c.H) X(m, "thm20", 2, 3);
    if (m.empty()) X(m, "thm20", 3, 4);
}

void thm21(const Ctx& c, Matches& m) {
    if (1 < c.alpha && c.alpha <= c.H && 3 * c.alpha <= c.H + 2 * c.T1)
        X(m, "thm21", 1, 2);
    if (1 < c.alpha && c.alpha <= c.H && 3 * c.alpha > c.H + 2 * c.T1)
        X(m, "thm21", 2, 4);
    if (in_high(c, c.alpha) && c.alpha >= c.H + c.T1) X(m, "thm21", 3, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.alpha && c.alpha <= we &&
            3 * c.alpha <= we + 2 * c.T1 && 2 * c.alpha <= c.N + c.T1)
            X(m, "thm21", 4, 2L << g, g);
    });
}

void thm22(const Ctx& c, Matches& m) {
    if (c.H >= 3 * c.alpha && 2 * c.alpha <= c.H + c.T2) X(m, "thm22", 1, 2);
    if (m.empty()) X(m, "thm22", 2, 4);
}

void thm23(const Ctx& c, Matches& m) {
    if (1 < c.alpha && c.alpha <= c.H && 3 * c.alpha <= c.H + 2 * c.T1 &&
        2 * c.alpha <= c.H + c.T2)
        X(m, "thm23", 1, 2);
    if (1 < c.alpha && c.alpha <= c.H &&
        (3 * c.alpha > c.H + 2 * c.T1 || 2 * c.alpha > c.H + c.T2))
        X(m, "thm23", 2, 4);
    if (in_high(c, c.alpha) && c.alpha >= c.H + c.T1) X(m, "thm23", 3, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.alpha && c.alpha <= we &&
            3 * c.alpha <= we + 2 * c.T1 && 2 * c.alpha <= we + c.T1 &&
            2 * c.alpha <= we + c.T2 && 2 * c.alpha <= c.N + c.T1)
            X(m, "thm23", 4, 2L << g, g);
    });
}

// --- Type 6 -----------------------------------------------------------------

void thm25(const Ctx& c, Matches& m) {
    if (1 <= c.alpha && c.alpha <= c.H) X(m, "thm25", 1, 2);
    if (in_high(c, c.alpha) && c.omega == 0) X(m, "thm25", 2, 2);
    if (in_high(c, c.alpha) && 1 <= c.omega && c.omega <= c.H)
        X(m, "thm25", 3, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.omega && c.omega < c.alpha && c.alpha <= we)
            X(m, "thm25", 4, 2L << g, g);
    });
}

void thm26(const Ctx& c, Matches& m) {
    if (c.omega + c.alpha <= c.H) X(m, "thm26", 1, 2);
    if (c.z2_one && c.alpha == c.H) X(m, "thm26", 2, 2);
    if (m.empty()) X(m, "thm26", 3, 4);
}

void thm27(const Ctx& c, Matches& m) {
    if (1 < c.alpha && c.alpha <= c.H && c.omega <= c.H - c.alpha + c.T2)
        X(m, "thm27", 1, 2);
    if (1 < c.alpha && c.alpha <= c.H && c.omega > c.H - c.alpha + c.T2)
        X(m, "thm27", 2, 4);
    if (in_high(c, c.alpha) && 1 < c.omega && c.omega <= c.H)
        X(m, "thm27", 3, 4);
    if (c.H + 1 <= c.omega && c.omega < c.alpha && c.alpha <= c.N - 1 &&
        c.alpha >= c.H + c.T2)
        X(m, "thm27", 4, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.omega && c.omega < c.alpha && c.alpha <= we &&
            2 * c.alpha <= we + c.T2)
            X(m, "thm27", 5, 2L << g, g);
    });
}

void thm28(const Ctx& c, Matches& m) {
    if (c.omega == 0) X(m, "thm28", 1, 2);
    if (1 <= c.omega && c.omega <= c.H && c.omega + 2 * c.alpha <= c.H)
        X(m, "thm28", 2, 2);
    if (1 <= c.omega && c.omega <= c.H && c.z1_one && c.alpha == c.H)
        X(m, "thm28", 3, 3);
    if (1 <= c.omega && c.omega <= c.H && c.omega + 2 * c.alpha > c.H &&
        (!c.z1_one || c.alpha != c.H))
        X(m, "thm28", 4, 4);
}

void thm29(const Ctx& c, Matches& m) {
    if (1 < c.alpha && c.alpha <= c.H && c.omega == 0) X(m, "thm29", 1, 2);
    if (1 <= c.omega && c.omega < c.alpha && c.alpha <= c.H &&
        c.omega <= c.H - 2 * c.alpha + 2 * c.T1 &&
        2 * c.alpha <= c.H + c.T1)
        X(m, "thm29", 2, 2);
    if (1 <= c.omega && c.omega < c.alpha && c.alpha <= c.H &&
        (c.omega > c.H - 2 * c.alpha + 2 * c.T1 ||
         2 * c.alpha > c.H + c.T1))
        X(m, "thm29", 3, 4);
    if (in_high(c, c.alpha) && c.omega == 0) X(m, "thm29", 4, 2);
    if (in_high(c, c.alpha) && 1 <= c.omega && c.omega <= c.H)
        X(m, "thm29", 5, 4);
    if (c.H + 1 <= c.omega && c.omega < c.alpha && c.alpha <= c.N - 1 &&
        c.alpha >= c.H + c.T1)
        X(m, "thm29", 6, 4);
    // The window clause's first side condition is printed against T2 even
    // though this family has z2 = 0; transcribed as printed.
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.omega && c.omega < c.alpha && c.alpha <= we &&
            2 * c.alpha <= we + c.T2 && 3 * c.alpha <= we + 2 * c.T1)
            X(m, "thm29", 7, 2L << g, g);
    });
}

void thm30(const Ctx& c, Matches& m) {
    if (c.omega + 2 * c.alpha <= c.H) X(m, "thm30", 1, 2);
    if (c.z1_one && c.z2_one && c.alpha == c.H) X(m, "thm30", 2, 3);
    if (m.empty()) X(m, "thm30", 3, 4);
}

void thm31(const Ctx& c, Matches& m) {
    if (1 <= c.omega && c.omega < c.alpha && c.alpha <= c.H &&
        2 * c.alpha <= c.H + c.T1 && c.alpha + c.omega <= c.H &&
        2 * c.alpha + c.omega <= c.H + 2 * c.T1)
        X(m, "thm31", 1, 2);
    if (1 <= c.omega && c.omega < c.alpha && c.alpha <= c.H &&
        (2 * c.alpha > c.H + c.T1 || c.alpha + c.omega > c.H ||
         2 * c.alpha + c.omega > c.H + 2 * c.T1))
        X(m, "thm31", 2, 4);
    if (in_high(c, c.alpha) && 1 <= c.omega && c.omega <= c.H)
        X(m, "thm31", 3, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.omega && c.omega < c.alpha && c.alpha <= we &&
            3 * c.alpha <= we + 2 * c.T1 && 2 * c.alpha <= c.N + c.T1)
            X(m, "thm31", 4, 2L << g, g);
    });
}

void thm32(const Ctx& c, Matches& m) {
    if (c.omega + 2 * c.alpha <= c.H && c.omega + c.alpha <= c.H + c.T2)
        X(m, "thm32", 1, 2);
    if (m.empty()) X(m, "thm32", 2, 4);
}

void thm33(const Ctx& c, Matches& m) {
    if (1 < c.alpha && c.alpha <= c.H &&
        c.omega <= c.H - c.alpha + 2 * c.T2 &&
        2 * c.alpha <= c.H + c.T1 &&
        c.omega <= c.H - 2 * c.alpha + 2 * c.T1)
        X(m, "thm33", 1, 2);
    // The second disjunct is printed with "<=", overlapping clause 1; the
    // first listed clause decides ties, so the table still evaluates as a
    // function. Transcribed as printed.
    if (1 < c.alpha && c.alpha <= c.H &&
        (c.omega > c.H - c.alpha + 2 * c.T2 ||
         2 * c.alpha <= c.H + c.T1 ||
         c.omega > c.H - 2 * c.alpha + 2 * c.T1))
        X(m, "thm33", 2, 4);
    if (in_high(c, c.alpha) && 1 < c.omega && c.omega <= c.H)
        X(m, "thm33", 3, 4);
    if (c.H + 1 <= c.omega && c.omega < c.alpha && c.alpha <= c.N - 1 &&
        c.alpha >= c.H + c.T1)
        X(m, "thm33", 4, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.omega && c.omega < c.alpha && c.alpha <= we &&
            3 * c.alpha <= we + 2 * c.T1 && 2 * c.alpha <= we + c.T2 &&
            2 * c.alpha <= c.N + c.T1)
            X(m, "thm33", 5, 2L << g, g);
    });
}

// --- Type 7 -----------------------------------------------------------------

void thm35(const Ctx& c, Matches& m) {
    if (1 <= c.alpha && c.alpha <= c.H) X(m, "thm35", 1, 2);
    if (in_high(c, c.alpha) && c.beta == 0) X(m, "thm35", 2, 2);
    if (in_high(c, c.alpha) && 1 <= c.beta && c.beta <= c.H)
        X(m, "thm35", 3, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.beta && c.beta < c.alpha && c.alpha <= we)
            X(m, "thm35", 4, 2L << g, g);
    });
}

void thm36(const Ctx& c, Matches& m) {
    if (1 < c.alpha && c.alpha <= c.H && c.alpha + c.beta <= c.H)
        X(m, "thm36", 1, 2);
    if (1 < c.alpha && c.alpha <= c.H && c.z1_one && c.alpha == c.H)
        X(m, "thm36", 2, 3);
    if (1 < c.alpha && c.alpha <= c.H && c.alpha + c.beta > c.H &&
        (!c.z1_one || c.alpha != c.H))
        X(m, "thm36", 3, 4);
    if (in_high(c, c.alpha) && 1 <= c.beta && c.beta <= c.H)
        X(m, "thm36", 4, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.beta && c.beta < c.alpha && c.alpha <= we)
            X(m, "thm36", 5, 4, g);
    });
}

void thm37(const Ctx& c, Matches& m) {
    if (1 < c.alpha && c.alpha <= c.H &&
        c.beta <= c.H - c.alpha + c.T1)
        X(m, "thm37", 1, 2);
    if (1 < c.alpha && c.alpha <= c.H && c.beta > c.H - c.alpha + c.T1)
        X(m, "thm37", 2, 4);
    if (in_high(c, c.alpha) && 1 < c.beta && c.beta <= c.H)
        X(m, "thm37", 3, 4);
    if (c.H + 1 <= c.beta && c.beta < c.alpha && c.alpha <= c.N - 1 &&
        c.alpha >= c.H + c.T1)
        X(m, "thm37", 4, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.beta && c.beta < c.alpha && c.alpha <= we &&
            2 * c.alpha <= we + c.T1 && 3 * c.alpha <= we + 2 * c.T1)
            X(m, "thm37", 5, 2L << g, g);
    });
}

void thm38(const Ctx& c, Matches& m) {
    if (c.beta + c.alpha <= c.H) X(m, "thm38", 1, 2);
    if (c.z2_one && c.alpha == c.H) X(m, "thm38", 2, 2);
    if (m.empty()) X(m, "thm38", 3, 4);
}

void thm39(const Ctx& c, Matches& m) {
    if (1 < c.alpha && c.alpha <= c.H && 2 * c.alpha <= c.H + c.T2)
        X(m, "thm39", 1, 2);
    if (1 < c.alpha && c.alpha <= c.H && 2 * c.alpha > c.H + c.T2)
        X(m, "thm39", 2, 4);
    if (in_high(c, c.alpha) && 1 < c.W && c.W <= c.beta && c.beta <= c.H)
        X(m, "thm39", 3, 4);
    if (c.H + 1 <= c.beta && c.beta < c.alpha && c.alpha <= c.N - 1 &&
        1 < c.W && c.W <= c.H)
        X(m, "thm39", 4, 4);
    if (c.H + 1 <= c.W && c.W <= c.beta && c.beta < c.alpha &&
        c.alpha <= c.N - 1 && c.alpha >= c.H + c.T2)
        X(m, "thm39", 5, 4);
    // The window clause also demands alpha <= 2^sigma - 2^(sigma-gamma),
    // which sits below the window start; transcribed as printed.
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.W && c.W <= c.beta && c.beta < c.alpha &&
            c.alpha <= we && c.alpha <= c.N - (c.N >> g) &&
            2 * c.alpha <= c.N + c.T2)
            X(m, "thm39", 6, 2L << g, g);
    });
}

void thm40(const Ctx& c, Matches& m) {
    if (1 < c.alpha && c.alpha <= c.H) X(m, "thm40", 1, 2);
    if (in_high(c, c.alpha)) X(m, "thm40", 2, 4);
}

void thm41(const Ctx& c, Matches& m) {
    if (1 < c.alpha && c.alpha <= c.H) X(m, "thm41", 1, 2);
    if (in_high(c, c.alpha) && 1 < c.W && c.W <= c.beta && c.beta <= c.H)
        X(m, "thm41", 2, 4);
    if (c.H + 1 <= c.beta && c.beta < c.alpha && c.alpha <= c.N - 1 &&
        1 < c.W && c.W <= c.H)
        X(m, "thm41", 3, 4);
    if (c.H + 1 <= c.W && c.W <= c.beta && c.beta < c.alpha &&
        c.alpha <= c.N - 1 && c.beta >= c.H + c.T3)
        X(m, "thm41", 4, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.W && c.W <= c.beta && c.beta < c.alpha && c.alpha <= we)
            X(m, "thm41", 5, 2L << g, g);
    });
}

void thm42(const Ctx& c, Matches& m) {
    const bool low = 1 <= c.beta && c.beta < c.alpha && c.alpha < c.H;
    if (low && 2 * c.alpha <= c.H + c.T1 && c.alpha + c.beta <= c.H &&
        2 * c.alpha + c.beta <= c.H + 2 * c.T1)
        X(m, "thm42", 1, 2);
    // Printed with both alpha < 2^(sigma-1) and alpha = 2^(sigma-1); the
    // guard can never hold. Transcribed as printed.
    if (low && c.z1_one && c.z2_one && c.alpha == c.H) X(m, "thm42", 2, 3);
    if (low &&
        (2 * c.alpha > c.H + c.T1 || c.alpha + c.beta > c.H ||
         2 * c.alpha + c.beta > c.H + 2 * c.T1) &&
        (!c.z1_one || !c.z2_one || c.alpha != c.H))
        X(m, "thm42", 3, 4);
    if (in_high(c, c.alpha) && 1 <= c.beta && c.beta <= c.H)
        X(m, "thm42", 4, 4);
    if (c.H + 1 <= c.beta && c.beta < c.alpha && c.alpha <= c.N - 1)
        X(m, "thm42", 5, 4);
}

void thm43(const Ctx& c, Matches& m) {
    if (1 < c.alpha && c.alpha <= c.H && c.alpha + c.beta <= c.H &&
        2 * c.alpha <= c.H + c.T1 &&
        2 * c.alpha + c.beta <= c.H + 2 * c.T1)
        X(m, "thm43", 1, 2);
    if (1 < c.alpha && c.alpha <= c.H &&
        (c.alpha + c.beta > c.H || 2 * c.alpha > c.H + c.T1 ||
         2 * c.alpha + c.beta > c.H + 2 * c.T1))
        X(m, "thm43", 2, 4);
    if (in_high(c, c.alpha) && 1 < c.beta && c.beta <= c.H)
        X(m, "thm43", 3, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.beta && c.beta < c.alpha && c.alpha <= we &&
            3 * c.alpha <= we + 2 * c.T1 && 2 * c.alpha <= c.N + c.T1)
            X(m, "thm43", 4, 2L << g, g);
    });
}

void thm44(const Ctx& c, Matches& m) {
    const bool low = 1 < c.beta && c.beta < c.alpha && c.alpha <= c.H;
    if (low && 2 * c.alpha <= c.H && c.alpha + c.beta <= c.H + c.T2 &&
        2 * c.alpha + c.beta <= c.H)
        X(m, "thm44", 1, 2);
    if (low &&
        (2 * c.alpha > c.H || c.alpha + c.beta > c.H + c.T2 ||
         2 * c.alpha + c.beta > c.H))
        X(m, "thm44", 2, 4);
    if (in_high(c, c.alpha) && 1 < c.beta && c.beta <= c.H)
        X(m, "thm44", 3, 4);
    if (c.H + 1 <= c.beta && c.beta < c.alpha && c.alpha <= c.N - 1)
        X(m, "thm44", 4, 4);
}

void thm45(const Ctx& c, Matches& m) {
    const bool low = 1 < c.beta && c.beta < c.alpha && c.alpha <= c.H;
    if (low && 2 * c.alpha <= c.H + c.T1 &&
        c.alpha + c.beta <= c.H + c.T2 &&
        2 * c.alpha + c.beta <= c.H + 2 * c.T1)
        X(m, "thm45", 1, 2);
    if (low &&
        (2 * c.alpha > c.H + c.T1 || c.alpha + c.beta > c.H + c.T2 ||
         2 * c.alpha + c.beta > c.H + 2 * c.T1))
        X(m, "thm45", 2, 4);
    if (in_high(c, c.alpha) && 1 < c.beta && c.beta <= c.H)
        X(m, "thm45", 3, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.alpha && c.alpha <= we &&
            3 * c.alpha <= we + 2 * c.T1 && 2 * c.alpha <= we + c.T2 &&
            2 * c.alpha <= c.N + c.T1)
            X(m, "thm45", 4, 2L << g, g);
    });
}

void thm46(const Ctx& c, Matches& m) {
    if (c.beta + c.alpha <= c.H) X(m, "thm46", 1, 2);
    if (c.z2_one && c.alpha == c.H) X(m, "thm46", 2, 2);
    if (m.empty()) X(m, "thm46", 3, 4);
}

void thm47(const Ctx& c, Matches& m) {
    if (1 < c.alpha && c.alpha <= c.H &&
        c.alpha + c.beta <= c.H + c.T2)
        X(m, "thm47", 1, 2);
    if (1 < c.alpha && c.alpha <= c.H && c.alpha + c.beta > c.H + c.T2)
        X(m, "thm47", 2, 4);
    if (in_high(c, c.alpha) && 1 < c.W && c.W <= c.beta && c.beta <= c.H)
        X(m, "thm47", 3, 4);
    if (c.H + 1 <= c.beta && c.beta < c.alpha && c.alpha <= c.N - 1 &&
        1 < c.W && c.W <= c.H)
        X(m, "thm47", 4, 4);
    if (c.H + 1 <= c.W && c.W <= c.beta && c.beta < c.alpha &&
        c.alpha <= c.N - 1 && c.alpha >= c.H + c.T2)
        X(m, "thm47", 5, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.W && c.W <= c.beta && c.beta < c.alpha &&
            c.alpha <= we && 2 * c.alpha <= we + c.T2)
            X(m, "thm47", 6, 2L << g, g);
    });
}

void thm48(const Ctx& c, Matches& m) {
    if (c.beta + c.alpha <= c.H) X(m, "thm48", 1, 2);
    if (c.z2_one && c.alpha == c.H) X(m, "thm48", 2, 2);
    if (m.empty()) X(m, "thm48", 3, 4);
}

void thm49(const Ctx& c, Matches& m) {
    if (1 < c.alpha && c.alpha <= c.H &&
        c.alpha + c.beta <= c.H + c.T2)
        X(m, "thm49", 1, 2);
    if (1 < c.alpha && c.alpha <= c.H && c.alpha + c.beta > c.H + c.T2)
        X(m, "thm49", 2, 4);
    if (in_high(c, c.alpha) && 1 < c.W && c.W <= c.beta && c.beta <= c.H)
        X(m, "thm49", 3, 4);
    if (c.H + 1 <= c.beta && c.beta < c.alpha && c.alpha <= c.N - 1 &&
        1 < c.W && c.W <= c.H)
        X(m, "thm49", 4, 4);
    if (c.H + 1 <= c.W && c.W <= c.beta && c.beta < c.alpha &&
        c.alpha <= c.N - 1 && c.alpha >= c.H + c.T2)
        X(m, "thm49", 5, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.W && c.W <= c.beta && c.beta < c.alpha &&
            c.alpha <= we && 2 * c.alpha <= we + c.T2)
            X(m, "thm49", 6, 2L << g, g);
    });
}

void thm50(const Ctx& c, Matches& m) {
    if (2 * c.alpha + c.beta <= c.H) X(m, "thm50", 1, 2);
    if (c.z1_one && c.alpha == c.H) X(m, "thm50", 2, 3);
    if (m.empty()) X(m, "thm50", 3, 4);
}

void thm51(const Ctx& c, Matches& m) {
    if (c.H >= c.alpha && c.H + c.T1 >= 2 * c.alpha &&
        c.H + 2 * c.T1 >= 2 * c.alpha + c.beta)
        X(m, "thm51", 1, 2);
    if (m.empty()) X(m, "thm51", 2, 4);
}

void thm52(const Ctx& c, Matches& m) {
    if (1 < c.alpha && c.alpha <= c.H && 2 * c.alpha <= c.H &&
        2 * c.alpha + c.beta <= c.H)
        X(m, "thm52", 1, 2);
    if (1 < c.alpha && c.alpha <= c.H && c.z1_one && c.alpha == c.H)
        X(m, "thm52", 2, 3);
    // First disjunct printed as "<=", overlapping clause 1; first match
    // decides. Transcribed as printed.
    if (1 < c.alpha && c.alpha <= c.H &&
        (2 * c.alpha <= c.H || 2 * c.alpha + c.beta > c.H) &&
        (!c.z1_one || c.alpha != c.H))
        X(m, "thm52", 3, 4);
    if (in_high(c, c.alpha) && 1 < c.W && c.W <= c.beta && c.beta <= c.H)
        X(m, "thm52", 4, 4);
    if (c.H + 1 <= c.beta && c.beta < c.alpha && c.alpha <= c.N - 1 &&
        1 < c.W && c.W <= c.H)
        X(m, "thm52", 5, 4);
    if (c.H + 1 <= c.W && c.W <= c.beta && c.beta < c.alpha &&
        c.alpha <= c.N - 1 && c.beta >= c.H + c.T3)
        X(m, "thm52", 6, 4);
}

void thm53(const Ctx& c, Matches& m) {
    if (1 < c.alpha && c.alpha <= c.H && 2 * c.alpha <= c.H + c.T1 &&
        2 * c.alpha + c.beta <= c.H + c.T1)
        X(m, "thm53", 1, 2);
    // First disjunct printed as "<=", overlapping clause 1; first match
    // decides. Transcribed as printed.
    if (1 < c.alpha && c.alpha <= c.H &&
        (2 * c.alpha <= c.H + c.T1 ||
         2 * c.alpha + c.beta > c.H + c.T1))
        X(m, "thm53", 2, 4);
    if (in_high(c, c.alpha) && 1 < c.W && c.W <= c.beta && c.beta <= c.H)
        X(m, "thm53", 3, 4);
    if (c.H + 1 <= c.beta && c.beta < c.alpha && c.alpha <= c.N - 1 &&
        1 < c.W && c.W <= c.H)
        X(m, "thm53", 4, 4);
    if (c.H + 1 <= c.W && c.W <= c.beta && c.beta < c.alpha &&
        c.alpha <= c.N - 1 &&
        (c.beta >= c.H + c.T3 || c.alpha >= c.H + c.T1))
        X(m, "thm53", 5, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.W && c.W <= c.beta && c.beta < c.alpha &&
            c.alpha <= we && 2 * c.alpha <= we + c.T1 &&
            3 * c.alpha <= we + 2 * c.T1)
            X(m, "thm53", 6, 2L << g, g);
    });
}

void thm54(const Ctx& c, Matches& m) {
    if (c.H >= 2 * c.alpha && c.alpha + c.beta <= c.H &&
        2 * c.alpha + c.beta <= c.H)
        X(m, "thm54", 1, 2);
    if (c.z1_one && c.z2_one && c.alpha == c.H) X(m, "thm54", 2, 3);
    if (m.empty()) X(m, "thm54", 3, 4);
}

void thm55(const Ctx& c, Matches& m) {
    if (c.H >= 2 * c.alpha && c.alpha + c.beta <= c.H &&
        2 * c.alpha + c.beta <= c.H)
        X(m, "thm55", 1, 2);
    if (m.empty()) X(m, "thm55", 2, 4);
}

void thm56(const Ctx& c, Matches& m) {
    if (c.H >= 2 * c.alpha && c.alpha + c.beta <= c.H + c.T2 &&
        2 * c.alpha + c.beta <= c.H)
        X(m, "thm56", 1, 2);
    if (m.empty()) X(m, "thm56", 2, 4);
}

void thm57(const Ctx& c, Matches& m) {
    if (1 < c.alpha && c.alpha <= c.H && 2 * c.alpha <= c.H &&
        c.alpha + c.beta <= c.H && 2 * c.alpha + c.beta <= c.H)
        X(m, "thm57", 1, 2);
    if (1 < c.alpha && c.alpha <= c.H && c.alpha == c.H && c.z1_one &&
        c.z2_one)
        X(m, "thm57", 2, 3);
    if (1 < c.alpha && c.alpha <= c.H &&
        (2 * c.alpha > c.H || c.alpha + c.beta > c.H ||
         2 * c.alpha + c.beta > c.H) &&
        (!c.z1_one || !c.z2_one || c.alpha != c.H))
        X(m, "thm57", 3, 4);
    if (in_high(c, c.alpha) && 1 < c.W && c.W <= c.beta && c.beta <= c.H)
        X(m, "thm57", 4, 4);
    if (c.H + 1 <= c.beta && c.beta < c.alpha && c.alpha <= c.N - 1 &&
        1 < c.W && c.W <= c.H)
        X(m, "thm57", 5, 4);
    if (c.H + 1 <= c.W && c.W <= c.beta && c.beta < c.alpha &&
        c.alpha <= c.N - 1)
        X(m, "thm57", 6, 4);
}

void thm58(const Ctx& c, Matches& m) {
    if (c.H >= 2 * c.alpha && c.alpha + c.beta <= c.H &&
        2 * c.alpha + c.beta <= c.H)
        X(m, "thm58", 1, 2);
    if (m.empty()) X(m, "thm58", 2, 4);
}

void thm59(const Ctx& c, Matches& m) {
    if (1 < c.alpha && c.alpha <= c.H && 2 * c.alpha <= c.H &&
        c.alpha + c.beta <= c.H + c.T2 && 2 * c.alpha + c.beta <= c.H)
        X(m, "thm59", 1, 2);
    if (1 < c.alpha && c.alpha <= c.H &&
        (2 * c.alpha > c.H || c.alpha + c.beta > c.H + c.T2 ||
         2 * c.alpha + c.beta > c.H))
        X(m, "thm59", 2, 4);
    if (in_high(c, c.alpha) && 1 < c.W && c.W <= c.beta && c.beta <= c.H)
        X(m, "thm59", 3, 4);
    if (c.H + 1 <= c.beta && c.beta < c.alpha && c.alpha <= c.N - 1 &&
        1 < c.W && c.W <= c.H)
        X(m, "thm59", 4, 4);
    if (c.H + 1 <= c.W && c.W <= c.beta && c.beta < c.alpha &&
        c.alpha <= c.N - 1)
        X(m, "thm59", 5, 4);
}

void thm60(const Ctx& c, Matches& m) {
    if (1 < c.alpha && c.alpha <= c.H && 2 * c.alpha <= c.H + c.T1 &&
        c.alpha + c.beta <= c.H &&
        2 * c.alpha + c.beta <= c.H + c.T1)
        X(m, "thm60", 1, 2);
    if (1 < c.alpha && c.alpha <= c.H &&
        (2 * c.alpha > c.H + c.T1 || c.alpha + c.beta > c.H ||
         2 * c.alpha + c.beta > c.H + c.T1))
        X(m, "thm60", 2, 4);
    if (in_high(c, c.alpha) && 1 < c.W && c.W <= c.beta && c.beta <= c.H)
        X(m, "thm60", 3, 4);
    if (c.H + 1 <= c.beta && c.beta < c.alpha && c.alpha <= c.N - 1 &&
        1 < c.W && c.W <= c.H)
        X(m, "thm60", 4, 4);
    if (c.H + 1 <= c.W && c.W <= c.beta && c.beta < c.alpha &&
        c.alpha <= c.N - 1 && c.beta >= c.H + c.T3)
        X(m, "thm60", 5, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.W && c.W <= c.beta && c.beta < c.alpha &&
            c.alpha <= we && 3 * c.alpha <= we + 2 * c.T1 &&
            2 * c.alpha <= c.N + c.T1)
            X(m, "thm60", 6, 2L << g, g);
    });
}

void thm61(const Ctx& c, Matches& m) {
    if (1 < c.alpha && c.alpha <= c.H && 2 * c.alpha <= c.H + c.T1 &&
        c.alpha + c.beta <= c.H + c.T2 &&
        2 * c.alpha + c.beta <= c.H + c.T1)
        X(m, "thm61", 1, 2);
    if (1 < c.alpha && c.alpha <= c.H &&
        (2 * c.alpha > c.H + c.T1 || c.alpha + c.beta > c.H + c.T2 ||
         2 * c.alpha + c.beta > c.H + c.T1))
        X(m, "thm61", 2, 4);
    if (in_high(c, c.alpha) && 1 < c.W && c.W <= c.beta && c.beta <= c.H)
        X(m, "thm61", 3, 4);
    if (c.H + 1 <= c.beta && c.beta < c.alpha && c.alpha <= c.N - 1 &&
        1 < c.W && c.W <= c.H)
        X(m, "thm61", 4, 4);
    if (c.H + 1 <= c.W && c.W <= c.beta && c.beta < c.alpha &&
        c.alpha <= c.N - 1 && c.beta >= c.H + c.T3)
        X(m, "thm61", 5, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.W && c.W <= c.beta && c.beta < c.alpha &&
            c.alpha <= we && 3 * c.alpha <= we + 2 * c.T1 &&
            2 * c.alpha <= we + c.T2 && 2 * c.alpha <= c.N + c.T1)
            X(m, "thm61", 6, 2L << g, g);
    });
}

// --- Type 8 (the three published unit patterns) ------------------------------

void thm63(const Ctx& c, Matches& m) {
    if (1 < c.beta && c.beta < c.alpha && c.alpha < c.H && c.omega == 0)
        X(m, "thm63", 1, 2);
    if (in_high(c, c.alpha) && 1 < c.beta && c.beta <= c.H && c.omega == 0)
        X(m, "thm63", 2, 2);
    if (in_high(c, c.alpha) && 1 <= c.omega && c.omega < c.beta &&
        c.beta <= c.H)
        X(m, "thm63", 3, 4);
    if (c.H + 1 <= c.beta && c.beta < c.alpha && c.alpha <= c.N - 1 &&
        c.omega == 0)
        X(m, "thm63", 4, 2);
    if (c.H + 1 <= c.beta && c.beta < c.alpha && c.alpha <= c.N - 1 &&
        1 <= c.omega && c.omega <= c.H)
        X(m, "thm63", 5, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.omega && c.omega < c.beta && c.beta < c.alpha &&
            c.alpha <= we)
            X(m, "thm63", 6, 2L << g, g);
    });
}

void thm64(const Ctx& c, Matches& m) {
    if (1 < c.beta && c.beta < c.alpha && c.alpha < c.H && c.omega == 0)
        X(m, "thm64", 1, 2);
    if (1 <= c.omega && c.omega < c.beta && c.beta < c.alpha &&
        c.alpha < c.H && c.beta + c.alpha <= c.H)
        X(m, "thm64", 2, 2);
    if (1 <= c.omega && c.omega < c.beta && c.beta < c.alpha &&
        c.alpha < c.H && c.beta + c.alpha > c.H)
        X(m, "thm64", 3, 4);
    if (c.alpha == c.H && c.z1_one && c.omega == 0) X(m, "thm64", 4, 2);
    if (c.alpha == c.H && c.z1_one && c.omega > 0) X(m, "thm64", 5, 4);
    if (in_high(c, c.alpha) && 1 < c.beta && c.beta <= c.H && c.omega == 0)
        X(m, "thm64", 6, 2);
    if (in_high(c, c.alpha) && 1 <= c.omega && c.omega < c.beta &&
        c.beta <= c.H)
        X(m, "thm64", 7, 4);
    if (c.H + 1 <= c.beta && c.beta < c.alpha && c.alpha <= c.N - 1 &&
        c.omega == 0)
        X(m, "thm64", 8, 2);
    if (c.H + 1 <= c.beta && c.beta < c.alpha && c.alpha <= c.N - 1 &&
        1 <= c.omega && c.omega <= c.H)
        X(m, "thm64", 9, 4);
    if (c.H + 1 <= c.omega && c.omega < c.beta && c.beta < c.alpha &&
        c.alpha <= c.N - 1)
        X(m, "thm64", 10, 4);
}

void thm65(const Ctx& c, Matches& m) {
    if (1 < c.beta && c.beta < c.alpha && c.alpha <= c.H && c.omega == 0)
        X(m, "thm65", 1, 2);
    if (1 <= c.omega && c.omega < c.beta && c.beta < c.alpha &&
        c.alpha <= c.H && c.beta + c.alpha <= c.H + c.T1)
        X(m, "thm65", 2, 2);
    if (1 <= c.omega && c.omega < c.beta && c.beta < c.alpha &&
        c.alpha <= c.H && c.beta + c.alpha > c.H + c.T1)
        X(m, "thm65", 3, 4);
    if (in_high(c, c.alpha) && 1 < c.beta && c.beta <= c.H && c.omega == 0)
        X(m, "thm65", 4, 2);
    if (in_high(c, c.alpha) && 1 <= c.omega && c.omega < c.beta &&
        c.beta <= c.H)
        X(m, "thm65", 5, 4);
    if (c.H + 1 <= c.beta && c.beta < c.alpha && c.alpha <= c.N - 1 &&
        c.omega == 0)
        X(m, "thm65", 6, 2);
    if (c.H + 1 <= c.beta && c.beta < c.alpha && c.alpha <= c.N - 1 &&
        1 <= c.omega && c.omega <= c.H)
        X(m, "thm65", 7, 4);
    for_windows(c, [&](int g, long ws, long we) {
        if (ws <= c.omega && c.omega < c.beta && c.beta < c.alpha &&
            c.alpha <= we && 2 * c.alpha <= we + c.T1 &&
            3 * c.alpha <= we + 2 * c.T1)
            X(m, "thm65", 8, 2L << g, g);
    });
}

// --- Dispatch ----------------------------------------------------------------

// 0 = absent, 1 = unit with zero shift, 2 = unit with nonzero shift.
int unit_state(const UnitPoly& z, int shift) {
    if (z.is_zero()) return 0;
    return shift == 0 ? 1 : 2;
}

int lee_theorem_number(const CodeSpec& s) {
    switch (s.type) {
        case 2:
            return 5;
        case 3:
            if (s.z.is_zero()) return 7;
            return s.t != 0 ? 8 : 9;
        case 4:
            if (s.z.is_zero()) return 11;
            return s.t != 0 ? 12 : 13;
        case 5: {
            static const int map5[9] = {15, 16, 17, 18, 20, 22, 19, 21, 23};
            return map5[unit_state(s.z1, s.T1) * 3 + unit_state(s.z2, s.T2)];
        }
        case 6: {
            static const int map6[9] = {25, 26, 27, 28, 30, 32, 29, 31, 33};
            return map6[unit_state(s.z1, s.T1) * 3 + unit_state(s.z2, s.T2)];
        }
        case 7: {
            static const int map7[27] = {
                35, 40, 41, 38, 46, 48, 39, 47, 49,   // z1 absent
                36, 50, 52, 42, 54, 57, 44, 56, 59,   // z1 unit, T1 = 0
                37, 51, 53, 43, 55, 60, 45, 58, 61};  // z1 unit, T1 != 0
            return map7[unit_state(s.z1, s.T1) * 9 +
                        unit_state(s.z2, s.T2) * 3 + unit_state(s.z3, s.T3)];
        }
        case 8:
            if (!s.z2.is_zero() || !s.z3.is_zero()) return 0;  // no formula
            switch (unit_state(s.z1, s.T1)) {
                case 0: return 63;
                case 1: return 64;
                default: return 65;
            }
        default:
            return 0;
    }
}

void run_theorem(int num, const Ctx& c, Matches& m) {
    switch (num) {
        case 5: thm5(c, m); break;
        case 7: thm7(c, m); break;
        case 8: thm8(c, m); break;
        case 9: thm9(c, m); break;
        case 11: thm11(c, m); break;
        case 12: thm12(c, m); break;
        case 13: thm13(c, m); break;
        case 15: thm15(c, m); break;
        case 16: thm16(c, m); break;
        case 17: thm17(c, m); break;
        case 18: thm18(c, m); break;
        case 19: thm19(c, m); break;
        case 20: thm20(c, m); break;
        case 21: thm21(c, m); break;
        case 22: thm22(c, m); break;
        case 23: thm23(c, m); break;
        case 25: thm25(c, m); break;
        case 26: thm26(c, m); break;
        case 27: thm27(c, m); break;
        case 28: thm28(c, m); break;
        case 29: thm29(c, m); break;
        case 30: thm30(c, m); break;
        case 31: thm31(c, m); break;
        case 32: thm32(c, m); break;
        case 33: thm33(c, m); break;
        case 35: thm35(c, m); break;
        case 36: thm36(c, m); break;
        case 37: thm37(c, m); break;
        case 38: thm38(c, m); break;
        case 39: thm39(c, m); break;
        case 40: thm40(c, m); break;
        case 41: thm41(c, m); break;
        case 42: thm42(c, m); break;
        case 43: thm43(c, m); break;
        case 44: thm44(c, m); break;
        case 45: thm45(c, m); break;
        case 46: thm46(c, m); break;
        case 47: thm47(c, m); break;
        case 48: thm48(c, m); break;
        case 49: thm49(c, m); break;
        case 50: thm50(c, m); break;
        case 51: thm51(c, m); break;
        case 52: thm52(c, m); break;
        case 53: thm53(c, m); break;
        case 54: thm54(c, m); break;
        case 55: thm55(c, m); break;
        case 56: thm56(c, m); break;
        case 57: thm57(c, m); break;
        case 58: thm58(c, m); break;
        case 59: thm59(c, m); break;
        case 60: thm60(c, m); break;
        case 61: thm61(c, m); break;
        case 63: thm63(c, m); break;
        case 64: thm64(c, m); break;
        case 65: thm65(c, m); break;
        default: break;
    }
}

Ctx make_ctx(const CodeSpec& s) {
    const DerivedParams d = smallest_params_formula(s);
    Ctx c;
    c.sigma = s.sigma;
    c.N = 1L << s.sigma;
    c.H = c.N / 2;
    c.ell = s.ell;
    c.t = s.t;
    c.mu = s.mu;
    c.alpha = s.alpha;
    c.beta = s.beta;
    c.omega = s.omega;
    c.T1 = s.T1;
    c.T2 = s.T2;
    c.T3 = s.T3;
    c.L = d.L;
    c.U = d.U;
    c.V = d.V;
    c.W = d.W;
    c.L1 = d.L1;
    c.z_one = s.z.is_one();
    c.z1_one = s.z1.is_one();
    c.z2_one = s.z2.is_one();
    return c;
}

Matches collect_matches(const CodeSpec& s, std::string& gap_source) {
    Matches m;
    const int num = lee_theorem_number(s);
    if (num == 0) {
        gap_source = "type8/remaining";
        return m;
    }
    gap_source = "thm" + std::to_string(num) + "/gap";
    run_theorem(num, make_ctx(s), m);
    return m;
}

}  // namespace

std::string lee_theorem(const CodeSpec& s) {
    if (s.type == 1) return s.which == 1 ? "type1/one" : "type1/zero";
    const int num = lee_theorem_number(s);
    return num == 0 ? "type8/remaining" : "thm" + std::to_string(num);
}

DistanceResult lee_distance(const CodeSpec& s) {
    if (s.type == 1) {
        DistanceResult r;
        r.kind = Coverage::Exact;
        r.value = s.which == 1 ? 1 : 0;
        r.lo = r.hi = r.value;
        r.source = s.which == 1 ? "type1/one" : "type1/zero";
        return r;
    }
    std::string gap_source;
    Matches m = collect_matches(s, gap_source);
    if (!m.empty()) return m.front();
    DistanceResult r;
    r.kind = Coverage::NotCovered;
    r.source = gap_source;
    return r;
}

std::vector<DistanceResult> audit_clauses(const CodeSpec& s) {
    if (s.type == 1) return {lee_distance(s)};
    std::string gap_source;
    return collect_matches(s, gap_source);
}

}  // namespace u3c
