#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "u3cyclic/codespec.hpp"
#include "u3cyclic/formulas.hpp"

using namespace u3c;

namespace {

const std::vector<int> kAllTypes = {1, 2, 3, 4, 5, 6, 7, 8};

CodeSpec type2(unsigned sigma, int ell) {
    CodeSpec s;
    s.sigma = sigma;
    s.type = 2;
    s.ell = ell;
    return s;
}

CodeSpec type3(unsigned sigma, int ell, int t, UnitPoly z) {
    CodeSpec s;
    s.sigma = sigma;
    s.type = 3;
    s.ell = ell;
    s.t = t;
    s.z = std::move(z);
    return s;
}

}  // namespace

TEST_SUITE("formulas") {

TEST_CASE("base table: values, windows, and exact tiling") {
    // sigma=3 row, ell = 0..8.
    const unsigned expect[9] = {1, 2, 2, 2, 2, 4, 4, 8, 0};
    for (unsigned ell = 0; ell <= 8; ++ell) {
        CHECK(base_hamming(3, ell) == expect[ell]);
        CHECK(base_lee(3, ell) == expect[ell]);
    }
    int gamma = -2;
    base_lee(3, 5, &gamma);
    CHECK(gamma == 1);
    base_lee(3, 7, &gamma);
    CHECK(gamma == 2);
    base_lee(3, 2, &gamma);
    CHECK(gamma == -1);  // head clause, no window
    for (unsigned sigma = 2; sigma <= 5; ++sigma)
        CHECK(base_table_tiles(sigma));
}

TEST_CASE("type 1 and type 2 closed forms") {
    CodeSpec zero;
    zero.type = 1;
    zero.which = 0;
    CHECK(lee_distance(zero).value == 0);
    CHECK(lee_distance(zero).source == "type1/zero");
    CHECK(hamming_distance(zero).value == 0);
    zero.which = 1;
    CHECK(lee_distance(zero).value == 1);
    CHECK(lee_distance(zero).source == "type1/one");
    CHECK(hamming_distance(zero).value == 1);

    // Doubled base table at sigma=2: 2,4,4,8 for ell=0..3.
    const long expect[4] = {2, 4, 4, 8};
    for (int ell = 0; ell < 4; ++ell) {
        const auto r = lee_distance(type2(2, ell));
        REQUIRE(r.kind == Coverage::Exact);
        CHECK(r.value == expect[ell]);
        CHECK(r.value == 2 * long(base_lee(2, ell)));
        CHECK(r.source.substr(0, 5) == "thm5/");
        CHECK(hamming_distance(type2(2, ell)).value ==
              long(base_hamming(2, ell)));
        CHECK(hamming_distance(type2(2, ell)).source == "thm3");
    }
}

TEST_CASE("type 3 closed forms (as printed): tripled base for z = 0") {
    // Transcription pins. The search oracle disagrees with these values
    // (see the oracle suite); the table here freezes what the closed form
    // itself must return.
    const long expect[4] = {3, 6, 6, 12};
    for (int ell = 0; ell < 4; ++ell) {
        const auto r = lee_distance(type3(2, ell, 0, UnitPoly::zero()));
        REQUIRE(r.kind == Coverage::Exact);
        CHECK(r.value == expect[ell]);
        CHECK(r.source.substr(0, 5) == "thm7/");
    }
    CHECK(lee_theorem(type3(2, 1, 0, UnitPoly::one())) == "thm9");
    CHECK(lee_theorem(type3(2, 2, 1, UnitPoly::one())) == "thm8");
    CHECK(lee_theorem(type3(2, 1, 0, UnitPoly::zero())) == "thm7");
}

TEST_CASE("reduction exponents feed the Hamming formulas") {
    CHECK(reduction_exponent(type2(3, 5)) == 5);
    CHECK(reduction_exponent(type3(3, 5, 1, UnitPoly::one())) == 4);
    CodeSpec t5;
    t5.type = 5;
    t5.sigma = 3;
    t5.alpha = 3;
    CHECK(reduction_exponent(t5) == 3);  // V = alpha when units vanish
    CHECK(hamming_distance(t5).value == long(base_hamming(3, 3)));
    CHECK(hamming_distance(t5).source == "thm14");
}

TEST_CASE("hamming sources per family") {
    const std::map<int, std::string> expect = {
        {2, "thm3"}, {3, "thm6"},  {4, "thm10"}, {5, "thm14"},
        {6, "thm24"}, {7, "thm34"}, {8, "thm62"}};
    for (const auto& [type, src] : expect) {
        const auto specs = enumerate_specs(2, 1, {type});
        REQUIRE(!specs.empty());
        for (const auto& s : specs)
            CHECK(hamming_distance(s).source == src);
    }
}

TEST_CASE("sandwich bounds bracket the Hamming value with factor 2") {
    for (const auto& s : enumerate_specs(2, 1, kAllTypes)) {
        if (s.type == 1) continue;
        const auto sw = lee_bounds_sandwich(s);
        REQUIRE(sw.kind == Coverage::Bounds);
        CHECK(sw.source == "sandwich");
        CHECK(sw.lo == hamming_distance(s).value);
        CHECK(sw.hi == 2 * sw.lo);
    }
}

TEST_CASE("lee dispatch covers every enumerated spec with a theorem id") {
    for (unsigned sigma = 2; sigma <= 3; ++sigma)
        for (const auto& s : enumerate_specs(sigma, 1, kAllTypes, 2, 1)) {
            const std::string thm = lee_theorem(s);
            CHECK(!thm.empty());
            const auto r = lee_distance(s);
            if (r.kind != Coverage::NotCovered) {
                // Source must carry the dispatched theorem as its prefix.
                CHECK(r.source.substr(0, thm.size()) == thm);
            }
            if (r.kind == Coverage::Exact) CHECK(r.value >= 0);
            if (r.kind == Coverage::Bounds) CHECK(r.lo <= r.hi);
        }
}

TEST_CASE("type 5 dispatch map: unit-pattern to theorem") {
    auto t5 = [](int alpha, int T1, bool u1, int T2, bool u2) {
        CodeSpec s;
        s.sigma = 3;
        s.type = 5;
        s.alpha = alpha;
        s.T1 = T1;
        s.T2 = T2;
        if (u1) s.z1 = UnitPoly::one();
        if (u2) s.z2 = UnitPoly::one();
        return s;
    };
    CHECK(lee_theorem(t5(3, 0, false, 0, false)) == "thm15");
    CHECK(lee_theorem(t5(3, 0, false, 0, true)) == "thm16");   // z2 const
    CHECK(lee_theorem(t5(3, 0, false, 1, true)) == "thm17");   // z2 shifted
    CHECK(lee_theorem(t5(3, 0, true, 0, false)) == "thm18");   // z1 const
    CHECK(lee_theorem(t5(3, 1, true, 0, false)) == "thm19");   // z1 shifted
    CHECK(lee_theorem(t5(3, 0, true, 0, true)) == "thm20");
    CHECK(lee_theorem(t5(3, 1, true, 0, true)) == "thm21");
    CHECK(lee_theorem(t5(3, 0, true, 1, true)) == "thm22");
    CHECK(lee_theorem(t5(3, 1, true, 1, true)) == "thm23");
}

TEST_CASE("type 8 dispatch: three published patterns, the rest uncovered") {
    auto t8 = [](bool u1, int T1) {
        CodeSpec s;
        s.sigma = 3;
        s.type = 8;
        s.alpha = 4;
        s.beta = 2;
        s.omega = 1;
        s.T1 = T1;
        if (u1) s.z1 = UnitPoly::one();
        return s;
    };
    CHECK(lee_theorem(t8(false, 0)) == "thm63");
    CHECK(lee_theorem(t8(true, 0)) == "thm64");
    CHECK(lee_theorem(t8(true, 1)) == "thm65");
    CodeSpec rest = t8(false, 0);
    rest.z3 = UnitPoly::one();  // T3=0 < omega
    CHECK(lee_theorem(rest) == "type8/remaining");
    const auto r = lee_distance(rest);
    CHECK(r.kind == Coverage::NotCovered);
    CHECK(r.source == "type8/remaining");
}

TEST_CASE("clause audit: front entry is the result; overlaps only where "
          "the printed tables overlap") {
    std::set<std::string> overlap_thms;
    for (unsigned sigma = 2; sigma <= 3; ++sigma)
        for (const auto& s : enumerate_specs(sigma, 1, kAllTypes, 2, 1)) {
            const auto all = audit_clauses(s);
            const auto r = lee_distance(s);
            if (r.kind == Coverage::NotCovered) {
                CHECK(all.empty());
            } else {
                REQUIRE(!all.empty());
                CHECK(all.front().source == r.source);
                if (all.size() > 1)
                    overlap_thms.insert(
                        all.front().source.substr(0, all.front().source.find('/')));
            }
        }
    // The printed tables overlap in exactly these theorems (inclusive "<="
    // window ends that meet the next clause's start).
    for (const auto& t : overlap_thms)
        CHECK((t == "thm33" || t == "thm52" || t == "thm53"));
}

TEST_CASE("coverage gaps carry gap sources") {
    int gaps = 0;
    for (const auto& s : enumerate_specs(3, 1, kAllTypes, 2, 1)) {
        const auto r = lee_distance(s);
        if (r.kind == Coverage::NotCovered) {
            ++gaps;
            CHECK((r.source == "type8/remaining" ||
                   r.source.ends_with("/gap")));
        }
    }
    CHECK(gaps > 0);
}

}  // TEST_SUITE
