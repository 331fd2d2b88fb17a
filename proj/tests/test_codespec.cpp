#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "u3cyclic/codespec.hpp"
#include "u3cyclic/gf2m.hpp"
#include "u3cyclic/polyring.hpp"

using namespace u3c;

namespace {

const std::vector<int> kAllTypes = {1, 2, 3, 4, 5, 6, 7, 8};

CodeSpec type3(unsigned sigma, unsigned m, int ell, int t, UnitPoly z) {
    CodeSpec s;
    s.sigma = sigma;
    s.m = m;
    s.type = 3;
    s.ell = ell;
    s.t = t;
    s.z = std::move(z);
    return s;
}

}  // namespace

TEST_SUITE("codespec") {

TEST_CASE("every enumerated spec validates, all types reached") {
    const auto specs = enumerate_specs(2, 1, kAllTypes);
    CHECK(specs.size() == 121);  // frozen: full sigma=2, m=1 family census
    std::set<int> seen;
    for (const auto& s : specs) {
        CHECK(validate(s).empty());
        seen.insert(s.type);
    }
    CHECK(seen.size() == 8);
}

TEST_CASE("JSON round-trip is bit-exact on the full sigma=2 enumeration") {
    for (const auto& s : enumerate_specs(2, 1, kAllTypes)) {
        const std::string j = spec_to_json(s);
        const CodeSpec back = spec_from_json(j);
        CHECK(back == s);
        CHECK(spec_to_json(back) == j);
    }
    for (const auto& s : enumerate_specs(2, 2, {2, 3, 5})) {
        const std::string j = spec_to_json(s);
        CHECK(spec_to_json(spec_from_json(j)) == j);
    }
}

TEST_CASE("validator names exactly the offending field") {
    CodeSpec s = type3(2, 1, 1, 0, UnitPoly::zero());
    REQUIRE(validate(s).empty());

    s.ell = 9;
    auto v = validate(s);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("ell") != std::string::npos);

    s = type3(2, 1, 1, 0, UnitPoly::zero());
    s.alpha = 2;  // canonical zero for types outside 5..8
    v = validate(s);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("alpha") != std::string::npos);

    s = type3(2, 1, 2, 0, UnitPoly{{0, 1}});  // z[0] = 0: not a unit poly
    v = validate(s);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("z[0]") != std::string::npos);

    CodeSpec t1;
    t1.type = 1;
    t1.which = 2;
    v = validate(t1);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("which") != std::string::npos);
}

TEST_CASE("spec_from_json rejects malformed input with the field name") {
    CHECK_THROWS_WITH_AS(
        spec_from_json("{\"sigma\":2,\"m\":1,\"type\":3,"
                       "\"params\":{\"ell\":1,\"t\":0},"
                       "\"units\":{\"z\":\"maybe\"}}"),
        doctest::Contains("z"), std::invalid_argument);
    CHECK_THROWS(spec_from_json("not json"));
}

TEST_CASE("enumeration is deterministic; sampling is a seeded subset") {
    const auto a = enumerate_specs(3, 1, {5}, 0, 1);
    const auto b = enumerate_specs(3, 1, {5}, 0, 99);  // budget 0: seed moot
    CHECK(a == b);
    const auto full = enumerate_specs(3, 1, {5}, 0, 1);
    const auto sampled = enumerate_specs(3, 1, {5}, 2, 42);
    CHECK(sampled.size() < full.size());
    CHECK(enumerate_specs(3, 1, {5}, 2, 42) == sampled);  // reproducible
    for (const auto& s : sampled)
        CHECK(std::find(full.begin(), full.end(), s) != full.end());
}

TEST_CASE("generators match the declared shapes") {
    const FieldCtx ctx = FieldCtx::make(1);

    // Type 2: single generator u^2 (x+1)^ell.
    CodeSpec t2;
    t2.type = 2;
    t2.ell = 1;
    auto g = generators(t2, ctx);
    REQUIRE(g.size() == 1);
    CHECK(poly_eq(g[0], poly_xp1_pow(ctx, 2, 1, re(ctx, 0, 0, 1))));

    // Type 3 with z: u(x+1)^ell + u^2 z(x) (x+1)^t.
    const CodeSpec s3 = type3(2, 1, 2, 0, UnitPoly::one());
    g = generators(s3, ctx);
    REQUIRE(g.size() == 1);
    const PolyS expect =
        poly_add(poly_xp1_pow(ctx, 2, 2, re(ctx, 0, 1, 0)),
                 poly_xp1_pow(ctx, 2, 0, re(ctx, 0, 0, 1)));
    CHECK(poly_eq(g[0], expect));

    // Generator counts per family.
    const size_t expect_count[9] = {0, 0, 1, 1, 2, 1, 2, 2, 3};
    for (int type = 2; type <= 8; ++type) {
        const auto specs = enumerate_specs(3, 1, {type}, 2, 1);
        REQUIRE(!specs.empty());
        CHECK(generators(specs.front(), ctx).size() == expect_count[type]);
    }
}

TEST_CASE("closed-form smallest exponents: anchors") {
    // min{ell, 2^sigma + t - ell} with ell=5, t=1 at sigma=3.
    CodeSpec s = type3(3, 1, 5, 1, UnitPoly::one());
    REQUIRE(validate(s).empty());
    CHECK(smallest_params_formula(s).L == 4);

    // z = 0 collapses L to ell.
    s = type3(3, 1, 5, 0, UnitPoly::zero());
    CHECK(smallest_params_formula(s).L == 5);

    // Type 5 with both units absent: U = V = alpha.
    CodeSpec t5;
    t5.type = 5;
    t5.sigma = 3;
    t5.alpha = 3;
    REQUIRE(validate(t5).empty());
    const auto d = smallest_params_formula(t5);
    CHECK(d.U == 3);
    CHECK(d.V == 3);
    CHECK(d.L == -1);
    CHECK(d.W == -1);
    CHECK(d.L1 == -1);
}

TEST_CASE("lift_unit produces the field-layer polynomial in (x+1) powers") {
    const FieldCtx ctx = FieldCtx::make(2);
    const PolyS z = lift_unit(UnitPoly{{1, 3}}, ctx, 2);  // 1 + 0x3*(x+1)
    const PolyS expect =
        poly_add(poly_xp1_pow(ctx, 2, 0, re(ctx, 1, 0, 0)),
                 poly_xp1_pow(ctx, 2, 1, re(ctx, 3, 0, 0)));
    CHECK(poly_eq(z, expect));
    CHECK(is_unit_in_S(z));
}

}  // TEST_SUITE
