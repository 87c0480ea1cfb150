#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qvp/generate.hpp"
#include "qvp/instance.hpp"

using namespace qvp;

TEST_CASE("phi must be proper") {
    CHECK_THROWS_AS(Phi::validate({ExtValue::infinity(), ExtValue::infinity()}), Error);
    const Phi phi = Phi::validate({ExtValue::infinity(), Rat(2), Rat(-1)});
    CHECK(phi.dom() == std::vector<PointId>{1, 2});
    CHECK(phi.min() == Rat(-1));
    CHECK_FALSE(phi.in_dom(0));
}

TEST_CASE("instance parts must agree in size") {
    CHECK_THROWS_AS(Instance(fixture::w3(), Preorder::total(2), Phi::validate({Rat(1), Rat(1), Rat(1)})), Error);
    CHECK_THROWS_AS(Instance(fixture::w3(), Preorder::total(3), Phi::validate({Rat(1)})), Error);
}

TEST_CASE("phi order on W3") {
    const Instance inst = fixture::w3_instance();
    CHECK(phi_leq(inst, 0, 1));
    CHECK(phi_leq(inst, 0, 2));
    CHECK_FALSE(phi_leq(inst, 1, 0));
    for (PointId x = 0; x < 3; ++x) CHECK(phi_leq(inst, x, x));
    const Instance partial = fixture::w3_instance({ExtValue::infinity(), ExtValue::infinity(), Rat(0)});
    for (PointId y = 0; y < 3; ++y) CHECK(phi_leq(partial, 0, y));
    CHECK(audit_phi_order(inst).all());
    CHECK(audit_phi_order(partial).all());
}

TEST_CASE("S-sets on W3") {
    const Instance inst = fixture::w3_instance();
    CHECK(inst.s_set(0).members == std::vector<PointId>{0, 1, 2});
    CHECK(inst.s_set(0).j_value == ExtValue(0));
    CHECK(inst.s_set(1).members == std::vector<PointId>{1});
    CHECK(inst.s_set(1).j_value == ExtValue(1));
    CHECK(inst.s_set(2).members == std::vector<PointId>{2});
    CHECK(inst.s_set(2).j_value == ExtValue(0));
    CHECK(inst.audits().all());

    const Instance off = fixture::w3_instance({ExtValue::infinity(), Rat(1), Rat(0)});
    CHECK(off.s_set(0).members == std::vector<PointId>{0, 1, 2});
}

TEST_CASE("increasing lsc on W3") {
    CHECK(is_increasingly_lsc(fixture::w3(), Phi::validate({Rat(3), Rat(1), Rat(0)})).holds);
    const LscCheck bad = is_increasingly_lsc(fixture::w3(), Phi::validate({Rat(0), Rat(1), Rat(0)}));
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.witness);
    CHECK(*bad.witness == std::pair<PointId, PointId>{1, 0});
    CHECK(is_increasingly_lsc(symmetrize(fixture::w3()), Phi::validate({Rat(0), Rat(1), Rat(0)})).holds);
}

TEST_CASE("S-property audit passes on W3") {
    const SPropertyAudit a = audit_s_properties(fixture::w3_instance());
    CHECK(a.all());
    for (bool c : a.clause) CHECK(c);
}

TEST_CASE("S-property audit flags clause (v) without (d-ord)") {
    // Discrete order: S(a) = {a}, but d(b, a) = 0 means a closed set holding
    // a must also hold b.
    const Instance inst(fixture::w3(), Preorder::discrete(3), Phi::validate({Rat(3), Rat(1), Rat(0)}));
    CHECK_FALSE(inst.audits().d_ord);
    const SPropertyAudit a = audit_s_properties(inst);
    CHECK_FALSE(a.all());
    REQUIRE(a.counterexample);
    CHECK(a.counterexample->clause == 5);
}

TEST_CASE("property: cached S-sets match the definition and nest") {
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        GenParams p;
        p.n = 1 + seed % 8;
        p.seed = seed;
        p.preorder_kind = static_cast<PreorderSpec::Kind>(seed % 4);
        const Instance inst = gen_instance(p);
        for (PointId x = 0; x < inst.size(); ++x) {
            const auto expected = oracle::brute_s_set(inst, x);
            CHECK(inst.s_set(x).members == expected);
            CHECK(inst.s_set(x).j_value == oracle::min_phi_over(inst, expected));
            if (inst.phi().in_dom(x)) {
                CHECK(inst.s_set(x).contains(x));
                CHECK(inst.s_set(x).j_value <= inst.phi()(x));
            }
            for (PointId y : expected)
                for (PointId w : oracle::brute_s_set(inst, y))
                    if (inst.phi().in_dom(x)) CHECK(std::find(expected.begin(), expected.end(), w) != expected.end());
        }
        const PhiOrderAudit po = audit_phi_order(inst);
        CHECK(po.all());
        CHECK(audit_s_properties(inst).all());
    }
}
