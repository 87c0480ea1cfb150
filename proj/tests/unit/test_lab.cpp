#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qvp/generate.hpp"
#include "qvp/lab.hpp"

using namespace qvp;

TEST_CASE("oracle and equivalences on W3") {
    const Instance inst = fixture::w3_instance();
    CHECK(oracle_wek(inst) == oracle::wek_points(inst));
    const EquivalenceReport r = check_equivalences(inst);
    CHECK(r.wek_holds);
    CHECK_FALSE(r.tak_negation);
    CHECK(r.caristi_consistent);
    CHECK_FALSE(r.adversarial_t);
    CHECK(r.maps_checked == 8);

    const Instance constant = fixture::w3_instance({2, 2, ExtValue::infinity()});
    CHECK(oracle_wek(constant) == constant.phi().dom());
    CHECK(check_equivalences(fixture::singleton()).wek_holds);
}

TEST_CASE("witness space of length 4") {
    const WitnessSpace w = build_witness(4);
    const Instance& inst = w.instance;
    const QSpace& s = inst.space();
    CHECK(s.d(2, 1) == Rat(1, 16));
    CHECK(s.d(2, 1) < Rat(1, 8));
    CHECK(inst.phi().values() == std::vector<ExtValue>{Rat(1), Rat(1, 2), Rat(1, 4), Rat(1, 8)});
    CHECK(inst.phi()(1).value() + s.d(1, 0) == Rat(5, 8));
    CHECK(inst.s_set(0).contains(1));
    CHECK(inst.s_set(1).members == std::vector<PointId>{1, 2, 3});
    CHECK(is_t1(s));
    CHECK(inst.audits().all());
    CHECK(inst.frontier() == std::vector<PointId>{3});
    for (std::size_t a = 1; a <= 4; ++a)
        for (std::size_t b = 1; b <= 4; ++b) CHECK(s.d(a - 1, b - 1) == oracle::witness_distance(a, b));
    CHECK_THROWS_AS(build_witness(1), Error);
}

TEST_CASE("witness report at length 8") {
    const WitnessSpace w = build_witness(8);
    const WitnessReport r = witness_noncompleteness_report(w);
    CHECK(r.all());
    CHECK(r.limit_candidates.empty());
    CHECK(r.moduli.size() == 5);
    for (const auto& row : r.moduli) {
        REQUIRE(row.modulus);
        CHECK(*row.modulus == oracle::witness_right_modulus(8, row.epsilon));
        CHECK(*row.modulus <= row.bound);
    }
    // eps = 1/4: d(x_m, x_1) = 1/4 - 2^-(m+1) stays below 1/4, so n = 1.
    CHECK(r.moduli[1].epsilon == Rat(1, 4));
    CHECK(*r.moduli[1].modulus == 1);
    CHECK(w.instance.s_set(2).contains(3));
    CHECK(w.instance.phi()(3) == ExtValue(Rat(1, 8)));
    CHECK(w.instance.phi()(3) < w.instance.phi()(2));

    const std::vector<Rat> quarter{Rat(1, 4)};
    SeqSample seq;
    for (PointId x = 0; x < 8; ++x) seq.terms.push_back(x);
    CHECK(subsequence_limit_check(w.instance.space(), seq, quarter));
}

TEST_CASE("equivalences on witness prefixes are restricted to the prefix") {
    for (std::size_t n = 2; n <= 12; ++n) {
        const WitnessSpace w = build_witness(n);
        const EquivalenceReport r = check_equivalences(w.instance);
        CHECK_FALSE(r.wek_holds);
        CHECK(r.tak_negation);
        CHECK(r.prefix_restricted);
        REQUIRE(r.adversarial_t);
        for (PointId x = 0; x + 1 < n; ++x) {
            CHECK(w.instance.s_set(x).contains((*r.adversarial_t)[x]));
            CHECK(w.instance.phi()((*r.adversarial_t)[x]) < w.instance.phi()(x));
        }
    }
}

TEST_CASE("metric specialization on symmetrized W3") {
    const Instance inst(symmetrize(fixture::w3()), Preorder::total(3), Phi::validate({Rat(3), Rat(1), Rat(0)}));
    const MetricSpecializationReport r = metric_specialization_suite(inst);
    CHECK(r.all());
    CHECK(inst.s_set(0).members == std::vector<PointId>{0, 1, 2});
    CHECK(r.wek_point == 2);
    CHECK_FALSE(r.tak_hypothesis);
    CHECK_THROWS_AS(metric_specialization_suite(fixture::w3_instance()), Error);
}

TEST_CASE("property: equivalence harness agrees with the oracle on generated instances") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        GenParams p;
        p.n = 1 + seed % 8;
        p.seed = seed + 77;
        p.preorder_kind = static_cast<PreorderSpec::Kind>(seed % 4);
        p.inf_phi_prob = Rat(1, 3);
        const Instance inst = gen_instance(p);
        const EquivalenceReport r = check_equivalences(inst, seed);
        CHECK(r.wek_points == oracle::wek_points(inst));
        CHECK(r.wek_holds != r.tak_negation);
        for (const SingleMap& t : feasible_map_family(inst, seed))
            for (PointId x = 0; x < inst.size(); ++x) CHECK(inst.s_set(x).contains(t[x]));
    }
}
