#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qvp/generate.hpp"
#include "qvp/lab.hpp"
#include "qvp/picard.hpp"

using namespace qvp;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::ConsistencyViolation;
}

Instance t1_w3(std::vector<ExtValue> phi = {3, 1, 0}) {
    return Instance(symmetrize(fixture::w3()), Preorder::total(3), Phi::validate(std::move(phi)));
}

std::vector<Instance> corpus(std::size_t count, std::uint64_t seed0) {
    std::vector<Instance> out;
    for (std::size_t i = 0; i < count; ++i) {
        GenParams p;
        p.n = 1 + i % 8;
        p.seed = seed0 + i;
        p.preorder_kind = static_cast<PreorderSpec::Kind>(i % 4);
        out.push_back(gen_instance(p));
    }
    return out;
}

}  // namespace

TEST_CASE("Picard iteration on W3") {
    const Instance inst = fixture::w3_instance();
    const PicardRun from_a = picard_iterate(inst, 0);
    CHECK(from_a.z == 2);
    CHECK(from_a.moves() == 1);
    CHECK(from_a.termination == Termination::Case1);
    CHECK(from_a.steps[0].s_set.j_value == ExtValue(0));

    const PicardRun from_b = picard_iterate(inst, 1);
    CHECK(from_b.z == 1);
    CHECK(from_b.moves() == 0);
    CHECK(picard_iterate(inst, 2).moves() == 0);

    // first-eligible picks the lowest index below the half gap 3/2: b.
    const PicardRun first = picard_iterate(inst, 0, SelectionRule::first());
    CHECK(first.steps[1].point == 1);
    CHECK(first.z == 1);
}

TEST_CASE("Picard preconditions") {
    const Instance partial = fixture::w3_instance({ExtValue::infinity(), Rat(1), Rat(0)});
    CHECK(code_of([&] { picard_iterate(partial, 0); }) == ErrorCode::StartOutsideDomain);
    CHECK(code_of([&] { picard_iterate(partial, 7); }) == ErrorCode::UnknownPoint);
    const Instance no_dord(fixture::w3(), Preorder::discrete(3), Phi::validate({Rat(3), Rat(1), Rat(0)}));
    CHECK(code_of([&] { picard_iterate(no_dord, 0); }) == ErrorCode::AuditMissing);
    CHECK(code_of([&] { weak_ekeland(no_dord); }) == ErrorCode::AuditMissing);
}

TEST_CASE("weak Ekeland on W3 and a singleton") {
    const Instance inst = fixture::w3_instance();
    const EkelandCertificate c = weak_ekeland(inst);
    CHECK(c.z == 2);
    CHECK(c.s_of_z.members == std::vector<PointId>{2});
    CHECK(c.checks.all());
    CHECK(verify_weak_ekeland_point(inst, 1).all());
    CHECK_FALSE(verify_weak_ekeland_point(inst, 0).phi_constant_on_sz);
    CHECK(oracle_wek(inst) == std::vector<PointId>{1, 2});
    CHECK(weak_ekeland(inst, PointId{1}).z == 1);

    const Instance one = fixture::singleton();
    CHECK(weak_ekeland(one).z == 0);
    CHECK(weak_ekeland(one).checks.all());
}

TEST_CASE("full Ekeland on W3") {
    const Instance inst = fixture::w3_instance();
    const FullEkelandCertificate g1 = full_ekeland(inst, Rat(3), Rat(3), 0);
    CHECK(g1.gamma == Rat(1));
    CHECK(g1.x0_subspace == std::vector<PointId>{0, 1, 2});
    CHECK(g1.z == 2);
    for (bool c : g1.clauses) CHECK(c);
    CHECK(g1.s_sets_inside_x0);

    const FullEkelandCertificate g3 = full_ekeland(inst, Rat(3), Rat(1), 0);
    CHECK(g3.gamma == Rat(3));
    CHECK(compute_s_set(scaled(inst.space(), Rat(3)), inst.order(), inst.phi(), 0).members ==
          std::vector<PointId>{0, 1, 2});
    CHECK(g3.z == 2);
    CHECK(inst.space().d(g3.z, 0) <= Rat(1));
    for (bool c : g3.clauses) CHECK(c);

    CHECK(code_of([&] { full_ekeland(inst, Rat(1), Rat(1), 0); }) == ErrorCode::HypothesisViolated);
    CHECK(code_of([&] { full_ekeland(inst, Rat(0), Rat(1), 0); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { full_ekeland(inst, Rat(1), Rat(-1), 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("Takahashi on W3") {
    const TakahashiReport fails = takahashi(fixture::w3_instance(), TakahashiVariant::StrictPhi);
    CHECK_FALSE(fails.hypothesis_ok);
    CHECK(fails.violation == PointId{1});
    CHECK(fails.oracle_minimizer == 2);
    CHECK_FALSE(fails.minimizer);
    CHECK(takahashi(fixture::w3_instance(), TakahashiVariant::Closure).violation == PointId{1});

    const Instance flat = fixture::w3_instance({3, 0, 0});
    const TakahashiReport holds = takahashi(flat, TakahashiVariant::StrictPhi);
    CHECK(holds.hypothesis_ok);
    REQUIRE(holds.minimizer);
    CHECK(flat.phi()(*holds.minimizer) == ExtValue(0));

    const Instance constant = fixture::w3_instance({2, 2, 2});
    CHECK(takahashi(constant, TakahashiVariant::StrictPhi).hypothesis_ok);
    CHECK(takahashi(constant, TakahashiVariant::Closure).hypothesis_ok);
}

TEST_CASE("Caristi single and set-valued maps on W3") {
    const Instance inst = fixture::w3_instance();
    const CaristiResult r = caristi_single(inst, {1, 1, 2});
    CHECK(r.feasible);
    REQUIRE(r.z);
    CHECK((*r.z == 1 || *r.z == 2));
    CHECK(r.phi_equal);
    CHECK(r.in_closure);

    try {
        caristi_single(inst, {2, 0, 2});
        FAIL("infeasible map accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InfeasibleMap);
        CHECK(e.witness() == std::vector<PointId>{1});
    }
    CHECK(caristi_infeasibility(inst, SingleMap{0, 1, 2}) == std::nullopt);

    MultiMap s_map;
    for (PointId x = 0; x < 3; ++x) s_map.push_back(inst.s_set(x).members);
    CHECK(caristi_multi(inst, s_map).feasible);

    const CaristiResult m = caristi_multi(inst, MultiMap{{1, 2}, {1}, {0, 2}});
    CHECK(m.z == PointId{2});
    CHECK(m.phi_equal);
    CHECK(m.in_closure);

    try {
        caristi_multi(inst, MultiMap{{1, 2}, {0, 2}, {2}});
        FAIL("infeasible set-valued map accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InfeasibleMap);
        CHECK(e.witness() == std::vector<PointId>{1});
    }
}

TEST_CASE("T1 strengthening") {
    const Instance inst = t1_w3();
    const EkelandCertificate c = weak_ekeland(inst);
    const T1EkelandCertificate t = t1_strengthen(inst, c);
    CHECK(t.z == 2);
    CHECK(t.s_is_singleton);
    CHECK(t.strict_form);
    CHECK(inst.phi()(2) < inst.phi()(0) + ExtValue(inst.space().d(0, 2)));
    CHECK(inst.phi()(2) < inst.phi()(1) + ExtValue(inst.space().d(1, 2)));

    const T1CaristiResult fixed = t1_strengthen(inst, caristi_single(inst, {2, 1, 2}));
    CHECK(fixed.fixed_point);

    const Instance w3 = fixture::w3_instance();
    CHECK(code_of([&] { t1_strengthen(w3, weak_ekeland(w3)); }) == ErrorCode::NotT1);

    const Instance one = fixture::singleton();
    CHECK(t1_strengthen(one, weak_ekeland(one)).s_is_singleton);
    CHECK(t1_strengthen(one, takahashi(one, TakahashiVariant::StrictPhi)).hypothesis_ok);
}

TEST_CASE("truncated witness runs stop on the frontier") {
    const WitnessSpace w = build_witness(6);
    const PicardRun run = picard_iterate(w.instance, 0);
    CHECK(run.termination == Termination::PrefixExhausted);
    CHECK(run.z == 5);
    CHECK(code_of([&] { weak_ekeland(w.instance); }) == ErrorCode::PrefixExhausted);
}

TEST_CASE("property: Picard traces terminate, descend, and end at oracle points") {
    for (const Instance& inst : corpus(300, 1000)) {
        if (!inst.audits().all()) continue;
        const auto oracle_points = oracle::wek_points(inst);
        const auto& phi = inst.phi();
        for (PointId x0 : phi.dom())
            for (const SelectionRule& rule : {SelectionRule::argmin(), SelectionRule::first(), SelectionRule::random(x0)}) {
                const PicardRun run = picard_iterate(inst, x0, rule);
                CHECK(run.termination == Termination::Case1);
                CHECK(run.moves() <= phi.dom().size());
                CHECK(std::find(oracle_points.begin(), oracle_points.end(), run.z) != oracle_points.end());
                for (std::size_t k = 0; k + 1 < run.steps.size(); ++k) {
                    const PointId a = run.steps[k].point, b = run.steps[k + 1].point;
                    CHECK(inst.order().leq(a, b));
                    CHECK(phi(b) < phi(a));
                    for (PointId y : run.steps[k + 1].s_set.members) CHECK(run.steps[k].s_set.contains(y));
                }
                for (std::size_t n = 0; n < run.steps.size(); ++n)
                    for (std::size_t m = n + 1; m < run.steps.size(); ++m) {
                        const PointId a = run.steps[n].point, b = run.steps[m].point;
                        CHECK(inst.space().d(b, a) <= phi(a).value() - phi(b).value());
                    }
                const auto& sz = inst.s_set(run.z);
                for (PointId y : sz.members) {
                    CHECK(phi(y) == phi(run.z));
                    CHECK(phi(y) == sz.j_value);
                    for (PointId w : inst.s_set(y).members) CHECK(in_closure(inst.space(), w, y));
                }
            }
    }
}

TEST_CASE("property: feasible Caristi maps succeed at the Ekeland point") {
    for (const Instance& inst : corpus(200, 5000)) {
        if (!inst.audits().all()) continue;
        const EkelandCertificate c = weak_ekeland(inst);
        for (const SingleMap& t : feasible_map_family(inst, 3)) {
            const CaristiResult r = caristi_single(inst, t);
            CHECK(r.z == c.z);
            CHECK(r.phi_equal);
            CHECK(r.in_closure);
        }
        const bool tak = oracle::takahashi_hypothesis(inst);
        const TakahashiReport rep = takahashi(inst, TakahashiVariant::StrictPhi);
        CHECK(rep.hypothesis_ok == tak);
        if (tak) CHECK(inst.phi()(*rep.minimizer) == ExtValue(inst.phi().min()));
    }
}
