// One PASS/FAIL line per acceptance criterion. All checks are exact; the
// only tolerances are the sample sizes and runtime budgets pinned below.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "mutations.hpp"
#include "oracles.hpp"
#include "qvp/generate.hpp"
#include "qvp/instance_file.hpp"
#include "qvp/lab.hpp"
#include "qvp/picard.hpp"

using namespace qvp;

namespace {

constexpr std::size_t kMutationSpaces = 200;
constexpr double kMutationBudgetSec = 10.0;
constexpr std::size_t kCorpusSize = 1000;
constexpr double kSPropertyBudgetSec = 30.0;
constexpr std::size_t kFullEkelandSamples = 200;
constexpr std::size_t kWitnessPrefixes = 50;
constexpr std::size_t kWitnessLength = 32;
constexpr unsigned kWitnessThresholds = 10;
constexpr double kWitnessBudgetSec = 5.0;
constexpr std::size_t kT1Instances = 300;
constexpr std::size_t kMetricInstances = 300;
constexpr std::size_t kRoundTrips = 10000;
constexpr std::size_t kMaxPoints = 8;

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<Instance> corpus() {
    std::vector<Instance> out;
    for (std::size_t i = 0; i < kCorpusSize; ++i) {
        GenParams p;
        p.n = 1 + i % kMaxPoints;
        p.seed = 20000 + i;
        p.preorder_kind = static_cast<PreorderSpec::Kind>(i % 4);
        p.zero_edge_prob = Rat(static_cast<long>(i % 3), 4);
        p.inf_phi_prob = Rat(static_cast<long>(i % 2), 5);
        out.push_back(gen_instance(p));
    }
    return out;
}

// ------------------------------------------------------------------ criteria

Outcome axiom_mutations() {
    Timer t;
    std::size_t mutants = 0, killed = 0, misattributed = 0, impure = 0;
    auto judge = [&](const DistanceMatrix& m, Axiom target) {
        ++mutants;
        if (oracle::violated_axioms(m) != std::set<Axiom>{target}) ++impure;
        try {
            QSpace::validate(m);
        } catch (const SpaceError& e) {
            ++killed;
            if (e.failure().axiom != target) ++misattributed;
        }
    };
    for (std::size_t i = 0; i < kMutationSpaces; ++i) {
        GenParams p;
        p.n = 1 + i % (kMaxPoints - 1);
        p.seed = 30000 + i;
        p.zero_edge_prob = Rat(static_cast<long>(i % 3), 3);
        const QSpace base = gen_space(p);
        const DistanceMatrix d = mutate::add_twin(base.matrix(), i % base.size());
        const std::size_t n = d.size();
        for (PointId x = 0; x < n; ++x) judge(mutate::qm1(d, x), Axiom::QM1);
        if (n >= 3)
            for (PointId x = 0; x < n; ++x)
                for (PointId y = 0; y < n; ++y)
                    if (x != y) judge(mutate::qm2(d, x, y), Axiom::QM2);
        judge(mutate::qm3(d, i % base.size(), n - 1), Axiom::QM3);
    }
    const double sec = t.seconds();
    std::ostringstream os;
    os << kMutationSpaces << " spaces, " << mutants << " mutants, killed " << killed << ", wrong axiom "
       << misattributed << ", not single-axiom " << impure << ", " << sec << " s (budget " << kMutationBudgetSec << ")";
    return {killed == mutants && misattributed == 0 && impure == 0 && sec < kMutationBudgetSec, os.str()};
}

Outcome s_properties(const std::vector<Instance>& insts) {
    Timer t;
    std::size_t failures = 0, unaudited = 0;
    for (const Instance& inst : insts) {
        if (!inst.audits().all()) ++unaudited;
        if (!audit_s_properties(inst).all()) ++failures;
    }
    const double sec = t.seconds();
    std::ostringstream os;
    os << insts.size() << " instances, " << failures << " counterexamples, " << unaudited << " failed audits, " << sec
       << " s (budget " << kSPropertyBudgetSec << ")";
    return {insts.size() >= kCorpusSize && failures == 0 && unaudited == 0 && sec < kSPropertyBudgetSec, os.str()};
}

Outcome picard_wek(const std::vector<Instance>& insts) {
    std::size_t runs = 0, failures = 0;
    for (const Instance& inst : insts) {
        const auto oracle_points = oracle::wek_points(inst);
        const auto dom = inst.phi().dom();
        for (PointId x0 : dom)
            for (const SelectionRule& rule :
                 {SelectionRule::argmin(), SelectionRule::first(), SelectionRule::random(runs)}) {
                ++runs;
                const PicardRun run = picard_iterate(inst, x0, rule);
                bool ok = run.termination == Termination::Case1 && run.moves() <= dom.size();
                ok = ok && std::find(oracle_points.begin(), oracle_points.end(), run.z) != oracle_points.end();
                const auto sz = oracle::brute_s_set(inst, run.z);
                const ExtValue jz = oracle::min_phi_over(inst, sz);
                for (PointId y : sz) {
                    ok = ok && inst.phi()(y) == inst.phi()(run.z) && inst.phi()(y) == jz;
                    for (PointId w : oracle::brute_s_set(inst, y)) ok = ok && inst.space().d(w, y).is_zero();
                }
                if (!ok) ++failures;
            }
    }
    std::ostringstream os;
    os << runs << " runs (all starts x 3 rules), " << failures << " failures";
    return {failures == 0 && runs > 0, os.str()};
}

Outcome full_ekeland_suite(const std::vector<Instance>& insts) {
    std::mt19937_64 rng(4242);
    std::size_t samples = 0, failures = 0, gated = 0, gate_failures = 0;
    for (std::size_t i = 0; samples < kFullEkelandSamples; ++i) {
        const Instance& inst = insts[(i * 37) % insts.size()];
        const auto dom = inst.phi().dom();
        const PointId x0 = dom[rng() % dom.size()];
        const Rat gap = inst.phi()(x0).value() - inst.phi().min();
        const Rat eps = gap + Rat(static_cast<long>(rng() % 4), 2) + (gap.is_zero() ? Rat(1, 3) : Rat(0));
        const Rat lambda(static_cast<long>(1 + rng() % 6), static_cast<long>(1 + rng() % 3));
        ++samples;
        const FullEkelandCertificate c = full_ekeland(inst, eps, lambda, x0, SelectionRule::random(i));

        // Independent re-check with gamma d.
        const Rat gamma = eps / lambda;
        const auto& d = inst.space().matrix();
        const auto& phi = inst.phi();
        const PointId z = c.z;
        std::vector<PointId> s_gz;
        for (PointId y = 0; y < inst.size(); ++y)
            if (inst.order().leq(z, y) && phi(y) + ExtValue(gamma * d(y, z)) <= phi(z)) s_gz.push_back(y);
        bool ok = gamma == c.gamma && s_gz == c.s_gamma_of_z.members;
        ok = ok && phi(z) + ExtValue(gamma * d(z, x0)) <= phi(x0);
        ok = ok && d(z, x0) <= lambda;
        for (PointId y : s_gz) ok = ok && phi(y) == phi(z);
        for (PointId x = 0; x < inst.size(); ++x) {
            const bool in_s = std::find(s_gz.begin(), s_gz.end(), x) != s_gz.end();
            const bool guarded = phi.in_dom(x) ? (!in_s && inst.order().leq(z, x)) : true;
            if (guarded) ok = ok && phi(z) < phi(x) + ExtValue(gamma * d(x, z));
        }
        for (bool b : c.clauses) ok = ok && b;
        if (!ok) ++failures;

        if (gap.sign() > 0) {
            ++gated;
            try {
                full_ekeland(inst, gap / Rat(2), lambda, x0);
                ++gate_failures;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::HypothesisViolated) ++gate_failures;
            }
        }
    }
    std::ostringstream os;
    os << samples << " samples, " << failures << " clause failures; " << gated << " violating samples, "
       << gate_failures << " not gated with HypothesisViolated";
    return {failures == 0 && gate_failures == 0 && gated > 0, os.str()};
}

Outcome equivalence_suite(const std::vector<Instance>& insts) {
    std::size_t checked = 0, failures = 0, witness_failures = 0;
    auto check = [&](const Instance& inst, std::uint64_t seed) -> bool {
        ++checked;
        try {
            const EquivalenceReport r = check_equivalences(inst, seed);
            const bool wek = !oracle::wek_points(inst).empty();
            bool tak_neg = true;
            for (PointId x : inst.phi().dom()) {
                if (inst.on_frontier(x)) continue;
                bool better = false;
                for (PointId y : oracle::brute_s_set(inst, x)) better = better || inst.phi()(y) < inst.phi()(x);
                tak_neg = tak_neg && better;
            }
            return r.wek_holds == wek && r.tak_negation == tak_neg && wek != tak_neg;
        } catch (const Error&) {
            return false;
        }
    };
    for (std::size_t i = 0; i < insts.size(); ++i)
        if (!check(insts[i], i)) ++failures;
    for (std::size_t n = 2; n < 2 + kWitnessPrefixes; ++n) {
        const WitnessSpace w = build_witness(n);
        if (!check(w.instance, n)) ++failures;
        const EquivalenceReport r = check_equivalences(w.instance, n);
        bool ok = !r.wek_holds && r.adversarial_t.has_value();
        if (ok) {
            const SingleMap& t = *r.adversarial_t;
            for (PointId z = 0; z + 1 < n; ++z) {
                const auto sz = oracle::brute_s_set(w.instance, z);
                ok = ok && std::find(sz.begin(), sz.end(), t[z]) != sz.end();
                ok = ok && w.instance.phi()(t[z]) < w.instance.phi()(z);
                const bool caristi_point =
                    w.instance.phi()(t[z]) == w.instance.phi()(z) && w.instance.space().d(t[z], z).is_zero();
                ok = ok && !caristi_point;
            }
        }
        if (!ok) ++witness_failures;
    }
    std::ostringstream os;
    os << checked << " instances (" << insts.size() << " corpus + " << kWitnessPrefixes << " witness prefixes), "
       << failures << " equivalence failures, " << witness_failures << " adversarial-map failures";
    return {failures == 0 && witness_failures == 0, os.str()};
}

Outcome witness_suite() {
    Timer t;
    const std::size_t n = kWitnessLength;
    const WitnessSpace w = build_witness(n);
    const WitnessReport r = witness_noncompleteness_report(w);
    const Instance& inst = w.instance;
    bool backward = true, tails = true, phi_down = true, moduli = true;
    for (std::size_t k = 1; k < n; ++k) {
        backward = backward && inst.space().d(k, k - 1) < Rat::pow2_inv(static_cast<unsigned>(k + 1));
        backward = backward && inst.space().d(k, k - 1) == oracle::witness_distance(k + 1, k);
        phi_down = phi_down && inst.phi()(k) < inst.phi()(k - 1);
    }
    for (PointId k = 0; k < n; ++k) {
        std::vector<PointId> expected;
        for (PointId j = k; j < n; ++j) expected.push_back(j);
        tails = tails && oracle::brute_s_set(inst, k) == expected;
    }
    std::ostringstream table;
    moduli = r.moduli.size() == kWitnessThresholds;
    for (unsigned k = 1; k <= kWitnessThresholds && moduli; ++k) {
        const auto& row = r.moduli[k - 1];
        const Rat eps = Rat::pow2_inv(k);
        moduli = moduli && row.epsilon == eps && row.modulus.has_value() && *row.modulus <= k &&
                 *row.modulus == oracle::witness_right_modulus(n, eps);
        table << (k > 1 ? "," : "") << (row.modulus ? std::to_string(*row.modulus) : "none");
    }
    const double sec = t.seconds();
    std::ostringstream os;
    os << std::boolalpha << "N=" << n << ", backward bound " << backward << ", S tails " << tails << ", moduli [" << table.str()
       << "] within ceil(log2(1/eps)) " << moduli << ", limit candidates " << r.limit_candidates.size()
       << ", phi decreasing " << phi_down << ", " << sec << " s (budget " << kWitnessBudgetSec << ")";
    return {backward && tails && moduli && phi_down && r.limit_candidates.empty() && r.all() && sec < kWitnessBudgetSec,
            os.str()};
}

Outcome t1_suite() {
    std::size_t instances = 0, certs = 0, maps = 0, failures = 0;
    for (std::uint64_t seed = 0; instances < kT1Instances; ++seed) {
        GenParams p;
        p.n = 1 + seed % kMaxPoints;
        p.seed = 40000 + seed;
        p.zero_edge_prob = Rat(0);
        p.preorder_kind = static_cast<PreorderSpec::Kind>(seed % 4);
        const Instance inst = gen_instance(p);
        if (!is_t1(inst.space())) {
            ++failures;
            continue;
        }
        ++instances;
        for (PointId x0 : inst.phi().dom()) {
            ++certs;
            const EkelandCertificate c = weak_ekeland(inst, x0);
            const T1EkelandCertificate t = t1_strengthen(inst, c);
            bool ok = t.s_is_singleton && t.strict_form && oracle::brute_s_set(inst, c.z) == std::vector<PointId>{c.z};
            for (PointId x : inst.phi().dom())
                if (x != c.z && inst.order().leq(c.z, x))
                    ok = ok && inst.phi()(c.z) < inst.phi()(x) + ExtValue(inst.space().d(x, c.z));
            if (!ok) ++failures;
        }
        for (const SingleMap& tmap : feasible_map_family(inst, seed)) {
            ++maps;
            const CaristiResult r = caristi_single(inst, tmap);
            const T1CaristiResult t = t1_strengthen(inst, r);
            if (!t.fixed_point || tmap[t.z] != t.z) ++failures;
        }
    }
    std::ostringstream os;
    os << instances << " T1 instances, " << certs << " certificates, " << maps << " feasible maps, " << failures
       << " failures";
    return {failures == 0 && instances >= kT1Instances, os.str()};
}

Outcome metric_suite() {
    std::size_t failures = 0, maps = 0;
    for (std::uint64_t seed = 0; seed < kMetricInstances; ++seed) {
        GenParams p;
        p.n = 1 + seed % kMaxPoints;
        p.seed = 50000 + seed;
        QSpace s = symmetrize(gen_space(p));
        Phi phi = gen_phi(s, p);
        const Instance inst(std::move(s), Preorder::total(p.n), std::move(phi));
        const MetricSpecializationReport r = metric_specialization_suite(inst, seed);
        maps += r.maps_checked;
        bool ok = r.all();
        for (PointId x = 0; x < inst.size(); ++x) {
            std::vector<PointId> rx;
            for (PointId y = 0; y < inst.size(); ++y)
                if (oracle::leq_phi(inst.space().matrix(), inst.phi().values(), x, y)) rx.push_back(y);
            ok = ok && rx == oracle::brute_s_set(inst, x) && std::find(rx.begin(), rx.end(), x) != rx.end();
        }
        if (!ok) ++failures;
    }
    std::ostringstream os;
    os << kMetricInstances << " symmetric instances with total order, " << maps << " maps, " << failures
       << " exceptions";
    return {failures == 0, os.str()};
}

std::string run_command(const std::string& cmd) {
    std::string out;
    if (FILE* pipe = popen(cmd.c_str(), "r")) {
        char buf[4096];
        std::size_t got;
        while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
        pclose(pipe);
    }
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome io_suite() {
    std::size_t mismatches = 0;
    for (std::uint64_t seed = 0; seed < kRoundTrips; ++seed) {
        GenParams p;
        p.n = 1 + seed % kMaxPoints;
        p.seed = 60000 + seed;
        p.preorder_kind = static_cast<PreorderSpec::Kind>(seed % 4);
        p.emit_digraph = seed % 5 == 0;
        p.inf_phi_prob = Rat(static_cast<long>(seed % 3), 5);
        const InstanceFile f = gen_instance_file(p);
        const std::string text = serialize(f);
        const InstanceFile back = parse_instance_file(text);
        if (!(back == f) || serialize(back) != text) ++mismatches;
    }

    const std::string cli = QVP_CLI_PATH;
    const std::string golden = QVP_GOLDEN_DIR;
    const std::vector<std::pair<std::string, std::string>> cases{
        {"validate " + golden + "/w3.inst", "validate_w3.txt"},
        {"solve wek " + golden + "/w3.inst", "solve_wek_w3.txt"},
        {"witness --N 8", "witness_8.txt"},
    };
    std::size_t unstable = 0, drifted = 0;
    for (const auto& [args, file] : cases) {
        const std::string first = run_command(cli + " " + args);
        const std::string second = run_command(cli + " " + args);
        if (first.empty() || first != second) ++unstable;
        if (first != slurp(golden + "/" + file)) ++drifted;
    }
    std::ostringstream os;
    os << kRoundTrips << " round-trips, " << mismatches << " mismatches; " << cases.size() << " CLI golden cases, "
       << unstable << " unstable across two runs, " << drifted << " differing from golden files";
    return {mismatches == 0 && unstable == 0 && drifted == 0, os.str()};
}

}  // namespace

int main() {
    const std::vector<Instance> insts = corpus();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"axiom mutation suite", axiom_mutations},
        {"S-property suite", [&] { return s_properties(insts); }},
        {"Picard / weak Ekeland suite", [&] { return picard_wek(insts); }},
        {"full Ekeland suite", [&] { return full_ekeland_suite(insts); }},
        {"equivalence suite", [&] { return equivalence_suite(insts); }},
        {"witness suite", witness_suite},
        {"T1 specialization suite", t1_suite},
        {"metric specialization suite", metric_suite},
        {"IO suite", io_suite},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name << ": " << o.detail << std::endl;
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
