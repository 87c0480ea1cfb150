#include "qvp/lab.hpp"

#include <algorithm>
#include <random>

#include "qvp/random.hpp"

namespace qvp {

namespace {

// Independent brute-force S(x): straight from the definitions, no cache.
std::vector<PointId> brute_s(const Instance& inst, PointId x) {
    const auto& s = inst.space();
    const auto& phi = inst.phi().values();
    std::vector<PointId> out;
    for (PointId y = 0; y < s.size(); ++y) {
        if (!inst.order().relation()(x, y)) continue;
        const bool phi_ok = phi[x].is_infinite() || phi[y] + ExtValue(s.matrix()(y, x)) <= phi[x];
        if (phi_ok) out.push_back(y);
    }
    return out;
}

std::vector<PointId> checked_points(const Instance& inst) {
    std::vector<PointId> out;
    for (PointId x : inst.phi().dom())
        if (!inst.on_frontier(x)) out.push_back(x);
    return out;
}

// Some z in `domain` with phi(Tz) = phi(z) and Tz in cl{z}.
bool has_caristi_point(const Instance& inst, const SingleMap& t, const std::vector<PointId>& domain) {
    const auto& phi = inst.phi();
    return std::any_of(domain.begin(), domain.end(),
                       [&](PointId z) { return phi(t[z]) == phi(z) && inst.space().d(t[z], z).is_zero(); });
}

}  // namespace

std::vector<PointId> oracle_wek(const Instance& inst) {
    const auto& phi = inst.phi().values();
    std::vector<PointId> out;
    for (PointId z : checked_points(inst)) {
        const auto sz = brute_s(inst, z);
        if (std::all_of(sz.begin(), sz.end(), [&](PointId y) { return phi[y] == phi[z]; })) out.push_back(z);
    }
    return out;
}

std::vector<SingleMap> feasible_map_family(const Instance& inst, std::uint64_t seed, std::size_t random_count) {
    const std::size_t n = inst.size();
    const auto& phi = inst.phi();
    std::vector<SingleMap> family;

    SingleMap identity(n), argmin(n), lowest(n), highest(n);
    for (PointId x = 0; x < n; ++x) {
        const auto& m = inst.s_set(x).members;
        identity[x] = x;
        argmin[x] = *std::min_element(m.begin(), m.end(), [&](PointId a, PointId b) { return phi(a) < phi(b); });
        lowest[x] = m.front();
        highest[x] = m.back();
    }
    family = {identity, argmin, lowest, highest};

    std::mt19937_64 rng(seed);
    for (std::size_t r = 0; r < random_count; ++r) {
        SingleMap t(n);
        for (PointId x = 0; x < n; ++x) {
            const auto& m = inst.s_set(x).members;
            t[x] = m[draw_below(rng, m.size())];
        }
        family.push_back(std::move(t));
    }
    return family;
}

EquivalenceReport check_equivalences(const Instance& inst, std::uint64_t seed) {
    const auto& phi = inst.phi();
    const auto checked = checked_points(inst);
    EquivalenceReport rep;
    rep.prefix_restricted = !inst.frontier().empty();
    rep.wek_points = oracle_wek(inst);
    rep.wek_holds = !rep.wek_points.empty();

    rep.tak_negation = std::all_of(checked.begin(), checked.end(), [&](PointId x) {
        const auto sx = brute_s(inst, x);
        return std::any_of(sx.begin(), sx.end(), [&](PointId y) { return phi(y) < phi(x); });
    });
    if (rep.wek_holds == rep.tak_negation)
        throw Error(ErrorCode::ConsistencyViolation, "weak Ekeland and the negated Takahashi condition agree");

    if (!rep.wek_holds) {
        // Tx = y_x: the least-phi (lowest index) strictly better point of S(x).
        const PointId x0 = checked.front();
        SingleMap t(inst.size(), x0);
        for (PointId x = 0; x < inst.size(); ++x)
            if (inst.on_frontier(x)) t[x] = x;
        for (PointId x : checked) {
            std::optional<PointId> best;
            for (PointId y : brute_s(inst, x))
                if (phi(y) < phi(x) && (!best || phi(y) < phi(*best))) best = y;
            t[x] = *best;
        }
        const bool all_strict = std::all_of(checked.begin(), checked.end(), [&](PointId x) {
            const auto sx = brute_s(inst, x);
            return std::find(sx.begin(), sx.end(), t[x]) != sx.end() && phi(t[x]) < phi(x);
        });
        rep.caristi_consistent = all_strict && !has_caristi_point(inst, t, checked);
        rep.maps_checked = 1;
        rep.adversarial_t = std::move(t);
    } else {
        const bool solver_applicable = inst.audits().all() && inst.frontier().empty();
        rep.caristi_consistent = true;
        for (const SingleMap& t : feasible_map_family(inst, seed)) {
            ++rep.maps_checked;
            if (!has_caristi_point(inst, t, checked)) rep.caristi_consistent = false;
            if (solver_applicable) {
                const CaristiResult r = caristi_single(inst, t);
                if (!r.phi_equal || !r.in_closure) rep.caristi_consistent = false;
            }
        }
    }
    if (!rep.caristi_consistent)
        throw Error(ErrorCode::ConsistencyViolation, "Caristi outcome contradicts the weak Ekeland verdict");
    return rep;
}

WitnessSpace build_witness(std::size_t n) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "witness length must be at least 2");
    DistanceMatrix d(n, Rat(0));
    // 0-based index i holds x_{i+1}.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i > j) d(i, j) = Rat::pow2_inv(static_cast<unsigned>(j + 2)) - Rat::pow2_inv(static_cast<unsigned>(i + 2));
            if (i < j) d(i, j) = Rat(1);
        }
    Relation rel(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) rel(i, j) = 1;
    std::vector<ExtValue> phi;
    for (std::size_t i = 0; i < n; ++i) phi.emplace_back(Rat::pow2_inv(static_cast<unsigned>(i)));
    Instance inst(QSpace::validate(std::move(d)), Preorder::validate(std::move(rel)), Phi::validate(std::move(phi)),
                  {n - 1});
    return WitnessSpace{n, std::move(inst)};
}

bool WitnessReport::all() const {
    return backward_bound && phi_decreasing && s_tails && telescoping && sublevel_sets && lsc && d_ord &&
           modulus_within_bound && limit_candidates.empty() && prefix_not_wek;
}

WitnessReport witness_noncompleteness_report(const WitnessSpace& w) {
    const Instance& inst = w.instance;
    const QSpace& s = inst.space();
    const Phi& phi = inst.phi();
    const std::size_t n = w.length;
    WitnessReport rep;
    rep.length = n;

    rep.backward_bound = true;
    rep.phi_decreasing = true;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(s.d(i + 1, i) < Rat::pow2_inv(static_cast<unsigned>(i + 2)))) rep.backward_bound = false;
        if (!(phi(i + 1) < phi(i))) rep.phi_decreasing = false;
    }

    rep.s_tails = true;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<PointId> tail;
        for (std::size_t j = k; j < n; ++j) tail.push_back(j);
        if (inst.s_set(k).members != tail) rep.s_tails = false;
    }

    rep.telescoping = true;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                if (s.d(b, a) + s.d(c, b) != s.d(c, a)) rep.telescoping = false;

    // [phi <= b] for 2^-k <= b < 2^-(k-1) is {x_{k+1}, ..., x_N}; probe both
    // ends of each interval. Closedness uses the finite form.
    rep.sublevel_sets = true;
    for (std::size_t k = 1; k <= n; ++k) {
        const Rat lo = Rat::pow2_inv(static_cast<unsigned>(k));
        const Rat mid = (lo + Rat::pow2_inv(static_cast<unsigned>(k - 1))) / Rat(2);
        for (const Rat& b : {lo, mid}) {
            std::vector<PointId> level, expected;
            for (PointId x = 0; x < n; ++x)
                if (phi(x) <= ExtValue(b)) level.push_back(x);
            for (std::size_t j = k; j < n; ++j) expected.push_back(j);
            if (level != expected) rep.sublevel_sets = false;
            for (PointId y : level)
                for (PointId x = 0; x < n; ++x)
                    if (s.d(x, y).is_zero() && std::find(level.begin(), level.end(), x) == level.end())
                        rep.sublevel_sets = false;
        }
    }

    rep.lsc = inst.audits().inc_lsc;
    rep.d_ord = inst.audits().d_ord;

    // Thresholds the prefix can resolve: the modulus for 2^-k is k - 1, which
    // must fall in the first half of the sample.
    const std::size_t k_max = std::min<std::size_t>(10, n / 2 + 1);
    std::vector<Rat> eps;
    for (std::size_t k = 1; k <= k_max; ++k) eps.push_back(Rat::pow2_inv(static_cast<unsigned>(k)));
    SeqSample seq;
    for (PointId x = 0; x < n; ++x) seq.terms.push_back(x);
    const CauchyReport cr = classify_cauchy(s, seq, eps);
    rep.modulus_within_bound = cr.right_k;
    for (std::size_t k = 1; k <= k_max; ++k) {
        const auto& m = cr.modulus[k - 1];
        rep.moduli.push_back({m.epsilon, m.right, k});
        if (!m.right || *m.right > k) rep.modulus_within_bound = false;
    }
    rep.limit_candidates = cr.converges_to;
    for (PointId x : cr.subsequence_limits)
        if (std::find(rep.limit_candidates.begin(), rep.limit_candidates.end(), x) == rep.limit_candidates.end())
            rep.limit_candidates.push_back(x);

    rep.prefix_not_wek = true;
    for (std::size_t k = 0; k + 1 < n; ++k)
        if (!inst.s_set(k).contains(k + 1) || !(phi(k + 1) < phi(k))) rep.prefix_not_wek = false;

    rep.conclusion = rep.all() ? "weak Ekeland fails on the full sequence space; prefix evidence attached, full-space "
                                 "claim follows from the tail structure and is not computed"
                               : "prefix evidence incomplete";
    return rep;
}

MetricSpecializationReport metric_specialization_suite(const Instance& inst, std::uint64_t seed) {
    if (!inst.space().is_symmetric() || !inst.order().is_total())
        throw Error(ErrorCode::PreconditionNotMet, "metric specialization needs a symmetric space and a total preorder");
    const auto& s = inst.space();
    const Phi& phi = inst.phi();
    const std::size_t n = inst.size();
    MetricSpecializationReport rep;

    std::vector<std::vector<PointId>> r(n);
    for (PointId x = 0; x < n; ++x)
        for (PointId y = 0; y < n; ++y)
            if (phi(x).is_infinite() || phi(y) + ExtValue(s.d(y, x)) <= phi(x)) r[x].push_back(y);

    rep.r_equals_s = true;
    for (PointId x = 0; x < n && rep.r_equals_s; ++x)
        if (r[x] != inst.s_set(x).members) {
            rep.r_equals_s = false;
            rep.r_mismatch = x;
        }

    const EkelandCertificate cert = weak_ekeland(inst);
    rep.wek_point = cert.z;
    rep.wek_form = r[cert.z] == std::vector<PointId>{cert.z};

    rep.tak_hypothesis = true;
    for (PointId x : phi.dom())
        if (phi(x) > ExtValue(phi.min()) && r[x].size() < 2) rep.tak_hypothesis = false;
    const TakahashiReport tak = takahashi(inst, TakahashiVariant::Closure);
    rep.tak_form_agrees = tak.hypothesis_ok == rep.tak_hypothesis &&
                          (!tak.hypothesis_ok || (tak.minimizer && phi(*tak.minimizer) == ExtValue(phi.min())));

    rep.car_form = true;
    for (const SingleMap& t : feasible_map_family(inst, seed)) {
        ++rep.maps_checked;
        const CaristiResult c = caristi_single(inst, t);
        if (t[*c.z] != *c.z) rep.car_form = false;
    }
    return rep;
}

}  // namespace qvp
