#include "qvp/picard.hpp"

#include <algorithm>
#include <random>

#include "qvp/random.hpp"

namespace qvp {

std::string_view to_string(SelectionRule::Kind k) {
    switch (k) {
        case SelectionRule::Kind::ArgminPhi: return "argmin";
        case SelectionRule::Kind::FirstEligible: return "first";
        case SelectionRule::Kind::SeededRandom: return "random";
    }
    return "?";
}

std::string_view to_string(Termination t) {
    return t == Termination::Case1 ? "case1" : "prefix-exhausted";
}

std::string_view to_string(TakahashiVariant v) {
    return v == TakahashiVariant::StrictPhi ? "strict-phi" : "closure";
}

std::string_view to_string(MapKind k) { return k == MapKind::Single ? "single" : "multi"; }

namespace {

void require_audits(const Instance& inst) {
    const Audits& a = inst.audits();
    if (a.all()) return;
    std::string missing;
    if (!a.d_ord) missing += " d-ord";
    if (!a.inc_lsc) missing += " increasing-lsc";
    if (!a.proper) missing += " proper";
    throw Error(ErrorCode::AuditMissing, "instance fails audits:" + missing);
}

void check_point(const Instance& inst, PointId x) {
    if (x >= inst.size()) throw Error(ErrorCode::UnknownPoint, "point index outside the space", {x});
}

}  // namespace

PicardRun picard_iterate(const Instance& inst, PointId x0, SelectionRule rule) {
    require_audits(inst);
    check_point(inst, x0);
    const Phi& phi = inst.phi();
    if (!phi.in_dom(x0)) throw Error(ErrorCode::StartOutsideDomain, "start point has phi = +inf", {x0});

    std::mt19937_64 rng(rule.seed);
    PicardRun run;
    run.start = x0;
    const std::size_t max_moves = phi.dom().size();
    PointId x = x0;
    for (;;) {
        const SSet& sx = inst.s_set(x);
        run.steps.push_back(PicardStep{x, sx, phi(x)});
        if (phi(x) == sx.j_value) {
            run.termination = inst.on_frontier(x) ? Termination::PrefixExhausted : Termination::Case1;
            run.z = x;
            return run;
        }
        if (run.moves() >= max_moves)
            throw Error(ErrorCode::CertificateCheckFailed, "Picard iteration exceeded |dom phi| moves");

        const Rat half_gap = (phi(x).value() + sx.j_value.value()) / Rat(2);
        std::vector<PointId> eligible;
        for (PointId y : sx.members)
            if (phi(y).value() < half_gap) eligible.push_back(y);
        // The argmin of phi over S(x) has phi = J(x) < half gap.
        if (eligible.empty()) throw Error(ErrorCode::CertificateCheckFailed, "no eligible Picard successor", {x});

        switch (rule.kind) {
            case SelectionRule::Kind::ArgminPhi:
                x = *std::min_element(eligible.begin(), eligible.end(),
                                      [&](PointId a, PointId b) { return phi(a) < phi(b); });
                break;
            case SelectionRule::Kind::FirstEligible:
                x = eligible.front();
                break;
            case SelectionRule::Kind::SeededRandom:
                x = eligible[draw_below(rng, eligible.size())];
                break;
        }
    }
}

EkelandChecks verify_weak_ekeland_point(const Instance& inst, PointId z) {
    const auto& s = inst.space();
    const Phi& phi = inst.phi();
    const SSet& sz = inst.s_set(z);
    EkelandChecks c;
    c.phi_constant_on_sz = phi.in_dom(z) && phi(z) == sz.j_value &&
                           std::all_of(sz.members.begin(), sz.members.end(), [&](PointId y) { return phi(y) == phi(z); });
    c.sy_in_closure = std::all_of(sz.members.begin(), sz.members.end(), [&](PointId y) {
        const auto& sy = inst.s_set(y).members;
        return std::all_of(sy.begin(), sy.end(), [&](PointId w) { return in_closure(s, w, y); });
    });
    c.strict_outside = std::all_of(sz.members.begin(), sz.members.end(), [&](PointId y) {
        const SSet& sy = inst.s_set(y);
        for (PointId x = 0; x < s.size(); ++x) {
            const bool guarded = phi.in_dom(x) ? (!sy.contains(x) && inst.order().leq(y, x)) : true;
            if (guarded && !(phi(y) < phi(x) + ExtValue(s.d(x, y)))) return false;
        }
        return true;
    });
    return c;
}

EkelandCertificate weak_ekeland(const Instance& inst, std::optional<PointId> x0, SelectionRule rule) {
    require_audits(inst);
    const PointId start = x0 ? *x0 : inst.phi().dom().front();
    EkelandCertificate cert;
    cert.run = picard_iterate(inst, start, rule);
    if (cert.run.termination == Termination::PrefixExhausted)
        throw Error(ErrorCode::PrefixExhausted, "Picard run reached the truncation frontier; no endpoint certified",
                    {cert.run.z});
    cert.z = cert.run.z;
    cert.s_of_z = inst.s_set(cert.z);
    cert.checks = verify_weak_ekeland_point(inst, cert.z);
    if (!cert.checks.all())
        throw Error(ErrorCode::CertificateCheckFailed, "weak Ekeland certificate failed verification", {cert.z});
    return cert;
}

FullEkelandCertificate full_ekeland(const Instance& inst, const Rat& epsilon, const Rat& lambda, PointId x0,
                                    SelectionRule rule) {
    require_audits(inst);
    check_point(inst, x0);
    if (epsilon.sign() <= 0 || lambda.sign() <= 0)
        throw Error(ErrorCode::InvalidArgument, "epsilon and lambda must be positive");
    const Phi& phi = inst.phi();
    if (!(phi(x0) <= ExtValue(epsilon + phi.min())))
        throw Error(ErrorCode::HypothesisViolated,
                    "phi(x0) = " + phi(x0).str() + " exceeds epsilon + inf phi = " + (epsilon + phi.min()).str(), {x0});

    FullEkelandCertificate cert;
    cert.epsilon = epsilon;
    cert.lambda = lambda;
    cert.gamma = epsilon / lambda;
    cert.x0 = x0;

    const QSpace& s = inst.space();
    const QSpace sg = scaled(s, cert.gamma);
    for (PointId x = 0; x < s.size(); ++x)
        if (inst.order().leq(x0, x) && phi(x) <= phi(x0) + ExtValue(sg.d(x0, x))) cert.x0_subspace.push_back(x);

    // Sub-instance (X0, gamma d, ≼, phi); ids map back through x0_subspace.
    const auto& sub_ids = cert.x0_subspace;
    Relation rel(sub_ids.size(), 0);
    std::vector<ExtValue> sub_phi;
    std::vector<PointId> sub_frontier;
    PointId sub_x0 = 0;
    for (std::size_t a = 0; a < sub_ids.size(); ++a) {
        if (sub_ids[a] == x0) sub_x0 = a;
        if (inst.on_frontier(sub_ids[a])) sub_frontier.push_back(a);
        sub_phi.push_back(phi(sub_ids[a]));
        for (std::size_t b = 0; b < sub_ids.size(); ++b) rel(a, b) = inst.order().leq(sub_ids[a], sub_ids[b]) ? 1 : 0;
    }
    const Instance sub(subspace(sg, sub_ids), Preorder::validate(std::move(rel)), Phi::validate(std::move(sub_phi)),
                       std::move(sub_frontier));
    PicardRun run = picard_iterate(sub, sub_x0, rule);
    if (run.termination == Termination::PrefixExhausted)
        throw Error(ErrorCode::PrefixExhausted, "Picard run reached the truncation frontier; no endpoint certified",
                    {sub_ids[run.z]});
    run.start = sub_ids[run.start];
    run.z = sub_ids[run.z];
    for (auto& step : run.steps) {
        step.point = sub_ids[step.point];
        step.s_set.base = sub_ids[step.s_set.base];
        for (auto& m : step.s_set.members) m = sub_ids[m];
    }
    cert.run = std::move(run);
    const PointId z = cert.run.z;
    cert.z = z;

    std::vector<SSet> s_gamma;
    s_gamma.reserve(s.size());
    for (PointId x = 0; x < s.size(); ++x) s_gamma.push_back(compute_s_set(sg, inst.order(), phi, x));
    cert.s_gamma_of_z = s_gamma[z];

    cert.clauses[0] = phi(z) + ExtValue(sg.d(z, x0)) <= phi(x0);
    cert.clauses[1] = s.d(z, x0) <= lambda;
    cert.clauses[2] = std::all_of(cert.s_gamma_of_z.members.begin(), cert.s_gamma_of_z.members.end(),
                                  [&](PointId y) { return phi(y) == phi(z); });
    bool strict = true;
    for (PointId x = 0; x < s.size(); ++x) {
        const bool guarded = phi.in_dom(x) ? (!cert.s_gamma_of_z.contains(x) && inst.order().leq(z, x)) : true;
        if (guarded && !(phi(z) < phi(x) + ExtValue(sg.d(x, z)))) strict = false;
    }
    cert.clauses[3] = strict;

    cert.s_sets_inside_x0 = std::all_of(sub_ids.begin(), sub_ids.end(), [&](PointId y) {
        return std::all_of(s_gamma[y].members.begin(), s_gamma[y].members.end(),
                           [&](PointId w) { return std::binary_search(sub_ids.begin(), sub_ids.end(), w); });
    });

    const bool ok = std::all_of(cert.clauses.begin(), cert.clauses.end(), [](bool b) { return b; });
    if (!ok || !cert.s_sets_inside_x0)
        throw Error(ErrorCode::CertificateCheckFailed, "full Ekeland certificate failed verification", {z});
    return cert;
}

TakahashiReport takahashi(const Instance& inst, TakahashiVariant variant, SelectionRule rule) {
    require_audits(inst);
    const Phi& phi = inst.phi();
    const auto& s = inst.space();
    TakahashiReport rep;
    rep.variant = variant;
    rep.min_value = phi.min();
    for (PointId x : phi.dom())
        if (phi(x) == ExtValue(phi.min())) {
            rep.oracle_minimizer = x;
            break;
        }

    for (PointId x : phi.dom()) {
        if (phi(x) == ExtValue(phi.min())) continue;
        const auto& members = inst.s_set(x).members;
        const bool ok = variant == TakahashiVariant::StrictPhi
                            ? std::any_of(members.begin(), members.end(), [&](PointId y) { return phi(y) < phi(x); })
                            : std::any_of(members.begin(), members.end(), [&](PointId y) { return !in_closure(s, y, x); });
        if (!ok) {
            rep.violation = x;
            break;
        }
    }
    rep.hypothesis_ok = !rep.violation.has_value();
    if (rep.hypothesis_ok) {
        const EkelandCertificate cert = weak_ekeland(inst, std::nullopt, rule);
        if (phi(cert.z) != ExtValue(phi.min()))
            throw Error(ErrorCode::CertificateCheckFailed, "Takahashi endpoint is not a minimizer", {cert.z});
        rep.minimizer = cert.z;
    }
    return rep;
}

namespace {

void check_map_shape(const Instance& inst, std::size_t size) {
    if (size != inst.size()) throw Error(ErrorCode::SizeMismatch, "map size differs from space size");
}

}  // namespace

std::optional<PointId> caristi_infeasibility(const Instance& inst, const SingleMap& t) {
    check_map_shape(inst, t.size());
    for (PointId x = 0; x < t.size(); ++x) check_point(inst, t[x]);
    for (PointId x : inst.phi().dom())
        if (!inst.s_set(x).contains(t[x])) return x;
    return std::nullopt;
}

std::optional<PointId> caristi_infeasibility(const Instance& inst, const MultiMap& t) {
    check_map_shape(inst, t.size());
    for (const auto& img : t)
        for (PointId y : img) check_point(inst, y);
    for (PointId x : inst.phi().dom()) {
        const SSet& sx = inst.s_set(x);
        if (std::none_of(t[x].begin(), t[x].end(), [&](PointId y) { return sx.contains(y); })) return x;
    }
    return std::nullopt;
}

CaristiResult caristi_single(const Instance& inst, const SingleMap& t, SelectionRule rule) {
    require_audits(inst);
    if (auto bad = caristi_infeasibility(inst, t))
        throw Error(ErrorCode::InfeasibleMap, "T(x) is not in S(x)", {*bad});
    // Any weak Ekeland point works: T(z) in S(z) ⊆ cl{z} and phi is constant on S(z).
    const EkelandCertificate cert = weak_ekeland(inst, std::nullopt, rule);
    CaristiResult r;
    r.kind = MapKind::Single;
    r.feasible = true;
    r.z = cert.z;
    const PointId tz = t[cert.z];
    r.image_of_z = {tz};
    r.phi_equal = inst.phi()(tz) == inst.phi()(cert.z);
    r.in_closure = in_closure(inst.space(), tz, cert.z);
    if (!r.phi_equal || !r.in_closure)
        throw Error(ErrorCode::CertificateCheckFailed, "Caristi conclusion failed at the Ekeland point", {cert.z});
    return r;
}

CaristiResult caristi_multi(const Instance& inst, const MultiMap& t, SelectionRule rule) {
    require_audits(inst);
    if (auto bad = caristi_infeasibility(inst, t))
        throw Error(ErrorCode::InfeasibleMap, "S(x) ∩ T(x) is empty", {*bad});
    const EkelandCertificate cert = weak_ekeland(inst, std::nullopt, rule);
    const PointId z = cert.z;
    CaristiResult r;
    r.kind = MapKind::Multi;
    r.feasible = true;
    r.z = z;
    r.image_of_z = t[z];
    std::sort(r.image_of_z.begin(), r.image_of_z.end());
    r.image_of_z.erase(std::unique(r.image_of_z.begin(), r.image_of_z.end()), r.image_of_z.end());
    const Phi& phi = inst.phi();
    r.phi_equal = std::any_of(r.image_of_z.begin(), r.image_of_z.end(), [&](PointId w) { return phi(w) == phi(z); });
    r.in_closure =
        std::any_of(r.image_of_z.begin(), r.image_of_z.end(), [&](PointId w) { return in_closure(inst.space(), w, z); });
    if (!r.phi_equal || !r.in_closure)
        throw Error(ErrorCode::CertificateCheckFailed, "set-valued Caristi conclusion failed at the Ekeland point", {z});
    return r;
}

namespace {

void require_t1(const Instance& inst) {
    if (!is_t1(inst.space())) throw Error(ErrorCode::NotT1, "space is not T1");
}

}  // namespace

T1EkelandCertificate t1_strengthen(const Instance& inst, const EkelandCertificate& cert) {
    require_t1(inst);
    const PointId z = cert.z;
    const Phi& phi = inst.phi();
    T1EkelandCertificate out;
    out.z = z;
    const auto& members = inst.s_set(z).members;
    out.s_is_singleton = members.size() == 1 && members.front() == z;
    out.strict_form = true;
    for (PointId x : phi.dom())
        if (x != z && inst.order().leq(z, x) && !(phi(z) < phi(x) + ExtValue(inst.space().d(x, z))))
            out.strict_form = false;
    if (!out.s_is_singleton || !out.strict_form)
        throw Error(ErrorCode::CertificateCheckFailed, "T1 form of weak Ekeland failed verification", {z});
    return out;
}

T1TakahashiReport t1_strengthen(const Instance& inst, const TakahashiReport& report) {
    require_t1(inst);
    const Phi& phi = inst.phi();
    T1TakahashiReport out;
    for (PointId x : phi.dom()) {
        if (phi(x) == ExtValue(phi.min())) continue;
        if (inst.s_set(x).members.size() < 2) {
            out.violation = x;
            break;
        }
    }
    out.hypothesis_ok = !out.violation.has_value();
    out.minimizer = report.minimizer;
    // In a T1 space both variants coincide with S(x) \ {x} nonempty.
    if (out.hypothesis_ok != report.hypothesis_ok || out.violation != report.violation)
        throw Error(ErrorCode::CertificateCheckFailed, "T1 form of the Takahashi hypothesis disagrees with the report");
    if (out.minimizer && phi(*out.minimizer) != ExtValue(phi.min()))
        throw Error(ErrorCode::CertificateCheckFailed, "Takahashi minimizer is not minimal", {*out.minimizer});
    return out;
}

T1CaristiResult t1_strengthen(const Instance& inst, const CaristiResult& result) {
    require_t1(inst);
    if (!result.z) throw Error(ErrorCode::PreconditionNotMet, "Caristi result carries no point");
    T1CaristiResult out;
    out.kind = result.kind;
    out.z = *result.z;
    const auto& img = result.image_of_z;
    out.fixed_point = result.kind == MapKind::Single ? (img.size() == 1 && img.front() == out.z)
                                                     : std::find(img.begin(), img.end(), out.z) != img.end();
    if (!out.fixed_point)
        throw Error(ErrorCode::CertificateCheckFailed, "T1 Caristi point is not a fixed point", {out.z});
    return out;
}

}  // namespace qvp
