#include "qvp/report.hpp"

#include <sstream>

namespace qvp {

namespace {

std::string scalar(const Report& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "none";
    return v.dump();
}

bool is_flat(const Report& arr) {
    for (const auto& v : arr)
        if (v.is_structured()) return false;
    return true;
}

void render_object(const Report& obj, std::size_t indent, std::ostream& os);

void render_list(const Report& arr, std::size_t indent, std::ostream& os) {
    for (const auto& item : arr) {
        std::ostringstream sub;
        if (item.is_object() && !item.empty()) {
            render_object(item, indent + 2, sub);
        } else {
            sub << std::string(indent + 2, ' ') << scalar(item) << "\n";
        }
        std::string text = sub.str();
        text[indent] = '-';
        os << text;
    }
}

void render_object(const Report& obj, std::size_t indent, std::ostream& os) {
    const std::string pad(indent, ' ');
    for (const auto& [key, v] : obj.items()) {
        os << pad << key << ":";
        if (v.is_object()) {
            if (v.empty()) {
                os << " {}\n";
            } else {
                os << "\n";
                render_object(v, indent + 2, os);
            }
        } else if (v.is_array()) {
            if (is_flat(v)) {
                os << " [";
                bool first = true;
                for (const auto& e : v) {
                    os << (first ? "" : ", ") << scalar(e);
                    first = false;
                }
                os << "]\n";
            } else {
                os << "\n";
                render_list(v, indent, os);
            }
        } else {
            os << " " << scalar(v) << "\n";
        }
    }
}

Report opt_label(const QSpace& s, const std::optional<PointId>& x) {
    return x ? Report(s.label(*x)) : Report(nullptr);
}

Report opt_pair(const QSpace& s, const std::optional<std::pair<PointId, PointId>>& p) {
    if (!p) return nullptr;
    return Report::array({s.label(p->first), s.label(p->second)});
}

Report phi_values(const Phi& phi) {
    Report out = Report::array();
    for (const auto& v : phi.values()) out.push_back(v.str());
    return out;
}

}  // namespace

std::string render(const Report& r, ReportFormat f) {
    if (f == ReportFormat::Machine) return r.dump(2) + "\n";
    std::ostringstream os;
    render_object(r, 0, os);
    return os.str();
}

Report labels_report(const QSpace& s, const std::vector<PointId>& points) {
    Report out = Report::array();
    for (PointId x : points) out.push_back(s.label(x));
    return out;
}

Report audit_report(const Instance& inst) {
    const QSpace& s = inst.space();
    const Phi& phi = inst.phi();
    Report r;
    r["points"] = s.labels();
    r["space"] = {{"size", s.size()}, {"t1", is_t1(s)}, {"symmetric", s.is_symmetric()}};
    r["preorder"] = {{"total", inst.order().is_total()}};
    r["phi"] = {{"values", phi_values(phi)}, {"dom", labels_report(s, phi.dom())}, {"min", phi.min().str()}};

    const DOrdCheck dord = check_d_ord(s, inst.order());
    const LscCheck lsc = is_increasingly_lsc(s, phi);
    r["audits"] = {{"d_ord", dord.holds},
                   {"d_ord_witness", opt_pair(s, dord.witness)},
                   {"inc_lsc", lsc.holds},
                   {"inc_lsc_witness", opt_pair(s, lsc.witness)},
                   {"proper", inst.audits().proper},
                   {"all", inst.audits().all()}};

    const PhiOrderAudit po = audit_phi_order(inst);
    r["phi_order"] = {{"reflexive", po.reflexive},
                      {"transitive", po.transitive},
                      {"antisymmetric_on_dom", po.antisymmetric_on_dom},
                      {"witness", labels_report(s, po.witness)}};

    const SPropertyAudit sp = audit_s_properties(inst);
    Report props;
    for (std::size_t i = 0; i < 5; ++i) props["clause_" + std::to_string(i + 1)] = sp.clause[i];
    if (sp.counterexample) {
        props["counterexample"] = {{"clause", sp.counterexample->clause},
                                   {"points", labels_report(s, sp.counterexample->points)},
                                   {"note", sp.counterexample->note}};
    } else {
        props["counterexample"] = nullptr;
    }
    r["s_properties"] = props;

    Report sets;
    for (PointId x = 0; x < inst.size(); ++x)
        sets[s.label(x)] = {{"members", labels_report(s, inst.s_set(x).members)}, {"j", inst.s_set(x).j_value.str()}};
    r["s_sets"] = sets;
    r["frontier"] = labels_report(s, inst.frontier());
    return r;
}

Report picard_report(const Instance& inst, const PicardRun& run) {
    const QSpace& s = inst.space();
    Report steps = Report::array();
    for (const auto& st : run.steps)
        steps.push_back({{"point", s.label(st.point)},
                         {"phi", st.phi_value.str()},
                         {"s_set", labels_report(s, st.s_set.members)},
                         {"j", st.s_set.j_value.str()}});
    return {{"start", s.label(run.start)},
            {"moves", run.moves()},
            {"termination", std::string(to_string(run.termination))},
            {"z", s.label(run.z)},
            {"steps", steps}};
}

Report ekeland_report(const Instance& inst, const EkelandCertificate& cert) {
    const QSpace& s = inst.space();
    return {{"principle", "weak-ekeland"},
            {"z", s.label(cert.z)},
            {"phi_z", inst.phi()(cert.z).str()},
            {"s_of_z", labels_report(s, cert.s_of_z.members)},
            {"checks",
             {{"phi_constant_on_s_z", cert.checks.phi_constant_on_sz},
              {"s_y_in_closure", cert.checks.sy_in_closure},
              {"strict_outside", cert.checks.strict_outside}}},
            {"certified", cert.checks.all()},
            {"run", picard_report(inst, cert.run)}};
}

Report full_ekeland_report(const Instance& inst, const FullEkelandCertificate& cert) {
    const QSpace& s = inst.space();
    bool all = cert.s_sets_inside_x0;
    for (bool c : cert.clauses) all = all && c;
    return {{"principle", "ekeland"},
            {"epsilon", cert.epsilon.str()},
            {"lambda", cert.lambda.str()},
            {"gamma", cert.gamma.str()},
            {"x0", s.label(cert.x0)},
            {"z", s.label(cert.z)},
            {"x0_subspace", labels_report(s, cert.x0_subspace)},
            {"s_gamma_of_z", labels_report(s, cert.s_gamma_of_z.members)},
            {"clauses",
             {{"phi_drop", cert.clauses[0]},
              {"distance_within_lambda", cert.clauses[1]},
              {"phi_constant_on_s_z", cert.clauses[2]},
              {"strict_outside", cert.clauses[3]}}},
            {"s_sets_inside_x0", cert.s_sets_inside_x0},
            {"certified", all},
            {"run", picard_report(inst, cert.run)}};
}

Report takahashi_report(const Instance& inst, const TakahashiReport& rep) {
    const QSpace& s = inst.space();
    return {{"principle", "takahashi"},
            {"variant", std::string(to_string(rep.variant))},
            {"hypothesis_ok", rep.hypothesis_ok},
            {"violation", opt_label(s, rep.violation)},
            {"minimizer", opt_label(s, rep.minimizer)},
            {"min_value", rep.min_value.str()},
            {"oracle_minimizer", s.label(rep.oracle_minimizer)}};
}

Report caristi_report(const Instance& inst, const CaristiResult& res) {
    const QSpace& s = inst.space();
    return {{"principle", "caristi"},
            {"kind", std::string(to_string(res.kind))},
            {"feasible", res.feasible},
            {"z", opt_label(s, res.z)},
            {"image_of_z", labels_report(s, res.image_of_z)},
            {"phi_equal", res.phi_equal},
            {"in_closure", res.in_closure}};
}

Report t1_ekeland_report(const Instance& inst, const T1EkelandCertificate& c) {
    return {{"z", inst.space().label(c.z)}, {"s_is_singleton", c.s_is_singleton}, {"strict_form", c.strict_form}};
}

Report t1_takahashi_report(const Instance& inst, const T1TakahashiReport& r) {
    const QSpace& s = inst.space();
    return {{"hypothesis_ok", r.hypothesis_ok},
            {"violation", opt_label(s, r.violation)},
            {"minimizer", opt_label(s, r.minimizer)}};
}

Report t1_caristi_report(const Instance& inst, const T1CaristiResult& r) {
    return {{"kind", std::string(to_string(r.kind))}, {"z", inst.space().label(r.z)}, {"fixed_point", r.fixed_point}};
}

Report equivalence_report(const Instance& inst, const EquivalenceReport& rep) {
    const QSpace& s = inst.space();
    Report t = nullptr;
    if (rep.adversarial_t) {
        t = Report::object();
        for (PointId x = 0; x < rep.adversarial_t->size(); ++x) t[s.label(x)] = s.label((*rep.adversarial_t)[x]);
    }
    return {{"wek_holds", rep.wek_holds},
            {"wek_points", labels_report(s, rep.wek_points)},
            {"tak_negation", rep.tak_negation},
            {"equivalent", rep.wek_holds != rep.tak_negation},
            {"adversarial_map", t},
            {"caristi_consistent", rep.caristi_consistent},
            {"maps_checked", rep.maps_checked},
            {"prefix_restricted", rep.prefix_restricted}};
}

Report metric_specialization_report(const Instance& inst, const MetricSpecializationReport& rep) {
    const QSpace& s = inst.space();
    return {{"r_equals_s", rep.r_equals_s},
            {"r_mismatch", opt_label(s, rep.r_mismatch)},
            {"wek_point", s.label(rep.wek_point)},
            {"wek_form", rep.wek_form},
            {"tak_hypothesis", rep.tak_hypothesis},
            {"tak_form_agrees", rep.tak_form_agrees},
            {"maps_checked", rep.maps_checked},
            {"car_form", rep.car_form},
            {"all", rep.all()}};
}

Report witness_report(const Instance& inst, const WitnessReport& rep) {
    const QSpace& s = inst.space();
    Report moduli = Report::array();
    for (const auto& m : rep.moduli)
        moduli.push_back({{"epsilon", m.epsilon.str()},
                          {"modulus", m.modulus ? Report(*m.modulus) : Report(nullptr)},
                          {"bound", m.bound}});
    return {{"length", rep.length},
            {"backward_bound", rep.backward_bound},
            {"phi_decreasing", rep.phi_decreasing},
            {"s_tails", rep.s_tails},
            {"telescoping", rep.telescoping},
            {"sublevel_sets", rep.sublevel_sets},
            {"inc_lsc", rep.lsc},
            {"d_ord", rep.d_ord},
            {"moduli", moduli},
            {"modulus_within_bound", rep.modulus_within_bound},
            {"limit_candidates", labels_report(s, rep.limit_candidates)},
            {"prefix_not_wek", rep.prefix_not_wek},
            {"all", rep.all()},
            {"conclusion", rep.conclusion}};
}

Report error_report(const Error& e, const QSpace* space) {
    Report w = Report::array();
    for (PointId x : e.witness()) {
        if (space && x < space->size()) {
            w.push_back(space->label(x));
        } else {
            w.push_back(x);
        }
    }
    return {{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}, {"witness", w}}}};
}

}  // namespace qvp
