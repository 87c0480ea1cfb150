#include "qvp/instance.hpp"

#include <algorithm>

namespace qvp {

Phi::Phi(std::vector<ExtValue> v) : values_(std::move(v)) {
    const ExtValue* best = nullptr;
    for (const auto& e : values_)
        if (e.is_finite() && (!best || e < *best)) best = &e;
    min_ = best->value();
}

Phi Phi::validate(std::vector<ExtValue> values) {
    const bool proper = std::any_of(values.begin(), values.end(), [](const ExtValue& e) { return e.is_finite(); });
    if (!proper) throw Error(ErrorCode::ImproperPhi, "phi is identically +inf");
    return Phi(std::move(values));
}

std::vector<PointId> Phi::dom() const {
    std::vector<PointId> out;
    for (PointId x = 0; x < values_.size(); ++x)
        if (in_dom(x)) out.push_back(x);
    return out;
}

const Rat& Phi::min() const { return min_; }

LscCheck is_increasingly_lsc(const QSpace& s, const Phi& phi) {
    for (PointId x = 0; x < s.size(); ++x)
        for (PointId y = 0; y < s.size(); ++y)
            if (s.d(x, y).is_zero() && phi(x) > phi(y)) return LscCheck{false, std::make_pair(x, y)};
    return {};
}

bool SSet::contains(PointId y) const { return std::binary_search(members.begin(), members.end(), y); }

bool phi_leq(const QSpace& s, const Phi& phi, PointId x, PointId y) {
    if (phi(x).is_infinite()) return true;
    return phi(y) + ExtValue(s.d(y, x)) <= phi(x);
}

SSet compute_s_set(const QSpace& s, const Preorder& p, const Phi& phi, PointId x) {
    SSet out;
    out.base = x;
    for (PointId y = 0; y < s.size(); ++y) {
        if (!p.leq(x, y) || !phi_leq(s, phi, x, y)) continue;
        out.members.push_back(y);
        if (phi(y) < out.j_value) out.j_value = phi(y);
    }
    return out;
}

Instance::Instance(QSpace space, Preorder order, Phi phi, std::vector<PointId> frontier)
    : space_(std::move(space)), order_(std::move(order)), phi_(std::move(phi)), frontier_(std::move(frontier)) {
    if (order_.size() != space_.size() || phi_.size() != space_.size())
        throw Error(ErrorCode::SizeMismatch, "space, preorder and phi differ in size");
    for (PointId f : frontier_)
        if (f >= space_.size()) throw Error(ErrorCode::UnknownPoint, "frontier point outside the space");
    std::sort(frontier_.begin(), frontier_.end());
    frontier_.erase(std::unique(frontier_.begin(), frontier_.end()), frontier_.end());

    audits_.d_ord = check_d_ord(space_, order_).holds;
    audits_.inc_lsc = is_increasingly_lsc(space_, phi_).holds;
    audits_.proper = !phi_.dom().empty();

    s_sets_.reserve(space_.size());
    for (PointId x = 0; x < space_.size(); ++x) s_sets_.push_back(compute_s_set(space_, order_, phi_, x));
}

bool Instance::on_frontier(PointId x) const { return std::binary_search(frontier_.begin(), frontier_.end(), x); }

PhiOrderAudit audit_phi_order(const Instance& inst) {
    PhiOrderAudit a;
    const std::size_t n = inst.size();
    for (PointId x = 0; x < n && a.reflexive; ++x)
        if (!phi_leq(inst, x, x)) {
            a.reflexive = false;
            a.witness = {x};
        }
    for (PointId x = 0; x < n && a.transitive; ++x)
        for (PointId y = 0; y < n && a.transitive; ++y) {
            if (!phi_leq(inst, x, y)) continue;
            for (PointId z = 0; z < n; ++z)
                if (phi_leq(inst, y, z) && !phi_leq(inst, x, z)) {
                    a.transitive = false;
                    if (a.witness.empty()) a.witness = {x, y, z};
                    break;
                }
        }
    for (PointId x = 0; x < n && a.antisymmetric_on_dom; ++x)
        for (PointId y = x + 1; y < n; ++y)
            if (inst.phi().in_dom(x) && inst.phi().in_dom(y) && phi_leq(inst, x, y) && phi_leq(inst, y, x)) {
                a.antisymmetric_on_dom = false;
                if (a.witness.empty()) a.witness = {x, y};
                break;
            }
    return a;
}

SPropertyAudit audit_s_properties(const Instance& inst) {
    SPropertyAudit audit;
    const auto& s = inst.space();
    const auto& phi = inst.phi();
    auto fail = [&](int clause, std::vector<PointId> pts, std::string note) {
        audit.clause[clause - 1] = false;
        if (!audit.counterexample) audit.counterexample = SPropertyAudit::Counterexample{clause, std::move(pts), std::move(note)};
    };

    for (PointId x : phi.dom()) {
        const SSet& sx = inst.s_set(x);
        // (i)
        if (!sx.contains(x)) fail(1, {x}, "x not in S(x)");
        for (PointId y : sx.members)
            if (!phi.in_dom(y)) fail(1, {x, y}, "S(x) not inside dom phi");
        // (iv)
        bool outside_closure = false;
        for (PointId y : sx.members) {
            const bool in_cl = in_closure(s, y, x);
            outside_closure = outside_closure || !in_cl;
            // (ii)
            if (phi(y) > phi(x)) fail(2, {x, y}, "phi(y) > phi(x) for y in S(x)");
            for (PointId w : inst.s_set(y).members)
                if (!sx.contains(w)) fail(2, {x, y, w}, "S(y) not inside S(x)");
            // (iii)
            if (!in_cl && !(phi(y) < phi(x))) fail(3, {x, y}, "y in S(x) outside cl{x} without strict decrease");
            if (phi(y) == phi(x) && !in_cl) fail(3, {x, y}, "phi(y) = phi(x) but y not in cl{x}");
            // (v): increasingly closed, finite form [y in S(x), d(w, y) = 0 ⟹ w in S(x)]
            for (PointId w = 0; w < s.size(); ++w)
                if (s.d(w, y).is_zero() && !sx.contains(w)) fail(5, {x, y, w}, "S(x) not increasingly closed");
        }
        if (outside_closure && !(phi(x) > sx.j_value)) fail(4, {x}, "S(x) leaves cl{x} but phi(x) = J(x)");
    }
    return audit;
}

}  // namespace qvp
