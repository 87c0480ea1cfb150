#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qvp/preorder.hpp"
#include "qvp/qspace.hpp"
#include "qvp/rational.hpp"

namespace qvp {

/// Objective with values in Q ∪ {+inf}. Always proper (some finite value).
class Phi {
public:
    /// Throws Error(ImproperPhi) if every value is +inf.
    static Phi validate(std::vector<ExtValue> values);

    std::size_t size() const { return values_.size(); }
    const ExtValue& operator()(PointId x) const { return values_[x]; }
    const std::vector<ExtValue>& values() const { return values_; }
    bool in_dom(PointId x) const { return values_[x].is_finite(); }
    /// dom phi in index order.
    std::vector<PointId> dom() const;
    /// min phi(X); attained on a finite space.
    const Rat& min() const;

    friend bool operator==(const Phi&, const Phi&) = default;

private:
    explicit Phi(std::vector<ExtValue> v);
    std::vector<ExtValue> values_;
    Rat min_;
};

/// On a finite space phi is increasingly lsc iff d(x, y) = 0 implies
/// phi(x) <= phi(y). The witness is a violating pair (x, y).
struct LscCheck {
    bool holds = true;
    std::optional<std::pair<PointId, PointId>> witness;
};
LscCheck is_increasingly_lsc(const QSpace& s, const Phi& phi);

struct Audits {
    bool d_ord = false;
    bool inc_lsc = false;
    bool proper = false;
    bool all() const { return d_ord && inc_lsc && proper; }
};

/// S(x) = { y : x ≼ y and x ≤_phi y } with J(x) = min phi(S(x)).
struct SSet {
    PointId base = 0;
    std::vector<PointId> members;  // index order
    ExtValue j_value;

    bool contains(PointId y) const;
};

/// A space, a preorder and an objective over the same points, with the
/// standing hypotheses audited at construction. All S-sets are computed
/// eagerly, so an Instance is immutable and safe to share across threads.
class Instance {
public:
    /// Throws Error(SizeMismatch) if the parts disagree in size.
    Instance(QSpace space, Preorder order, Phi phi, std::vector<PointId> frontier = {});

    const QSpace& space() const { return space_; }
    const Preorder& order() const { return order_; }
    const Phi& phi() const { return phi_; }
    const Audits& audits() const { return audits_; }
    std::size_t size() const { return space_.size(); }

    /// Points whose apparent minimality is an artifact of truncating a
    /// countable space (the last point of a witness prefix). Empty otherwise.
    const std::vector<PointId>& frontier() const { return frontier_; }
    bool on_frontier(PointId x) const;

    const SSet& s_set(PointId x) const { return s_sets_[x]; }

private:
    QSpace space_;
    Preorder order_;
    Phi phi_;
    std::vector<PointId> frontier_;
    Audits audits_;
    std::vector<SSet> s_sets_;
};

/// x ≤_phi y  iff  phi(y) + d(y, x) <= phi(x). True whenever phi(x) = +inf.
bool phi_leq(const QSpace& s, const Phi& phi, PointId x, PointId y);
inline bool phi_leq(const Instance& inst, PointId x, PointId y) {
    return phi_leq(inst.space(), inst.phi(), x, y);
}

/// Exhaustive S(x) filter (used by Instance; exposed for callers that work
/// with a rescaled distance).
SSet compute_s_set(const QSpace& s, const Preorder& p, const Phi& phi, PointId x);
inline const SSet& s_set(const Instance& inst, PointId x) { return inst.s_set(x); }

struct PhiOrderAudit {
    bool reflexive = true;
    bool transitive = true;
    bool antisymmetric_on_dom = true;
    std::vector<PointId> witness;
    bool all() const { return reflexive && transitive && antisymmetric_on_dom; }
};
PhiOrderAudit audit_phi_order(const Instance& inst);

/// Properties (i)-(v) of the sets S(x), x in dom phi.
struct SPropertyAudit {
    std::array<bool, 5> clause{true, true, true, true, true};
    /// First counterexample: clause number (1-5), points involved, note.
    struct Counterexample {
        int clause = 0;
        std::vector<PointId> points;
        std::string note;
    };
    std::optional<Counterexample> counterexample;
    bool all() const { return !counterexample.has_value(); }
};
/// Audits every clause regardless of the instance's audits; clause (v) is
/// only guaranteed when (d-ord) and increasing lsc hold.
SPropertyAudit audit_s_properties(const Instance& inst);

}  // namespace qvp
