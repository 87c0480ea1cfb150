#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qvp/instance.hpp"

namespace qvp {

/// How the next Picard iterate is chosen among the eligible points
/// { y in S(x) : phi(y) < (phi(x) + J(x)) / 2 }.
struct SelectionRule {
    enum class Kind {
        ArgminPhi,      // least phi, lowest index on ties
        FirstEligible,  // lowest index
        SeededRandom,   // uniform, reproducible from `seed`
    };
    Kind kind = Kind::ArgminPhi;
    std::uint64_t seed = 0;

    static SelectionRule argmin() { return {}; }
    static SelectionRule first() { return {Kind::FirstEligible, 0}; }
    static SelectionRule random(std::uint64_t seed) { return {Kind::SeededRandom, seed}; }
};
std::string_view to_string(SelectionRule::Kind k);

struct PicardStep {
    PointId point = 0;
    SSet s_set;
    ExtValue phi_value;
};

enum class Termination {
    Case1,            // phi(x_m) = J(x_m)
    PrefixExhausted,  // stopped on a truncation frontier point; no endpoint claimed
};
std::string_view to_string(Termination t);

/// Trace x_0, ..., x_m of a Picard iteration. steps[k] is x_k with its S-set
/// and J value; `z` is x_m.
struct PicardRun {
    PointId start = 0;
    std::vector<PicardStep> steps;
    Termination termination = Termination::Case1;
    PointId z = 0;

    std::size_t moves() const { return steps.empty() ? 0 : steps.size() - 1; }
};

/// Iterates x_{k+1} in S(x_k) with phi(x_{k+1}) below the half gap until
/// phi(x_m) = J(x_m). Halts after at most |dom phi| - 1 moves since phi
/// strictly decreases.
/// Throws Error(AuditMissing) if the instance fails an audit and
/// Error(StartOutsideDomain) if phi(x0) = +inf.
PicardRun picard_iterate(const Instance& inst, PointId x0, SelectionRule rule = {});

// ---------------------------------------------------------------- weak Ekeland

struct EkelandChecks {
    bool phi_constant_on_sz = false;  // phi(y) = phi(z) = J(z) on S(z)
    bool sy_in_closure = false;       // S(y) ⊆ cl{y} for y in S(z)
    bool strict_outside = false;      // phi(y) < phi(x) + d(x, y) off S(y)
    bool all() const { return phi_constant_on_sz && sy_in_closure && strict_outside; }
};

struct EkelandCertificate {
    PointId z = 0;
    SSet s_of_z;
    EkelandChecks checks;
    PicardRun run;
};

/// Evaluates the weak Ekeland conclusions at z exactly.
EkelandChecks verify_weak_ekeland_point(const Instance& inst, PointId z);

/// Picard endpoint from x0 (default: lowest index in dom phi), verified.
/// Throws the picard_iterate errors, Error(PrefixExhausted) when the run ends
/// on a truncation frontier, Error(CertificateCheckFailed) on a failed check.
EkelandCertificate weak_ekeland(const Instance& inst, std::optional<PointId> x0 = {}, SelectionRule rule = {});

// ---------------------------------------------------------------- full Ekeland

struct FullEkelandCertificate {
    PointId z = 0;
    Rat epsilon, lambda, gamma;
    PointId x0 = 0;
    /// X0 = { x : x0 ≼ x and phi(x) <= phi(x0) + gamma d(x0, x) }.
    std::vector<PointId> x0_subspace;
    /// S-set of z for the rescaled distance gamma d.
    SSet s_gamma_of_z;
    /// (i) phi(z) + gamma d(z, x0) <= phi(x0); (ii) d(z, x0) <= lambda;
    /// (iii) phi constant on S_gamma(z); (iv) strict inequality off S_gamma(z).
    std::array<bool, 4> clauses{};
    /// S_gamma(y) ⊆ X0 for every y in X0.
    bool s_sets_inside_x0 = false;
    /// Picard run inside (X0, gamma d), reported with ids of the full space.
    PicardRun run;
};

/// Throws Error(InvalidArgument) unless eps, lambda > 0, and
/// Error(HypothesisViolated) unless phi(x0) <= eps + min phi.
FullEkelandCertificate full_ekeland(const Instance& inst, const Rat& epsilon, const Rat& lambda, PointId x0,
                                    SelectionRule rule = {});

// ------------------------------------------------------------------ Takahashi

enum class TakahashiVariant {
    StrictPhi,  // phi(x) > min ⟹ some y in S(x) with phi(y) < phi(x)
    Closure,    // phi(x) > min ⟹ S(x) \ cl{x} nonempty
};
std::string_view to_string(TakahashiVariant v);

struct TakahashiReport {
    TakahashiVariant variant = TakahashiVariant::StrictPhi;
    bool hypothesis_ok = false;
    std::optional<PointId> violation;
    /// Picard endpoint; present iff hypothesis_ok.
    std::optional<PointId> minimizer;
    Rat min_value;
    /// Brute-force minimizer (lowest index). On finite spaces the minimum is
    /// always attained, hypothesis or not.
    PointId oracle_minimizer = 0;
};

TakahashiReport takahashi(const Instance& inst, TakahashiVariant variant, SelectionRule rule = {});

// -------------------------------------------------------------------- Caristi

using SingleMap = std::vector<PointId>;
using MultiMap = std::vector<std::vector<PointId>>;

enum class MapKind { Single, Multi };
std::string_view to_string(MapKind k);

struct CaristiResult {
    MapKind kind = MapKind::Single;
    bool feasible = false;
    std::optional<PointId> z;
    /// Single: phi(Tz) = phi(z); multi: phi(z) in phi(Tz).
    bool phi_equal = false;
    /// Single: Tz in cl{z}; multi: Tz ∩ cl{z} nonempty.
    bool in_closure = false;
    /// T(z) as a set (one element for single-valued maps).
    std::vector<PointId> image_of_z;
};

/// First x in dom phi with T(x) outside S(x) (resp. S(x) ∩ T(x) empty).
std::optional<PointId> caristi_infeasibility(const Instance& inst, const SingleMap& t);
std::optional<PointId> caristi_infeasibility(const Instance& inst, const MultiMap& t);

/// Throws Error(InfeasibleMap {x}) when the hypothesis fails at x.
CaristiResult caristi_single(const Instance& inst, const SingleMap& t, SelectionRule rule = {});
CaristiResult caristi_multi(const Instance& inst, const MultiMap& t, SelectionRule rule = {});

// ----------------------------------------------------------------- T1 forms

struct T1EkelandCertificate {
    PointId z = 0;
    bool s_is_singleton = false;  // S(z) = {z}
    bool strict_form = false;     // phi(z) < phi(x) + d(x, z), x in dom phi \ {z}, z ≼ x
};

struct T1TakahashiReport {
    bool hypothesis_ok = false;  // phi(x) > min ⟹ S(x) \ {x} nonempty
    std::optional<PointId> violation;
    std::optional<PointId> minimizer;
};

struct T1CaristiResult {
    MapKind kind = MapKind::Single;
    PointId z = 0;
    bool fixed_point = false;  // Tz = z, resp. z in Tz
};

/// Each overload throws Error(NotT1) on a non-T1 space and
/// Error(CertificateCheckFailed) if the stronger form does not verify.
T1EkelandCertificate t1_strengthen(const Instance& inst, const EkelandCertificate& cert);
T1TakahashiReport t1_strengthen(const Instance& inst, const TakahashiReport& report);
T1CaristiResult t1_strengthen(const Instance& inst, const CaristiResult& result);

}  // namespace qvp
