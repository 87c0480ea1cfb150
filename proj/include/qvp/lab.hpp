#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qvp/instance.hpp"
#include "qvp/picard.hpp"
#include "qvp/qspace.hpp"

namespace qvp {

/// Every z in dom phi with phi constant on S(z), found by exhaustive search.
/// Shares no code with the Picard solver or with Instance's S-set cache.
/// Frontier points of truncated instances are excluded.
std::vector<PointId> oracle_wek(const Instance& inst);

struct EquivalenceReport {
    bool wek_holds = false;
    std::vector<PointId> wek_points;
    /// ∀x in dom phi ∃y in S(x): phi(y) < phi(x)   (the negation of Takahashi)
    bool tak_negation = false;
    /// Tx = y_x built when weak Ekeland fails.
    std::optional<SingleMap> adversarial_t;
    /// Caristi behaves as the equivalence predicts on every map checked.
    bool caristi_consistent = false;
    std::size_t maps_checked = 0;
    /// Quantifiers ran over dom phi minus the truncation frontier.
    bool prefix_restricted = false;
};

/// Cross-checks weak Ekeland ⟺ Takahashi ⟺ Caristi on one instance. No
/// completeness audit is needed. Throws Error(ConsistencyViolation) if any
/// equivalence fails (an implementation bug).
EquivalenceReport check_equivalences(const Instance& inst, std::uint64_t seed = 0);

/// The countable witness x_1, x_2, ... truncated at N, realized with
///   d(x_m, x_n) = 2^-(n+1) - 2^-(m+1)  for m > n   (backward, telescoping)
///   d(x_n, x_m) = 1                    for n < m   (forward)
///   phi(x_n) = 2^-(n-1),  x_m ≼ x_n iff m <= n.
/// Point index k - 1 holds x_k. The last point is the truncation frontier.
struct WitnessSpace {
    std::size_t length = 0;
    Instance instance;
};

/// Throws Error(InvalidArgument) for N < 2.
WitnessSpace build_witness(std::size_t n);

struct WitnessReport {
    std::size_t length = 0;
    bool backward_bound = false;    // d(x_{n+1}, x_n) < 2^-(n+1)
    bool phi_decreasing = false;
    bool s_tails = false;           // S(x_k) = {x_k, ..., x_N}
    bool telescoping = false;       // d(x_m, x_n) + d(x_k, x_m) = d(x_k, x_n), k > m > n
    bool sublevel_sets = false;     // [phi <= b] = {x_{k+1}, ..., x_N} for 2^-k <= b < 2^-(k-1)
    bool lsc = false;
    bool d_ord = false;
    /// Right-K-Cauchy modulus of (x_1, ..., x_N) for eps = 2^-1 .. 2^-10.
    struct ModulusRow {
        Rat epsilon;
        std::optional<std::size_t> modulus;
        std::size_t bound = 0;  // ceil(log2(1/eps))
    };
    std::vector<ModulusRow> moduli;
    bool modulus_within_bound = false;
    std::vector<PointId> limit_candidates;
    /// Every non-final x_k has x_{k+1} in S(x_k) with smaller phi.
    bool prefix_not_wek = false;
    std::string conclusion;

    bool all() const;
};

WitnessReport witness_noncompleteness_report(const WitnessSpace& w);

struct MetricSpecializationReport {
    bool r_equals_s = false;
    std::optional<PointId> r_mismatch;
    PointId wek_point = 0;
    bool wek_form = false;          // R(z) = {z}
    bool tak_form_agrees = false;   // [phi(x) > min ⟹ R(x) \ {x} ≠ ∅] matches the solver
    bool tak_hypothesis = false;
    std::size_t maps_checked = 0;
    bool car_form = false;          // Tx in R(x) ⟹ Tz = z at the solver's z
    bool all() const { return r_equals_s && wek_form && tak_form_agrees && car_form; }
};

/// R(x) = { y : phi(y) + d(y, x) <= phi(x) }. Requires a symmetric space
/// and a total preorder; throws Error(PreconditionNotMet) otherwise.
MetricSpecializationReport metric_specialization_suite(const Instance& inst, std::uint64_t seed = 0);

/// Seeded sample of single-valued maps with T(x) in S(x) on dom phi:
/// identity, S-argmin, lowest and highest member, and `random_count`
/// uniform selections.
std::vector<SingleMap> feasible_map_family(const Instance& inst, std::uint64_t seed, std::size_t random_count = 4);

}  // namespace qvp
