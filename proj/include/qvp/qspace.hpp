#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qvp/errors.hpp"
#include "qvp/matrix.hpp"
#include "qvp/rational.hpp"

namespace qvp {

using DistanceMatrix = SquareMatrix<Rat>;

enum class Axiom { QM1, QM2, QM3 };
std::string_view to_string(Axiom a);

/// First violation found by the axiom checker. Axioms are checked in order
/// QM1, QM2, QM3; the witness is the offending pair (i, j) or triple
/// (i, j, k) for QM2, where d(i,k) > d(i,j) + d(j,k).
struct SpaceFailure {
    ErrorCode code = ErrorCode::AxiomViolation;
    std::optional<Axiom> axiom;
    std::vector<PointId> witness;

    std::string describe() const;
};

std::optional<SpaceFailure> find_space_violation(const DistanceMatrix& d);

class SpaceError : public Error {
public:
    explicit SpaceError(SpaceFailure f);
    const SpaceFailure& failure() const { return failure_; }

private:
    SpaceFailure failure_;
};

/// A finite quasi-metric space. Only constructible through validate(), so a
/// QSpace value always satisfies QM1-QM3. d(i, j) is the distance from i to j.
class QSpace {
public:
    /// Throws SpaceError (NonSquare / NegativeEntry / AxiomViolation) or
    /// Error(InvalidLabel / SizeMismatch) for bad labels.
    static QSpace validate(DistanceMatrix d, std::vector<std::string> labels = {});
    static QSpace validate(const std::vector<std::vector<Rat>>& rows,
                           std::vector<std::string> labels = {});

    std::size_t size() const { return d_.size(); }
    const Rat& d(PointId from, PointId to) const { return d_(from, to); }
    const DistanceMatrix& matrix() const { return d_; }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(PointId x) const { return labels_[x]; }
    std::optional<PointId> find(std::string_view label) const;
    /// Like find() but throws Error(UnknownPoint).
    PointId at(std::string_view label) const;

    bool is_symmetric() const;

    friend bool operator==(const QSpace&, const QSpace&) = default;

private:
    QSpace(DistanceMatrix d, std::vector<std::string> labels)
        : d_(std::move(d)), labels_(std::move(labels)) {}

    DistanceMatrix d_;
    std::vector<std::string> labels_;
};

/// Labels x1..xn.
std::vector<std::string> default_labels(std::size_t n);
/// Throws Error(InvalidLabel) on empty, whitespace-containing or duplicate labels.
void check_labels(const std::vector<std::string>& labels);

/// d-bar(x, y) = d(y, x).
QSpace conjugate(const QSpace& s);
/// d^s(x, y) = max(d(x, y), d(y, x)); always a metric.
QSpace symmetrize(const QSpace& s);
/// gamma * d for gamma > 0.
QSpace scaled(const QSpace& s, const Rat& gamma);
/// Restriction to `points` (kept in the given order, labels preserved).
QSpace subspace(const QSpace& s, std::span<const PointId> points);

/// cl{x} = { y : d(y, x) = 0 }.
std::vector<PointId> closure_of_point(const QSpace& s, PointId x);
bool in_closure(const QSpace& s, PointId y, PointId x);
bool is_t1(const QSpace& s);

/// Finite prefix of a sequence. With `cycle_length` p set, the last p terms
/// repeat forever and every verdict below is exact; without it, verdicts are
/// about the prefix only.
struct SeqSample {
    std::vector<PointId> terms;
    std::optional<std::size_t> cycle_length;
};

/// Least 1-based index n_eps from which the left (d(x_n, x_m) < eps) resp.
/// right (d(x_m, x_n) < eps) condition holds for all n_eps <= n < m.
/// Empty when no such index exists (on the prefix: when the verified tail
/// would be shorter than the prefix's second half or contain no pair).
struct CauchyModulus {
    Rat epsilon;
    std::optional<std::size_t> left;
    std::optional<std::size_t> right;
};

struct CauchyReport {
    bool left_k = true;
    bool right_k = true;
    std::vector<CauchyModulus> modulus;
    /// Points x with d(x, x_n) = 0 on the whole tail.
    std::vector<PointId> converges_to;
    /// Points that are limits of some subsequence.
    std::vector<PointId> subsequence_limits;
    bool prefix_only = true;
};

/// Throws Error(EmptySequence) on an empty sample, Error(PreconditionNotMet)
/// on a non-positive threshold or a bad cycle length.
CauchyReport classify_cauchy(const QSpace& s, const SeqSample& seq, std::span<const Rat> thresholds);

/// Checks that a right-K-Cauchy sample with a subsequence converging to x
/// converges to x itself. Throws Error(NotRightKCauchy) if the sample is not
/// right-K-Cauchy for `thresholds`.
bool subsequence_limit_check(const QSpace& s, const SeqSample& seq, std::span<const Rat> thresholds);

}  // namespace qvp
