#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qvp/errors.hpp"
#include "qvp/matrix.hpp"
#include "qvp/qspace.hpp"

namespace qvp {

/// A reflexive, transitive relation; leq(x, y) reads x ≼ y.
class Preorder {
public:
    /// Throws Error(NotReflexive {x}) or Error(NotTransitive {x, y, z}).
    static Preorder validate(Relation rel);

    static Preorder total(std::size_t n);
    static Preorder discrete(std::size_t n);
    /// Reflexive-transitive closure of the given edges (x, y) meaning x ≼ y.
    static Preorder reachability(std::size_t n, std::span<const std::pair<PointId, PointId>> edges);

    std::size_t size() const { return rel_.size(); }
    bool leq(PointId x, PointId y) const { return rel_(x, y) != 0; }
    const Relation& relation() const { return rel_; }
    bool is_total() const;

    /// Off-diagonal pairs (x, y) with x ≼ y, row-major.
    std::vector<std::pair<PointId, PointId>> strict_pairs() const;

    friend bool operator==(const Preorder&, const Preorder&) = default;

private:
    explicit Preorder(Relation rel) : rel_(std::move(rel)) {}
    Relation rel_;
};

/// Warshall closure in place, then sets the diagonal.
void reflexive_transitive_closure(Relation& rel);

/// On a finite space, condition (d-ord) holds iff d(x, y) = 0 implies y ≼ x.
/// A failing pair (x, y) comes with the constant sequence (y, y, ...), which
/// is increasing, converges to x, and does not stay below x.
struct DOrdCheck {
    bool holds = true;
    std::optional<std::pair<PointId, PointId>> witness;
    SeqSample violating_sequence;
};

DOrdCheck check_d_ord(const QSpace& s, const Preorder& p);

/// Which way round to read d(x, y) = 0 as an order relation.
///  - AsDefined:  x ≼ y  iff  d(x, y) = 0   (the usual specialization order)
///  - Conjugate:  x ≼ y  iff  d(y, x) = 0   (the orientation that satisfies (d-ord))
enum class Orientation { AsDefined, Conjugate };

Preorder specialization_preorder(const QSpace& s, Orientation o = Orientation::AsDefined);

/// Closes `rel` under [d(x, y) = 0 ⟹ y ≼ x] and transitivity. The result
/// always passes validate() and check_d_ord().
Preorder repair_preorder(const QSpace& s, Relation rel);

}  // namespace qvp
