#include "qvp/preorder.hpp"

namespace qvp {

Preorder Preorder::validate(Relation rel) {
    const std::size_t n = rel.size();
    for (PointId x = 0; x < n; ++x)
        if (!rel(x, x)) throw Error(ErrorCode::NotReflexive, "relation is not reflexive", {x});
    for (PointId x = 0; x < n; ++x)
        for (PointId y = 0; y < n; ++y) {
            if (!rel(x, y)) continue;
            for (PointId z = 0; z < n; ++z)
                if (rel(y, z) && !rel(x, z))
                    throw Error(ErrorCode::NotTransitive, "relation is not transitive", {x, y, z});
        }
    return Preorder(std::move(rel));
}

Preorder Preorder::total(std::size_t n) { return Preorder(Relation(n, 1)); }

Preorder Preorder::discrete(std::size_t n) {
    Relation r(n, 0);
    for (PointId x = 0; x < n; ++x) r(x, x) = 1;
    return Preorder(std::move(r));
}

void reflexive_transitive_closure(Relation& rel) {
    const std::size_t n = rel.size();
    for (PointId x = 0; x < n; ++x) rel(x, x) = 1;
    for (PointId k = 0; k < n; ++k)
        for (PointId i = 0; i < n; ++i)
            if (rel(i, k))
                for (PointId j = 0; j < n; ++j)
                    if (rel(k, j)) rel(i, j) = 1;
}

Preorder Preorder::reachability(std::size_t n, std::span<const std::pair<PointId, PointId>> edges) {
    Relation r(n, 0);
    for (auto [x, y] : edges) {
        if (x >= n || y >= n) throw Error(ErrorCode::UnknownPoint, "edge endpoint outside the space");
        r(x, y) = 1;
    }
    reflexive_transitive_closure(r);
    return Preorder(std::move(r));
}

bool Preorder::is_total() const {
    for (PointId x = 0; x < size(); ++x)
        for (PointId y = 0; y < size(); ++y)
            if (!leq(x, y)) return false;
    return true;
}

std::vector<std::pair<PointId, PointId>> Preorder::strict_pairs() const {
    std::vector<std::pair<PointId, PointId>> out;
    for (PointId x = 0; x < size(); ++x)
        for (PointId y = 0; y < size(); ++y)
            if (x != y && leq(x, y)) out.emplace_back(x, y);
    return out;
}

DOrdCheck check_d_ord(const QSpace& s, const Preorder& p) {
    if (s.size() != p.size()) throw Error(ErrorCode::SizeMismatch, "preorder size differs from space size");
    for (PointId x = 0; x < s.size(); ++x)
        for (PointId y = 0; y < s.size(); ++y)
            if (s.d(x, y).is_zero() && !p.leq(y, x))
                return DOrdCheck{false, std::make_pair(x, y), SeqSample{{y}, 1}};
    return {};
}

Preorder specialization_preorder(const QSpace& s, Orientation o) {
    Relation r(s.size(), 0);
    for (PointId x = 0; x < s.size(); ++x)
        for (PointId y = 0; y < s.size(); ++y)
            r(x, y) = (o == Orientation::AsDefined ? s.d(x, y) : s.d(y, x)).is_zero() ? 1 : 0;
    // Reflexive by QM1, transitive by QM2; validate() re-checks both.
    return Preorder::validate(std::move(r));
}

Preorder repair_preorder(const QSpace& s, Relation rel) {
    if (rel.size() != s.size()) throw Error(ErrorCode::SizeMismatch, "relation size differs from space size");
    for (PointId x = 0; x < s.size(); ++x)
        for (PointId y = 0; y < s.size(); ++y)
            if (s.d(x, y).is_zero()) rel(y, x) = 1;
    reflexive_transitive_closure(rel);
    return Preorder::validate(std::move(rel));
}

}  // namespace qvp
