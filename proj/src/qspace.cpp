#include "qvp/qspace.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace qvp {

std::string_view to_string(Axiom a) {
    switch (a) {
        case Axiom::QM1: return "QM1";
        case Axiom::QM2: return "QM2";
        case Axiom::QM3: return "QM3";
    }
    return "?";
}

std::string SpaceFailure::describe() const {
    std::ostringstream os;
    os << to_string(code);
    if (axiom) os << " " << to_string(*axiom);
    if (!witness.empty()) {
        os << " at (";
        for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
        os << ")";
    }
    return os.str();
}

SpaceError::SpaceError(SpaceFailure f)
    : Error(f.code, "invalid quasi-metric: " + f.describe(), f.witness), failure_(std::move(f)) {}

std::optional<SpaceFailure> find_space_violation(const DistanceMatrix& d) {
    const std::size_t n = d.size();
    for (PointId i = 0; i < n; ++i)
        for (PointId j = 0; j < n; ++j)
            if (d(i, j).sign() < 0) return SpaceFailure{ErrorCode::NegativeEntry, std::nullopt, {i, j}};
    for (PointId i = 0; i < n; ++i)
        if (!d(i, i).is_zero()) return SpaceFailure{ErrorCode::AxiomViolation, Axiom::QM1, {i, i}};
    for (PointId i = 0; i < n; ++i)
        for (PointId j = 0; j < n; ++j)
            for (PointId k = 0; k < n; ++k)
                if (d(i, k) > d(i, j) + d(j, k))
                    return SpaceFailure{ErrorCode::AxiomViolation, Axiom::QM2, {i, j, k}};
    for (PointId i = 0; i < n; ++i)
        for (PointId j = i + 1; j < n; ++j)
            if (d(i, j).is_zero() && d(j, i).is_zero())
                return SpaceFailure{ErrorCode::AxiomViolation, Axiom::QM3, {i, j}};
    return std::nullopt;
}

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

void check_labels(const std::vector<std::string>& labels) {
    std::set<std::string_view> seen;
    for (const auto& l : labels) {
        const bool bad_char = std::any_of(l.begin(), l.end(), [](char c) {
            return std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == ':';
        });
        if (l.empty() || bad_char) throw Error(ErrorCode::InvalidLabel, "invalid point label '" + l + "'");
        if (!seen.insert(l).second) throw Error(ErrorCode::InvalidLabel, "duplicate point label '" + l + "'");
    }
}

QSpace QSpace::validate(DistanceMatrix d, std::vector<std::string> labels) {
    if (labels.empty()) labels = default_labels(d.size());
    if (labels.size() != d.size())
        throw Error(ErrorCode::SizeMismatch, "label count does not match the distance matrix");
    check_labels(labels);
    if (auto f = find_space_violation(d)) throw SpaceError(std::move(*f));
    return QSpace(std::move(d), std::move(labels));
}

QSpace QSpace::validate(const std::vector<std::vector<Rat>>& rows, std::vector<std::string> labels) {
    const std::size_t n = rows.size();
    DistanceMatrix d(n);
    for (PointId i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw SpaceError(SpaceFailure{ErrorCode::NonSquare, std::nullopt, {i}});
        for (PointId j = 0; j < n; ++j) d(i, j) = rows[i][j];
    }
    return validate(std::move(d), std::move(labels));
}

std::optional<PointId> QSpace::find(std::string_view label) const {
    for (PointId i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

PointId QSpace::at(std::string_view label) const {
    if (auto p = find(label)) return *p;
    throw Error(ErrorCode::UnknownPoint, "unknown point '" + std::string(label) + "'");
}

bool QSpace::is_symmetric() const { return d_ == d_.transposed(); }

QSpace conjugate(const QSpace& s) { return QSpace::validate(s.matrix().transposed(), s.labels()); }

QSpace symmetrize(const QSpace& s) {
    DistanceMatrix m(s.size());
    for (PointId i = 0; i < s.size(); ++i)
        for (PointId j = 0; j < s.size(); ++j) m(i, j) = std::max(s.d(i, j), s.d(j, i));
    return QSpace::validate(std::move(m), s.labels());
}

QSpace scaled(const QSpace& s, const Rat& gamma) {
    if (gamma.sign() <= 0) throw Error(ErrorCode::PreconditionNotMet, "scale factor must be positive");
    DistanceMatrix m(s.size());
    for (PointId i = 0; i < s.size(); ++i)
        for (PointId j = 0; j < s.size(); ++j) m(i, j) = gamma * s.d(i, j);
    return QSpace::validate(std::move(m), s.labels());
}

QSpace subspace(const QSpace& s, std::span<const PointId> points) {
    DistanceMatrix m(points.size());
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < points.size(); ++a) {
        labels.push_back(s.label(points[a]));
        for (std::size_t b = 0; b < points.size(); ++b) m(a, b) = s.d(points[a], points[b]);
    }
    return QSpace::validate(std::move(m), std::move(labels));
}

std::vector<PointId> closure_of_point(const QSpace& s, PointId x) {
    std::vector<PointId> out;
    for (PointId y = 0; y < s.size(); ++y)
        if (s.d(y, x).is_zero()) out.push_back(y);
    return out;
}

bool in_closure(const QSpace& s, PointId y, PointId x) { return s.d(y, x).is_zero(); }

bool is_t1(const QSpace& s) {
    for (PointId i = 0; i < s.size(); ++i)
        for (PointId j = 0; j < s.size(); ++j)
            if (i != j && s.d(i, j).is_zero()) return false;
    return true;
}

namespace {

// 1-based modulus from the "bad" flags of positions 1..L: the index after the
// last position that still has a violating later term.
std::optional<std::size_t> modulus_from(const std::vector<bool>& bad, std::size_t limit) {
    std::size_t last_bad = 0;
    for (std::size_t n = 1; n < bad.size(); ++n)
        if (bad[n]) last_bad = n;
    const std::size_t n_eps = last_bad + 1;
    if (n_eps > limit) return std::nullopt;
    return n_eps;
}

}  // namespace

CauchyReport classify_cauchy(const QSpace& s, const SeqSample& seq, std::span<const Rat> thresholds) {
    const auto& t = seq.terms;
    if (t.empty()) throw Error(ErrorCode::EmptySequence, "sequence sample is empty");
    for (PointId p : t)
        if (p >= s.size()) throw Error(ErrorCode::UnknownPoint, "sequence term outside the space");
    for (const auto& eps : thresholds)
        if (eps.sign() <= 0) throw Error(ErrorCode::PreconditionNotMet, "thresholds must be positive");

    const std::size_t len = t.size();
    CauchyReport rep;
    rep.prefix_only = !seq.cycle_length.has_value();

    // `ext` is 1-based; with a cycle it is unrolled by two extra periods so
    // every pair of the infinite sequence has a representative starting at n <= len.
    std::vector<PointId> ext{0};
    ext.insert(ext.end(), t.begin(), t.end());
    std::vector<PointId> tail;
    std::size_t limit = len;
    if (seq.cycle_length) {
        const std::size_t p = *seq.cycle_length;
        if (p == 0 || p > len) throw Error(ErrorCode::PreconditionNotMet, "cycle length out of range");
        tail.assign(t.end() - static_cast<std::ptrdiff_t>(p), t.end());
        for (int rep_i = 0; rep_i < 2; ++rep_i) ext.insert(ext.end(), tail.begin(), tail.end());
        // A bad position inside the cycle recurs every period.
        limit = len - p + 1;
    } else {
        const std::size_t start = len / 2;  // 0-based start of the second half
        tail.assign(t.begin() + static_cast<std::ptrdiff_t>(start), t.end());
        limit = len == 1 ? 1 : std::min(start + 1, len - 1);
    }

    for (const auto& eps : thresholds) {
        std::vector<bool> bad_left(len + 1, false), bad_right(len + 1, false);
        for (std::size_t n = 1; n <= len; ++n) {
            for (std::size_t m = n + 1; m < ext.size(); ++m) {
                if (s.d(ext[n], ext[m]) >= eps) bad_left[n] = true;
                if (s.d(ext[m], ext[n]) >= eps) bad_right[n] = true;
            }
        }
        CauchyModulus mod{eps, modulus_from(bad_left, limit), modulus_from(bad_right, limit)};
        rep.left_k = rep.left_k && mod.left.has_value();
        rep.right_k = rep.right_k && mod.right.has_value();
        rep.modulus.push_back(std::move(mod));
    }

    for (PointId x = 0; x < s.size(); ++x) {
        const bool all_zero = std::all_of(tail.begin(), tail.end(), [&](PointId y) { return s.d(x, y).is_zero(); });
        if (all_zero) rep.converges_to.push_back(x);
        bool sub = false;
        if (seq.cycle_length) {
            sub = std::any_of(tail.begin(), tail.end(), [&](PointId y) { return s.d(x, y).is_zero(); });
        } else if (tail.size() == 1) {
            sub = s.d(x, tail.back()).is_zero();
        } else {
            // On a bare prefix a subsequence limit needs the last term and one
            // more tail term at distance zero.
            const auto zeros = std::count_if(tail.begin(), tail.end() - 1,
                                             [&](PointId y) { return s.d(x, y).is_zero(); });
            sub = s.d(x, tail.back()).is_zero() && zeros >= 1;
        }
        if (sub) rep.subsequence_limits.push_back(x);
    }
    return rep;
}

bool subsequence_limit_check(const QSpace& s, const SeqSample& seq, std::span<const Rat> thresholds) {
    const CauchyReport rep = classify_cauchy(s, seq, thresholds);
    if (!rep.right_k) throw Error(ErrorCode::NotRightKCauchy, "sequence is not right K-Cauchy on the sample");
    return std::all_of(rep.subsequence_limits.begin(), rep.subsequence_limits.end(), [&](PointId x) {
        return std::find(rep.converges_to.begin(), rep.converges_to.end(), x) != rep.converges_to.end();
    });
}

}  // namespace qvp
