#include "qvp/generate.hpp"

#include <numeric>
#include <random>

#include "qvp/random.hpp"

namespace qvp {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent sub-stream per generation stage, so changing one stage's
// draws leaves the others untouched.
std::mt19937_64 stream(std::uint64_t seed, std::uint64_t salt) {
    return std::mt19937_64(splitmix(seed ^ splitmix(salt)));
}

enum : std::uint64_t { kSpaceSalt = 1, kPreorderSalt = 2, kPhiSalt = 3 };

bool draw_rat(std::mt19937_64& rng, const Rat& prob) {
    const std::uint64_t num = prob.raw().get_num().get_ui();
    const std::uint64_t den = prob.raw().get_den().get_ui();
    return draw_bernoulli(rng, num, den);
}

std::vector<PointId> permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<PointId> perm(n);
    std::iota(perm.begin(), perm.end(), PointId{0});
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[draw_below(rng, i)]);
    return perm;
}

Rat draw_weight(std::mt19937_64& rng) {
    static constexpr long dens[] = {1, 2, 3, 4, 6};
    const long k = 1 + static_cast<long>(draw_below(rng, 12));
    return Rat(k, dens[draw_below(rng, 5)]);
}

PreorderSpec preorder_spec(const QSpace& s, const GenParams& p) {
    const std::size_t n = s.size();
    auto rng = stream(p.seed, kPreorderSalt);
    PreorderSpec spec;
    spec.kind = p.preorder_kind;
    switch (p.preorder_kind) {
        case PreorderSpec::Kind::Total:
        case PreorderSpec::Kind::SpecializationConjugate:
            break;
        case PreorderSpec::Kind::Pairs: {
            Relation rel(n, 0);
            for (PointId x = 0; x < n; ++x)
                for (PointId y = 0; y < n; ++y) rel(x, y) = x == y || draw_bernoulli(rng, 1, 4);
            spec.pairs = repair_preorder(s, std::move(rel)).strict_pairs();
            break;
        }
        case PreorderSpec::Kind::Reachability: {
            const auto rank = permutation(rng, n);
            for (PointId x = 0; x < n; ++x)
                for (PointId y = 0; y < n; ++y)
                    if (rank[x] < rank[y] && draw_bernoulli(rng, 1, 3)) spec.pairs.emplace_back(x, y);
            for (PointId x = 0; x < n; ++x)
                for (PointId y = 0; y < n; ++y)
                    if (x != y && s.d(x, y).is_zero()) spec.pairs.emplace_back(y, x);
            break;
        }
    }
    return spec;
}

Preorder realize(const QSpace& s, const PreorderSpec& spec) {
    switch (spec.kind) {
        case PreorderSpec::Kind::Total: return Preorder::total(s.size());
        case PreorderSpec::Kind::SpecializationConjugate: return specialization_preorder(s, Orientation::Conjugate);
        case PreorderSpec::Kind::Reachability: return Preorder::reachability(s.size(), spec.pairs);
        case PreorderSpec::Kind::Pairs: break;
    }
    Relation rel(s.size(), 0);
    for (PointId x = 0; x < s.size(); ++x) rel(x, x) = 1;
    for (auto [x, y] : spec.pairs) rel(x, y) = 1;
    return Preorder::validate(std::move(rel));
}

std::vector<ExtValue> phi_values(const QSpace& s, const GenParams& p) {
    auto rng = stream(p.seed, kPhiSalt);
    static constexpr long dens[] = {1, 2, 4};
    std::vector<ExtValue> raw(s.size());
    for (;;) {
        bool proper = false;
        for (auto& v : raw) {
            if (draw_rat(rng, p.inf_phi_prob)) {
                v = ExtValue::infinity();
            } else {
                const long k = static_cast<long>(draw_below(rng, 25)) - 4;
                v = ExtValue(Rat(k, dens[draw_below(rng, 3)]));
                proper = true;
            }
        }
        if (proper) break;
    }
    return repair_lsc(s, raw);
}

}  // namespace

void check_params(const GenParams& p) {
    if (p.n == 0) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
    if (p.zero_edge_prob.sign() < 0 || p.zero_edge_prob > Rat(1))
        throw Error(ErrorCode::InvalidArgument, "zero_edge_prob must lie in [0, 1]");
    if (p.inf_phi_prob.sign() < 0 || p.inf_phi_prob >= Rat(1))
        throw Error(ErrorCode::InvalidArgument, "inf_phi_prob must lie in [0, 1)");
    for (const Rat* r : {&p.zero_edge_prob, &p.inf_phi_prob})
        if (!r->raw().get_den().fits_ulong_p())
            throw Error(ErrorCode::InvalidArgument, "probability denominator too large");
}

std::vector<WeightedEdge> gen_edges(const GenParams& p) {
    check_params(p);
    auto rng = stream(p.seed, kSpaceSalt);
    const auto rank = permutation(rng, p.n);
    std::vector<WeightedEdge> edges;
    for (PointId i = 0; i < p.n; ++i)
        for (PointId j = 0; j < p.n; ++j) {
            if (i == j) continue;
            const bool zero = rank[i] < rank[j] && draw_rat(rng, p.zero_edge_prob);
            edges.push_back({i, j, zero ? Rat(0) : draw_weight(rng)});
        }
    return edges;
}

QSpace gen_space(const GenParams& p) {
    return QSpace::validate(shortest_path_closure(p.n, gen_edges(p)));
}

Preorder gen_preorder(const QSpace& s, const GenParams& p) {
    return realize(s, preorder_spec(s, p));
}

std::vector<ExtValue> repair_lsc(const QSpace& s, const std::vector<ExtValue>& raw) {
    std::vector<ExtValue> out(raw.size());
    for (PointId x = 0; x < s.size(); ++x) {
        out[x] = raw[x];
        for (PointId y = 0; y < s.size(); ++y)
            if (s.d(x, y).is_zero() && raw[y] < out[x]) out[x] = raw[y];
    }
    return out;
}

Phi gen_phi(const QSpace& s, const GenParams& p) {
    return Phi::validate(phi_values(s, p));
}

InstanceFile gen_instance_file(const GenParams& p) {
    const auto edges = gen_edges(p);
    const QSpace s = QSpace::validate(shortest_path_closure(p.n, edges));
    InstanceFile f;
    f.points = s.labels();
    if (p.emit_digraph) {
        f.metric.kind = MetricSpec::Kind::Digraph;
        f.metric.edges = edges;
    } else {
        f.metric.matrix = s.matrix();
    }
    f.preorder = preorder_spec(s, p);
    f.phi = phi_values(s, p);
    return f;
}

Instance gen_instance(const GenParams& p) {
    QSpace s = gen_space(p);
    Preorder order = gen_preorder(s, p);
    Phi phi = gen_phi(s, p);
    return Instance(std::move(s), std::move(order), std::move(phi));
}

}  // namespace qvp
