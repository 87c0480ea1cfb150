#pragma once

#include <cstdint>

#include "qvp/instance.hpp"
#include "qvp/instance_file.hpp"

namespace qvp {

struct GenParams {
    std::size_t n = 4;
    std::uint64_t seed = 0;
    Rat zero_edge_prob{1, 4};   // in [0, 1]
    Rat inf_phi_prob{1, 8};     // in [0, 1)
    PreorderSpec::Kind preorder_kind = PreorderSpec::Kind::Total;
    /// Write the metric as the generating digraph instead of its closure.
    bool emit_digraph = false;
};

/// Throws Error(InvalidArgument) for n = 0 or probabilities out of range.
void check_params(const GenParams& p);

/// Complete random digraph, closed under shortest paths. Zero-weight edges
/// only run forward along a seeded permutation, so no two points are at
/// mutual distance zero.
QSpace gen_space(const GenParams& p);
/// The generating edges, before closure.
std::vector<WeightedEdge> gen_edges(const GenParams& p);

/// Base relation of the requested kind, repaired to satisfy (d-ord).
Preorder gen_preorder(const QSpace& s, const GenParams& p);

/// Random finite or +inf values, re-rolled until proper, then repaired to
/// increasing lsc: phi(x) <- min { raw(y) : d(x, y) = 0 }.
Phi gen_phi(const QSpace& s, const GenParams& p);
/// The lsc repair on its own.
std::vector<ExtValue> repair_lsc(const QSpace& s, const std::vector<ExtValue>& raw);

InstanceFile gen_instance_file(const GenParams& p);
Instance gen_instance(const GenParams& p);

}  // namespace qvp
