#pragma once

// Single-entry corruptions of a valid distance matrix, each designed to
// break exactly one axiom.

#include <optional>

#include "qvp/qspace.hpp"

namespace mutate {

using qvp::DistanceMatrix;
using qvp::PointId;
using qvp::Rat;

/// min over j != i of d(i, j) + d(j, i); nullopt on a singleton.
inline std::optional<Rat> round_trip_min(const DistanceMatrix& d, PointId i) {
    std::optional<Rat> best;
    for (PointId j = 0; j < d.size(); ++j)
        if (j != i && (!best || d(i, j) + d(j, i) < *best)) best = d(i, j) + d(j, i);
    return best;
}

/// Positive diagonal entry small enough to keep every triangle intact.
inline DistanceMatrix qm1(DistanceMatrix d, PointId i) {
    const auto rt = round_trip_min(d, i);
    d(i, i) = rt ? *rt / Rat(2) : Rat(1);
    return d;
}

/// Raises d(i, k) above some detour through a third point. Needs n >= 3.
inline DistanceMatrix qm2(DistanceMatrix d, PointId i, PointId k) {
    std::optional<Rat> detour;
    for (PointId j = 0; j < d.size(); ++j)
        if (j != i && j != k && (!detour || d(i, j) + d(j, k) < *detour)) detour = d(i, j) + d(j, k);
    d(i, k) = *detour + Rat(1);
    return d;
}

/// Appends a copy j of point i with d(j, i) = 0 and d(i, j) = the least
/// round trip from i. The result is a valid space.
inline DistanceMatrix add_twin(const DistanceMatrix& d, PointId i) {
    const std::size_t n = d.size();
    DistanceMatrix out(n + 1, Rat(0));
    for (PointId a = 0; a < n; ++a)
        for (PointId b = 0; b < n; ++b) out(a, b) = d(a, b);
    for (PointId k = 0; k < n; ++k) {
        out(n, k) = d(i, k);
        out(k, n) = d(k, i);
    }
    out(n, i) = Rat(0);
    const auto rt = round_trip_min(d, i);
    out(i, n) = rt ? *rt : Rat(1);
    return out;
}

/// Zeroes d(i, j) for a twin pair (d(j, i) = 0 already).
inline DistanceMatrix qm3(DistanceMatrix d, PointId i, PointId j) {
    d(i, j) = Rat(0);
    return d;
}

}  // namespace mutate
