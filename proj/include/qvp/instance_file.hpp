#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qvp/instance.hpp"
#include "qvp/picard.hpp"

namespace qvp {

// Canonical text format, one `key: value` per line, payload lines indented
// by two spaces:
//
//   format: qvp-instance
//   version: 1
//   points: a b c
//   metric: matrix            | metric: digraph
//     0/1 1/1 2/1             |   a b 1/2        (edge from a to b)
//     ...                     |   ...
//   preorder: total           | pairs | reachability | specialization-conjugate
//     a b                     (pairs / edges, meaning a ≼ b)
//   phi: 3/1 1/1 inf
//   witness:                  (optional)
//     length: 8
//     frontier: x8
//
// Rationals are written "p/q" in lowest terms. Blank lines and lines
// starting with '#' are ignored on input; serialize() emits neither.

inline constexpr int kInstanceFormatVersion = 1;

struct WeightedEdge {
    PointId from = 0;
    PointId to = 0;
    Rat weight;
    friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

struct MetricSpec {
    enum class Kind { Matrix, Digraph };
    Kind kind = Kind::Matrix;
    DistanceMatrix matrix;             // Kind::Matrix
    std::vector<WeightedEdge> edges;   // Kind::Digraph
    friend bool operator==(const MetricSpec&, const MetricSpec&) = default;
};

struct PreorderSpec {
    enum class Kind { Total, Pairs, Reachability, SpecializationConjugate };
    Kind kind = Kind::Total;
    std::vector<std::pair<PointId, PointId>> pairs;  // Pairs / Reachability
    friend bool operator==(const PreorderSpec&, const PreorderSpec&) = default;
};

std::string_view to_string(PreorderSpec::Kind k);

struct WitnessMeta {
    std::size_t length = 0;
    std::vector<PointId> frontier;
    friend bool operator==(const WitnessMeta&, const WitnessMeta&) = default;
};

struct InstanceFile {
    int version = kInstanceFormatVersion;
    std::vector<std::string> points;
    MetricSpec metric;
    PreorderSpec preorder;
    std::vector<ExtValue> phi;
    std::optional<WitnessMeta> witness;
    friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

/// ParseError carries the 1-based line number (0 when not tied to a line).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason);
    std::size_t line() const { return line_; }
    const std::string& reason() const { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

std::string serialize(const InstanceFile& f);
/// Throws ParseError, or Error(VersionUnsupported) for a version other than 1.
InstanceFile parse_instance_file(std::string_view text);

/// Min-plus closure of a weighted digraph over n points (all-pairs shortest
/// paths). Throws Error(PreconditionNotMet) if some pair is unreachable.
DistanceMatrix shortest_path_closure(std::size_t n, const std::vector<WeightedEdge>& edges);

/// Builds and validates the instance (space, preorder, phi, frontier).
Instance to_instance(const InstanceFile& f);
/// Canonical file for an instance: metric as a matrix, preorder as total or
/// explicit pairs.
InstanceFile to_file(const Instance& inst);

/// Map file for Caristi:
///
///   format: qvp-map
///   version: 1
///   kind: single | multi
///     a -> b
///     b -> b c          (multi only)
struct MapFile {
    MapKind kind = MapKind::Single;
    MultiMap images;
    SingleMap single() const;
};

MapFile parse_map_file(std::string_view text, const QSpace& space);
std::string serialize(const MapFile& m, const QSpace& space);

}  // namespace qvp
