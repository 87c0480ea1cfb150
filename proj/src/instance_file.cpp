#include "qvp/instance_file.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace qvp {

std::string_view to_string(PreorderSpec::Kind k) {
    switch (k) {
        case PreorderSpec::Kind::Total: return "total";
        case PreorderSpec::Kind::Pairs: return "pairs";
        case PreorderSpec::Kind::Reachability: return "reachability";
        case PreorderSpec::Kind::SpecializationConjugate: return "specialization-conjugate";
    }
    return "?";
}

ParseError::ParseError(std::size_t line, const std::string& reason)
    : Error(ErrorCode::ParseError, "parse error" + (line ? " at line " + std::to_string(line) : std::string()) + ": " + reason),
      line_(line),
      reason_(reason) {}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

struct BodyLine {
    std::size_t no;
    std::string_view text;
};

struct Section {
    std::size_t no = 0;
    std::string_view value;
    std::vector<BodyLine> body;
};

// Splits into top-level `key: value` sections with their indented body lines.
std::map<std::string, Section, std::less<>> sections(std::string_view text, std::vector<std::string>& order) {
    std::map<std::string, Section, std::less<>> out;
    Section* current = nullptr;
    std::size_t no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view raw = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++no;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        const std::string_view t = trim(raw);
        if (t.empty() || t.front() == '#') {
            if (eol == text.size()) break;
            continue;
        }
        if (raw.front() == ' ' || raw.front() == '\t') {
            if (!current) throw ParseError(no, "indented line outside a section");
            current->body.push_back({no, t});
        } else {
            const auto colon = t.find(':');
            if (colon == std::string_view::npos) throw ParseError(no, "expected 'key: value'");
            std::string key(trim(t.substr(0, colon)));
            if (out.count(key)) throw ParseError(no, "duplicate key '" + key + "'");
            order.push_back(key);
            current = &out[key];
            current->no = no;
            current->value = trim(t.substr(colon + 1));
        }
        if (eol == text.size()) break;
    }
    return out;
}

std::size_t parse_count(std::string_view s, std::size_t line, const char* what) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
    return v;
}

Rat parse_rat(std::string_view s, std::size_t line) {
    try {
        return Rat::parse(s);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
    }
}

ExtValue parse_ext(std::string_view s, std::size_t line) {
    if (s == "inf") return ExtValue::infinity();
    return ExtValue(parse_rat(s, line));
}

PointId resolve(const std::vector<std::string>& points, std::string_view label, std::size_t line) {
    for (PointId i = 0; i < points.size(); ++i)
        if (points[i] == label) return i;
    throw ParseError(line, "unknown point '" + std::string(label) + "'");
}

const Section& require(const std::map<std::string, Section, std::less<>>& secs, std::string_view key) {
    auto it = secs.find(key);
    if (it == secs.end()) throw ParseError(0, "missing key '" + std::string(key) + "'");
    return it->second;
}

void require_no_body(const Section& s, std::string_view key) {
    if (!s.body.empty()) throw ParseError(s.body.front().no, "unexpected payload under '" + std::string(key) + "'");
}

void check_version(const std::map<std::string, Section, std::less<>>& secs, std::string_view format) {
    const Section& f = require(secs, "format");
    if (f.value != format) throw ParseError(f.no, "expected format '" + std::string(format) + "'");
    require_no_body(f, "format");
    const Section& v = require(secs, "version");
    require_no_body(v, "version");
    if (parse_count(v.value, v.no, "version") != static_cast<std::size_t>(kInstanceFormatVersion))
        throw Error(ErrorCode::VersionUnsupported, "unsupported format version " + std::string(v.value));
}

std::string labels_of(const std::vector<std::string>& points, const std::vector<PointId>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? " " : "") + points[ids[i]];
    return out;
}

}  // namespace

InstanceFile parse_instance_file(std::string_view text) {
    std::vector<std::string> order;
    const auto secs = sections(text, order);
    static const std::vector<std::string> known{"format", "version", "points", "metric", "preorder", "phi", "witness"};
    for (const auto& key : order)
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ParseError(secs.at(key).no, "unknown key '" + key + "'");
    check_version(secs, "qvp-instance");

    InstanceFile f;
    const Section& pts = require(secs, "points");
    require_no_body(pts, "points");
    for (auto t : tokens(pts.value)) f.points.emplace_back(t);
    if (f.points.empty()) throw ParseError(pts.no, "no points");
    try {
        check_labels(f.points);
    } catch (const Error& e) {
        throw ParseError(pts.no, e.what());
    }
    const std::size_t n = f.points.size();

    const Section& met = require(secs, "metric");
    if (met.value == "matrix") {
        f.metric.kind = MetricSpec::Kind::Matrix;
        if (met.body.size() != n) throw ParseError(met.no, "matrix needs " + std::to_string(n) + " rows");
        f.metric.matrix = DistanceMatrix(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto row = tokens(met.body[i].text);
            if (row.size() != n) throw ParseError(met.body[i].no, "matrix row needs " + std::to_string(n) + " entries");
            for (std::size_t j = 0; j < n; ++j) f.metric.matrix(i, j) = parse_rat(row[j], met.body[i].no);
        }
    } else if (met.value == "digraph") {
        f.metric.kind = MetricSpec::Kind::Digraph;
        for (const auto& line : met.body) {
            const auto tk = tokens(line.text);
            if (tk.size() != 3) throw ParseError(line.no, "edge needs 'from to weight'");
            f.metric.edges.push_back(
                {resolve(f.points, tk[0], line.no), resolve(f.points, tk[1], line.no), parse_rat(tk[2], line.no)});
        }
    } else {
        throw ParseError(met.no, "unknown metric kind '" + std::string(met.value) + "'");
    }

    const Section& pre = require(secs, "preorder");
    static const std::vector<PreorderSpec::Kind> kinds{PreorderSpec::Kind::Total, PreorderSpec::Kind::Pairs,
                                                       PreorderSpec::Kind::Reachability,
                                                       PreorderSpec::Kind::SpecializationConjugate};
    auto kind = std::find_if(kinds.begin(), kinds.end(), [&](auto k) { return to_string(k) == pre.value; });
    if (kind == kinds.end()) throw ParseError(pre.no, "unknown preorder kind '" + std::string(pre.value) + "'");
    f.preorder.kind = *kind;
    if (*kind == PreorderSpec::Kind::Pairs || *kind == PreorderSpec::Kind::Reachability) {
        for (const auto& line : pre.body) {
            const auto tk = tokens(line.text);
            if (tk.size() != 2) throw ParseError(line.no, "pair needs two points");
            f.preorder.pairs.emplace_back(resolve(f.points, tk[0], line.no), resolve(f.points, tk[1], line.no));
        }
    } else {
        require_no_body(pre, "preorder");
    }

    const Section& ph = require(secs, "phi");
    require_no_body(ph, "phi");
    for (auto t : tokens(ph.value)) f.phi.push_back(parse_ext(t, ph.no));
    if (f.phi.size() != n) throw ParseError(ph.no, "phi needs " + std::to_string(n) + " values");

    if (auto it = secs.find("witness"); it != secs.end()) {
        const Section& w = it->second;
        if (!w.value.empty()) throw ParseError(w.no, "witness takes a block, not a value");
        WitnessMeta meta;
        bool have_length = false, have_frontier = false;
        for (const auto& line : w.body) {
            const auto colon = line.text.find(':');
            const auto key = colon == std::string_view::npos ? line.text : trim(line.text.substr(0, colon));
            const auto val = colon == std::string_view::npos ? std::string_view() : trim(line.text.substr(colon + 1));
            if (key == "length" && !have_length) {
                meta.length = parse_count(val, line.no, "length");
                have_length = true;
            } else if (key == "frontier" && !have_frontier) {
                for (auto t : tokens(val)) meta.frontier.push_back(resolve(f.points, t, line.no));
                have_frontier = true;
            } else {
                throw ParseError(line.no, "unexpected witness field '" + std::string(key) + "'");
            }
        }
        if (!have_length || !have_frontier) throw ParseError(w.no, "witness needs length and frontier");
        f.witness = std::move(meta);
    }
    return f;
}

std::string serialize(const InstanceFile& f) {
    std::ostringstream os;
    os << "format: qvp-instance\n";
    os << "version: " << f.version << "\n";
    os << "points:";
    for (const auto& p : f.points) os << " " << p;
    os << "\n";
    if (f.metric.kind == MetricSpec::Kind::Matrix) {
        os << "metric: matrix\n";
        const auto& m = f.metric.matrix;
        for (std::size_t i = 0; i < m.size(); ++i) {
            os << " ";
            for (std::size_t j = 0; j < m.size(); ++j) os << " " << m(i, j).str();
            os << "\n";
        }
    } else {
        os << "metric: digraph\n";
        for (const auto& e : f.metric.edges)
            os << "  " << f.points[e.from] << " " << f.points[e.to] << " " << e.weight.str() << "\n";
    }
    os << "preorder: " << to_string(f.preorder.kind) << "\n";
    for (auto [x, y] : f.preorder.pairs) os << "  " << f.points[x] << " " << f.points[y] << "\n";
    os << "phi:";
    for (const auto& v : f.phi) os << " " << v.str();
    os << "\n";
    if (f.witness) {
        os << "witness:\n";
        os << "  length: " << f.witness->length << "\n";
        os << "  frontier: " << labels_of(f.points, f.witness->frontier) << "\n";
    }
    return os.str();
}

DistanceMatrix shortest_path_closure(std::size_t n, const std::vector<WeightedEdge>& edges) {
    SquareMatrix<ExtValue> dist(n, ExtValue::infinity());
    for (PointId i = 0; i < n; ++i) dist(i, i) = ExtValue(Rat(0));
    for (const auto& e : edges) {
        if (e.from >= n || e.to >= n) throw Error(ErrorCode::UnknownPoint, "edge endpoint outside the space");
        if (e.weight.sign() < 0) throw Error(ErrorCode::NegativeEntry, "negative edge weight", {e.from, e.to});
        if (ExtValue(e.weight) < dist(e.from, e.to)) dist(e.from, e.to) = ExtValue(e.weight);
    }
    for (PointId k = 0; k < n; ++k)
        for (PointId i = 0; i < n; ++i) {
            if (dist(i, k).is_infinite()) continue;
            for (PointId j = 0; j < n; ++j) {
                const ExtValue via = dist(i, k) + dist(k, j);
                if (via < dist(i, j)) dist(i, j) = via;
            }
        }
    DistanceMatrix out(n);
    for (PointId i = 0; i < n; ++i)
        for (PointId j = 0; j < n; ++j) {
            if (dist(i, j).is_infinite())
                throw Error(ErrorCode::PreconditionNotMet, "digraph is not strongly connected", {i, j});
            out(i, j) = dist(i, j).value();
        }
    return out;
}

Instance to_instance(const InstanceFile& f) {
    const std::size_t n = f.points.size();
    DistanceMatrix m = f.metric.kind == MetricSpec::Kind::Matrix ? f.metric.matrix : shortest_path_closure(n, f.metric.edges);
    if (m.size() != n) throw Error(ErrorCode::SizeMismatch, "metric size differs from point count");
    QSpace space = QSpace::validate(std::move(m), f.points);

    std::optional<Preorder> order;
    switch (f.preorder.kind) {
        case PreorderSpec::Kind::Total: order = Preorder::total(n); break;
        case PreorderSpec::Kind::Reachability: order = Preorder::reachability(n, f.preorder.pairs); break;
        case PreorderSpec::Kind::SpecializationConjugate:
            order = specialization_preorder(space, Orientation::Conjugate);
            break;
        case PreorderSpec::Kind::Pairs: {
            Relation rel(n, 0);
            for (PointId x = 0; x < n; ++x) rel(x, x) = 1;
            for (auto [x, y] : f.preorder.pairs) {
                if (x >= n || y >= n) throw Error(ErrorCode::UnknownPoint, "pair endpoint outside the space");
                rel(x, y) = 1;
            }
            order = Preorder::validate(std::move(rel));
            break;
        }
    }
    if (f.phi.size() != n) throw Error(ErrorCode::SizeMismatch, "phi size differs from point count");
    std::vector<PointId> frontier = f.witness ? f.witness->frontier : std::vector<PointId>{};
    return Instance(std::move(space), std::move(*order), Phi::validate(f.phi), std::move(frontier));
}

InstanceFile to_file(const Instance& inst) {
    InstanceFile f;
    f.points = inst.space().labels();
    f.metric.kind = MetricSpec::Kind::Matrix;
    f.metric.matrix = inst.space().matrix();
    if (inst.order().is_total()) {
        f.preorder.kind = PreorderSpec::Kind::Total;
    } else {
        f.preorder.kind = PreorderSpec::Kind::Pairs;
        f.preorder.pairs = inst.order().strict_pairs();
    }
    f.phi = inst.phi().values();
    if (!inst.frontier().empty()) f.witness = WitnessMeta{inst.size(), inst.frontier()};
    return f;
}

SingleMap MapFile::single() const {
    SingleMap out;
    for (const auto& img : images) out.push_back(img.front());
    return out;
}

MapFile parse_map_file(std::string_view text, const QSpace& space) {
    std::vector<std::string> order;
    const auto secs = sections(text, order);
    for (const auto& key : order)
        if (key != "format" && key != "version" && key != "kind")
            throw ParseError(secs.at(key).no, "unknown key '" + key + "'");
    check_version(secs, "qvp-map");
    const Section& k = require(secs, "kind");
    MapFile m;
    if (k.value == "single") {
        m.kind = MapKind::Single;
    } else if (k.value == "multi") {
        m.kind = MapKind::Multi;
    } else {
        throw ParseError(k.no, "map kind must be single or multi");
    }
    m.images.assign(space.size(), {});
    std::vector<bool> seen(space.size(), false);
    for (const auto& line : k.body) {
        const auto tk = tokens(line.text);
        if (tk.size() < 3 || tk[1] != "->") throw ParseError(line.no, "expected 'x -> y ...'");
        const PointId x = resolve(space.labels(), tk[0], line.no);
        if (seen[x]) throw ParseError(line.no, "point mapped twice");
        seen[x] = true;
        for (std::size_t i = 2; i < tk.size(); ++i) m.images[x].push_back(resolve(space.labels(), tk[i], line.no));
        if (m.kind == MapKind::Single && m.images[x].size() != 1)
            throw ParseError(line.no, "single-valued map needs exactly one image");
    }
    for (PointId x = 0; x < space.size(); ++x)
        if (!seen[x]) throw ParseError(k.no, "point '" + space.label(x) + "' is not mapped");
    return m;
}

std::string serialize(const MapFile& m, const QSpace& space) {
    std::ostringstream os;
    os << "format: qvp-map\nversion: " << kInstanceFormatVersion << "\nkind: " << to_string(m.kind) << "\n";
    for (PointId x = 0; x < m.images.size(); ++x) {
        os << "  " << space.label(x) << " ->";
        for (PointId y : m.images[x]) os << " " << space.label(y);
        os << "\n";
    }
    return os.str();
}

}  // namespace qvp
