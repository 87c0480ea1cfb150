#include "qvp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include "qvp/generate.hpp"
#include "qvp/instance_file.hpp"
#include "qvp/lab.hpp"
#include "qvp/picard.hpp"
#include "qvp/report.hpp"

namespace qvp {

namespace {

int exit_code(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::InvalidInput: return 2;
        case ErrorCategory::HypothesisFinding: return 1;
        case ErrorCategory::Internal: return 3;
    }
    return 3;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Instance load_instance(const std::string& path) { return to_instance(parse_instance_file(read_file(path))); }

Rat parse_rat_arg(const std::string& text, const char* name) {
    try {
        return Rat::parse(text);
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::InvalidArgument, std::string("bad rational for ") + name + ": '" + text + "'");
    }
}

SelectionRule parse_rule(const std::string& name, std::uint64_t seed) {
    if (name == "argmin") return SelectionRule::argmin();
    if (name == "first") return SelectionRule::first();
    if (name == "random") return SelectionRule::random(seed);
    throw Error(ErrorCode::InvalidArgument, "unknown rule '" + name + "'");
}

PreorderSpec::Kind parse_preorder_kind(const std::string& name) {
    for (auto k : {PreorderSpec::Kind::Total, PreorderSpec::Kind::Pairs, PreorderSpec::Kind::Reachability,
                   PreorderSpec::Kind::SpecializationConjugate})
        if (to_string(k) == name) return k;
    throw Error(ErrorCode::InvalidArgument, "unknown preorder kind '" + name + "'");
}

std::optional<PointId> start_point(const Instance& inst, const std::string& label) {
    if (label.empty()) return std::nullopt;
    return inst.space().at(label);
}

struct Options {
    std::string format = "text";
    std::string file;
    std::string rule = "argmin";
    std::uint64_t seed = 0;
    std::string start;
    std::string eps, lambda;
    std::string variant = "strict-phi";
    std::string map;
    std::size_t n = 4;
    std::size_t count = 10;
    std::string zero_edge_prob = "1/4";
    std::string inf_phi_prob = "1/8";
    std::string preorder = "total";
    bool digraph = false;
    std::size_t length = 8;
};

struct Outcome {
    Report report;
    int code = 0;
};

Outcome cmd_validate(const Options& o) {
    const Instance inst = load_instance(o.file);
    return {audit_report(inst), inst.audits().all() ? 0 : 1};
}

Outcome cmd_wek(const Options& o) {
    const Instance inst = load_instance(o.file);
    const auto cert = weak_ekeland(inst, start_point(inst, o.start), parse_rule(o.rule, o.seed));
    Report r{{"certificate", ekeland_report(inst, cert)}};
    if (is_t1(inst.space())) r["t1"] = t1_ekeland_report(inst, t1_strengthen(inst, cert));
    return {r, 0};
}

Outcome cmd_ekeland(const Options& o) {
    const Instance inst = load_instance(o.file);
    const auto x0 = start_point(inst, o.start);
    const PointId start = x0 ? *x0 : inst.phi().dom().front();
    const auto cert = full_ekeland(inst, parse_rat_arg(o.eps, "--eps"), parse_rat_arg(o.lambda, "--lambda"), start,
                                   parse_rule(o.rule, o.seed));
    return {Report{{"certificate", full_ekeland_report(inst, cert)}}, 0};
}

Outcome cmd_takahashi(const Options& o) {
    const Instance inst = load_instance(o.file);
    TakahashiVariant v;
    if (o.variant == "strict-phi") {
        v = TakahashiVariant::StrictPhi;
    } else if (o.variant == "closure") {
        v = TakahashiVariant::Closure;
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown variant '" + o.variant + "'");
    }
    const auto rep = takahashi(inst, v, parse_rule(o.rule, o.seed));
    Report r{{"certificate", takahashi_report(inst, rep)}};
    if (is_t1(inst.space())) r["t1"] = t1_takahashi_report(inst, t1_strengthen(inst, rep));
    return {r, rep.hypothesis_ok ? 0 : 1};
}

Outcome cmd_caristi(const Options& o) {
    const Instance inst = load_instance(o.file);
    const MapFile m = parse_map_file(read_file(o.map), inst.space());
    const SelectionRule rule = parse_rule(o.rule, o.seed);
    const CaristiResult res =
        m.kind == MapKind::Single ? caristi_single(inst, m.single(), rule) : caristi_multi(inst, m.images, rule);
    Report r{{"certificate", caristi_report(inst, res)}};
    if (is_t1(inst.space())) r["t1"] = t1_caristi_report(inst, t1_strengthen(inst, res));
    return {r, 0};
}

Outcome cmd_equivalence(const Options& o) {
    const Instance inst = load_instance(o.file);
    Report r{{"equivalence", equivalence_report(inst, check_equivalences(inst, o.seed))}};
    if (inst.space().is_symmetric() && inst.order().is_total() && inst.audits().all())
        r["metric_specialization"] = metric_specialization_report(inst, metric_specialization_suite(inst, o.seed));
    return {r, 0};
}

GenParams gen_params(const Options& o) {
    GenParams p;
    p.n = o.n;
    p.seed = o.seed;
    p.zero_edge_prob = parse_rat_arg(o.zero_edge_prob, "--zero-edge-prob");
    p.inf_phi_prob = parse_rat_arg(o.inf_phi_prob, "--inf-phi-prob");
    p.preorder_kind = parse_preorder_kind(o.preorder);
    p.emit_digraph = o.digraph;
    check_params(p);
    return p;
}

Outcome cmd_corpus(const Options& o) {
    const GenParams base = gen_params(o);
    std::vector<Report> rows(o.count);
    std::vector<int> consistent(o.count, 0);
    const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < o.count; i += workers) {
                GenParams p = base;
                p.seed = base.seed + i;
                const Instance inst = gen_instance(p);
                const EquivalenceReport e = check_equivalences(inst, p.seed);
                rows[i] = {{"seed", p.seed},
                           {"wek_holds", e.wek_holds},
                           {"tak_negation", e.tak_negation},
                           {"maps_checked", e.maps_checked},
                           {"caristi_consistent", e.caristi_consistent}};
                consistent[i] = e.caristi_consistent && e.wek_holds != e.tak_negation;
            }
        }));
    for (auto& j : jobs) j.get();
    const auto holds = std::count_if(rows.begin(), rows.end(), [](const Report& r) { return r["wek_holds"].get<bool>(); });
    Report r{{"corpus",
              {{"n", base.n},
               {"count", o.count},
               {"seed", base.seed},
               {"preorder", std::string(to_string(base.preorder_kind))},
               {"wek_holds", holds},
               {"consistent", std::all_of(consistent.begin(), consistent.end(), [](int c) { return c != 0; })},
               {"instances", rows}}}};
    return {r, 0};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Verification of Ekeland, Takahashi and Caristi principles on finite quasi-metric spaces", "qvp"};
    app.require_subcommand(1);
    Options o;
    std::function<Outcome(const Options&)> action;
    bool raw_text = false;

    app.add_option("--format", o.format, "Report format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();

    auto file_arg = [&](CLI::App* c) { c->add_option("file", o.file, "Instance file")->required(); };
    auto solver_opts = [&](CLI::App* c) {
        file_arg(c);
        c->add_option("--rule", o.rule, "Selection rule: argmin, first, random")->capture_default_str();
        c->add_option("--seed", o.seed, "Seed for the random rule");
        c->add_option("--start", o.start, "Start point label");
    };

    auto* validate = app.add_subcommand("validate", "Audit an instance");
    file_arg(validate);
    validate->callback([&] { action = cmd_validate; });

    auto* solve = app.add_subcommand("solve", "Run a principle and certify the result");
    solve->require_subcommand(1);
    auto* wek = solve->add_subcommand("wek", "Weak Ekeland point via Picard iteration");
    solver_opts(wek);
    wek->callback([&] { action = cmd_wek; });
    auto* ek = solve->add_subcommand("ekeland", "Full Ekeland principle for eps and lambda");
    solver_opts(ek);
    ek->add_option("--eps", o.eps, "Epsilon > 0")->required();
    ek->add_option("--lambda", o.lambda, "Lambda > 0")->required();
    ek->callback([&] { action = cmd_ekeland; });
    auto* tak = solve->add_subcommand("takahashi", "Takahashi minimization");
    solver_opts(tak);
    tak->add_option("--variant", o.variant, "strict-phi or closure")->capture_default_str();
    tak->callback([&] { action = cmd_takahashi; });
    auto* car = solve->add_subcommand("caristi", "Caristi point of a map");
    solver_opts(car);
    car->add_option("--map", o.map, "Map file")->required();
    car->callback([&] { action = cmd_caristi; });

    auto* lab = app.add_subcommand("lab", "Cross-checks between the principles");
    lab->require_subcommand(1);
    auto* eq = lab->add_subcommand("equivalence", "Check the equivalences on one instance");
    file_arg(eq);
    eq->add_option("--seed", o.seed, "Seed for sampled maps");
    eq->callback([&] { action = cmd_equivalence; });

    auto gen_opts = [&](CLI::App* c) {
        c->add_option("--n", o.n, "Point count")->capture_default_str();
        c->add_option("--seed", o.seed, "Seed")->capture_default_str();
        c->add_option("--zero-edge-prob", o.zero_edge_prob, "Probability of a zero edge")->capture_default_str();
        c->add_option("--inf-phi-prob", o.inf_phi_prob, "Probability of phi = inf")->capture_default_str();
        c->add_option("--preorder", o.preorder, "total, pairs, reachability, specialization-conjugate")
            ->capture_default_str();
    };
    auto* corpus = lab->add_subcommand("corpus", "Equivalence checks over a generated corpus");
    gen_opts(corpus);
    corpus->add_option("--count", o.count, "Number of instances")->capture_default_str();
    corpus->callback([&] { action = cmd_corpus; });

    auto* gen = app.add_subcommand("gen", "Generate a valid instance");
    gen_opts(gen);
    gen->add_flag("--digraph", o.digraph, "Write the metric as its generating digraph");
    gen->callback([&] {
        raw_text = true;
        action = [](const Options& opt) {
            return Outcome{Report(serialize(gen_instance_file(gen_params(opt)))), 0};
        };
    });

    auto* witness = app.add_subcommand("witness", "Witness sequence space truncated at N");
    witness->add_option("--N", o.length, "Prefix length")->capture_default_str();
    witness->callback([&] {
        action = [](const Options& opt) {
            const WitnessSpace w = build_witness(opt.length);
            const WitnessReport rep = witness_noncompleteness_report(w);
            return Outcome{Report{{"instance", serialize(to_file(w.instance))},
                                  {"report", witness_report(w.instance, rep)}},
                           rep.all() ? 0 : 3};
        };
    });

    for (auto* c : {validate, wek, ek, tak, car, eq, corpus, gen, witness}) c->fallthrough();
    solve->fallthrough();
    lab->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    const ReportFormat fmt = o.format == "machine" ? ReportFormat::Machine : ReportFormat::Text;
    try {
        Outcome res = action(o);
        if (raw_text) {
            out << res.report.get<std::string>();
        } else if (fmt == ReportFormat::Text && res.report.contains("instance") && res.report["instance"].is_string()) {
            out << res.report["instance"].get<std::string>() << "# report\n" << render(res.report["report"], fmt);
        } else {
            out << render(res.report, fmt);
        }
        return res.code;
    } catch (const Error& e) {
        err << render(error_report(e), fmt);
        return exit_code(category(e.code()));
    }
}

}  // namespace qvp
