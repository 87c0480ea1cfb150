#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qvp/generate.hpp"
#include "qvp/instance_file.hpp"
#include "qvp/lab.hpp"
#include "qvp/picard.hpp"
#include "qvp/report.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// qvp::Rat <-> fractions.Fraction (ints accepted on input).
template <>
struct type_caster<qvp::Rat> {
    PYBIND11_TYPE_CASTER(qvp::Rat, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (!src || PyFloat_Check(src.ptr())) return false;
        if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
        const std::string num = py::str(src.attr("numerator"));
        const std::string den = py::str(src.attr("denominator"));
        try {
            value = qvp::Rat::parse(num + "/" + den);
        } catch (const std::invalid_argument&) {
            return false;
        }
        return true;
    }

    static handle cast(const qvp::Rat& r, return_value_policy, handle) {
        const py::object fraction = py::module_::import("fractions").attr("Fraction");
        const py::object num = py::reinterpret_steal<py::object>(PyLong_FromString(r.numerator_str().c_str(), nullptr, 10));
        const py::object den = py::reinterpret_steal<py::object>(PyLong_FromString(r.denominator_str().c_str(), nullptr, 10));
        return fraction(num, den).release();
    }
};

// qvp::ExtValue <-> Fraction, or math.inf for +infinity.
template <>
struct type_caster<qvp::ExtValue> {
    PYBIND11_TYPE_CASTER(qvp::ExtValue, const_name("fractions.Fraction | float"));

    bool load(handle src, bool convert) {
        if (PyFloat_Check(src.ptr())) {
            const double v = PyFloat_AsDouble(src.ptr());
            if (v == std::numeric_limits<double>::infinity()) {
                value = qvp::ExtValue::infinity();
                return true;
            }
            return false;
        }
        make_caster<qvp::Rat> inner;
        if (!inner.load(src, convert)) return false;
        value = qvp::ExtValue(cast_op<qvp::Rat&>(inner));
        return true;
    }

    static handle cast(const qvp::ExtValue& v, return_value_policy p, handle parent) {
        if (v.is_infinite()) return PyFloat_FromDouble(std::numeric_limits<double>::infinity());
        return make_caster<qvp::Rat>::cast(v.value(), p, parent);
    }
};

}  // namespace pybind11::detail

namespace {

py::object to_python(const qvp::Report& r) { return py::module_::import("json").attr("loads")(r.dump()); }

qvp::SelectionRule rule_of(const std::string& name, std::uint64_t seed) {
    if (name == "argmin") return qvp::SelectionRule::argmin();
    if (name == "first") return qvp::SelectionRule::first();
    if (name == "random") return qvp::SelectionRule::random(seed);
    throw qvp::Error(qvp::ErrorCode::InvalidArgument, "unknown rule '" + name + "'");
}

std::optional<qvp::PointId> point_of(const qvp::Instance& inst, const std::optional<std::string>& label) {
    if (!label) return std::nullopt;
    return inst.space().at(*label);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact verification of Ekeland, Takahashi and Caristi principles on finite quasi-metric spaces";

    static py::handle error_type = py::exception<qvp::Error>(m, "QvpError").release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const qvp::Error& e) {
            py::tuple args = py::make_tuple(std::string(qvp::to_string(e.code())), e.what(), e.witness());
            PyErr_SetObject(error_type.ptr(), args.ptr());
        }
    });

    py::class_<qvp::QSpace>(m, "QSpace")
        .def(py::init([](const std::vector<std::vector<qvp::Rat>>& rows, std::vector<std::string> labels) {
                 return qvp::QSpace::validate(rows, std::move(labels));
             }),
             py::arg("rows"), py::arg("labels") = std::vector<std::string>{})
        .def_property_readonly("size", &qvp::QSpace::size)
        .def_property_readonly("labels", &qvp::QSpace::labels)
        .def("d", [](const qvp::QSpace& s, const std::string& a, const std::string& b) { return s.d(s.at(a), s.at(b)); })
        .def("rows", [](const qvp::QSpace& s) {
            std::vector<std::vector<qvp::Rat>> out(s.size());
            for (qvp::PointId i = 0; i < s.size(); ++i)
                for (qvp::PointId j = 0; j < s.size(); ++j) out[i].push_back(s.d(i, j));
            return out;
        })
        .def("is_t1", [](const qvp::QSpace& s) { return qvp::is_t1(s); })
        .def("is_symmetric", &qvp::QSpace::is_symmetric)
        .def("conjugate", [](const qvp::QSpace& s) { return qvp::conjugate(s); })
        .def("symmetrize", [](const qvp::QSpace& s) { return qvp::symmetrize(s); })
        .def("closure_of_point", [](const qvp::QSpace& s, const std::string& x) {
            std::vector<std::string> out;
            for (qvp::PointId y : qvp::closure_of_point(s, s.at(x))) out.push_back(s.label(y));
            return out;
        })
        .def("__eq__", [](const qvp::QSpace& a, const qvp::QSpace& b) { return a == b; });

    py::class_<qvp::Instance>(m, "Instance")
        .def_property_readonly("space", &qvp::Instance::space)
        .def_property_readonly("size", &qvp::Instance::size)
        .def_property_readonly("phi", [](const qvp::Instance& i) { return i.phi().values(); })
        .def("s_set", [](const qvp::Instance& inst, const std::string& x) {
            std::vector<std::string> out;
            for (qvp::PointId y : inst.s_set(inst.space().at(x)).members) out.push_back(inst.space().label(y));
            return out;
        })
        .def("audit", [](const qvp::Instance& inst) { return to_python(qvp::audit_report(inst)); })
        .def("serialize", [](const qvp::Instance& inst) { return qvp::serialize(qvp::to_file(inst)); });

    m.def("make_instance",
          [](const qvp::QSpace& s, const std::vector<qvp::ExtValue>& phi,
             const std::optional<std::vector<std::pair<std::string, std::string>>>& order) {
              qvp::Preorder p = qvp::Preorder::total(s.size());
              if (order) {
                  std::vector<std::pair<qvp::PointId, qvp::PointId>> edges;
                  for (const auto& [a, b] : *order) edges.emplace_back(s.at(a), s.at(b));
                  p = qvp::Preorder::reachability(s.size(), edges);
              }
              return qvp::Instance(s, std::move(p), qvp::Phi::validate(phi));
          },
          py::arg("space"), py::arg("phi"), py::arg("order") = py::none(),
          "Instance with the reachability preorder of `order` (pairs a ≼ b), or the total preorder.");
    m.def("parse_instance", [](const std::string& text) { return qvp::to_instance(qvp::parse_instance_file(text)); });
    m.def(
        "generate",
        [](std::size_t n, std::uint64_t seed, const std::string& preorder, bool digraph) {
            qvp::GenParams p;
            p.n = n;
            p.seed = seed;
            p.emit_digraph = digraph;
            for (auto k : {qvp::PreorderSpec::Kind::Total, qvp::PreorderSpec::Kind::Pairs,
                           qvp::PreorderSpec::Kind::Reachability, qvp::PreorderSpec::Kind::SpecializationConjugate})
                if (qvp::to_string(k) == preorder) p.preorder_kind = k;
            return qvp::serialize(qvp::gen_instance_file(p));
        },
        py::arg("n"), py::arg("seed"), py::arg("preorder") = "total", py::arg("digraph") = false,
        "Instance file text for the given generator parameters.");

    m.def(
        "weak_ekeland",
        [](const qvp::Instance& inst, std::optional<std::string> start, const std::string& rule, std::uint64_t seed) {
            return to_python(qvp::ekeland_report(inst, qvp::weak_ekeland(inst, point_of(inst, start), rule_of(rule, seed))));
        },
        py::arg("instance"), py::arg("start") = py::none(), py::arg("rule") = "argmin", py::arg("seed") = 0);
    m.def(
        "full_ekeland",
        [](const qvp::Instance& inst, const qvp::Rat& eps, const qvp::Rat& lambda, const std::string& start) {
            return to_python(qvp::full_ekeland_report(inst, qvp::full_ekeland(inst, eps, lambda, inst.space().at(start))));
        },
        py::arg("instance"), py::arg("eps"), py::arg("lam"), py::arg("start"));
    m.def(
        "takahashi",
        [](const qvp::Instance& inst, const std::string& variant) {
            const auto v = variant == "closure" ? qvp::TakahashiVariant::Closure : qvp::TakahashiVariant::StrictPhi;
            return to_python(qvp::takahashi_report(inst, qvp::takahashi(inst, v)));
        },
        py::arg("instance"), py::arg("variant") = "strict-phi");
    m.def(
        "caristi",
        [](const qvp::Instance& inst, const std::vector<std::string>& images) {
            qvp::SingleMap t;
            for (const auto& y : images) t.push_back(inst.space().at(y));
            return to_python(qvp::caristi_report(inst, qvp::caristi_single(inst, t)));
        },
        py::arg("instance"), py::arg("images"), "Single-valued map given as the image label of each point in order.");
    m.def("check_equivalences", [](const qvp::Instance& inst, std::uint64_t seed) {
        return to_python(qvp::equivalence_report(inst, qvp::check_equivalences(inst, seed)));
    }, py::arg("instance"), py::arg("seed") = 0);
    m.def("oracle_wek", [](const qvp::Instance& inst) {
        std::vector<std::string> out;
        for (qvp::PointId z : qvp::oracle_wek(inst)) out.push_back(inst.space().label(z));
        return out;
    });
    m.def("witness", [](std::size_t n) {
        const qvp::WitnessSpace w = qvp::build_witness(n);
        return py::make_tuple(w.instance, to_python(qvp::witness_report(w.instance, qvp::witness_noncompleteness_report(w))));
    }, py::arg("n"), "Truncated witness instance and its report.");
}
