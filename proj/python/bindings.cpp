#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "germcalc/atlas.hpp"
#include "germcalc/dsl.hpp"
#include "germcalc/error.hpp"
#include "germcalc/gates.hpp"
#include "germcalc/ops.hpp"
#include "germcalc/ring.hpp"
#include "germcalc/tangent.hpp"

namespace py = pybind11;
using namespace germcalc;

namespace {

py::object fraction(const Rational& q) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(q.get_str());
}

Poly parse_function(const std::string& text) {
    std::vector<std::string> names;
    return parse_poly(text, names);
}

ParamMap to_params(const py::dict& d) {
    ParamMap pm;
    for (const auto& [k, v] : d) {
        const auto key = k.cast<std::string>();
        if (py::isinstance<py::str>(v)) {
            const auto name = v.cast<std::string>();
            const auto sf = SimpleFunction::from_name(name);
            if (!sf) throw ValidationError("'" + name + "' is not a simple function name");
            pm[key] = *sf;
        } else {
            pm[key] = v.cast<long>();
        }
    }
    return pm;
}

py::dict from_params(const ParamMap& pm) {
    py::dict d;
    for (const auto& [k, v] : pm) {
        if (std::holds_alternative<long>(v)) d[py::str(k)] = std::get<long>(v);
        else d[py::str(k)] = std::get<SimpleFunction>(v).name();
    }
    return d;
}

py::dict verdict_dict(const Verdict& v) {
    py::dict d;
    d["kind"] = to_string(v.kind);
    d["gate"] = v.gate;
    d["rule"] = v.rule;
    py::dict ev;
    for (const auto& [k, q] : v.evidence) ev[py::str(k)] = fraction(q);
    d["evidence"] = ev;
    if (v.violated) {
        py::dict iq;
        iq["lhs_label"] = v.violated->lhs_label;
        iq["lhs"] = fraction(v.violated->lhs);
        iq["rhs_label"] = v.violated->rhs_label;
        iq["rhs"] = fraction(v.violated->rhs);
        d["violated"] = iq;
    } else {
        d["violated"] = py::none();
    }
    d["asserted_hypotheses"] = v.asserted_hypotheses;
    d["unverified_hypotheses"] = v.unverified_hypotheses;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Map-germ invariants, constructions, simplicity gates and the normal-form atlas";

    auto base = py::register_exception<GermError>(m, "GermError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<ValidationError>(m, "ValidationError", base);
    py::register_exception<NotStabilized>(m, "NotStabilized", base);
    py::register_exception<NotCorankOne>(m, "NotCorankOne", base);
    py::register_exception<NotStableType>(m, "NotStableType", base);
    py::register_exception<UnsupportedDimensions>(m, "UnsupportedDimensions", base);

    py::class_<StabilizationPolicy>(m, "StabilizationPolicy")
        .def(py::init([](std::optional<int> d0, int window, int d_max) {
                 StabilizationPolicy p;
                 p.d0 = d0;
                 p.window = window;
                 p.d_max = d_max;
                 p.validate();
                 return p;
             }),
             py::arg("d0") = py::none(), py::arg("window") = 2, py::arg("d_max") = 16)
        .def_readwrite("d0", &StabilizationPolicy::d0)
        .def_readwrite("window", &StabilizationPolicy::window)
        .def_readwrite("d_max", &StabilizationPolicy::d_max);

    py::class_<MultiGerm>(m, "MultiGerm")
        .def_property_readonly("source_dim", &MultiGerm::source_dim)
        .def_property_readonly("target_dim", &MultiGerm::target_dim)
        .def_property_readonly("branch_count", &MultiGerm::branch_count)
        .def_property_readonly("var_names", &MultiGerm::var_names)
        .def("select", &MultiGerm::select, py::arg("indices"))
        .def("__str__", &format_multigerm)
        .def("__repr__", [](const MultiGerm& f) { return "MultiGerm('" + format_multigerm(f) + "')"; })
        .def("__eq__", [](const MultiGerm& a, const MultiGerm& b) { return a == b; });

    m.def(
        "parse",
        [](const std::string& text, std::optional<std::size_t> source_dim, std::optional<std::size_t> target_dim) {
            ParseOptions o;
            o.source_dim = source_dim;
            o.target_dim = target_dim;
            return parse_multigerm(text, o);
        },
        py::arg("text"), py::arg("source_dim") = py::none(), py::arg("target_dim") = py::none());

    py::class_<CodimResult>(m, "CodimResult")
        .def_readonly("value", &CodimResult::value)
        .def_readonly("degree_used", &CodimResult::degree_used)
        .def_property_readonly("basis_size", [](const CodimResult& r) { return r.basis.size(); })
        .def("__int__", [](const CodimResult& r) { return r.value; });

    const StabilizationPolicy default_policy;
    m.def("ae_codim", &ae_codim, py::arg("germ"), py::arg("policy") = default_policy);
    m.def("a_codim", &a_codim, py::arg("germ"), py::arg("policy") = default_policy);
    m.def("is_stable", &is_stable, py::arg("germ"), py::arg("policy") = default_policy);
    m.def("multiplicity", &multiplicity, py::arg("germ"), py::arg("policy") = default_policy);
    m.def(
        "corank", [](const MultiGerm& f, std::size_t branch) { return corank(f, branch); }, py::arg("germ"),
        py::arg("branch") = 0);
    m.def(
        "atype", [](const MultiGerm& f, const StabilizationPolicy& p) { return recognize_type(f, p).to_string(); },
        py::arg("germ"), py::arg("policy") = default_policy);
    m.def(
        "atype_indices",
        [](const MultiGerm& f, const StabilizationPolicy& p) { return recognize_type(f, p).ks; }, py::arg("germ"),
        py::arg("policy") = default_policy);
    m.def(
        "wilson_check",
        [](const MultiGerm& f, const StabilizationPolicy& p) {
            const WilsonCheck w = wilson_check(f, p);
            py::dict d;
            d["status"] = to_string(w.status);
            d["ae_codim"] = w.ae_codim;
            d["a_codim"] = w.a_codim;
            d["predicted_ae_codim"] = w.predicted_ae_codim;
            d["details"] = w.details;
            return d;
        },
        py::arg("germ"), py::arg("policy") = default_policy);

    m.def(
        "milnor", [](const std::string& f, const StabilizationPolicy& p) { return milnor(parse_function(f), p); },
        py::arg("function"), py::arg("policy") = default_policy);
    m.def(
        "tjurina", [](const std::string& f, const StabilizationPolicy& p) { return tjurina(parse_function(f), p); },
        py::arg("function"), py::arg("policy") = default_policy);
    m.def(
        "is_quasi_homogeneous", [](const std::string& f) { return is_quasi_homogeneous(parse_function(f)); },
        py::arg("function"));

    py::class_<Unfolding>(m, "Unfolding")
        .def_static("from_total", &Unfolding::from_total, py::arg("total"), py::arg("params") = 1)
        .def_property_readonly("base", &Unfolding::base)
        .def_property_readonly("total", &Unfolding::total)
        .def_property_readonly("parameter_count", &Unfolding::parameter_count);

    auto options = [](bool unchecked, const StabilizationPolicy& p) {
        ConstructionOptions o;
        o.unchecked = unchecked;
        o.policy = p;
        return o;
    };
    m.def(
        "augment",
        [options](const Unfolding& u, const std::string& g, bool unchecked, const StabilizationPolicy& p) {
            std::vector<std::string> names;
            const Poly poly = parse_poly(g, names);
            return augment(u, poly, names, options(unchecked, p));
        },
        py::arg("unfolding"), py::arg("g"), py::arg("unchecked") = false, py::arg("policy") = default_policy);
    m.def(
        "monic_concat",
        [options](const Unfolding& u, bool unchecked, const StabilizationPolicy& p) {
            return monic_concat(u, options(unchecked, p));
        },
        py::arg("unfolding"), py::arg("unchecked") = false, py::arg("policy") = default_policy);
    m.def(
        "binary_concat",
        [options](const Unfolding& u, const Unfolding& v, bool unchecked, const StabilizationPolicy& p) {
            return binary_concat(u, v, options(unchecked, p));
        },
        py::arg("first"), py::arg("second"), py::arg("unchecked") = false, py::arg("policy") = default_policy);
    m.def(
        "generalised_concat",
        [options](const Unfolding& u, const MultiGerm& gbar, bool unchecked, const StabilizationPolicy& p) {
            return generalised_concat(u, gbar, options(unchecked, p));
        },
        py::arg("unfolding"), py::arg("gbar"), py::arg("unchecked") = false, py::arg("policy") = default_policy);
    m.def(
        "sim_aug_concat",
        [options](const Unfolding& u, const std::string& phi, bool unchecked, const StabilizationPolicy& p) {
            std::vector<std::string> names;
            const Poly poly = parse_poly(phi, names);
            return sim_aug_concat(u, poly, names, options(unchecked, p));
        },
        py::arg("unfolding"), py::arg("phi"), py::arg("unchecked") = false, py::arg("policy") = default_policy);
    m.def("predicted_codim_augconc", &predicted_codim_augconc, py::arg("cod_f"), py::arg("tau_phi"));

    m.def(
        "nishimura_bound", [](long n, long p, long r) { return fraction(nishimura_bound(n, p, r)); }, py::arg("n"),
        py::arg("p"), py::arg("r"));
    m.def(
        "simplicity_report",
        [](const MultiGerm& f, const std::vector<std::string>& assertions, std::optional<std::string> base,
           std::optional<std::string> phi, std::size_t params, const StabilizationPolicy& p) {
            ReportOptions ro;
            ro.assertions.insert(assertions.begin(), assertions.end());
            if (base.has_value() != phi.has_value())
                throw ValidationError("base and phi must be given together");
            if (base) {
                const Unfolding ub = Unfolding::from_total(parse_multigerm(*base), params);
                ro.augconc = AugconcContext{ae_codim(ub.base(), p).value, parse_function(*phi)};
            }
            const SimplicityReport rep = simplicity_report(f, p, ro);
            py::dict d;
            d["verdict"] = verdict_dict(rep.verdict);
            py::list trace;
            for (const auto& v : rep.trace) trace.append(verdict_dict(v));
            d["trace"] = trace;
            py::list matches;
            for (const auto& am : rep.atlas_matches) matches.append(py::make_tuple(am.entry->name, from_params(am.params)));
            d["atlas_matches"] = matches;
            return d;
        },
        py::arg("germ"), py::arg("assertions") = std::vector<std::string>{}, py::arg("base") = py::none(),
        py::arg("phi") = py::none(), py::arg("params") = 1, py::arg("policy") = default_policy);

    m.def("atlas_names", [] {
        std::vector<std::string> names;
        for (const auto& e : entries()) names.push_back(e.name);
        return names;
    });
    m.def(
        "atlas_entry",
        [](const std::string& name) {
            const AtlasEntry& e = entry(name);
            py::dict d;
            d["name"] = e.name;
            d["table"] = e.table;
            d["k_orbit"] = e.k_orbit;
            d["template"] = e.template_text;
            d["codim_formula"] = e.codim_formula;
            py::list params;
            for (const auto& p : e.params)
                params.append(py::make_tuple(p.name, p.kind == AtlasParam::Kind::Integer ? "integer" : "simple_function",
                                             p.min));
            d["parameters"] = params;
            return d;
        },
        py::arg("name"));
    m.def(
        "instantiate", [](const std::string& name, const py::dict& params) { return instantiate(name, to_params(params)); },
        py::arg("name"), py::arg("params") = py::dict());
    m.def(
        "expected_codim",
        [](const std::string& name, const py::dict& params) { return entry(name).expected_codim(to_params(params)); },
        py::arg("name"), py::arg("params") = py::dict());
    m.def(
        "verify",
        [](const std::string& name, const py::dict& params, const StabilizationPolicy& p) {
            const VerifyRow r = verify(entry(name), to_params(params), p);
            py::dict d;
            d["name"] = r.name;
            d["germ"] = r.germ;
            d["computed"] = r.computed ? py::cast(*r.computed) : py::none();
            d["expected"] = r.expected;
            d["match"] = r.match;
            d["degree_used"] = r.degree_used;
            d["error"] = r.error;
            return d;
        },
        py::arg("name"), py::arg("params") = py::dict(), py::arg("policy") = default_policy);
    m.def(
        "lookup",
        [](const MultiGerm& f, const StabilizationPolicy& p) {
            py::list out;
            for (const auto& am : lookup(f, p)) out.append(py::make_tuple(am.entry->name, from_params(am.params)));
            return out;
        },
        py::arg("germ"), py::arg("policy") = default_policy);
    m.def("export_catalog_json", &export_catalog_json);
}
