#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "littlewood/demo.hpp"
#include "littlewood/scenario.hpp"
#include "littlewood/version.hpp"

namespace py = pybind11;
using namespace littlewood;

namespace {

Json parse_doc(const std::string& text) { return Json::parse(text); }

std::optional<Rational> opt_rat(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return rat_parse(text);
}

// Strings in, strings out: rationals stay exact ("p/q") across the boundary.
struct PySet {
    IntervalSet set;

    static PySet parse(const std::string& literal, const std::string& universe) {
        return PySet{IntervalSet::parse(literal, Interval::parse(universe))};
    }
};

struct PyFn {
    FnPtr fn;

    static PyFn parse(const std::string& descriptor, const std::string& universe) {
        return PyFn{parse_function(parse_doc(descriptor), Interval::parse(universe))};
    }
};

void register_errors(py::module_& m) {
    static py::exception<Error> base(m, "LittlewoodError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            base(e.what());
        }
    });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact certificates for the nearly-principles of real analysis";
    m.attr("__version__") = kVersion;
    register_errors(m);

    py::class_<PySet>(m, "IntervalSet")
        .def_static("parse", &PySet::parse, py::arg("literal"), py::arg("universe"))
        .def("__str__", [](const PySet& s) { return s.set.to_string(); })
        .def("measure", [](const PySet& s) { return rat_to_string(s.set.measure()); })
        .def("is_closed", [](const PySet& s) { return s.set.is_closed(); })
        .def("is_open_rel", [](const PySet& s) { return s.set.is_open_rel(); })
        .def("contains", [](const PySet& s, const std::string& x) { return s.set.contains(rat_parse(x)); })
        .def("union", [](const PySet& a, const PySet& b) { return PySet{set_union(a.set, b.set)}; })
        .def("intersect", [](const PySet& a, const PySet& b) { return PySet{set_intersect(a.set, b.set)}; })
        .def("difference", [](const PySet& a, const PySet& b) { return PySet{set_difference(a.set, b.set)}; })
        .def("complement", [](const PySet& a) { return PySet{set_complement(a.set)}; });

    py::class_<PyFn>(m, "Function")
        .def_static("parse", &PyFn::parse, py::arg("descriptor"), py::arg("universe"))
        .def("eval", [](const PyFn& f, const std::string& x) { return f.fn->eval(rat_parse(x)).to_string(); })
        .def("domain", [](const PyFn& f) { return PySet{f.fn->domain()}; })
        .def("sup_on", [](const PyFn& f, const PySet& k) { return sup_on(*f.fn, k.set).to_string(); })
        .def("level_gt", [](const PyFn& f, const std::string& t) { return PySet{f.fn->level_gt(rat_parse(t))}; });

    m.def("decompose", [](const PySet& e, const std::string& eps) {
        return cert_to_json(principle1_decompose(e.set, rat_parse(eps))).dump();
    }, py::arg("set"), py::arg("epsilon"));

    m.def("fourth_principle", [](const PyFn& f, const std::string& eps, int cap) {
        return cert_to_json(fourth_principle(*f.fn, rat_parse(eps), cap)).dump();
    }, py::arg("f"), py::arg("epsilon"), py::arg("cap") = kDefaultCap);

    m.def("lusin", [](const PyFn& f, const std::string& eps, int accuracy, bool classical) {
        LusinCert cert = classical ? lusin_classical(f.fn, rat_parse(eps), accuracy)
                                   : lusin(f.fn, rat_parse(eps), accuracy);
        return cert_to_json(cert).dump();
    }, py::arg("f"), py::arg("epsilon"), py::arg("accuracy") = 8, py::arg("classical") = false);

    m.def("egoroff", [](const std::string& family, const std::string& universe,
                        const std::string& eps, int ladder, const std::string& path) {
        PointwiseSequence seq = make_family(family, Interval::parse(universe));
        EgoroffCert cert = path == "dini" ? egoroff_dini(seq, rat_parse(eps), ladder)
                                          : egoroff_classical(seq, rat_parse(eps), ladder);
        return cert_to_json(cert).dump();
    }, py::arg("family"), py::arg("universe"), py::arg("epsilon"), py::arg("ladder") = 4,
       py::arg("path") = "classical");

    m.def("dini_index", [](const std::string& family, const std::string& universe, const PySet& k,
                           const std::string& eps, const std::string& algorithm) {
        PointwiseSequence seq = make_family(family, Interval::parse(universe));
        auto terms = [&seq](int n) { return seq.term(n); };
        DiniCert cert = dini_index(terms, seq.limit(), k.set, rat_parse(eps),
                                   algorithm == "cover" ? DiniAlgorithm::cover : DiniAlgorithm::sup);
        return cert_to_json(cert).dump();
    }, py::arg("family"), py::arg("universe"), py::arg("k"), py::arg("epsilon"),
       py::arg("algorithm") = "sup");

    m.def("run_scenario", [](const std::string& scenario, bool verify, const std::string& eps,
                             int depth, const std::string& grid_density) {
        RunFlags flags;
        flags.verify = verify;
        flags.epsilon = opt_rat(eps);
        if (depth > 0) flags.depth = depth;
        flags.grid_density = opt_rat(grid_density);
        RunResult result = run_scenario(parse_doc(scenario), flags);
        Json out;
        out["exit_code"] = result.exit_code;
        out["diagnostic"] = result.diagnostic;
        out["document"] = result.document;
        out["report"] = result.report ? *result.report : Json(nullptr);
        return out.dump();
    }, py::arg("scenario"), py::arg("verify") = false, py::arg("epsilon") = "",
       py::arg("depth") = 0, py::arg("grid_density") = "");

    m.def("verify_scenario", [](const std::string& scenario, const std::string& cert_document,
                                int depth, const std::string& grid_density) {
        VerifyOptions opts;
        if (depth > 0) opts.depth = depth;
        opts.grid_density = opt_rat(grid_density);
        VerificationReport report = verify_document(parse_doc(scenario), parse_doc(cert_document),
                                                    opts);
        return report_to_json(report).dump();
    }, py::arg("scenario"), py::arg("cert_document"), py::arg("depth") = 0,
       py::arg("grid_density") = "");

    m.def("demo", []() {
        std::ostringstream os;
        int rc = run_demo(VerifyOptions{}, false, os);
        return py::make_tuple(rc, os.str());
    });
}
