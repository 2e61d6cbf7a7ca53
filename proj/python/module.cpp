#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "milnor_hodge/cli.hpp"
#include "milnor_hodge/error.hpp"
#include "milnor_hodge/hodge.hpp"
#include "milnor_hodge/projective.hpp"
#include "milnor_hodge/spectrum.hpp"
#include "milnor_hodge/verify.hpp"

namespace py = pybind11;
using namespace milnor_hodge;

namespace {

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.to_string());
}

// Accepts int, Fraction or "a/b".
Rational from_python(const py::handle& h) { return Rational::parse(py::str(h).cast<std::string>()); }

std::vector<Rational> rationals(const py::iterable& xs) {
    std::vector<Rational> out;
    for (const auto& x : xs) out.push_back(from_python(x));
    return out;
}

ChiMeaning meaning_from(const std::string& kind) {
    for (auto m : {ChiMeaning::reduced_middle, ChiMeaning::reduced_total, ChiMeaning::total})
        if (to_string(m) == kind) return m;
    throw SchemaError("kind must be reduced_middle, reduced_total or total");
}

}  // namespace

PYBIND11_MODULE(_milnor_hodge, m) {
    m.doc() = "Exact Hodge-theoretic invariants of hypersurface singularities";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<SchemaError>(m, "SchemaError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());

    py::class_<LaurentPolyY>(m, "LaurentPoly")
        .def(py::init([](const std::string& text) { return LaurentPolyY::parse(text); }), py::arg("text"))
        .def("coefficients",
             [](const LaurentPolyY& p) {
                 py::dict out;
                 for (const auto& [e, c] : p.terms()) out[py::int_(e)] = to_fraction(c);
                 return out;
             })
        .def("__call__", [](const LaurentPolyY& p, const py::object& y) { return to_fraction(p.eval(from_python(y))); })
        .def("__eq__", [](const LaurentPolyY& a, const LaurentPolyY& b) { return a == b; })
        .def("__str__", &LaurentPolyY::to_string)
        .def("__repr__", [](const LaurentPolyY& p) { return "LaurentPoly('" + p.to_string() + "')"; });

    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("num_vars", &Spectrum::num_vars)
        .def("terms",
             [](const Spectrum& s) {
                 py::list out;
                 for (const auto& [e, c] : s.sp.terms())
                     out.append(py::make_tuple(to_fraction(e), py::int_(py::str(c.get_str()))));
                 return out;
             })
        .def("milnor_number", [](const Spectrum& s) { return py::int_(py::str(milnor_number(s).get_str())); })
        .def("__eq__", [](const Spectrum& a, const Spectrum& b) { return a == b; })
        .def("__str__", [](const Spectrum& s) { return s.sp.to_string(); })
        .def("__repr__", [](const Spectrum& s) {
            return "Spectrum('" + s.sp.to_string() + "', num_vars=" + std::to_string(s.num_vars) + ")";
        });

    m.def("brieskorn_pham", [](const std::vector<long>& w) { return brieskorn_pham(w); }, py::arg("exponents"));
    m.def(
        "quasi_homogeneous", [](const py::iterable& w) { return quasi_homogeneous(rationals(w)); }, py::arg("weights"));
    m.def(
        "explicit_spectrum",
        [](const std::string& text, int num_vars) { return explicit_spectrum(FracPoly::parse(text), num_vars); },
        py::arg("text"), py::arg("num_vars"));
    m.def("thom_sebastiani", &thom_sebastiani);

    m.def(
        "chi_y",
        [](const Spectrum& s, const std::string& kind) {
            switch (meaning_from(kind)) {
                case ChiMeaning::reduced_total:
                    return reduced_total_chi(s).value;
                case ChiMeaning::total:
                    return total_chi(s).value;
                default:
                    return chi_y_of_spectrum(s).value;
            }
        },
        py::arg("spectrum"), py::arg("kind") = "reduced_middle");

    m.def(
        "hodge_table",
        [](const Spectrum& s) {
            py::list out;
            for (const auto& e : hodge_table(s).entries) {
                py::dict d;
                d["p"] = e.p;
                d["q"] = e.q;
                d["weight"] = e.weight;
                d["unipotent"] = e.unipotent;
                d["dim"] = py::int_(py::str(e.dim.get_str()));
                out.append(d);
            }
            return out;
        },
        py::arg("spectrum"));
    m.def(
        "signature", [](const Spectrum& s) { return to_fraction(signature_steenbrink(hodge_table(s))); },
        py::arg("spectrum"));
    m.def("chi_one", [](const Spectrum& s) { return to_fraction(chi_one(s)); }, py::arg("spectrum"));
    m.def("du_bois_test", &du_bois_test, py::arg("spectrum"));

    m.def(
        "chi_y_virtual", [](long d, long n) { return chi_y_virtual(d, n); }, py::arg("degree"), py::arg("dim"));
    m.def(
        "chi_y_singular",
        [](long d, long n, const std::vector<Spectrum>& sings) {
            ProjectiveHypersurface h{d, n, {}};
            for (std::size_t i = 0; i < sings.size(); ++i) h.singularities.emplace_back("p" + std::to_string(i + 1), sings[i]);
            return chi_y_singular(h);
        },
        py::arg("degree"), py::arg("dim"), py::arg("singularities") = std::vector<Spectrum>{});

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "milnor-hodge");
            std::vector<const char*> argv;
            for (const auto& a : args) argv.push_back(a.c_str());
            std::ostringstream out, err;
            const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line front end; returns (exit_code, stdout, stderr).");

    m.def(
        "verify",
        [](std::uint64_t seed) {
            const VerifyReport r = run_verification(seed);
            return py::make_tuple(r.ok(), r.to_text());
        },
        py::arg("seed") = 20240611);
}
