#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hsi/classify.hpp"
#include "hsi/cli.hpp"
#include "hsi/errors.hpp"
#include "hsi/minors.hpp"
#include "hsi/oracle.hpp"
#include "hsi/stieltjes.hpp"

namespace py = pybind11;
using namespace hsi;

namespace {

py::object fraction(const Q& x) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(x));
}

py::list fractions(const std::vector<Q>& xs) {
    py::list out;
    for (const Q& x : xs) out.append(fraction(x));
    return out;
}

// accepts "1,2,1" or any sequence whose items print as rationals (int, Fraction, str)
Polynomial to_poly(const py::object& coeffs) {
    if (py::isinstance<py::str>(coeffs)) return parse_polynomial(coeffs.cast<std::string>());
    std::string text;
    for (py::handle item : coeffs) {
        if (!text.empty()) text += ",";
        text += py::str(item).cast<std::string>();
    }
    return parse_polynomial(text);
}

py::object optional_int(const std::optional<int>& v) { return v ? py::object(py::int_(*v)) : py::object(py::none()); }

Label label_from(const std::string& name) {
    for (Label l : {Label::hurwitz_stable, Label::quasi_stable, Label::self_interlacing, Label::almost_self_interlacing,
                    Label::quasi_self_interlacing, Label::generalized_hurwitz, Label::unclassified})
        if (to_string(l) == name) return l;
    throw py::value_error("unknown label: " + name);
}

py::dict report_dict(const ClassificationReport& r) {
    py::dict d;
    d["label"] = to_string(r.label);
    d["order_k"] = optional_int(r.order_k);
    d["degeneracy_m"] = optional_int(r.degeneracy_m);
    d["si_type"] = r.si_type ? py::object(py::str(to_string(*r.si_type))) : py::object(py::none());
    d["route"] = r.certificates.route;
    d["delta"] = fractions(r.certificates.delta);
    return d;
}

}  // namespace

PYBIND11_MODULE(_hsi, m) {
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("parse", [](const py::object& c) { return fractions(to_poly(c).coeffs()); }, py::arg("coeffs"));

    m.def("classify", [](const py::object& c) { return report_dict(classify(to_poly(c))); }, py::arg("coeffs"));

    m.def(
        "hurwitz_minors",
        [](const py::object& c) {
            HurwitzMinors hm = hurwitz_minors(to_poly(c));
            py::dict d;
            d["delta"] = fractions(hm.delta);
            d["eta"] = fractions(hm.eta);
            return d;
        },
        py::arg("coeffs"));

    m.def("dual", [](const py::object& c) { return fractions(dual_transform(to_poly(c)).coeffs()); }, py::arg("coeffs"));

    m.def(
        "stieltjes",
        [](const py::object& c) {
            StieltjesCF cf = stieltjes_expand(associated_function(to_poly(c)));
            py::dict d;
            d["c0"] = fraction(cf.c0);
            d["c"] = fractions(cf.c);
            d["tail"] = cf.tail == CfTail::even ? "even" : "odd";
            return d;
        },
        py::arg("coeffs"));

    m.def(
        "generate",
        [](const std::string& label, int degree, std::uint64_t seed, std::optional<int> order_k,
           std::optional<int> degeneracy_m, const std::string& si_type, bool zero_root) {
            StructureSpec s;
            s.label = label_from(label);
            s.degree = degree;
            s.order_k = order_k;
            s.degeneracy_m = degeneracy_m;
            s.si_type = si_type == "II" ? SiType::II : SiType::I;
            s.zero_root = zero_root;
            Instance in = generate_instance(s, seed);
            py::dict d;
            d["coeffs"] = fractions(in.p.coeffs());
            d["real_roots"] = fractions(in.real_roots);
            return d;
        },
        py::arg("label"), py::arg("degree"), py::arg("seed") = 0, py::arg("order_k") = py::none(),
        py::arg("degeneracy_m") = py::none(), py::arg("si_type") = "I", py::arg("zero_root") = false);

    m.def(
        "strange",
        [](const py::object& c) {
            StrangeReport r = strange_experiment(to_poly(c));
            py::dict d;
            d["q"] = fractions(r.q.coeffs());
            d["rhp"] = r.q_counts.rhp;
            d["lhp"] = r.q_counts.lhp;
            d["counts_hold"] = r.q_counts_hold;
            d["interlacing"] = r.q_counts.interlacing;
            return d;
        },
        py::arg("coeffs"));

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "hsi");
            std::vector<const char*> argv;
            for (const auto& a : args) argv.push_back(a.c_str());
            std::ostringstream out;
            std::ostringstream err;
            int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
