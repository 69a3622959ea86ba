// python/bindings.cpp: pybind11 bindings for qrpat.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "qrpat/qrpat.hpp"

namespace py = pybind11;
using namespace qrpat;

namespace {

py::int_ to_py(Wide v) { return py::int_(py::str(to_string(v))); }

py::tuple rational_tuple(const Rational& r) { return py::make_tuple(to_py(r.num()), to_py(r.den())); }

py::tuple fraction_tuple(const ReducedFraction& f) { return py::make_tuple(f.a, f.b); }

py::bytes canvas_pgm(const Canvas& c) { return py::bytes(encode_pgm(c)); }

}  // namespace

PYBIND11_MODULE(_qrpat, m) {
    m.doc() = "Quadratic-residue plot patterns: exact predictions and deterministic renders";

    m.def("qr_mod", [](std::int64_t x, std::int64_t mod) { return qr_mod(x, Modulus(mod)); }, py::arg("x"),
          py::arg("m"));
    m.def("balanced_residue", [](std::int64_t v, std::int64_t n) { return balanced_residue(v, n); }, py::arg("v"),
          py::arg("n"));
    m.def(
        "farey_fractions",
        [](std::int64_t d) {
            std::vector<std::pair<std::int64_t, std::int64_t>> out;
            for (const auto& f : farey_fractions(d)) out.emplace_back(f.a, f.b);
            return out;
        },
        py::arg("max_denominator"));
    m.def("lambda_value", &lambda_value, py::arg("n"));
    m.def(
        "q_congruent",
        [](std::pair<std::int64_t, std::int64_t> s, std::pair<std::int64_t, std::int64_t> t, std::int64_t mod) {
            return q_congruent(Rational(s.first, s.second), Rational(t.first, t.second), Modulus(mod));
        },
        py::arg("s"), py::arg("t"), py::arg("m"), "Rationals are (num, den) pairs.");

    py::class_<FractionParams>(m, "FractionParams")
        .def_property_readonly("m", [](const FractionParams& p) { return p.m.value(); })
        .def_property_readonly("fraction", [](const FractionParams& p) { return fraction_tuple(p.frac); })
        .def_readonly("b_prime", &FractionParams::b_prime)
        .def_readonly("c", &FractionParams::c)
        .def_readonly("alpha", &FractionParams::alpha)
        .def_readonly("beta", &FractionParams::beta)
        .def_readonly("x0", &FractionParams::x0)
        .def_readonly("r0", &FractionParams::r0)
        .def("__repr__", [](const FractionParams& p) {
            return "FractionParams(m=" + std::to_string(p.m.value()) + ", fraction=" + p.frac.str() +
                   ", alpha=" + std::to_string(p.alpha) + ", beta=" + std::to_string(p.beta) +
                   ", x0=" + std::to_string(p.x0) + ", r0=" + std::to_string(p.r0) + ")";
        });

    py::class_<Parabola>(m, "Parabola")
        .def_readonly("params", &Parabola::params)
        .def_readonly("i", &Parabola::i)
        .def_readonly("a_prime", &Parabola::a_prime)
        .def_readonly("A", &Parabola::A)
        .def_readonly("B", &Parabola::B)
        .def_readonly("C", &Parabola::C)
        .def_property_readonly("vertex_x", [](const Parabola& p) { return rational_tuple(p.vertex_x); })
        .def_property_readonly("vertex_y", [](const Parabola& p) { return rational_tuple(p.vertex_y); })
        .def("evaluate", [](const Parabola& p, std::int64_t j) {
            const ResiduePoint pt = evaluate_parabola(p, j);
            return std::make_pair(pt.x, pt.r);
        });

    m.def(
        "fraction_params",
        [](std::int64_t mod, std::int64_t a, std::int64_t b) {
            return fraction_params(Modulus(mod), ReducedFraction::make(a, b));
        },
        py::arg("m"), py::arg("a"), py::arg("b"));
    m.def("verify_prop1", &verify_prop1, py::arg("params"));
    m.def("parabola_family", [](const FractionParams& p) { return parabola_family(p).members; }, py::arg("params"));
    m.def(
        "residues_near",
        [](std::int64_t mod, std::int64_t a, std::int64_t b, std::int64_t window) {
            std::vector<std::pair<std::int64_t, std::int64_t>> out;
            for (const auto& pt : residues_near(Modulus(mod), ReducedFraction::make(a, b), window))
                out.emplace_back(pt.x, pt.r);
            return out;
        },
        py::arg("m"), py::arg("a"), py::arg("b"), py::arg("window"));

    m.def(
        "denominator_set",
        [](std::int64_t lambda, std::int64_t max_b) {
            const auto s = denominator_set(lambda, max_b).members;
            return std::vector<std::int64_t>(s.begin(), s.end());
        },
        py::arg("lambda_"), py::arg("max_b"));
    m.def(
        "beta_signature",
        [](std::int64_t mod, std::int64_t d) {
            py::dict out;
            for (const auto& [f, bp] : beta_signature(Modulus(mod), d).entries) out[fraction_tuple(f)] = bp;
            return out;
        },
        py::arg("m"), py::arg("max_denominator"));
    m.def(
        "layouts_equivalent",
        [](std::int64_t m1, std::int64_t m2, std::int64_t lambda, std::int64_t d) {
            const EquivalenceResult r = layouts_equivalent(Modulus(m1), Modulus(m2), lambda, d);
            py::object witness = py::none();
            if (r.witness) witness = fraction_tuple(*r.witness);
            return py::make_tuple(r.equivalent, witness);
        },
        py::arg("m1"), py::arg("m2"), py::arg("lambda_"), py::arg("max_denominator"));
    m.def(
        "bundle_parameter", [](std::int64_t mod, std::int64_t lambda) { return bundle_parameter(Modulus(mod), lambda); },
        py::arg("m"), py::arg("lambda_"));
    m.def(
        "vertex_on_bundle",
        [](std::int64_t mod, std::int64_t lambda, std::int64_t a, std::int64_t b, std::optional<std::int64_t> s) {
            const Modulus mm(mod);
            const ReducedFraction f = ReducedFraction::make(a, b);
            const auto lines = s ? vertex_on_bundle(mm, lambda, f, *s) : vertex_on_bundle(mm, lambda, f);
            std::vector<std::pair<std::int64_t, std::int64_t>> out;
            for (const auto& vl : lines) out.emplace_back(vl.k, vl.n);
            return out;
        },
        py::arg("m"), py::arg("lambda_"), py::arg("a"), py::arg("b"), py::arg("s") = py::none());

    py::class_<Canvas>(m, "Canvas")
        .def_readonly("width", &Canvas::width)
        .def_readonly("height", &Canvas::height)
        .def_property_readonly("pixels",
                               [](const Canvas& c) {
                                   return py::bytes(reinterpret_cast<const char*>(c.pixels.data()), c.pixels.size());
                               })
        .def("to_pgm", &canvas_pgm)
        .def("save", [](const Canvas& c, const std::string& path) { write_pgm(c, path); });

    m.def(
        "render_scatter",
        [](std::int64_t mod, int w, int h, bool half) { return render_scatter(Modulus(mod), w, h, half); },
        py::arg("m"), py::arg("width") = 800, py::arg("height") = 800, py::arg("half_range") = true);
    m.def(
        "render_sum_squares", [](std::int64_t mod, int size) { return render_sum_squares(Modulus(mod), size); },
        py::arg("m"), py::arg("size"));
    m.def(
        "overlay_svg",
        [](std::int64_t mod, std::int64_t d, std::int64_t lambda, int w, int h) {
            return encode_svg(overlay_predictions(Modulus(mod), d, lambda, w, h));
        },
        py::arg("m"), py::arg("max_denominator"), py::arg("lambda_"), py::arg("width") = 800,
        py::arg("height") = 800);

    py::register_exception<IoError>(m, "IoError", PyExc_OSError);
}
