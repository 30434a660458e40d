#include "unbend/cli.hpp"
#include "unbend/errors.hpp"
#include "unbend/horospherical.hpp"
#include "unbend/parabolic.hpp"
#include "unbend/roots.hpp"
#include "unbend/weights.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace unbend;

namespace {

// Rationals cross into Python as fractions.Fraction so nothing is rounded.
py::object fraction(const Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(r));
}

py::tuple fractions(const RationalVector& v) {
    py::tuple t(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) t[i] = fraction(v[i]);
    return t;
}

Rational from_python(const py::handle& h) {
    const py::object f = py::module_::import("fractions").attr("Fraction")(h);
    return Rational(py::str(f.attr("numerator")).cast<std::string>()) /
           Rational(py::str(f.attr("denominator")).cast<std::string>());
}

py::tuple root_tuple(const Root& r) { return py::tuple(py::cast(r.coeffs())); }

py::dict classification_dict(const Classification& c) {
    py::dict d;
    d["kind"] = to_string(c.kind);
    d["unbendable"] = c.unbendable();
    if (c.unbendable()) {
        d["p"] = c.p;
        d["q"] = c.q;
    }
    return d;
}

Root curve_root(const RootSystem& rs, const std::optional<std::vector<int>>& curve) {
    return curve ? Root(*curve) : rs.highest();
}

}  // namespace

PYBIND11_MODULE(_unbend, m) {
    m.doc() = "Exact root-system and splitting-type computations";

    py::register_exception<Error>(m, "UnbendError", PyExc_ValueError);

    m.def("cartan_matrix", [](const std::string& type) {
        const CartanMatrix a = cartan_matrix(parse_lie_type(type));
        std::vector<std::vector<int>> rows;
        for (std::size_t i = 0; i < a.entries().rows(); ++i) rows.push_back(a.entries().row(i));
        return rows;
    }, py::arg("type"), "Cartan matrix A[i][j] = (alpha_i, alpha_j^vee).");

    m.def("positive_roots", [](const std::string& type) {
        const RootSystem rs(parse_lie_type(type));
        py::list out;
        for (const Root& r : rs.positive_roots()) out.append(root_tuple(r));
        return out;
    }, py::arg("type"), "Positive roots in simple-root coordinates, by height.");

    m.def("highest_root", [](const std::string& type) {
        return root_tuple(RootSystem(parse_lie_type(type)).highest());
    }, py::arg("type"));

    m.def("special_nodes", [](const std::string& type) {
        return special_nodes(RootSystem(parse_lie_type(type)));
    }, py::arg("type"), "Nodes i with (alpha_i, theta) != 0.");

    m.def("fundamental_weight", [](const std::string& type, int j) {
        return fractions(fundamental_weight(parse_lie_type(type), j).root_coords());
    }, py::arg("type"), py::arg("j"), "varpi_j in simple-root coordinates.");

    m.def("pairing", [](const std::string& type, const std::vector<py::object>& beta, const std::vector<int>& alpha) {
        const RootSystem rs(parse_lie_type(type));
        RationalVector b;
        for (const auto& x : beta) b.push_back(from_python(x));
        return fraction(rs.pairing(b, Root(alpha)));
    }, py::arg("type"), py::arg("beta"), py::arg("alpha"), "(beta, alpha^vee) for a root alpha.");

    m.def("tangent_splitting", [](const std::string& type, const std::vector<int>& marked,
                                  const std::optional<std::vector<int>>& curve) {
        const LieType t = parse_lie_type(type);
        const RootSystem rs(t);
        return tangent_splitting(rs, ParabolicMarking(t, marked), curve_root(rs, curve)).degrees();
    }, py::arg("type"), py::arg("marked"), py::arg("curve") = py::none(),
       "Degrees of T(G/P) on the curve of a root (theta by default), non-increasing.");

    m.def("classify_splitting", [](const std::vector<int>& degrees) {
        return classification_dict(classify_splitting(SplittingType(degrees)));
    }, py::arg("degrees"));

    m.def("unbendable_violations", [](const std::string& type) {
        return unbendable_sweep(RootSystem(parse_lie_type(type))).violations();
    }, py::arg("type"), "Number of markings where C_theta is not unbendable.");

    m.def("module_weights", [](const std::string& type, const std::vector<int>& support,
                               const std::vector<int>& labels) {
        const LieType t = parse_lie_type(type);
        const auto ws = module_weights(RootSystem(t), support, weight_from_labels(t, labels));
        py::dict out;
        for (const auto& [w, mult] : ws.entries()) out[fractions(w.root_coords())] = mult;
        return out;
    }, py::arg("type"), py::arg("support"), py::arg("labels"),
       "Weight multiplicities of the Levi module with the given Dynkin labels.");

    m.def("weyl_dimension", [](const std::string& type, const std::vector<int>& support,
                               const std::vector<int>& labels) {
        const LieType t = parse_lie_type(type);
        return weyl_dimension(RootSystem(t), support, weight_from_labels(t, labels));
    }, py::arg("type"), py::arg("support"), py::arg("labels"));

    m.def("horospherical_verify", [](const std::string& family, std::optional<int> n, std::optional<int> k) {
        const HorosphericalVerification v = verify(instantiate(parse_horo_family(family), n, k));
        py::dict d;
        d["variety"] = v.datum.label();
        d["lambda_pairing"] = fraction(v.lambda_pairing);
        d["dominant_pairing"] = fraction(v.dominant_pairing);
        d["dim_v"] = v.dim_v;
        d["dim_g_over_p"] = v.dim_g_over_p;
        d["tangent"] = v.tangent.degrees();
        d["bundle"] = v.bundle.degrees();
        d["total"] = v.total.degrees();
        d["classification"] = classification_dict(v.total_class);
        d["passes"] = v.passes();
        return d;
    }, py::arg("family"), py::arg("n") = py::none(), py::arg("k") = py::none());

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Run a CLI subcommand in-process; returns (exit_code, stdout, stderr).");
}
