// Python bindings. Exact values cross the boundary as JSON text in the
// library's canonical encoding; the Python package decodes them.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qeuclid/dsl.hpp"
#include "qeuclid/schrodinger.hpp"
#include "qeuclid/suites.hpp"

namespace py = pybind11;
using namespace qe;

namespace {

std::string parse_canonical(const std::string& src) { return print_expression(parse_expression(src)); }

std::string parse_tree(const std::string& src) { return expression_to_json(parse_expression(src)).dump(); }

std::string evaluate_text(const std::string& src, const std::string& convention) {
    EvalOptions opts;
    opts.convention = parse_convention(convention);
    return value_to_json(evaluate(parse_expression(src), opts)).dump();
}

std::string star(const std::string& f, const std::string& g) {
    return to_json(star_product(coordpoly_from_json(Json::parse(f)), coordpoly_from_json(Json::parse(g)))).dump();
}

std::string star_oracle(const std::string& f, const std::string& g) {
    return to_json(star_product_oracle(coordpoly_from_json(Json::parse(f)), coordpoly_from_json(Json::parse(g)))).dump();
}

std::string normal_form(const std::string& f, const std::string& convention) {
    return to_json(normal_order(ncpoly_from_json(Json::parse(f)), parse_convention(convention))).dump();
}

std::string convert(const std::string& f, const std::string& convention) {
    return to_json(convert_convention(coordpoly_from_json(Json::parse(f)), parse_convention(convention))).dump();
}

std::string conj(const std::string& f) { return to_json(conjugate(coordpoly_from_json(Json::parse(f)))).dump(); }

std::string derivative(const std::string& f, const std::string& index, bool hat, bool upper) {
    const Index a = parse_index(index);
    const DerivativeLabel label = hat ? dhat_leftbar(a, upper) : d_left(a, upper);
    return to_json(apply_derivative(label, coordpoly_from_json(Json::parse(f)))).dump();
}

std::string exponential(const std::string& variant, int order) {
    return to_json(build_exponential(parse_variant(variant), order).body).dump();
}

std::string plane_wave(const std::string& family, int N, int K, const std::string& mass) {
    const GaussRat m(rational_from_string(mass), mpq_class(0));
    return to_json(build_plane_wave(parse_family(family), N, K, m).body).dump();
}

std::string psq(int k) { return to_json(psq_power(k)).dump(); }

std::string q_num(int n, int base) { return to_json(q_number(n, base)).dump(); }

py::dict propagator(const std::string& family, const std::string& branch, int order, const std::string& mass) {
    const GaussRat m(rational_from_string(mass), mpq_class(0));
    const MomentumPropagator k = propagator_momentum(parse_propagator_family(family), parse_branch(branch), order, m);
    py::list scalars;
    for (const QScalar& s : k.scalars) scalars.append(to_json(s).dump());
    py::dict out;
    out["family"] = propagator_family_name(k.family);
    out["branch"] = branch_name(k.branch);
    out["order"] = k.order;
    out["scalars"] = scalars;
    out["identity_holds"] = propagator_identity_holds(k);
    return out;
}

std::string verify(const std::string& suite, const std::string& q, int N, int K, std::uint64_t seed, int cases) {
    SuiteConfig config;
    config.q_text = q;
    config.q0 = parse_q(q);
    config.N = N;
    config.K = K;
    config.seed = seed;
    config.cases = cases;
    return run_suite(suite, config).to_json().dump();
}

py::list heine(int max_k, const std::string& z, double q0) {
    py::list rows;
    for (const HeineRow& r : heine_diagnostic(max_k, GaussRat(rational_from_string(z), mpq_class(0)), q0)) {
        py::dict row;
        row["k"] = r.k;
        row["double_sum_is_star_power"] = r.double_sum_is_star_power;
        row["product_defect"] = r.product_defect.to_string();
        row["finite_sum"] = r.finite_sum;
        row["reciprocal_product"] = r.reciprocal;
        row["relative_gap"] = r.relative_gap;
        rows.append(row);
    }
    return rows;
}

py::dict gaussian_expectations(double q0, int half_width, double mass, std::array<double, 3> center, double width,
                               std::array<double, 3> wave_vector, int support, double t) {
    const QLattice lat{q0, -half_width, half_width};
    lat.validate();
    const WavePacket wp = WavePacket::gaussian(lat, mass, center, width, wave_vector, support).normalized().at_time(t);
    py::dict out;
    for (bool upper : {true, false}) {
        py::dict p, x;
        for (Index a : kSpatialIndices) {
            p[py::str(index_name(a))] = expectation_momentum(wp, a, upper);
            x[py::str(index_name(a))] = expectation_position(wp, a, upper);
        }
        out[upper ? "momentum_upper" : "momentum_lower"] = p;
        out[upper ? "position_upper" : "position_lower"] = x;
    }
    out["norm_error"] = norm_check(wp);
    return out;
}

}  // namespace

PYBIND11_MODULE(_qeuclid, m) {
    m.doc() = "Exact q-deformed Euclidean calculus";
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("parse", &parse_canonical, py::arg("source"));
    m.def("parse_tree", &parse_tree, py::arg("source"));
    m.def("evaluate", &evaluate_text, py::arg("source"), py::arg("convention") = "W");
    m.def("star_product", &star, py::arg("f"), py::arg("g"));
    m.def("star_product_oracle", &star_oracle, py::arg("f"), py::arg("g"));
    m.def("normal_order", &normal_form, py::arg("f"), py::arg("convention"));
    m.def("convert_convention", &convert, py::arg("f"), py::arg("convention"));
    m.def("conjugate", &conj, py::arg("f"));
    m.def("derivative", &derivative, py::arg("f"), py::arg("index"), py::arg("hat") = false,
          py::arg("upper") = false);
    m.def("exponential", &exponential, py::arg("variant"), py::arg("order"));
    m.def("plane_wave", &plane_wave, py::arg("family"), py::arg("N"), py::arg("K"), py::arg("mass") = "1");
    m.def("psq_power", &psq, py::arg("k"));
    m.def("q_number", &q_num, py::arg("n"), py::arg("base") = 1);
    m.def("propagator", &propagator, py::arg("family") = "KR", py::arg("branch") = "retarded", py::arg("order") = 3,
          py::arg("mass") = "1");
    m.def("verify", &verify, py::arg("suite"), py::arg("q") = "11/10", py::arg("N") = 3, py::arg("K") = 3,
          py::arg("seed") = 1, py::arg("cases") = 0, py::call_guard<py::gil_scoped_release>());
    m.def("heine_diagnostic", &heine, py::arg("max_k"), py::arg("z") = "1/3", py::arg("q0") = 1.1);
    m.def("gaussian_expectations", &gaussian_expectations, py::arg("q0"), py::arg("half_width"), py::arg("mass"),
          py::arg("center"), py::arg("width"), py::arg("wave_vector"), py::arg("support"), py::arg("t") = 0.0);
}
