// Python bindings. Exact values cross the boundary as strings (integers and
// "a/b" rationals) and JSON documents; the zfr package turns them into int,
// Fraction and dict.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zfr/certify.hpp"
#include "zfr/construct.hpp"
#include "zfr/hypergraph_io.hpp"
#include "zfr/polynomial.hpp"
#include "zfr/roots.hpp"

namespace py = pybind11;
using namespace zfr;

namespace {

using Edges = std::vector<std::vector<VertexId>>;

Hypergraph build(std::size_t n, const Edges& edges) {
  Hypergraph::Builder b(n);
  for (const auto& e : edges) b.add_edge(e);
  return std::move(b).build();
}

std::string cert_json(const RootCertificate& c) { return certificate_to_json(c).dump(); }

}  // namespace

PYBIND11_MODULE(_zfr, m) {
  m.doc() = "Independence polynomials of linear hypergraphs and root certificates";

  py::register_exception<HypergraphError>(m, "HypergraphError", PyExc_ValueError);
  py::register_exception<SizeGuardError>(m, "SizeGuardError", PyExc_ValueError);

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init(&build), py::arg("n"), py::arg("edges"))
      .def_static("from_json", [](const std::string& text) { return parse_hypergraph(text); })
      .def("to_json", &serialize_hypergraph)
      .def_property_readonly("n", &Hypergraph::vertex_count)
      .def_property_readonly("edges", &Hypergraph::edge_lists)
      .def("__len__", &Hypergraph::edge_count)
      .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
      .def("__repr__", [](const Hypergraph& h) {
        return "<Hypergraph n=" + std::to_string(h.vertex_count()) + " edges=" + std::to_string(h.edge_count()) + ">";
      });

  m.def("uniformity", &uniformity);
  m.def("is_linear", &is_linear);
  m.def("degrees", [](const Hypergraph& h) { return degree_profile(h).degrees; });
  m.def("covered_edges", [](const Hypergraph& h, const std::vector<VertexId>& s) {
    return covered_edges(h, VertexSet(h.vertex_count(), s));
  });
  m.def("remove_vertex", &remove_vertex);
  m.def("s_transform", &s_transform);
  m.def("find_prime_in", &find_prime_in);
  m.def("h_construction", [](std::size_t k, std::size_t delta) {
    auto r = h_construction(k, delta);
    return py::make_tuple(std::move(r.h), r.p);
  });
  m.def("counterexample", [](std::size_t k, std::size_t delta) {
    Counterexample cx = counterexample(k, delta);
    py::dict meta;
    meta["k"] = cx.meta.k;
    meta["delta"] = cx.meta.delta;
    meta["p"] = cx.meta.p;
    meta["n_H"] = cx.meta.n_h;
    meta["removed_vertex"] = cx.meta.removed_vertex ? py::cast(*cx.meta.removed_vertex) : py::none();
    meta["n_SG"] = cx.meta.n_sg;
    return py::make_tuple(std::move(cx.h), std::move(cx.s_h), meta);
  });

  m.def("independence_poly_bruteforce",
        [](const Hypergraph& h) { return independence_poly_bruteforce(h, EnumerationLimits::from_env()).coeff_strings(); });
  m.def("z_sg_closed_form",
        [](const Hypergraph& g) { return z_sg_closed_form(g, EnumerationLimits::from_env()).coeff_strings(); });
  m.def("evaluate", [](const std::vector<std::string>& coeffs, const std::string& x) {
    return to_string(evaluate_exact(IntPolynomial::from_strings(coeffs), parse_rational(x)));
  });
  m.def("eval_point_closed_form", [](const Hypergraph& g, const std::string& x) {
    return to_string(eval_point_closed_form_exact(g, parse_rational(x), EnumerationLimits::from_env()));
  });

  m.def(
      "isolate_real_root",
      [](const std::vector<std::string>& coeffs, const std::string& lo, const std::string& hi,
         const std::string& tol) -> py::object {
        const auto b = isolate_real_root(IntPolynomial::from_strings(coeffs), parse_rational(lo), parse_rational(hi),
                                         parse_rational(tol));
        if (!b) return py::none();
        py::dict d;
        d["lo"] = to_string(b->lo);
        d["hi"] = to_string(b->hi);
        d["exact_root"] = b->exact_root ? py::cast(to_string(*b->exact_root)) : py::none();
        return d;
      },
      py::arg("coeffs"), py::arg("lo"), py::arg("hi"), py::arg("tol") = "1e-12");
  m.def(
      "complex_roots",
      [](const std::vector<std::string>& coeffs, double tol) {
        const ComplexRootsResult r = complex_roots(IntPolynomial::from_strings(coeffs), tol);
        std::vector<std::complex<double>> out;
        for (const auto& root : r.roots) out.push_back(root.value);
        return py::make_tuple(out, r.converged);
      },
      py::arg("coeffs"), py::arg("tol") = 1e-14);

  m.def("certify_root_interval",
        [](std::size_t n, const std::string& alpha) { return cert_json(certify_root_interval(n, parse_rational(alpha))); });
  m.def("certify_counterexample", [](std::size_t k, std::size_t delta, const std::string& mode) {
    return cert_json(certify_counterexample(k, delta, parse_certificate_mode(mode)));
  });
  m.def("verify_certificate", [](const std::string& text) {
    const VerificationResult r = verify_certificate_json(nlohmann::ordered_json::parse(text));
    return py::make_tuple(r.valid, r.problems);
  });
  m.def("tbar_below_one", [](std::size_t n, const std::string& alpha) {
    return verify_inequality_chain(n, parse_rational(alpha)).tbar_below_one;
  });
  m.def("gmpst_radius", [](std::size_t delta) {
    const auto e = gmpst_radius(delta);
    return py::make_tuple(to_string(e.lo), to_string(e.hi));
  });
  m.def("compare_bounds", [](std::size_t k, std::size_t delta, const std::string& c) {
    const SweepRow r = compare_bounds(k, delta, parse_rational(c));
    py::dict d;
    d["k"] = r.k;
    d["delta"] = r.delta;
    d["p"] = r.p;
    d["n"] = r.n;
    d["alpha"] = to_string(r.alpha);
    d["certified_bound"] = to_string(r.certified_bound);
    d["theorem_bound"] = to_string(r.theorem_bound);
    d["conjectured_radius"] = to_string(r.conjectured_radius);
    d["gmpst_radius"] = to_string(r.gmpst_radius);
    d["shearer_radius"] = to_string(r.shearer_radius);
    d["falsified"] = r.falsified;
    d["ratio"] = to_string(r.ratio);
    return d;
  });
}
