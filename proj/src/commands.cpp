#include "zfr/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "zfr/construct.hpp"
#include "zfr/hypergraph_io.hpp"
#include "zfr/roots.hpp"

namespace zfr::cli {

using Json = nlohmann::ordered_json;

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open input file '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

namespace {

Hypergraph load(const std::string& input, Streams io) { return parse_hypergraph(read_input(input, io.in)); }

const char* source_name(PolySource s) { return s == PolySource::ClosedForm ? "closed-form" : "bruteforce"; }

IntPolynomial polynomial_of(const Hypergraph& h, PolySource source, const EnumerationLimits& limits) {
  return source == PolySource::ClosedForm ? z_sg_closed_form(h, limits) : independence_poly_bruteforce(h, limits);
}

}  // namespace

int cmd_gen_h(std::size_t k, std::size_t delta, Streams io) {
  if (k < 2) throw UsageError("gen-h requires --k >= 2");
  if (delta < k) throw UsageError("gen-h requires --delta >= k");
  const auto [h, p] = h_construction(k, delta);
  Json j = hypergraph_to_json(h);
  j["meta"] = {{"k", k}, {"delta", delta}, {"p", p}};
  io.out << j.dump() << '\n';
  return kExitOk;
}

int cmd_counterexample(std::size_t k, std::size_t delta, Streams io) {
  if (k < 3) throw UsageError("counterexample requires --k >= 3");
  if (delta + 1 < k) throw UsageError("counterexample requires --delta >= k - 1");
  const Counterexample cx = counterexample(k, delta);
  Json j = hypergraph_to_json(cx.s_h);
  j["meta"] = {{"k", cx.meta.k},
               {"delta", cx.meta.delta},
               {"p", cx.meta.p},
               {"n_H", cx.meta.n_h},
               {"removed_vertex", cx.meta.removed_vertex ? Json(*cx.meta.removed_vertex) : Json(nullptr)},
               {"n_SG", cx.meta.n_sg}};
  io.out << j.dump() << '\n';
  return kExitOk;
}

int cmd_transform(const std::string& input, Streams io) {
  io.out << serialize_hypergraph(s_transform(load(input, io))) << '\n';
  return kExitOk;
}

int cmd_poly(const std::string& input, PolySource source, Streams io) {
  const Hypergraph h = load(input, io);
  const IntPolynomial p = polynomial_of(h, source, EnumerationLimits::from_env());
  Json j;
  j["coeffs"] = p.coeff_strings();
  io.out << j.dump() << '\n';
  return kExitOk;
}

int cmd_eval(const std::string& input, const std::string& at, PolySource source, bool float_mode, Streams io) {
  BigRational x;
  try {
    x = parse_rational(at);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--at: ") + e.what());
  }
  const Hypergraph h = load(input, io);
  const EnumerationLimits limits = EnumerationLimits::from_env();
  Json j;
  j["at"] = to_string(x);
  j["polynomial"] = source_name(source);
  if (float_mode) {
    if (source != PolySource::ClosedForm) throw UsageError("--float evaluates the closed form only");
    const FloatEvaluation v = eval_point_closed_form_float(h, to_double(x), limits);
    j["mode"] = "float";
    j["value"] = v.value;
    j["abs_term_sum"] = v.abs_term_sum;
    j["rigorous"] = v.rigorous;
  } else {
    const BigRational v = source == PolySource::ClosedForm
                              ? eval_point_closed_form_exact(h, x, limits)
                              : evaluate_exact(independence_poly_bruteforce(h, limits), x);
    j["mode"] = "exact";
    j["value"] = to_string(v);
  }
  io.out << j.dump() << '\n';
  return kExitOk;
}

int cmd_roots(const RootsRequest& request, Streams io) {
  BigRational tol;
  BigRational lo = -1;
  BigRational hi = 0;
  try {
    tol = parse_rational(request.tol);
    if (request.real_interval) {
      lo = parse_rational(request.real_interval->first);
      hi = parse_rational(request.real_interval->second);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (tol <= 0) throw UsageError("--tol must be positive");
  if (!(lo < hi)) throw UsageError("--real-interval needs LO < HI");

  const Hypergraph h = load(request.input, io);
  const IntPolynomial p = polynomial_of(h, request.source, EnumerationLimits::from_env());
  // The hypergraph whose independence polynomial p is.
  const Hypergraph owner = request.source == PolySource::ClosedForm ? s_transform(h) : h;
  const std::size_t delta = owner.vertex_count() == 0 ? 0 : degree_profile(owner).max_degree;
  const bool graph_input = uniformity(owner) == std::size_t{2};

  Json j;
  j["polynomial"] = source_name(request.source);
  j["degree"] = p.degree();
  j["delta"] = delta;

  std::vector<RootBracket> brackets;
  std::vector<ComplexRoot> numeric;
  const bool want_real = request.real_interval.has_value() || !request.complex;
  if (want_real) {
    Json real;
    real["interval"] = Json::array({to_string(lo), to_string(hi)});
    real["tol"] = to_string(tol);
    if (auto b = isolate_real_root(p, lo, hi, tol)) {
      Json bj{{"lo", to_string(b->lo)}, {"hi", to_string(b->hi)}};
      bj["exact_root"] = b->exact_root ? Json(to_string(*b->exact_root)) : Json(nullptr);
      real["bracket"] = std::move(bj);
      brackets.push_back(*b);
    } else {
      real["bracket"] = nullptr;
    }
    j["real"] = std::move(real);
  }
  if (request.complex && p.degree() >= 1) {
    const ComplexRootsResult r = complex_roots(p, std::max(to_double(tol), 1e-15));
    Json cj;
    cj["converged"] = r.converged;
    cj["iterations"] = r.iterations;
    Json list = Json::array();
    for (const auto& root : r.roots) {
      list.push_back({{"re", root.value.real()},
                      {"im", root.value.imag()},
                      {"residual", root.residual},
                      {"multiplicity", root.multiplicity}});
    }
    cj["roots"] = std::move(list);
    j["complex"] = std::move(cj);
    numeric = r.roots;
  }

  const ZfrReport zfr = check_zfr_conformance(brackets, numeric, delta, graph_input);
  Json zj;
  zj["gmpst_radius"] = to_string(zfr.gmpst_radius.lo);
  if (zfr.shearer_radius) zj["shearer_radius"] = to_string(zfr.shearer_radius->lo);
  zj["roots_checked"] = zfr.roots_checked;
  zj["pass"] = zfr.pass();
  Json violations = Json::array();
  for (const auto& v : zfr.violations) violations.push_back({{"root", v.root}, {"magnitude", v.magnitude}});
  zj["violations"] = std::move(violations);
  j["zfr"] = std::move(zj);

  io.out << j.dump() << '\n';
  return kExitOk;
}

int cmd_certify(std::size_t k, std::size_t delta, const std::string& mode_text, Streams io) {
  if (k < 3) throw UsageError("certify requires --k >= 3");
  CertificateMode mode;
  try {
    mode = parse_certificate_mode(mode_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (mode == CertificateMode::Lemma) throw UsageError("--mode must be explicit or analytic");
  RootCertificate cert;
  try {
    cert = certify_counterexample(k, delta, mode);
  } catch (const CertifyInputError& e) {
    throw UsageError(e.what());
  }
  io.out << certificate_to_json(cert).dump(2) << '\n';
  if (!cert.issued()) {
    io.err << "hypothesis failure:";
    for (const auto& name : cert.failed_checks()) io.err << ' ' << name;
    io.err << '\n';
    return kExitHypothesis;
  }
  return kExitOk;
}

int cmd_verify_certificate(const std::string& input, Streams io) {
  Json j;
  try {
    j = Json::parse(read_input(input, io.in));
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("malformed certificate JSON: ") + e.what());
  }
  const VerificationResult r = verify_certificate_json(j);
  Json out{{"valid", r.valid}, {"problems", r.problems}};
  io.out << out.dump() << '\n';
  return r.valid ? kExitOk : kExitHypothesis;
}

std::string sweep_csv_header() {
  return "k,delta,p,n,alpha,certified_bound,theorem_bound,conjectured_radius,gmpst_radius,shearer_radius,falsified,"
         "ratio";
}

std::string sweep_csv_row(const SweepRow& r) {
  std::ostringstream s;
  s << r.k << ',' << r.delta << ',' << r.p << ',' << r.n << ',' << to_string(r.alpha) << ','
    << to_string(r.certified_bound) << ',' << to_string(r.theorem_bound) << ',' << to_string(r.conjectured_radius)
    << ',' << to_string(r.gmpst_radius) << ',' << to_string(r.shearer_radius) << ','
    << (r.falsified ? "true" : "false") << ',' << to_string(r.ratio);
  return s.str();
}

int cmd_sweep(std::size_t k, const std::vector<std::size_t>& deltas, const std::string& c_text, Streams io) {
  if (k < 3) throw UsageError("sweep requires --k >= 3");
  BigRational c;
  try {
    c = parse_rational(c_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--C: ") + e.what());
  }
  if (c <= 0) throw UsageError("--C must be positive");
  for (std::size_t delta : deltas) {
    if (delta + 1 < k || delta < 2) throw UsageError("every --delta must be >= max(k - 1, 2)");
  }

  std::vector<SweepRow> rows;
  rows.reserve(deltas.size());
  for (std::size_t delta : deltas) {
    try {
      rows.push_back(compare_bounds(k, delta, c));
    } catch (const CertificationFailure& e) {
      io.err << e.what() << '\n';
      return kExitHypothesis;
    }
  }
  io.out << sweep_csv_header() << '\n';
  for (const auto& row : rows) io.out << sweep_csv_row(row) << '\n';
  return kExitOk;
}

}  // namespace zfr::cli
