// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "zfr/certify.hpp"
#include "zfr/construct.hpp"
#include "zfr/generators.hpp"
#include "zfr/polynomial.hpp"
#include "zfr/roots.hpp"

using namespace zfr;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Accumulates the failures of one criterion.
class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)), start_(Clock::now()) {}

  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  double elapsed() const { return seconds_since(start_); }

  bool report(int number) const {
    const bool ok = failures_.empty();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << title_ << " (" << std::fixed
              << std::setprecision(2) << elapsed() << " s)";
    for (const auto& n : notes_) std::cout << "; " << n;
    std::cout << '\n';
    for (const auto& f : failures_) std::cout << "         - " << f << '\n';
    return ok;
  }

 private:
  std::string title_;
  Clock::time_point start_;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

// Every root the suite computes, with the maximum degree of the hypergraph it belongs to.
struct RootLog {
  struct Entry {
    std::string origin;
    std::size_t delta;
    std::vector<RootBracket> brackets;
    std::vector<ComplexRoot> numeric;
  };
  std::vector<Entry> entries;

  void add(std::string origin, std::size_t delta, std::vector<RootBracket> brackets, std::vector<ComplexRoot> numeric) {
    entries.push_back({std::move(origin), delta, std::move(brackets), std::move(numeric)});
  }
};

std::string q(const BigRational& x) { return to_string(x); }

std::string decimal(const BigRational& x, int digits = 8) {
  std::ostringstream s;
  s << std::setprecision(digits) << to_double(x);
  return s.str();
}

Hypergraph triangle() { return Hypergraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}); }

Hypergraph pairs_and_triples(std::size_t n) {
  Hypergraph::Builder b(n);
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId c = a + 1; c < n; ++c) {
      b.add_edge({a, c});
      for (VertexId d = c + 1; d < n; ++d) b.add_edge({a, c, d});
    }
  }
  return std::move(b).build();
}

std::size_t sg_max_degree(const Hypergraph& g) {
  return g.edge_count() == 0 ? 0 : degree_profile(s_transform(g)).max_degree;
}

bool closed_form_vs_bruteforce() {
  Criterion c("closed form == brute force on S_G");
  std::size_t compared = 0;
  auto compare = [&](const Hypergraph& g, const std::string& label) {
    ++compared;
    if (!(z_sg_closed_form(g) == independence_poly_bruteforce(s_transform(g)))) c.require(false, "mismatch on " + label);
  };
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const Hypergraph g = random_hypergraph(1 + rng() % 8, 10, 4, rng);
    compare(g, "random #" + std::to_string(i));
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : all_graphs(n)) compare(g, "graph on " + std::to_string(n) + " vertices");
  }
  c.note(std::to_string(compared) + " hypergraphs");
  c.require(c.elapsed() < 60.0, "runtime >= 60 s");
  return c.report(1);
}

bool triangle_regression(RootLog& roots) {
  Criterion c("triangle: Z_{S_G}, exact root -1/2, GMPST radius");
  const Hypergraph t = triangle();
  const IntPolynomial expected({1, 6, 15, 17, 6});
  const auto counts = oracle::independence_counts(s_transform(t));
  c.require(IntPolynomial(std::vector<BigInt>(counts.begin(), counts.end())) == expected,
            "subset-enumeration oracle disagrees with 1+6x+15x^2+17x^3+6x^4");
  c.require(independence_poly_bruteforce(s_transform(t)) == expected, "brute force disagrees");
  const IntPolynomial z = z_sg_closed_form(t);
  c.require(z == expected, "closed form disagrees");

  const auto bracket = isolate_real_root(z, BigRational(-1), BigRational(0), BigRational(1, 1000000));
  const bool exact = bracket && bracket->exact_root && *bracket->exact_root == BigRational(-1, 2);
  c.require(exact, "isolate_real_root did not return the exact root -1/2");
  const BigRational radius = gmpst_radius(2).lo;
  c.require(radius == BigRational(4, 27), "GMPST radius for delta = 2 is not 4/27");
  c.require(BigRational(1, 2) >= radius, "|-1/2| < 4/27");
  const ComplexRootsResult numeric = complex_roots(z);
  c.require(numeric.converged, "Aberth iteration did not converge");
  if (bracket) roots.add("triangle", 2, {*bracket}, numeric.roots);
  c.require(c.elapsed() < 1.0, "runtime >= 1 s");
  return c.report(2);
}

bool construction_invariants() {
  Criterion c("construction invariants, k in {3,4,5}, delta in k-1..30");
  std::size_t cases = 0;
  for (std::size_t k = 3; k <= 5; ++k) {
    for (std::size_t delta = k - 1; delta <= 30; ++delta) {
      ++cases;
      const std::string tag = "k=" + std::to_string(k) + " delta=" + std::to_string(delta) + ": ";
      const auto [h, p] = h_construction(k - 1, delta);
      const DegreeProfile dh = degree_profile(h);
      c.require(uniformity(h) == k - 1, tag + "H not (k-1)-uniform");
      c.require(dh.min_degree == delta && dh.max_degree == delta, tag + "H not delta-regular");
      c.require(is_linear(h) && oracle::is_linear(h), tag + "H not linear");
      c.require(h.vertex_count() <= 2 * (k - 1) * delta, tag + "H has more than 2(k-1)delta vertices");

      const Counterexample cx = counterexample(k, delta);
      c.require(cx.h.vertex_count() % 2 == 1, tag + "trimmed H has an even vertex count");
      c.require(uniformity(cx.s_h) == k, tag + "S_H not k-uniform");
      c.require(is_linear(cx.s_h), tag + "S_H not linear");
      c.require(degree_profile(cx.s_h).max_degree == delta, tag + "S_H max degree != delta");
      c.require(degree_profile(cx.h).min_degree + 1 >= delta, tag + "trimmed H min degree < delta-1");
    }
  }
  c.note(std::to_string(cases) + " parameter pairs");
  c.require(c.elapsed() < 60.0, "runtime >= 60 s");
  return c.report(3);
}

bool theorem_scale_certificate() {
  Criterion c("certificate k=3, delta=1000 and delta=10^6");
  const BigRational stated_lambda_bound = parse_rational("0.045665");
  const BigRational stated_theorem_bound = parse_rational("0.124346");

  const auto t0 = Clock::now();
  const RootCertificate e = certify_counterexample(3, 1000, CertificateMode::Explicit);
  const double explicit_s = seconds_since(t0);
  const auto t1 = Clock::now();
  const RootCertificate a = certify_counterexample(3, 1000, CertificateMode::Analytic);
  const double analytic_s = seconds_since(t1);

  c.require(e.issued(), "explicit certificate not issued");
  c.require(e.n == 2017, "n != 2017");
  c.require(e.alpha == BigRational(999, 2), "alpha != 999/2");
  if (e.lambda0 && e.theorem_bound) {
    const BigRational mag = abs(*e.lambda0);
    c.note("|lambda0| <= " + decimal(mag, 10) + ", theorem bound " + decimal(*e.theorem_bound, 10));
    c.require(mag <= stated_lambda_bound, "|lambda0| = " + decimal(mag, 10) + " exceeds the stated 0.045665");
    c.require(stated_lambda_bound <= stated_theorem_bound, "0.045665 > 0.124346");
    c.require(*e.theorem_bound <= stated_theorem_bound, "theorem bound exceeds 0.124346");
    c.require(mag <= *e.theorem_bound, "|lambda0| exceeds the theorem bound");
  } else {
    c.require(false, "explicit certificate has no lambda0 or theorem bound");
  }
  const VerificationResult v = verify_certificate_json(certificate_to_json(e));
  c.require(v.valid, "explicit certificate JSON does not re-verify");

  c.require(a.issued(), "analytic certificate not issued");
  c.require(a.n == e.n && a.alpha == e.alpha && a.lambda0 == e.lambda0 && a.theorem_bound == e.theorem_bound,
            "analytic certificate differs from explicit");
  c.require(verify_certificate_json(certificate_to_json(a)).valid, "analytic certificate JSON does not re-verify");

  const auto t2 = Clock::now();
  const RootCertificate big = certify_counterexample(3, 1000000, CertificateMode::Analytic);
  const double big_s = seconds_since(t2);
  c.require(big.issued(), "delta=10^6 certificate not issued");
  if (big.lambda0) {
    c.require(abs(*big.lambda0) <= parse_rational("2.5e-4"), "delta=10^6: |lambda0| > 2.5e-4");
    c.note("delta=10^6 |lambda0| <= " + decimal(abs(*big.lambda0), 6));
  }
  c.require(verify_certificate_json(certificate_to_json(big)).valid, "delta=10^6 certificate JSON does not re-verify");

  std::ostringstream times;
  times << std::fixed << std::setprecision(2) << "explicit " << explicit_s << " s, analytic " << analytic_s << " s";
  c.note(times.str());
  c.require(explicit_s < 30.0, "explicit mode >= 30 s");
  c.require(analytic_s < 1.0 && big_s < 1.0, "analytic mode >= 1 s");
  return c.report(4);
}

bool inequality_chain_and_synthetic(RootLog& roots) {
  Criterion c("T-bar < 1 on odd n in 3..10001; synthetic instances with Z(lambda0) < 0");
  std::size_t grid = 0;
  for (unsigned long n = 3; n <= 10001; n += 2) {
    // ⌈3 ln n⌉ from a rational enclosure: both ends must agree on the ceiling.
    const rigorous::Enclosure ln = rigorous::log(BigRational(n));
    BigInt lo_ceil;
    BigInt hi_ceil;
    const BigRational three_lo = 3 * ln.lo;
    const BigRational three_hi = 3 * ln.hi;
    mpz_cdiv_q(lo_ceil.get_mpz_t(), three_lo.get_num_mpz_t(), three_lo.get_den_mpz_t());
    mpz_cdiv_q(hi_ceil.get_mpz_t(), three_hi.get_num_mpz_t(), three_hi.get_den_mpz_t());
    if (lo_ceil != hi_ceil) {
      c.require(false, "ceil(3 ln " + std::to_string(n) + ") not determined");
      continue;
    }
    for (const BigRational& alpha : {BigRational(hi_ceil), BigRational(n)}) {
      ++grid;
      if (!verify_inequality_chain(n, alpha).tbar_below_one) {
        c.require(false, "T-bar >= 1 at n=" + std::to_string(n) + ", alpha=" + q(alpha));
      }
    }
  }
  c.note(std::to_string(grid) + " (n, alpha) pairs");

  for (std::size_t n : {7, 9}) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    const Hypergraph h = pairs_and_triples(n);
    const BigRational alpha(static_cast<unsigned long>(n));
    const mpq_class ratio = oracle::min_cover_ratio(h);
    c.require(alpha <= ratio, tag + "alpha exceeds the exhaustive min e(S)/|S| = " + q(ratio));
    const RootCertificate cert = certify_root_interval(n, alpha);
    c.require(cert.issued(), tag + "lemma hypotheses not met");
    if (!cert.lambda0) continue;
    const BigRational lambda0 = *cert.lambda0;
    c.require(eval_point_closed_form_exact(h, lambda0) < 0, tag + "Z(lambda0) is not negative");
    c.require(eval_point_closed_form_exact(h, BigRational(0)) == 1, tag + "Z(0) != 1");
    const IntPolynomial z = z_sg_closed_form(h);
    const auto bracket = isolate_real_root(z, lambda0, BigRational(0), parse_rational("1e-20"));
    c.require(bracket && bracket->lo >= lambda0 && bracket->hi <= 0, tag + "no root bracketed in [lambda0, 0]");
    const std::size_t delta = degree_profile(s_transform(h)).max_degree;
    if (bracket) {
      c.note(tag + "root in [" + decimal(bracket->lo) + ", " + decimal(bracket->hi) + "], lambda0 = " +
             decimal(lambda0));
      roots.add("synthetic " + tag, delta, {*bracket}, complex_roots(z).roots);
    }
  }
  c.require(c.elapsed() < 300.0, "runtime >= 5 min");
  return c.report(5);
}

bool falsification_sweep() {
  Criterion c("sweep k=3, C=1: ratio strictly decreasing, < 1 from 10^5");
  // certified_bound / Δ^(-1/2) with certified_bound = 18 ln Δ / Δ, recomputed at 40 digits.
  const std::vector<std::pair<std::size_t, const char*>> expected = {
      {10000, "1.657861266955712892"},
      {100000, "0.655327206019062082"},
      {1000000, "0.248679190043356933"},
      {10000000, "0.0917458088426686915"},
  };
  BigRational previous;
  bool first = true;
  std::string ratios;
  for (const auto& [delta, value] : expected) {
    const SweepRow row = compare_bounds(3, delta, BigRational(1));
    ratios += (ratios.empty() ? "" : ", ") + decimal(row.ratio, 6);
    c.require(abs(row.ratio - parse_rational(value)) < parse_rational("1e-12"),
              "delta=" + std::to_string(delta) + ": ratio " + decimal(row.ratio, 18) + " != " + value);
    if (!first) c.require(row.ratio < previous, "ratio not strictly decreasing at delta=" + std::to_string(delta));
    if (delta >= 100000) {
      c.require(row.ratio < 1 && row.falsified, "ratio >= 1 at delta=" + std::to_string(delta));
    }
    previous = row.ratio;
    first = false;
  }
  c.note("ratios " + ratios);
  c.require(c.elapsed() < 10.0, "runtime >= 10 s");
  return c.report(6);
}

bool zfr_conformance(RootLog& roots) {
  Criterion c("every computed root clears the GMPST radius");
  // Numeric roots of further small transforms, and of the smallest counterexample.
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& g : all_graphs(n)) {
      if (g.edge_count() == 0) continue;
      roots.add("S_G, graph on " + std::to_string(n), sg_max_degree(g), {}, complex_roots(z_sg_closed_form(g)).roots);
    }
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Hypergraph g = random_hypergraph(2 + rng() % 7, 10, 4, rng);
    if (g.edge_count() == 0) continue;
    const IntPolynomial z = z_sg_closed_form(g);
    std::vector<RootBracket> brackets;
    if (auto b = isolate_real_root(z, BigRational(-1), BigRational(0), BigRational(1, 1000000000))) {
      brackets.push_back(*b);
    }
    roots.add("random S_G #" + std::to_string(i), sg_max_degree(g), brackets, complex_roots(z).roots);
  }
  const Counterexample cx = counterexample(3, 4);
  roots.add("S_H, k=3 delta=4", degree_profile(cx.s_h).max_degree, {}, complex_roots(z_sg_closed_form(cx.h)).roots);

  std::size_t checked = 0;
  std::size_t skipped = 0;
  for (const auto& e : roots.entries) {
    std::vector<ComplexRoot> accurate;
    for (const auto& r : e.numeric) {
      if (r.residual < 1e-8) {
        accurate.push_back(r);
      } else {
        ++skipped;
      }
    }
    const ZfrReport rep = check_zfr_conformance(e.brackets, accurate, e.delta);
    checked += rep.roots_checked;
    for (const auto& v : rep.violations) {
      c.require(false, e.origin + ": root " + v.root + " has |root| = " + std::to_string(v.magnitude));
    }
  }
  c.note(std::to_string(checked) + " roots checked, " + std::to_string(skipped) + " numeric roots with residual >= 1e-8");
  return c.report(7);
}

}  // namespace

int main() {
  RootLog roots;
  int failed = 0;
  failed += closed_form_vs_bruteforce() ? 0 : 1;
  failed += triangle_regression(roots) ? 0 : 1;
  failed += construction_invariants() ? 0 : 1;
  failed += theorem_scale_certificate() ? 0 : 1;
  failed += inequality_chain_and_synthetic(roots) ? 0 : 1;
  failed += falsification_sweep() ? 0 : 1;
  failed += zfr_conformance(roots) ? 0 : 1;
  std::cout << (7 - failed) << "/7 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
