#include <cmath>
#include <iostream>
#include <random>

#include "zfr/commands.hpp"
#include "zfr/construct.hpp"
#include "zfr/generators.hpp"
#include "zfr/roots.hpp"

namespace zfr::cli {

bool SelftestResult::all_passed() const {
  for (const auto& [name, ok] : checks) {
    if (!ok) return false;
  }
  return true;
}

namespace {

class Recorder {
 public:
  Recorder(std::ostream& log, SelftestResult& result) : log_(log), result_(result) {}

  void record(const std::string& name, bool ok, const std::string& detail = {}) {
    result_.checks.emplace_back(name, ok);
    log_ << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !detail.empty()) log_ << ": " << detail;
    log_ << '\n';
  }

 private:
  std::ostream& log_;
  SelftestResult& result_;
};

std::string describe(const IntPolynomial& p) {
  std::string s;
  for (const auto& c : p.coeff_strings()) s += (s.empty() ? "" : ",") + c;
  return "[" + s + "]";
}

}  // namespace

SelftestResult run_selftest(std::ostream& log, const SelftestHooks& hooks) {
  SelftestResult result;
  Recorder rec(log, result);
  const auto closed_form = hooks.closed_form ? hooks.closed_form : [](const Hypergraph& g) { return z_sg_closed_form(g); };

  // Closed form against enumeration on S_G.
  {
    std::string mismatch;
    auto compare = [&](const Hypergraph& g) {
      if (!mismatch.empty()) return;
      const IntPolynomial fast = closed_form(g);
      const IntPolynomial slow = independence_poly_bruteforce(s_transform(g));
      if (!(fast == slow)) mismatch = "oracle mismatch on n = " + std::to_string(g.vertex_count()) +
                                      ", |E| = " + std::to_string(g.edge_count()) + ": closed form " +
                                      describe(fast) + " vs brute force " + describe(slow);
    };
    for (std::size_t n = 1; n <= 4; ++n) {
      for (const auto& g : all_graphs(n)) compare(g);
    }
    std::mt19937_64 rng(20240229);
    for (int i = 0; i < 60; ++i) compare(random_hypergraph(1 + rng() % 7, 9, 4, rng));
    rec.record("closed_form_matches_bruteforce", mismatch.empty(), mismatch);
  }

  // The triangle and its transform.
  {
    const Hypergraph triangle = Hypergraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    const IntPolynomial z = independence_poly_bruteforce(s_transform(triangle));
    const IntPolynomial expected({1, 6, 15, 17, 6});
    rec.record("triangle_polynomial", z == expected, describe(z));
    const auto bracket = isolate_real_root(z, BigRational(-1), BigRational(0), BigRational(1, 1000000));
    const bool exact_half = bracket && bracket->exact_root && *bracket->exact_root == BigRational(-1, 2);
    rec.record("triangle_root_minus_half", exact_half);
  }

  // Construction invariants at desk scale.
  {
    std::string failure;
    for (std::size_t k = 2; k <= 4 && failure.empty(); ++k) {
      for (std::size_t delta = k; delta <= 12 && failure.empty(); ++delta) {
        const auto [h, p] = h_construction(k, delta);
        const DegreeProfile d = degree_profile(h);
        if (uniformity(h) != k || !is_linear(h) || d.min_degree != delta || d.max_degree != delta ||
            h.vertex_count() > 2 * k * delta) {
          failure = "H_{" + std::to_string(k) + "," + std::to_string(delta) + "}";
        }
      }
    }
    rec.record("construction_invariants", failure.empty(), failure);
  }

  // Gray-code bookkeeping closes its cycle.
  {
    std::mt19937_64 rng(7);
    const Hypergraph g = random_hypergraph(9, 12, 3, rng);
    CoverageTracker tracker(g);
    const std::uint64_t steps = std::uint64_t{1} << g.vertex_count();
    for (std::uint64_t t = 1; t <= steps; ++t) {
      tracker.toggle(static_cast<VertexId>(std::countr_zero(t == steps ? steps >> 1 : t)));
    }
    bool zero = tracker.covered() == 0 && tracker.size() == 0;
    for (auto h : tracker.hits()) zero = zero && h == 0;
    rec.record("gray_code_cycle_returns_to_empty", zero);
  }

  // Inequality chain on a small odd grid.
  {
    std::string failure;
    for (std::size_t n = 3; n <= 301 && failure.empty(); n += 2) {
      const auto alpha_lo = static_cast<unsigned long>(std::ceil(3.0 * std::log(static_cast<double>(n))));
      for (unsigned long alpha : {alpha_lo, static_cast<unsigned long>(n)}) {
        if (!verify_inequality_chain(n, BigRational(alpha)).tbar_below_one) {
          failure = "n = " + std::to_string(n) + ", alpha = " + std::to_string(alpha);
        }
      }
    }
    rec.record("inequality_chain_small_grid", failure.empty(), failure);
  }

  // Theorem-scale analytic certificate re-verifies from its JSON.
  {
    const RootCertificate cert = certify_counterexample(3, 1000, CertificateMode::Analytic);
    const VerificationResult v = verify_certificate_json(certificate_to_json(cert));
    rec.record("certificate_k3_delta1000", cert.issued() && v.valid,
               v.problems.empty() ? std::string{} : v.problems.front());
  }

  return result;
}

int cmd_selftest(bool mutate_closed_form, Streams io) {
  SelftestHooks hooks;
  if (mutate_closed_form) {
    hooks.closed_form = [](const Hypergraph& g) {
      std::vector<BigInt> c = z_sg_closed_form(g).coeffs();
      if (c.size() > 1) c[1] += 1;
      return IntPolynomial(std::move(c));
    };
  }
  const SelftestResult r = run_selftest(io.out, hooks);
  std::size_t passed = 0;
  for (const auto& [name, ok] : r.checks) passed += ok ? 1 : 0;
  io.out << passed << '/' << r.checks.size() << " checks passed\n";
  return r.all_passed() ? kExitOk : kExitUsage;
}

}  // namespace zfr::cli
