#include "zfr/certify.hpp"

#include <algorithm>

#include "zfr/construct.hpp"

namespace zfr {

using rigorous::Enclosure;
using rigorous::Round;
using Json = nlohmann::ordered_json;

std::string to_string(CertificateMode mode) {
  switch (mode) {
    case CertificateMode::Lemma: return "lemma";
    case CertificateMode::Explicit: return "explicit";
    case CertificateMode::Analytic: return "analytic";
  }
  return "unknown";
}

CertificateMode parse_certificate_mode(const std::string& text) {
  if (text == "explicit") return CertificateMode::Explicit;
  if (text == "analytic") return CertificateMode::Analytic;
  if (text == "lemma") return CertificateMode::Lemma;
  throw std::invalid_argument("unknown certificate mode '" + text + "' (expected explicit or analytic)");
}

bool RootCertificate::issued() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass || !c.required; });
}

std::vector<std::string> RootCertificate::failed_checks() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.pass && c.required) out.push_back(c.name);
  }
  return out;
}

const Check* RootCertificate::find_check(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

BigRational alpha_from_degrees(const Hypergraph& h) {
  const auto u = uniformity(h);
  if (!u) throw std::invalid_argument("alpha_from_degrees needs a uniform hypergraph with at least one edge");
  const DegreeProfile profile = degree_profile(h);
  BigRational alpha(static_cast<unsigned long>(profile.min_degree), static_cast<unsigned long>(*u));
  alpha.canonicalize();
  return alpha;
}

namespace {

Enclosure scaled(const Enclosure& e, const BigRational& factor) { return {e.lo * factor, e.hi * factor}; }

Check make_check(std::string name, bool pass, std::string detail, bool required = true) {
  Check c;
  c.name = std::move(name);
  c.pass = pass;
  c.required = required;
  c.detail = std::move(detail);
  return c;
}

BigRational ratio(std::size_t num, std::size_t den) {
  BigRational q(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

// 3(k-1) ln(2Δk)/(Δ-1) and 6k ln(Δ)/Δ.
Enclosure intermediate_bound(std::size_t k, std::size_t delta) {
  const Enclosure l = rigorous::log(BigRational(static_cast<unsigned long>(2 * delta * k)));
  return scaled(l, ratio(3 * (k - 1), delta - 1));
}

Enclosure theorem_bound_enclosure(std::size_t k, std::size_t delta) {
  const Enclosure l = rigorous::log(BigRational(static_cast<unsigned long>(delta)));
  return scaled(l, ratio(6 * k, delta));
}

void add_theorem_checks(RootCertificate& cert) {
  const std::size_t k = cert.k;
  const std::size_t delta = cert.delta;

  {
    const std::size_t limit = 2 * k * delta;
    Check c = make_check("n_le_2k_delta", cert.n <= limit, "n exceeds 2k*delta");
    c.evidence = {{"n", cert.n}, {"limit", limit}};
    cert.checks.push_back(std::move(c));
  }

  const Enclosure middle = intermediate_bound(k, delta);
  const Enclosure top = theorem_bound_enclosure(k, delta);
  const BigRational middle_lo = rigorous::round(middle.lo, Round::Down);
  const BigRational middle_hi = rigorous::round(middle.hi, Round::Up);
  const BigRational top_lo = rigorous::round(top.lo, Round::Down);
  cert.theorem_bound = rigorous::round(top.hi, Round::Up);

  if (cert.lambda0) {
    const BigRational magnitude = abs(*cert.lambda0);
    Check c = make_check("chain_lambda0_le_intermediate", magnitude <= middle_lo,
                         "|lambda0| exceeds 3(k-1) ln(2 delta k)/(delta-1)");
    c.evidence = {{"abs_lambda0", to_string(magnitude)}, {"intermediate_lower", to_string(middle_lo)}};
    cert.checks.push_back(std::move(c));
  } else {
    cert.checks.push_back(make_check("chain_lambda0_le_intermediate", false, "lambda0 undefined"));
  }
  {
    Check c = make_check("chain_intermediate_le_theorem", middle_hi <= top_lo,
                         "3(k-1) ln(2 delta k)/(delta-1) exceeds 6k ln(delta)/delta");
    c.evidence = {{"intermediate_upper", to_string(middle_hi)}, {"theorem_lower", to_string(top_lo)}};
    cert.checks.push_back(std::move(c));
  }
  {
    const bool pass = cert.lambda0 && abs(*cert.lambda0) <= *cert.theorem_bound;
    Check c = make_check("lambda0_within_theorem_bound", pass, "|lambda0| exceeds the theorem bound");
    c.evidence = {{"theorem_bound", to_string(*cert.theorem_bound)}};
    cert.checks.push_back(std::move(c));
  }
  {
    const std::size_t threshold = 100 * k * k;
    Check c = make_check("delta_gt_100k2", delta > threshold, "delta <= 100 k^2: below the theorem's range",
                         /*required=*/false);
    c.evidence = {{"delta", delta}, {"threshold", threshold}};
    cert.checks.push_back(std::move(c));
  }
}

}  // namespace

RootCertificate certify_root_interval(std::size_t n, const BigRational& alpha) {
  RootCertificate cert;
  cert.mode = CertificateMode::Lemma;
  cert.n = n;
  cert.alpha = alpha;
  if (n >= 1) cert.three_log_n = scaled(rigorous::log(BigRational(static_cast<unsigned long>(n))), BigRational(3));

  cert.checks.push_back(make_check("n_odd", n % 2 == 1, "n must be odd"));
  cert.checks.push_back(make_check("n_ge_3", n >= 3, "n must be at least 3"));
  {
    Check c = make_check("alpha_ge_3ln_n", n >= 1 && alpha >= cert.three_log_n.hi, "alpha < 3 ln n");
    c.evidence = {{"alpha", to_string(alpha)}, {"three_ln_n_upper", to_string(cert.three_log_n.hi)}};
    cert.checks.push_back(std::move(c));
  }
  cert.checks.push_back(make_check("alpha_le_n", alpha <= BigRational(static_cast<unsigned long>(n)), "alpha > n"));

  if (alpha > 0 && n >= 1) {
    // -3 ln(n)/alpha rounded toward -infinity.
    cert.lambda0 = -rigorous::round(cert.three_log_n.hi / alpha, Round::Up);
    const bool in_range = *cert.lambda0 >= -1 && *cert.lambda0 <= 0;
    cert.checks.push_back(make_check("lambda0_in_range", in_range, "lambda0 lies outside [-1, 0]"));
  } else {
    cert.checks.push_back(make_check("lambda0_in_range", false, "alpha must be positive"));
  }
  return cert;
}

InequalityChainReport verify_inequality_chain(std::size_t n, const BigRational& alpha, bool with_majorant) {
  if (n < 2) throw std::invalid_argument("verify_inequality_chain needs n >= 2");
  if (alpha <= 0) throw std::invalid_argument("verify_inequality_chain needs alpha > 0");
  InequalityChainReport report;
  report.n = n;
  report.alpha = alpha;

  // Σ_{k>=1} C(n,k) x^k = (1+x)^n - 1 with x = α/n³ = a/(b n³).
  // Reducing 1 + x first leaves num, den and so (num - den)/den coprime, which
  // avoids a gcd on n-fold powers.
  const BigInt n_cubed = BigInt(static_cast<unsigned long>(n)) * n * n;
  BigRational base(alpha.get_den() * n_cubed + alpha.get_num(), alpha.get_den() * n_cubed);
  base.canonicalize();
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), n);
  report.tbar_below_one = num < 2 * den;
  report.tbar = BigRational(num - den, den);

  if (with_majorant) {
    // Σ_{k=1}^n y^k/k! with y = α/n², via Horner: y(1 + y/2(1 + y/3(...))).
    const BigRational y = alpha / BigRational(BigInt(static_cast<unsigned long>(n)) * n);
    BigRational acc = 1;
    for (std::size_t k = n; k >= 2; --k) acc = 1 + acc * y / BigRational(static_cast<unsigned long>(k));
    report.majorant = acc * y;
    report.majorant_dominates = report.tbar <= *report.majorant;
  }
  return report;
}

RootCertificate certify_counterexample(std::size_t k, std::size_t delta, CertificateMode mode,
                                       const CertifyOptions& options) {
  if (k < 3) throw CertifyInputError("certify requires k >= 3, got k = " + std::to_string(k));
  if (delta < k - 1 || delta < 2) {
    throw CertifyInputError("certify requires delta >= max(k - 1, 2), got delta = " + std::to_string(delta));
  }
  if (mode == CertificateMode::Lemma) throw CertifyInputError("certify_counterexample needs explicit or analytic mode");

  const std::uint64_t p = find_prime_in(delta);
  RootCertificate cert;
  HypothesisEvidence evidence;
  std::vector<Check> construction_checks;
  std::optional<VertexId> removed;

  if (mode == CertificateMode::Explicit) {
    if (p * delta > options.edge_cap) {
      throw CertifyInputError("explicit mode would build " + std::to_string(p * delta) +
                              " edges, above the cap of " + std::to_string(options.edge_cap) +
                              "; use --mode analytic");
    }
    const Counterexample cx = counterexample(k, delta);
    const DegreeProfile profile = degree_profile(cx.h);
    const auto u = uniformity(cx.h);
    evidence.uniformity = u.value_or(0);
    evidence.min_degree = profile.min_degree;
    evidence.max_degree = profile.max_degree;
    removed = cx.meta.removed_vertex;

    construction_checks.push_back(make_check("h_uniform", u == k - 1, "H is not (k-1)-uniform"));
    construction_checks.push_back(make_check("h_linear", is_linear(cx.h), "H is not linear"));
    construction_checks.push_back(make_check("sg_uniform", uniformity(cx.s_h) == k, "S_H is not k-uniform"));
    construction_checks.push_back(make_check("sg_linear", is_linear(cx.s_h), "S_H is not linear"));
    construction_checks.push_back(
        make_check("sg_max_degree", degree_profile(cx.s_h).max_degree == delta, "S_H max degree differs from delta"));

    cert = certify_root_interval(cx.h.vertex_count(), alpha_from_degrees(cx.h));
  } else {
    // (k-1)p vertices; when even, the highest vertex goes, and the k-2 other
    // members of each of its Δ edges are distinct (linearity), so δ = Δ - 1.
    const std::size_t full = (k - 1) * p;
    const bool trimmed = full % 2 == 0;
    evidence.uniformity = k - 1;
    evidence.min_degree = trimmed ? delta - 1 : delta;
    evidence.max_degree = delta;
    if (trimmed) removed = static_cast<VertexId>(full - 1);
    cert = certify_root_interval(trimmed ? full - 1 : full, ratio(evidence.min_degree, k - 1));
  }

  cert.mode = mode;
  cert.k = k;
  cert.delta = delta;
  cert.p = p;
  cert.removed_vertex = removed;
  cert.evidence = evidence;
  cert.checks.insert(cert.checks.begin(), construction_checks.begin(), construction_checks.end());
  add_theorem_checks(cert);
  return cert;
}

Json certificate_to_json(const RootCertificate& cert) {
  Json j;
  j["mode"] = to_string(cert.mode);
  j["certified"] = cert.issued();
  if (cert.mode != CertificateMode::Lemma) {
    j["k"] = cert.k;
    j["delta"] = cert.delta;
    j["p"] = cert.p;
    j["removed_vertex"] = cert.removed_vertex ? Json(*cert.removed_vertex) : Json(nullptr);
  }
  j["n"] = cert.n;
  j["alpha"] = to_string(cert.alpha);
  if (cert.lambda0) {
    j["lambda0"] = to_string(*cert.lambda0);
    j["interval"] = Json::array({to_string(*cert.lambda0), "0"});
  } else {
    j["lambda0"] = nullptr;
    j["interval"] = nullptr;
  }
  j["theorem_bound"] = cert.theorem_bound ? Json(to_string(*cert.theorem_bound)) : Json(nullptr);

  Json evidence;
  if (cert.evidence) {
    evidence["uniformity"] = cert.evidence->uniformity;
    evidence["min_degree"] = cert.evidence->min_degree;
    evidence["max_degree"] = cert.evidence->max_degree;
    evidence["alpha_formula"] = "min_degree/uniformity";
  }
  evidence["three_ln_n"] = {{"lo", to_string(cert.three_log_n.lo)}, {"hi", to_string(cert.three_log_n.hi)}};
  evidence["alpha_vs_3ln_n"] = {{"alpha", to_string(cert.alpha)},
                                {"three_ln_n_upper", to_string(cert.three_log_n.hi)},
                                {"holds", cert.n >= 1 && cert.alpha >= cert.three_log_n.hi}};
  j["hypothesis_evidence"] = std::move(evidence);

  Json checks = Json::array();
  for (const auto& c : cert.checks) {
    Json item{{"name", c.name}, {"pass", c.pass}, {"required", c.required}};
    if (!c.pass) item["detail"] = c.detail;
    if (!c.evidence.empty()) item["evidence"] = c.evidence;
    checks.push_back(std::move(item));
  }
  j["checks"] = std::move(checks);
  return j;
}

namespace {

// Verifier arithmetic: a different precision from the issuer and direct
// mpfr-vs-rational comparisons instead of decimal enclosures.
constexpr mpfr_prec_t kVerifierPrecision = 192;

class VerifierReal {
 public:
  VerifierReal() { mpfr_init2(v_, kVerifierPrecision); }
  VerifierReal(const VerifierReal&) = delete;
  VerifierReal& operator=(const VerifierReal&) = delete;
  ~VerifierReal() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// True iff q >= factor * ln(x) / divisor, decided with an upper bound on the right side.
bool rational_dominates_scaled_log(const BigRational& q, unsigned long factor, unsigned long x,
                                   unsigned long divisor) {
  VerifierReal r;
  mpfr_set_ui(r.get(), x, MPFR_RNDU);
  mpfr_log(r.get(), r.get(), MPFR_RNDU);
  mpfr_mul_ui(r.get(), r.get(), factor, MPFR_RNDU);
  mpfr_div_ui(r.get(), r.get(), divisor, MPFR_RNDU);
  return mpfr_cmp_q(r.get(), q.get_mpq_t()) <= 0;
}

}  // namespace

VerificationResult verify_certificate_json(const Json& j) {
  VerificationResult out;
  auto problem = [&](std::string s) { out.problems.push_back(std::move(s)); };
  try {
    if (!j.value("certified", false)) problem("record does not claim a certificate");
    const std::size_t n = j.at("n").get<std::size_t>();
    const BigRational alpha = parse_rational(j.at("alpha").get<std::string>());
    if (j.at("lambda0").is_null()) throw std::invalid_argument("lambda0 missing");
    const BigRational lambda0 = parse_rational(j.at("lambda0").get<std::string>());
    const auto& interval = j.at("interval");
    if (!interval.is_array() || interval.size() != 2 ||
        parse_rational(interval[0].get<std::string>()) != lambda0 || parse_rational(interval[1].get<std::string>()) != 0) {
      problem("interval is not [lambda0, 0]");
    }

    if (n < 3) problem("n < 3");
    if (n % 2 == 0) problem("n is even");
    if (alpha > BigRational(static_cast<unsigned long>(n))) problem("alpha > n");
    if (!rational_dominates_scaled_log(alpha, 3, n, 1)) problem("alpha >= 3 ln n not established");
    if (!rational_dominates_scaled_log(-lambda0 * alpha, 3, n, 1)) problem("lambda0 > -3 ln(n)/alpha");
    if (lambda0 < -1 || lambda0 > 0) problem("lambda0 outside [-1, 0]");

    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "explicit" || mode == "analytic") {
      const std::size_t k = j.at("k").get<std::size_t>();
      const std::size_t delta = j.at("delta").get<std::size_t>();
      const std::uint64_t p = j.at("p").get<std::uint64_t>();
      if (k < 3 || delta < 2) throw std::invalid_argument("k or delta out of range");
      if (!is_prime(p) || p < delta || p > 2 * delta || find_prime_in(delta) != p) {
        problem("p is not the smallest prime >= delta");
      }
      const std::uint64_t full = (k - 1) * p;
      const bool trimmed = full % 2 == 0;
      if (n != (trimmed ? full - 1 : full)) problem("n does not match (k-1)p after the parity trim");
      const auto& ev = j.at("hypothesis_evidence");
      const std::size_t u = ev.at("uniformity").get<std::size_t>();
      const std::size_t min_degree = ev.at("min_degree").get<std::size_t>();
      if (u != k - 1) problem("uniformity of H is not k-1");
      if (min_degree != (trimmed ? delta - 1 : delta)) problem("min degree inconsistent with the construction");
      BigRational expected_alpha(static_cast<unsigned long>(min_degree), static_cast<unsigned long>(u));
      expected_alpha.canonicalize();
      if (alpha != expected_alpha) problem("alpha != min_degree/uniformity");

      if (j.at("theorem_bound").is_null()) throw std::invalid_argument("theorem_bound missing");
      const BigRational bound = parse_rational(j.at("theorem_bound").get<std::string>());
      if (!rational_dominates_scaled_log(bound, 6 * k, delta, delta)) problem("theorem_bound < 6k ln(delta)/delta");
      if (abs(lambda0) > bound) problem("|lambda0| > theorem_bound");
    } else if (mode != "lemma") {
      problem("unknown mode '" + mode + "'");
    }
  } catch (const std::exception& e) {
    problem(std::string("unreadable certificate: ") + e.what());
  }
  out.valid = out.problems.empty();
  return out;
}

Enclosure gmpst_radius(std::size_t delta) {
  if (delta <= kExactRadiusMaxDelta) {
    BigInt num;
    BigInt den;
    mpz_ui_pow_ui(num.get_mpz_t(), delta, delta);
    mpz_ui_pow_ui(den.get_mpz_t(), delta + 1, delta + 1);
    BigRational q(num, den);
    q.canonicalize();
    return {q, q};
  }
  return rigorous::self_power_ratio(delta, delta + 1);
}

Enclosure shearer_radius(std::size_t delta) {
  if (delta == 0) throw std::invalid_argument("shearer radius needs delta >= 1");
  if (delta <= kExactRadiusMaxDelta) {
    BigInt num;
    BigInt den;
    mpz_ui_pow_ui(num.get_mpz_t(), delta - 1, delta - 1);
    mpz_ui_pow_ui(den.get_mpz_t(), delta, delta);
    BigRational q(num, den);
    q.canonicalize();
    return {q, q};
  }
  return rigorous::self_power_ratio(delta - 1, delta);
}

namespace {

std::string describe_failure(const RootCertificate& cert) {
  std::string s = "no certificate for k = " + std::to_string(cert.k) + ", delta = " + std::to_string(cert.delta) + ":";
  for (const auto& name : cert.failed_checks()) s += " " + name;
  return s;
}

}  // namespace

CertificationFailure::CertificationFailure(RootCertificate cert)
    : std::runtime_error(describe_failure(cert)), cert_(std::move(cert)) {}

SweepRow compare_bounds(std::size_t k, std::size_t delta, const BigRational& c) {
  if (c <= 0) throw std::invalid_argument("compare_bounds needs C > 0");
  RootCertificate cert = certify_counterexample(k, delta, CertificateMode::Analytic);
  if (!cert.issued()) throw CertificationFailure(std::move(cert));

  SweepRow row;
  row.k = k;
  row.delta = delta;
  row.p = cert.p;
  row.n = cert.n;
  row.alpha = cert.alpha;
  row.theorem_bound = *cert.theorem_bound;
  row.certified_bound = *cert.theorem_bound;
  row.conjectured_radius = c * rigorous::inverse_root(BigInt(static_cast<unsigned long>(delta)), k - 1).lo;
  row.gmpst_radius = gmpst_radius(delta).lo;
  row.shearer_radius = shearer_radius(delta).lo;
  row.falsified = row.certified_bound < row.conjectured_radius;
  row.ratio = row.certified_bound / row.conjectured_radius;
  return row;
}

}  // namespace zfr
