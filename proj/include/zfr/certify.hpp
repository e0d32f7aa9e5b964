#pragma once

// Root-existence certificates for Z_{S_H}.
//
// If H has n vertices with n odd, and e(S) >= α|S| for every S with
// 3 ln n <= α <= n, then Z_{S_H} changes sign on [λ₀, 0] where
// λ₀ = -3 ln(n)/α. The issuer stores λ₀ as a rational rounded toward -∞, so the
// certified interval contains the exact one. For the counterexample family the
// pipeline additionally checks the chain
//
//   |λ₀| <= 3(k-1) ln(2Δk)/(Δ-1) <= 6k ln(Δ)/Δ.
//
// Every comparison against a logarithm goes through a rational enclosure from
// rigorous::log, rounded adversarially.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "zfr/arith.hpp"
#include "zfr/hypergraph.hpp"

namespace zfr {

enum class CertificateMode { Lemma, Explicit, Analytic };

std::string to_string(CertificateMode mode);
CertificateMode parse_certificate_mode(const std::string& text);

struct Check {
  std::string name;
  bool pass = false;
  bool required = true;
  std::string detail;
  nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
};

struct HypothesisEvidence {
  std::size_t uniformity = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
};

struct RootCertificate {
  CertificateMode mode = CertificateMode::Lemma;
  std::size_t n = 0;
  BigRational alpha;
  std::optional<BigRational> lambda0;  // set whenever alpha > 0
  rigorous::Enclosure three_log_n;     // encloses 3 ln n

  // Set by the counterexample pipeline.
  std::size_t k = 0;
  std::size_t delta = 0;
  std::uint64_t p = 0;
  std::optional<VertexId> removed_vertex;
  std::optional<HypothesisEvidence> evidence;
  std::optional<BigRational> theorem_bound;  // >= 6k ln(Δ)/Δ

  std::vector<Check> checks;

  /// True iff every required check passed.
  bool issued() const;
  std::vector<std::string> failed_checks() const;
  const Check* find_check(const std::string& name) const;
};

/// δ/u for a u-uniform H with minimum degree δ; e(S) >= (δ/u)|S| for all S.
/// Throws std::invalid_argument for non-uniform or vertex-free input.
BigRational alpha_from_degrees(const Hypergraph& h);

/// Checks n >= 3, n odd, α >= 3 ln n, α <= n and λ₀ in [-1, 0]. Failed
/// hypotheses are reported in `checks`, never thrown.
RootCertificate certify_root_interval(std::size_t n, const BigRational& alpha);

struct InequalityChainReport {
  std::size_t n = 0;
  BigRational alpha;
  BigRational tbar;                     // Σ_{k=1}^n C(n,k) α^k n^{-3k}
  std::optional<BigRational> majorant;  // Σ_{k=1}^n (α/n²)^k / k!
  bool tbar_below_one = false;
  std::optional<bool> majorant_dominates;
};

/// Exact rational evaluation of the sum that bounds the non-empty-S terms of
/// Z_{S_H}(λ₀)/λ₀^n, using (1 + α/n³)^n - 1 for it. The majorant costs O(n)
/// big-rational steps and is only computed on request.
InequalityChainReport verify_inequality_chain(std::size_t n, const BigRational& alpha, bool with_majorant = false);

struct CertifyOptions {
  /// Explicit mode refuses to build H with more edges than this.
  std::uint64_t edge_cap = 20'000'000;
};

/// Thrown for inputs outside the operation's domain (k < 3, Δ < k-1, explicit
/// mode over the edge cap). Hypothesis failures are reported, not thrown.
class CertifyInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

RootCertificate certify_counterexample(std::size_t k, std::size_t delta, CertificateMode mode,
                                       const CertifyOptions& options = {});

nlohmann::ordered_json certificate_to_json(const RootCertificate& cert);

struct VerificationResult {
  bool valid = false;
  std::vector<std::string> problems;
};

/// Re-derives every inequality of a certificate JSON from the record alone,
/// with arithmetic independent of the issuer (direct MPFR comparisons at a
/// different precision, exact integer checks on the construction parameters).
VerificationResult verify_certificate_json(const nlohmann::ordered_json& j);

/// Cited zero-free radii. Exact (lo == hi) for Δ <= kExactRadiusMaxDelta.
inline constexpr std::size_t kExactRadiusMaxDelta = 1024;
rigorous::Enclosure gmpst_radius(std::size_t delta);    // Δ^Δ / (Δ+1)^(Δ+1)
rigorous::Enclosure shearer_radius(std::size_t delta);  // (Δ-1)^(Δ-1) / Δ^Δ

struct SweepRow {
  std::size_t k = 0;
  std::size_t delta = 0;
  std::uint64_t p = 0;
  std::size_t n = 0;
  BigRational alpha;
  BigRational certified_bound;     // root-magnitude bound the certificate proves
  BigRational theorem_bound;       // >= 6k ln(Δ)/Δ
  BigRational conjectured_radius;  // <= C Δ^(-1/(k-1))
  BigRational gmpst_radius;        // lower end of the enclosure
  BigRational shearer_radius;      // lower end of the enclosure
  bool falsified = false;          // certified_bound < conjectured_radius
  BigRational ratio;               // certified_bound / conjectured_radius
};

class CertificationFailure : public std::runtime_error {
 public:
  explicit CertificationFailure(RootCertificate cert);
  const RootCertificate& certificate() const noexcept { return cert_; }

 private:
  RootCertificate cert_;
};

/// Throws CertificationFailure when the analytic certificate is not issued.
SweepRow compare_bounds(std::size_t k, std::size_t delta, const BigRational& c);

}  // namespace zfr
