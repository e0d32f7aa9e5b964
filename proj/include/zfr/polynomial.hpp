#pragma once

// Independence polynomials: enumeration of independent sets, the subset-sum
// closed form for Z_{S_G}, and exact / floating point evaluation.
//
// The closed form is
//
//   Z_{S_G}(λ) = Σ_{S ⊆ V} λ^{|V|-|S|} (1+λ)^{e(S)},
//
// with 0^0 = 1. Both the coefficient computation and the point evaluators
// first tally how many subsets S have each (|S|, e(S)) pair, scanning subsets
// in Gray-code order so e(S) is updated in O(deg v) per step.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zfr/arith.hpp"
#include "zfr/hypergraph.hpp"

namespace zfr {

/// Dense ascending coefficients with no trailing zeros; the zero polynomial
/// has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  std::vector<std::string> coeff_strings() const;
  static IntPolynomial from_strings(const std::vector<std::string>& coeffs);

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<BigInt> coeffs_;
};

struct SquarefreeFactor {
  IntPolynomial factor;  // primitive, positive leading coefficient, no repeated roots
  unsigned multiplicity = 0;
};

/// P = c · Π factor^multiplicity over the rationals (Yun's algorithm), factors
/// of positive degree only. Throws std::invalid_argument for the zero polynomial.
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& p);

/// Vertex-count guards for the exponential paths. ZFR_MAX_N overrides all of
/// them at once (capped at 63).
struct EnumerationLimits {
  std::size_t bruteforce_max_n = 30;
  std::size_t closed_form_max_n = 26;
  std::size_t exact_eval_max_n = 22;
  std::size_t float_eval_max_n = 30;

  static EnumerationLimits from_env();
};

class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Counts independent sets by size: backtracking over vertices in id order,
/// pruning as soon as an edge whose largest vertex was just taken is complete.
IntPolynomial independence_poly_bruteforce(const Hypergraph& h, const EnumerationLimits& limits = {});

/// counts[s][e] = number of S ⊆ V with |S| = s and e(S) = e.
struct SubsetHistogram {
  std::size_t n = 0;
  std::size_t edges = 0;
  std::vector<std::vector<std::uint64_t>> counts;
};

/// Tallies every subset of V. The space is split into 2^b blocks by fixing the
/// top b bits; each block runs its own Gray-code scan and the block tallies are
/// summed, so the result is independent of `threads` (0 = hardware concurrency).
SubsetHistogram subset_histogram(const Hypergraph& g, unsigned threads = 0);

/// Coefficients of Z_{S_G}, computed without building S_G.
IntPolynomial z_sg_closed_form(const Hypergraph& g, const EnumerationLimits& limits = {}, unsigned threads = 0);

/// Expands a histogram into Σ counts[s][e] λ^{n-s} (1+λ)^e.
IntPolynomial expand_histogram(const SubsetHistogram& hist);

BigRational evaluate_exact(const IntPolynomial& p, const BigRational& x);

/// Σ_S x^{n-|S|}(1+x)^{e(S)} exactly.
BigRational eval_point_closed_form_exact(const Hypergraph& g, const BigRational& x,
                                         const EnumerationLimits& limits = {}, unsigned threads = 0);

struct FloatEvaluation {
  double value = 0.0;
  double abs_term_sum = 0.0;  // Σ |term|; value is accurate to about eps · abs_term_sum
  bool rigorous = false;      // always false: floats never feed certificates
};

/// Same sum in double precision with Neumaier compensated summation.
FloatEvaluation eval_point_closed_form_float(const Hypergraph& g, double x, const EnumerationLimits& limits = {},
                                             unsigned threads = 0);

/// Maintains per-edge hit counts and e(S) while single vertices enter or leave S.
class CoverageTracker {
 public:
  explicit CoverageTracker(const Hypergraph& g);

  void toggle(VertexId v);
  std::size_t covered() const noexcept { return covered_; }
  std::size_t size() const noexcept { return size_; }
  bool contains(VertexId v) const noexcept { return in_set_[v] != 0; }
  const std::vector<std::uint32_t>& hits() const noexcept { return hits_; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> incident_;
  std::vector<std::uint32_t> hits_;
  std::vector<std::uint8_t> in_set_;
  std::size_t covered_ = 0;
  std::size_t size_ = 0;
};

}  // namespace zfr
