#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zfr/arith.hpp"
#include "zfr/polynomial.hpp"

namespace zfr {

/// Exact sign of P(x): -1, 0 or +1.
int sign_at(const IntPolynomial& p, const BigRational& x);

/// Either P(lo), P(hi) have strictly opposite signs, or exact_root is set and
/// lo == hi == *exact_root.
struct RootBracket {
  BigRational lo;
  BigRational hi;
  int sign_lo = 0;
  int sign_hi = 0;
  std::optional<BigRational> exact_root;

  BigRational center() const { return (lo + hi) / 2; }
  BigRational width() const { return hi - lo; }
};

struct IsolateOptions {
  /// Uniform subintervals scanned when the endpoints share a sign.
  std::size_t grid_points = 1024;
};

/// Bisects [lo, hi] with exact rational midpoints down to width <= tol. When
/// the endpoint signs agree, the leftmost sign change on the grid is bisected
/// instead. nullopt if no sign change is found; roots of even multiplicity are
/// invisible to this search.
std::optional<RootBracket> isolate_real_root(const IntPolynomial& p, const BigRational& lo, const BigRational& hi,
                                             const BigRational& tol, const IsolateOptions& options = {});

struct ComplexRoot {
  std::complex<double> value;
  double residual = 0.0;  // |P(z)| / Σ|c_i||z|^i
  unsigned multiplicity = 1;
};

struct ComplexRootsResult {
  std::vector<ComplexRoot> roots;
  bool converged = false;
  std::size_t iterations = 0;
};

struct AberthOptions {
  std::size_t max_iterations = 2000;
  std::uint64_t seed = 0x5eed5eedULL;
};

/// All deg(P) roots, repeated by multiplicity. P is split into squarefree
/// factors exactly; each factor is solved by Aberth-Ehrlich iteration started
/// from the roots of unity scaled by the Fujiwara root bound, each
/// angle jittered by a seeded generator. A root is settled once its correction
/// is below tol·max(1, |z|) or its residual is within 4(d+1)·eps; `converged`
/// is false if any factor hits the iteration cap first.
ComplexRootsResult complex_roots(const IntPolynomial& p, double tol = 1e-14, const AberthOptions& options = {});

struct ZfrViolation {
  std::string root;
  double magnitude = 0.0;
};

struct ZfrReport {
  std::size_t delta = 0;
  rigorous::Enclosure gmpst_radius;
  std::optional<rigorous::Enclosure> shearer_radius;  // graph inputs only
  std::size_t roots_checked = 0;
  std::vector<ZfrViolation> violations;

  bool pass() const { return violations.empty(); }
};

/// Every root must satisfy |λ| >= Δ^Δ/(Δ+1)^(Δ+1). Brackets are compared
/// exactly (the endpoint nearest 0 must clear the radius); numeric roots get
/// `numeric_slack` of absolute tolerance.
ZfrReport check_zfr_conformance(std::span<const RootBracket> brackets, std::span<const ComplexRoot> numeric,
                                std::size_t delta, bool graph_input = false, double numeric_slack = 1e-6);

}  // namespace zfr
