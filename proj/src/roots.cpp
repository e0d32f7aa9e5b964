#include "zfr/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "zfr/certify.hpp"

namespace zfr {

int sign_at(const IntPolynomial& p, const BigRational& x) { return sgn(evaluate_exact(p, x)); }

namespace {

RootBracket exact_bracket(const BigRational& x) {
  RootBracket b;
  b.lo = x;
  b.hi = x;
  b.exact_root = x;
  return b;
}

RootBracket bisect(const IntPolynomial& p, BigRational lo, BigRational hi, int sign_lo, int sign_hi,
                   const BigRational& tol) {
  while (hi - lo > tol) {
    BigRational mid = (lo + hi) / 2;
    const int s = sign_at(p, mid);
    if (s == 0) return exact_bracket(mid);
    if (s == sign_lo) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  RootBracket b;
  b.lo = std::move(lo);
  b.hi = std::move(hi);
  b.sign_lo = sign_lo;
  b.sign_hi = sign_hi;
  return b;
}

}  // namespace

std::optional<RootBracket> isolate_real_root(const IntPolynomial& p, const BigRational& lo, const BigRational& hi,
                                             const BigRational& tol, const IsolateOptions& options) {
  if (!(lo < hi)) throw std::invalid_argument("isolate_real_root needs lo < hi");
  if (tol <= 0) throw std::invalid_argument("isolate_real_root needs tol > 0");
  if (p.is_zero()) return std::nullopt;

  const int s_lo = sign_at(p, lo);
  const int s_hi = sign_at(p, hi);
  if (s_lo == 0) return exact_bracket(lo);
  if (s_lo * s_hi < 0) return bisect(p, lo, hi, s_lo, s_hi, tol);

  const std::size_t points = std::max<std::size_t>(options.grid_points, 1);
  const BigRational step = (hi - lo) / BigRational(static_cast<unsigned long>(points));
  BigRational left = lo;
  int s_left = s_lo;
  for (std::size_t i = 1; i <= points; ++i) {
    BigRational right = i == points ? hi : BigRational(lo + step * static_cast<unsigned long>(i));
    const int s_right = i == points ? s_hi : sign_at(p, right);
    if (s_right == 0) return exact_bracket(right);
    if (s_left * s_right < 0) return bisect(p, left, right, s_left, s_right, tol);
    left = std::move(right);
    s_left = s_right;
  }
  return std::nullopt;
}

namespace {

using Complex = std::complex<double>;

// P(z) and P'(z) by Horner.
std::pair<Complex, Complex> eval_with_derivative(const std::vector<double>& c, Complex z) {
  Complex value = c.back();
  Complex derivative = 0.0;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    derivative = derivative * z + value;
    value = value * z + c[i];
  }
  return {value, derivative};
}

double residual(const std::vector<double>& c, Complex z) {
  Complex value = c.back();
  double scale = std::fabs(c.back());
  const double r = std::abs(z);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    value = value * z + c[i];
    scale = scale * r + std::fabs(c[i]);
  }
  return scale == 0.0 ? 0.0 : std::abs(value) / scale;
}

}  // namespace

namespace {

std::vector<double> monic_doubles(const IntPolynomial& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const auto& coeff : p.coeffs()) c.push_back(coeff.get_d());
  const double lead = c.back();
  for (double& x : c) x /= lead;
  return c;
}

// Aberth-Ehrlich on a monic polynomial without repeated roots.
bool aberth(const std::vector<double>& c, double tol, const AberthOptions& options, std::vector<Complex>& z,
            std::size_t& iterations) {
  const std::size_t d = c.size() - 1;
  // Fujiwara bound: |z| <= 2 max(|c_(d-1)|, |c_(d-2)|^(1/2), ..., |c_0/2|^(1/d)).
  double radius = 0.0;
  for (std::size_t i = 1; i <= d; ++i) {
    const double a = std::fabs(c[d - i]) / (i == d ? 2.0 : 1.0);
    radius = std::max(radius, std::pow(a, 1.0 / static_cast<double>(i)));
  }
  radius *= 2.0;
  if (radius == 0.0) radius = 1.0;

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> jitter(0.0, 0.5);
  z.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    const double angle = 2.0 * std::numbers::pi * (static_cast<double>(i) + jitter(rng)) / static_cast<double>(d);
    z[i] = std::polar(radius, angle);
  }

  const double noise_floor = 4.0 * static_cast<double>(d + 1) * std::numeric_limits<double>::epsilon();
  for (std::size_t iter = 0; iter < options.max_iterations; ++iter) {
    iterations = std::max(iterations, iter + 1);
    bool done = true;
    for (std::size_t i = 0; i < d; ++i) {
      const auto [value, derivative] = eval_with_derivative(c, z[i]);
      if (value == Complex(0.0)) continue;
      const Complex newton = value / derivative;
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const Complex w = newton / (1.0 - newton * repulsion);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        done = false;
        continue;
      }
      z[i] -= w;
      // Below the rounding level of the evaluation further corrections are noise.
      const bool small_step = std::abs(w) < tol * std::max(1.0, std::abs(z[i]));
      if (!small_step && residual(c, z[i]) > noise_floor) done = false;
    }
    if (done) return true;
  }
  return false;
}

}  // namespace

ComplexRootsResult complex_roots(const IntPolynomial& p, double tol, const AberthOptions& options) {
  if (p.degree() < 1) throw std::invalid_argument("complex_roots needs degree >= 1");
  const std::vector<double> c = monic_doubles(p);

  // Repeated roots slow Aberth to linear convergence and cap its accuracy, so
  // each squarefree factor is solved on its own.
  ComplexRootsResult result;
  result.converged = true;
  for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
    std::vector<Complex> z;
    result.converged = aberth(monic_doubles(factor), tol, options, z, result.iterations) && result.converged;
    for (Complex root : z) {
      for (unsigned m = 0; m < multiplicity; ++m) result.roots.push_back({root, residual(c, root), multiplicity});
    }
  }
  std::sort(result.roots.begin(), result.roots.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
    return a.value.real() != b.value.real() ? a.value.real() < b.value.real() : a.value.imag() < b.value.imag();
  });
  return result;
}

ZfrReport check_zfr_conformance(std::span<const RootBracket> brackets, std::span<const ComplexRoot> numeric,
                                std::size_t delta, bool graph_input, double numeric_slack) {
  ZfrReport report;
  report.delta = delta;
  report.gmpst_radius = gmpst_radius(delta);
  if (graph_input && delta >= 1) report.shearer_radius = shearer_radius(delta);

  // The upper end of the radius enclosure keeps a pass sound.
  const BigRational& radius = report.gmpst_radius.hi;
  for (const auto& b : brackets) {
    ++report.roots_checked;
    const BigRational nearest = b.exact_root ? abs(*b.exact_root) : std::min(abs(b.lo), abs(b.hi));
    const bool straddles_zero = !b.exact_root && b.lo <= 0 && b.hi >= 0;
    if (straddles_zero || nearest < radius) {
      report.violations.push_back({b.exact_root ? to_string(*b.exact_root)
                                                : "[" + to_string(b.lo) + ", " + to_string(b.hi) + "]",
                                   to_double(nearest)});
    }
  }
  const double radius_d = to_double(radius);
  for (const auto& r : numeric) {
    ++report.roots_checked;
    const double magnitude = std::abs(r.value);
    if (magnitude < radius_d - numeric_slack) {
      report.violations.push_back({std::to_string(r.value.real()) + (r.value.imag() < 0 ? "" : "+") +
                                       std::to_string(r.value.imag()) + "i",
                                   magnitude});
    }
  }
  return report;
}

}  // namespace zfr
