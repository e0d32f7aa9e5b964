#pragma once

// Exact scalars and directed-rounding bounds on transcendental quantities.
//
// Every irrational number the library reasons about (ln n, Δ^(-1/(k-1)),
// the cited zero-free radii) is reduced to a rational enclosure [lo, hi]
// computed with MPFR in round-down / round-up mode. Certificates compare
// only rationals, so a consumer can re-check them with any exact arithmetic.

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace zfr {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Parses "NUM/DEN", an integer, or a decimal such as "-0.25" / "1e-12".
/// The result is canonical. Throws std::invalid_argument on malformed input
/// or a zero denominator.
BigRational parse_rational(std::string_view text);

/// "NUM/DEN" for non-integers, "NUM" for integers.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

/// Nearest double; only for reporting.
double to_double(const BigRational& q);

/// Exact rational value of a finite double.
BigRational from_double(double x);

BigRational abs(const BigRational& q);

namespace rigorous {

/// Working precision for every MPFR computation, in bits.
inline constexpr mpfr_prec_t kPrecision = 256;

/// Significant decimal digits kept when an MPFR value is rounded to a rational.
inline constexpr int kDecimalDigits = 30;

enum class Round { Down, Up };

/// RAII handle for an mpfr_t at kPrecision.
class Real {
 public:
  Real();
  Real(const Real& other);
  Real& operator=(const Real& other);
  ~Real();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

 private:
  mpfr_t value_;
};

mpfr_rnd_t mode(Round r);

/// Rounds x to a rational with about kDecimalDigits significant digits and a
/// power-of-ten denominator: the result is <= x for Down and >= x for Up.
BigRational to_rational(const Real& x, Round r, int digits = kDecimalDigits);

/// Rounds a rational outward to the same short decimal grid.
BigRational round(const BigRational& q, Round r, int digits = kDecimalDigits);

/// Rational lower/upper bounds with lo <= value <= hi.
struct Enclosure {
  BigRational lo;
  BigRational hi;
};

/// ln(x) for rational x > 0.
Enclosure log(const BigRational& x);

/// base^(-1/m) for integer base >= 1, m >= 1.
Enclosure inverse_root(const BigInt& base, unsigned long m);

/// a^a / b^b for integers a >= 0, b >= 1 (0^0 = 1). Covers both cited zero-free
/// radii: Δ^Δ/(Δ+1)^(Δ+1) and (Δ-1)^(Δ-1)/Δ^Δ.
Enclosure self_power_ratio(unsigned long a, unsigned long b);

/// Decimal rendering for human-readable output.
std::string to_decimal(const BigRational& q, int significant = 12);

}  // namespace rigorous
}  // namespace zfr
