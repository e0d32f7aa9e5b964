#include "zfr/arith.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace zfr {

namespace {

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
  std::string owned(s);
  if (owned.front() == '+') owned.erase(0, 1);
  return BigInt(owned, 10);
}

BigRational parse_decimal(std::string_view s) {
  bool negative = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) negative = s[i++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits += s[i++];
    seen_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i++];
      --scale;
      seen_digit = true;
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed number: '" + std::string(s) + "'");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    std::string_view exponent = s.substr(i);
    BigInt e = parse_integer(exponent);
    if (!e.fits_slong_p() || std::abs(e.get_si()) > 100000) {
      throw std::invalid_argument("exponent out of range: '" + std::string(s) + "'");
    }
    scale += e.get_si();
    i = s.size();
  }
  if (i != s.size()) throw std::invalid_argument("malformed number: '" + std::string(s) + "'");

  BigRational q{BigInt(digits, 10)};
  if (scale > 0) q *= pow10(static_cast<unsigned long>(scale));
  if (scale < 0) q /= pow10(static_cast<unsigned long>(-scale));
  q.canonicalize();
  return negative ? BigRational(-q) : q;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') {
      throw std::invalid_argument("denominator must be positive: '" + std::string(text) + "'");
    }
    BigInt den = parse_integer(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    BigRational q(num, den);
    q.canonicalize();
    return q;
  }
  return parse_decimal(text);
}

std::string to_string(const BigRational& q) { return q.get_str(10); }

std::string to_string(const BigInt& z) { return z.get_str(10); }

double to_double(const BigRational& q) { return mpq_get_d(q.get_mpq_t()); }

BigRational from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  BigRational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

BigRational abs(const BigRational& q) { return q < 0 ? BigRational(-q) : q; }

namespace rigorous {

Real::Real() {
  mpfr_init2(value_, kPrecision);
  mpfr_set_zero(value_, 1);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, kPrecision);
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

mpfr_rnd_t mode(Round r) { return r == Round::Up ? MPFR_RNDU : MPFR_RNDD; }

BigRational to_rational(const Real& x, Round r, int digits) {
  if (!mpfr_number_p(x.get())) throw std::domain_error("non-finite value in rigorous rounding");
  if (mpfr_zero_p(x.get())) return BigRational(0);

  // Decimal exponent estimate from the binary one; any scale is sound, this one
  // just keeps `digits` significant figures.
  const long exp2 = mpfr_get_exp(x.get());
  const long exp10 = static_cast<long>(std::floor(static_cast<double>(exp2) * 0.30102999566398120));
  const long scale = digits - exp10;

  Real scaled;
  BigInt m;
  if (scale >= 0) {
    BigInt factor = pow10(static_cast<unsigned long>(scale));
    mpfr_mul_z(scaled.get(), x.get(), factor.get_mpz_t(), mode(r));
    mpfr_get_z(m.get_mpz_t(), scaled.get(), mode(r));
    BigRational q(m, factor);
    q.canonicalize();
    return q;
  }
  BigInt factor = pow10(static_cast<unsigned long>(-scale));
  mpfr_div_z(scaled.get(), x.get(), factor.get_mpz_t(), mode(r));
  mpfr_get_z(m.get_mpz_t(), scaled.get(), mode(r));
  return BigRational(m * factor);
}

BigRational round(const BigRational& q, Round r, int digits) {
  Real x;
  mpfr_set_q(x.get(), q.get_mpq_t(), mode(r));
  return to_rational(x, r, digits);
}

Enclosure log(const BigRational& x) {
  if (x <= 0) throw std::domain_error("log of non-positive value");
  Enclosure out;
  for (Round r : {Round::Down, Round::Up}) {
    Real arg;
    Real result;
    // Bound the argument in the same direction as the result: ln is increasing.
    mpfr_set_q(arg.get(), x.get_mpq_t(), mode(r));
    mpfr_log(result.get(), arg.get(), mode(r));
    (r == Round::Down ? out.lo : out.hi) = to_rational(result, r);
  }
  return out;
}

Enclosure inverse_root(const BigInt& base, unsigned long m) {
  if (base < 1 || m == 0) throw std::domain_error("inverse_root needs base >= 1 and m >= 1");
  Enclosure out;
  for (Round r : {Round::Down, Round::Up}) {
    // 1/root is decreasing in root, so round the root the opposite way.
    const Round inner = r == Round::Down ? Round::Up : Round::Down;
    Real b;
    Real root;
    Real result;
    mpfr_set_z(b.get(), base.get_mpz_t(), mode(inner));
    mpfr_rootn_ui(root.get(), b.get(), m, mode(inner));
    mpfr_ui_div(result.get(), 1, root.get(), mode(r));
    (r == Round::Down ? out.lo : out.hi) = to_rational(result, r);
  }
  return out;
}

Enclosure self_power_ratio(unsigned long a, unsigned long b) {
  if (b == 0) throw std::domain_error("self_power_ratio needs b >= 1");
  Enclosure out;
  for (Round r : {Round::Down, Round::Up}) {
    const Round opposite = r == Round::Down ? Round::Up : Round::Down;
    // exp(a ln a - b ln b), each piece rounded so the exponent is bounded in direction r.
    Real a_log_a;
    if (a > 0) {
      Real x;
      mpfr_set_ui(x.get(), a, MPFR_RNDN);
      mpfr_log(a_log_a.get(), x.get(), mode(r));
      mpfr_mul_ui(a_log_a.get(), a_log_a.get(), a, mode(r));
    }
    Real b_log_b;
    {
      Real x;
      mpfr_set_ui(x.get(), b, MPFR_RNDN);
      mpfr_log(b_log_b.get(), x.get(), mode(opposite));
      mpfr_mul_ui(b_log_b.get(), b_log_b.get(), b, mode(opposite));
    }
    Real exponent;
    mpfr_sub(exponent.get(), a_log_a.get(), b_log_b.get(), mode(r));
    Real result;
    mpfr_exp(result.get(), exponent.get(), mode(r));
    (r == Round::Down ? out.lo : out.hi) = to_rational(result, r);
  }
  return out;
}

std::string to_decimal(const BigRational& q, int significant) {
  Real x;
  mpfr_set_q(x.get(), q.get_mpq_t(), MPFR_RNDN);
  std::vector<char> buffer(static_cast<std::size_t>(significant) + 64);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Rg", significant, x.get());
  return std::string(buffer.data());
}

}  // namespace rigorous
}  // namespace zfr
