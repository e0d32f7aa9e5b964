#include "zfr/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace zfr {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::vector<std::string> IntPolynomial::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str(10));
  if (out.empty()) out.emplace_back("0");
  return out;
}

IntPolynomial IntPolynomial::from_strings(const std::vector<std::string>& coeffs) {
  std::vector<BigInt> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) {
    BigInt z;
    if (s.empty() || z.set_str(s, 10) != 0) throw std::invalid_argument("malformed coefficient: '" + s + "'");
    c.push_back(std::move(z));
  }
  return IntPolynomial(std::move(c));
}

EnumerationLimits EnumerationLimits::from_env() {
  EnumerationLimits limits;
  if (const char* raw = std::getenv("ZFR_MAX_N"); raw != nullptr && *raw != '\0') {
    char* end = nullptr;
    const unsigned long v = std::strtoul(raw, &end, 10);
    if (end == raw || *end != '\0') throw std::invalid_argument("ZFR_MAX_N must be a non-negative integer");
    const std::size_t n = std::min<unsigned long>(v, kMaxMaskVertices);
    limits.bruteforce_max_n = limits.closed_form_max_n = limits.exact_eval_max_n = limits.float_eval_max_n = n;
  }
  return limits;
}

namespace {

void guard(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw SizeGuardError(std::string(what) + ": n = " + std::to_string(n) + " exceeds the enumeration limit " +
                         std::to_string(limit) + " (raise it with ZFR_MAX_N)");
  }
}

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  return std::max(1U, std::thread::hardware_concurrency());
}

BigRational power(const BigRational& x, unsigned long e) {
  BigRational r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), e);
  return r;  // already canonical: powers of coprime integers stay coprime
}

}  // namespace

IntPolynomial independence_poly_bruteforce(const Hypergraph& h, const EnumerationLimits& limits) {
  const std::size_t n = h.vertex_count();
  guard(n, std::min(limits.bruteforce_max_n, kMaxMaskVertices), "independence_poly_bruteforce");

  // Edges bucketed by their largest vertex: that is where they can first close.
  std::vector<std::vector<std::uint64_t>> closing(n);
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    std::uint64_t mask = 0;
    for (VertexId v : h.edge(j)) mask |= std::uint64_t{1} << v;
    closing[h.edge(j).back()].push_back(mask);
  }

  std::vector<std::uint64_t> counts(n + 1, 0);
  struct Frame {
    std::size_t vertex;
    std::uint64_t chosen;
    std::size_t size;
  };
  std::vector<Frame> stack{{0, 0, 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.vertex == n) {
      ++counts[f.size];
      continue;
    }
    stack.push_back({f.vertex + 1, f.chosen, f.size});
    const std::uint64_t with = f.chosen | (std::uint64_t{1} << f.vertex);
    const auto& edges = closing[f.vertex];
    const bool blocked =
        std::any_of(edges.begin(), edges.end(), [with](std::uint64_t e) { return (e & with) == e; });
    if (!blocked) stack.push_back({f.vertex + 1, with, f.size + 1});
  }

  std::vector<BigInt> coeffs;
  coeffs.reserve(n + 1);
  for (std::uint64_t c : counts) coeffs.emplace_back(static_cast<unsigned long>(c));
  return IntPolynomial(std::move(coeffs));
}

CoverageTracker::CoverageTracker(const Hypergraph& g)
    : offsets_(g.vertex_count() + 1, 0),
      hits_(g.edge_count(), 0),
      in_set_(g.vertex_count(), 0) {
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    for (VertexId v : g.edge(j)) ++offsets_[v + 1];
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) offsets_[v + 1] += offsets_[v];
  incident_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    for (VertexId v : g.edge(j)) incident_[fill[v]++] = static_cast<std::uint32_t>(j);
  }
}

void CoverageTracker::toggle(VertexId v) {
  const auto begin = incident_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
  const auto end = incident_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
  if (in_set_[v] == 0) {
    in_set_[v] = 1;
    ++size_;
    for (auto it = begin; it != end; ++it) {
      if (hits_[*it]++ == 0) ++covered_;
    }
  } else {
    in_set_[v] = 0;
    --size_;
    for (auto it = begin; it != end; ++it) {
      if (--hits_[*it] == 0) --covered_;
    }
  }
}

SubsetHistogram subset_histogram(const Hypergraph& g, unsigned threads) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxMaskVertices) throw SizeGuardError("subset enumeration needs n <= 63");
  const unsigned workers = resolve_threads(threads);

  SubsetHistogram hist;
  hist.n = n;
  hist.edges = g.edge_count();
  hist.counts.assign(n + 1, std::vector<std::uint64_t>(g.edge_count() + 1, 0));

  // A fixed block count keeps the partition independent of the worker count.
  const std::size_t block_bits = std::min<std::size_t>(n, n >= 16 ? 6 : 0);
  const std::size_t low_bits = n - block_bits;
  const std::uint64_t blocks = std::uint64_t{1} << block_bits;

  auto scan_blocks = [&](unsigned worker, SubsetHistogram& local) {
    for (std::uint64_t block = worker; block < blocks; block += workers) {
      CoverageTracker tracker(g);
      for (std::size_t bit = 0; bit < block_bits; ++bit) {
        if ((block >> bit) & 1U) tracker.toggle(static_cast<VertexId>(low_bits + bit));
      }
      ++local.counts[tracker.size()][tracker.covered()];
      const std::uint64_t steps = std::uint64_t{1} << low_bits;
      for (std::uint64_t t = 1; t < steps; ++t) {
        tracker.toggle(static_cast<VertexId>(std::countr_zero(t)));
        ++local.counts[tracker.size()][tracker.covered()];
      }
    }
  };

  const unsigned used = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));
  std::vector<SubsetHistogram> partial(used, hist);
  if (used == 1) {
    scan_blocks(0, partial[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(used);
    for (unsigned w = 0; w < used; ++w) pool.emplace_back([&, w] { scan_blocks(w, partial[w]); });
  }
  for (const auto& p : partial) {
    for (std::size_t s = 0; s <= n; ++s) {
      for (std::size_t e = 0; e <= hist.edges; ++e) hist.counts[s][e] += p.counts[s][e];
    }
  }
  return hist;
}

IntPolynomial expand_histogram(const SubsetHistogram& hist) {
  const std::size_t n = hist.n;
  std::vector<BigInt> coeffs(n + hist.edges + 1, 0);
  std::vector<BigInt> row;
  for (std::size_t e = 0; e <= hist.edges; ++e) {
    bool used = false;
    for (std::size_t s = 0; s <= n && !used; ++s) used = hist.counts[s][e] != 0;
    if (!used) continue;
    // row[i] = C(e, i)
    row.assign(e + 1, 0);
    row[0] = 1;
    for (std::size_t i = 1; i <= e; ++i) row[i] = row[i - 1] * static_cast<unsigned long>(e - i + 1) / static_cast<unsigned long>(i);
    for (std::size_t s = 0; s <= n; ++s) {
      const std::uint64_t c = hist.counts[s][e];
      if (c == 0) continue;
      for (std::size_t i = 0; i <= e; ++i) {
        mpz_addmul_ui(coeffs[n - s + i].get_mpz_t(), row[i].get_mpz_t(), static_cast<unsigned long>(c));
      }
    }
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial z_sg_closed_form(const Hypergraph& g, const EnumerationLimits& limits, unsigned threads) {
  guard(g.vertex_count(), limits.closed_form_max_n, "z_sg_closed_form");
  return expand_histogram(subset_histogram(g, threads));
}

BigRational evaluate_exact(const IntPolynomial& p, const BigRational& x) {
  if (p.is_zero()) return BigRational(0);
  // Homogeneous Horner: with x = a/b, P(x) = (Σ c_i a^i b^(d-i)) / b^d.
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  const auto& c = p.coeffs();
  const std::size_t d = c.size() - 1;
  BigInt acc = c[d];
  BigInt b_power = 1;
  for (std::size_t i = d; i-- > 0;) {
    b_power *= b;
    acc *= a;
    mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), b_power.get_mpz_t());
  }
  BigRational out(acc, b_power);
  out.canonicalize();
  return out;
}

BigRational eval_point_closed_form_exact(const Hypergraph& g, const BigRational& at, const EnumerationLimits& limits,
                                         unsigned threads) {
  guard(g.vertex_count(), limits.exact_eval_max_n, "eval_point_closed_form (exact)");
  BigRational x = at;
  x.canonicalize();
  const SubsetHistogram hist = subset_histogram(g, threads);
  const std::size_t n = hist.n;
  std::vector<BigRational> x_powers(n + 1);
  for (std::size_t t = 0; t <= n; ++t) x_powers[t] = power(x, t);  // 0^0 = 1
  const BigRational one_plus_x = x + 1;

  BigRational total = 0;
  for (std::size_t e = 0; e <= hist.edges; ++e) {
    BigRational inner = 0;
    for (std::size_t s = 0; s <= n; ++s) {
      if (const std::uint64_t c = hist.counts[s][e]; c != 0) {
        inner += x_powers[n - s] * BigRational(static_cast<unsigned long>(c));
      }
    }
    if (inner != 0) total += inner * power(one_plus_x, e);
  }
  return total;
}

FloatEvaluation eval_point_closed_form_float(const Hypergraph& g, double x, const EnumerationLimits& limits,
                                             unsigned threads) {
  guard(g.vertex_count(), limits.float_eval_max_n, "eval_point_closed_form (float)");
  const SubsetHistogram hist = subset_histogram(g, threads);
  const std::size_t n = hist.n;
  FloatEvaluation out;
  double sum = 0.0;
  double compensation = 0.0;
  for (std::size_t s = 0; s <= n; ++s) {
    const double x_part = std::pow(x, static_cast<double>(n - s));
    for (std::size_t e = 0; e <= hist.edges; ++e) {
      const std::uint64_t c = hist.counts[s][e];
      if (c == 0) continue;
      const double term = static_cast<double>(c) * x_part * std::pow(1.0 + x, static_cast<double>(e));
      out.abs_term_sum += std::fabs(term);
      const double t = sum + term;
      if (std::fabs(sum) >= std::fabs(term)) {
        compensation += (sum - t) + term;
      } else {
        compensation += (term - t) + sum;
      }
      sum = t;
    }
  }
  out.value = sum + compensation;
  return out;
}

}  // namespace zfr

namespace zfr {

namespace {

using RatPoly = std::vector<BigRational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {RatPoly{}, a};
  RatPoly q(a.size() - b.size() + 1);
  for (std::size_t shift = q.size(); shift-- > 0;) {
    const BigRational factor = a[shift + b.size() - 1] / b.back();
    q[shift] = factor;
    if (factor == 0) continue;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

RatPoly monic(RatPoly p) {
  const BigRational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : monic(std::move(a));
}

RatPoly subtract(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Scales to integer coefficients with gcd 1 and a positive leading term.
IntPolynomial primitive(const RatPoly& p) {
  BigInt den = 1;
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> out;
  BigInt content = 0;
  for (const auto& c : p) {
    out.push_back(c.get_num() * (den / c.get_den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  if (out.back() < 0) content = -content;
  for (auto& c : out) c /= content;
  return IntPolynomial(std::move(out));
}

}  // namespace

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;
  const RatPoly f(p.coeffs().begin(), p.coeffs().end());
  const RatPoly df = derivative(f);
  const RatPoly a0 = gcd(f, df);
  RatPoly b = divmod(f, a0).first;
  RatPoly c = divmod(df, a0).first;
  RatPoly d = subtract(c, derivative(b));
  for (unsigned i = 1; b.size() > 1; ++i) {
    const RatPoly a = gcd(b, d);
    if (a.size() > 1) out.push_back({primitive(a), i});
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = subtract(c, derivative(b));
  }
  return out;
}

}  // namespace zfr
