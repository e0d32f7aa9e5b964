#include "zfr/construct.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace zfr {

Hypergraph s_transform(const Hypergraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (n + m > std::numeric_limits<VertexId>::max()) throw std::length_error("S_G would exceed the vertex id range");
  Hypergraph::Builder b(n + m);
  b.reserve(m, g.incidence_count() + m);
  std::vector<VertexId> scratch;
  for (std::size_t j = 0; j < m; ++j) {
    auto e = g.edge(j);
    scratch.assign(e.begin(), e.end());
    scratch.push_back(static_cast<VertexId>(n + j));
    b.add_edge(scratch);
  }
  return std::move(b).build();
}

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  if (x % 2 == 0) return x == 2;
  if (x % 3 == 0) return x == 3;
  for (std::uint64_t f = 5; f * f <= x; f += 6) {
    if (x % f == 0 || x % (f + 2) == 0) return false;
  }
  return true;
}

std::uint64_t find_prime_in(std::uint64_t delta) {
  if (delta < 2) throw std::invalid_argument("find_prime_in requires delta >= 2");
  std::uint64_t p = delta;
  while (!is_prime(p)) ++p;
  return p;
}

ModularHypergraph h_construction(std::size_t k, std::size_t delta) {
  if (k < 2) throw std::invalid_argument("h_construction requires k >= 2, got " + std::to_string(k));
  if (delta < k) {
    throw std::invalid_argument("h_construction requires delta >= k, got k = " + std::to_string(k) +
                                ", delta = " + std::to_string(delta));
  }
  const std::uint64_t p = find_prime_in(delta);
  if (k * p >= std::numeric_limits<VertexId>::max()) throw std::length_error("H_{k,delta} exceeds the vertex id range");

  Hypergraph::Builder b(k * p);
  b.reserve(p * delta, p * delta * k);
  std::vector<VertexId> edge(k);
  for (std::uint64_t a = 0; a < p; ++a) {
    for (std::uint64_t d = 1; d <= delta; ++d) {
      for (std::uint64_t i = 1; i <= k; ++i) edge[i - 1] = modular_vertex(p, i, (a + i * d) % p);
      b.add_edge(edge);
    }
  }
  return {std::move(b).build(), p};
}

Counterexample counterexample(std::size_t k, std::size_t delta) {
  if (k < 3) throw std::invalid_argument("counterexample requires k >= 3, got " + std::to_string(k));
  if (delta < k - 1) {
    throw std::invalid_argument("counterexample requires delta >= k - 1, got k = " + std::to_string(k) +
                                ", delta = " + std::to_string(delta));
  }
  auto [h, p] = h_construction(k - 1, delta);
  Counterexample out;
  out.meta.k = k;
  out.meta.delta = delta;
  out.meta.p = p;
  if (h.vertex_count() % 2 == 0) {
    const auto last = static_cast<VertexId>(h.vertex_count() - 1);
    h = remove_vertex(h, last);
    out.meta.removed_vertex = last;
  }
  out.meta.n_h = h.vertex_count();
  out.s_h = s_transform(h);
  out.meta.n_sg = out.s_h.vertex_count();
  out.h = std::move(h);
  return out;
}

}  // namespace zfr
