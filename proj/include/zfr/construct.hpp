#pragma once

// The two constructions behind the counterexample: the S_G transform, which
// raises uniformity by one while keeping linearity and maximum degree, and the
// modular-lines hypergraph H_{k,Δ} on [k] x Z_p.

#include <cstdint>
#include <optional>

#include "zfr/hypergraph.hpp"

namespace zfr {

/// S_G: vertices 0..n-1 are the vertices of G, vertex n+j stands for edge j,
/// and edge j of the result is (edge j of G) ∪ {n+j}.
Hypergraph s_transform(const Hypergraph& g);

bool is_prime(std::uint64_t x);

/// Smallest prime p >= delta; Bertrand's postulate puts it at most 2·delta.
/// Requires delta >= 2.
std::uint64_t find_prime_in(std::uint64_t delta);

/// Vertex id of (i, x) in [k] x Z_p, with i in 1..k.
constexpr VertexId modular_vertex(std::uint64_t p, std::uint64_t i, std::uint64_t x) {
  return static_cast<VertexId>((i - 1) * p + x);
}

struct ModularHypergraph {
  Hypergraph h;
  std::uint64_t p = 0;
};

/// H_{k,Δ}: one edge {(i, a + i·d mod p) : i in 1..k} for every a in Z_p and
/// d in 1..Δ, listed with a as the outer loop. k-uniform, Δ-regular, linear,
/// on k·p <= 2kΔ vertices. Requires k >= 2 and Δ >= k.
ModularHypergraph h_construction(std::size_t k, std::size_t delta);

struct CounterexampleMeta {
  std::size_t k = 0;
  std::size_t delta = 0;
  std::uint64_t p = 0;
  std::size_t n_h = 0;
  std::optional<VertexId> removed_vertex;
  std::size_t n_sg = 0;
};

struct Counterexample {
  Hypergraph h;    // trimmed H_{k-1,Δ}, odd vertex count
  Hypergraph s_h;  // S_H, the k-uniform counterexample
  CounterexampleMeta meta;
};

/// H = H_{k-1,Δ}; if its vertex count is even the highest-id vertex is removed;
/// returns S_H. Requires k >= 3 and Δ >= k-1. The large-Δ hypothesis of the
/// main theorem is not enforced here.
Counterexample counterexample(std::size_t k, std::size_t delta);

}  // namespace zfr
