#include "zfr/generators.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace zfr {

Hypergraph random_hypergraph(std::size_t n, std::size_t max_edges, std::size_t max_edge_size, std::mt19937_64& rng) {
  if (n > kMaxMaskVertices) throw std::invalid_argument("random_hypergraph needs n <= 63");
  Hypergraph::Builder b(n);
  if (n == 0 || max_edge_size == 0) return std::move(b).build();
  std::uniform_int_distribution<std::size_t> edge_count(0, max_edges);
  std::uniform_int_distribution<std::size_t> edge_size(1, std::min(max_edge_size, n));
  std::uniform_int_distribution<std::uint32_t> vertex(0, static_cast<std::uint32_t>(n - 1));
  std::set<std::uint64_t> seen;
  const std::size_t target = edge_count(rng);
  // Bounded attempts: small n may not admit `target` distinct edges.
  for (std::size_t attempt = 0; seen.size() < target && attempt < 20 * (target + 1); ++attempt) {
    const std::size_t size = edge_size(rng);
    std::uint64_t mask = 0;
    while (static_cast<std::size_t>(std::popcount(mask)) < size) mask |= std::uint64_t{1} << vertex(rng);
    if (!seen.insert(mask).second) continue;
    std::vector<VertexId> edge;
    for (VertexId v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) edge.push_back(v);
    }
    b.add_edge(edge);
  }
  return std::move(b).build();
}

std::vector<Hypergraph> all_graphs(std::size_t n) {
  if (n > 7) throw std::invalid_argument("all_graphs is limited to n <= 7");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  std::vector<Hypergraph> out;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Hypergraph::Builder b(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) b.add_edge({pairs[i].first, pairs[i].second});
    }
    out.push_back(std::move(b).build());
  }
  return out;
}

}  // namespace zfr
