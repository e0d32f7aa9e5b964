#include "zfr/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace zfr {

Hypergraph::Builder& Hypergraph::Builder::add_edge(std::span<const VertexId> edge) {
  const std::size_t start = ids_.size();
  ids_.insert(ids_.end(), edge.begin(), edge.end());
  std::sort(ids_.begin() + static_cast<std::ptrdiff_t>(start), ids_.end());
  offsets_.push_back(ids_.size());
  return *this;
}

void Hypergraph::Builder::reserve(std::size_t edges, std::size_t incidences) {
  offsets_.reserve(edges + 1);
  ids_.reserve(incidences);
}

Hypergraph Hypergraph::Builder::build() && {
  const std::size_t m = offsets_.size() - 1;
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t begin = offsets_[j];
    const std::size_t end = offsets_[j + 1];
    if (begin == end) {
      throw HypergraphError(HypergraphError::Kind::EmptyEdge, "edge " + std::to_string(j) + " is empty");
    }
    if (ids_[end - 1] >= n_) {
      throw HypergraphError(HypergraphError::Kind::VertexOutOfRange,
                            "vertex id out of range: " + std::to_string(ids_[end - 1]) + " >= n = " +
                                std::to_string(n_));
    }
    for (std::size_t i = begin + 1; i < end; ++i) {
      if (ids_[i] == ids_[i - 1]) {
        throw HypergraphError(HypergraphError::Kind::RepeatedVertex,
                              "edge " + std::to_string(j) + " repeats vertex " + std::to_string(ids_[i]));
      }
    }
  }

  // Duplicate edges: sort edge indices lexicographically, compare neighbours.
  auto edge_span = [this](std::size_t j) {
    return std::span<const VertexId>(ids_.data() + offsets_[j], offsets_[j + 1] - offsets_[j]);
  };
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto ea = edge_span(a);
    auto eb = edge_span(b);
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
  });
  for (std::size_t i = 1; i < m; ++i) {
    auto ea = edge_span(order[i - 1]);
    auto eb = edge_span(order[i]);
    if (std::equal(ea.begin(), ea.end(), eb.begin(), eb.end())) {
      throw HypergraphError(HypergraphError::Kind::DuplicateEdge,
                            "duplicate edge: edges " + std::to_string(std::min(order[i - 1], order[i])) +
                                " and " + std::to_string(std::max(order[i - 1], order[i])));
    }
  }

  Hypergraph h;
  h.n_ = n_;
  h.ids_ = std::move(ids_);
  h.offsets_ = std::move(offsets_);
  return h;
}

Hypergraph Hypergraph::from_edges(std::size_t n, const std::vector<std::vector<VertexId>>& edges) {
  Builder b(n);
  for (const auto& e : edges) b.add_edge(e);
  return std::move(b).build();
}

std::vector<std::vector<VertexId>> Hypergraph::edge_lists() const {
  std::vector<std::vector<VertexId>> out;
  out.reserve(edge_count());
  for (std::size_t j = 0; j < edge_count(); ++j) {
    auto e = edge(j);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

VertexSet::VertexSet(std::size_t universe, std::vector<VertexId> ids) : universe_(universe), ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  if (!ids_.empty() && ids_.back() >= universe_) {
    throw std::invalid_argument("vertex set member " + std::to_string(ids_.back()) + " outside 0.." +
                                std::to_string(universe_));
  }
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > kMaxMaskVertices) throw std::invalid_argument("mask vertex sets need n <= 63");
  if (universe < 64 && (mask >> universe) != 0) throw std::invalid_argument("mask has bits outside the universe");
  std::vector<VertexId> ids;
  for (VertexId v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1U) ids.push_back(v);
  }
  return VertexSet(universe, std::move(ids));
}

VertexSet VertexSet::all(std::size_t universe) {
  std::vector<VertexId> ids(universe);
  std::iota(ids.begin(), ids.end(), VertexId{0});
  return VertexSet(universe, std::move(ids));
}

bool VertexSet::contains(VertexId v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

std::uint64_t VertexSet::mask() const {
  if (universe_ > kMaxMaskVertices) throw std::logic_error("mask requested for a vertex set with n > 63");
  std::uint64_t m = 0;
  for (VertexId v : ids_) m |= std::uint64_t{1} << v;
  return m;
}

std::optional<std::size_t> uniformity(const Hypergraph& h) {
  if (h.edge_count() == 0) return std::nullopt;
  const std::size_t k = h.edge(0).size();
  for (std::size_t j = 1; j < h.edge_count(); ++j) {
    if (h.edge(j).size() != k) return std::nullopt;
  }
  return k;
}

bool is_linear(const Hypergraph& h) {
  std::vector<std::uint64_t> pairs;
  std::size_t total = 0;
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    const std::size_t s = h.edge(j).size();
    total += s * (s - 1) / 2;
  }
  pairs.reserve(total);
  const std::uint64_t n = h.vertex_count();
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    auto e = h.edge(j);
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) pairs.push_back(e[a] * n + e[b]);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

DegreeProfile degree_profile(const Hypergraph& h) {
  if (h.vertex_count() == 0) throw std::invalid_argument("degree profile of a hypergraph with no vertices");
  DegreeProfile p;
  p.degrees.assign(h.vertex_count(), 0);
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    for (VertexId v : h.edge(j)) ++p.degrees[v];
  }
  auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
  p.min_degree = *lo;
  p.max_degree = *hi;
  return p;
}

std::size_t covered_edges(const Hypergraph& h, const VertexSet& s) {
  if (s.universe() != h.vertex_count()) throw std::invalid_argument("vertex set belongs to a different hypergraph");
  if (s.empty()) return 0;
  std::vector<bool> member(h.vertex_count(), false);
  for (VertexId v : s.ids()) member[v] = true;
  std::size_t count = 0;
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    auto e = h.edge(j);
    if (std::any_of(e.begin(), e.end(), [&](VertexId v) { return member[v]; })) ++count;
  }
  return count;
}

std::size_t covered_edges(const Hypergraph& h, std::uint64_t mask) {
  std::size_t count = 0;
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    for (VertexId v : h.edge(j)) {
      if ((mask >> v) & 1U) {
        ++count;
        break;
      }
    }
  }
  return count;
}

Hypergraph remove_vertex(const Hypergraph& h, VertexId v) {
  if (v >= h.vertex_count()) {
    throw std::out_of_range("cannot remove vertex " + std::to_string(v) + " from a hypergraph on " +
                            std::to_string(h.vertex_count()) + " vertices");
  }
  Hypergraph::Builder b(h.vertex_count() - 1);
  b.reserve(h.edge_count(), h.incidence_count());
  std::vector<VertexId> scratch;
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    auto e = h.edge(j);
    if (std::binary_search(e.begin(), e.end(), v)) continue;
    scratch.assign(e.begin(), e.end());
    for (VertexId& u : scratch) {
      if (u > v) --u;
    }
    b.add_edge(scratch);
  }
  return std::move(b).build();
}

}  // namespace zfr
