#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zfr {

using VertexId = std::uint32_t;

/// Largest vertex count for which a VertexSet can be packed into a 64-bit mask.
inline constexpr std::size_t kMaxMaskVertices = 63;

class HypergraphError : public std::invalid_argument {
 public:
  enum class Kind {
    Malformed,
    VertexOutOfRange,
    DuplicateEdge,
    EmptyEdge,
    RepeatedVertex,
  };

  HypergraphError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Vertices are the dense ids 0..n-1; each edge is a nonempty, strictly
/// increasing id list, and no edge occurs twice. Edges keep their insertion
/// order (edge j of G becomes edge j of S_G). Immutable once built.
class Hypergraph {
 public:
  class Builder {
   public:
    explicit Builder(std::size_t n) : n_(n) {}

    /// Vertex ids may come in any order; they are sorted on insertion.
    Builder& add_edge(std::span<const VertexId> edge);
    Builder& add_edge(std::initializer_list<VertexId> edge) {
      return add_edge(std::span<const VertexId>(edge.begin(), edge.size()));
    }
    void reserve(std::size_t edges, std::size_t incidences);

    /// Validates every invariant; throws HypergraphError.
    Hypergraph build() &&;

   private:
    std::size_t n_;
    std::vector<VertexId> ids_;
    std::vector<std::size_t> offsets_{0};
  };

  Hypergraph() = default;

  /// Edgeless hypergraph on n vertices.
  explicit Hypergraph(std::size_t n) : n_(n) {}

  static Hypergraph from_edges(std::size_t n, const std::vector<std::vector<VertexId>>& edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return offsets_.size() - 1; }
  std::span<const VertexId> edge(std::size_t j) const {
    return {ids_.data() + offsets_[j], offsets_[j + 1] - offsets_[j]};
  }
  std::size_t incidence_count() const noexcept { return ids_.size(); }

  std::vector<std::vector<VertexId>> edge_lists() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<VertexId> ids_;
  std::vector<std::size_t> offsets_{0};
};

/// A subset of the vertices of a hypergraph with `universe` vertices. Held as
/// a sorted id list; the mask form is available when universe <= 63.
class VertexSet {
 public:
  VertexSet(std::size_t universe, std::vector<VertexId> ids);
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);
  static VertexSet all(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  std::span<const VertexId> ids() const noexcept { return ids_; }
  bool contains(VertexId v) const;
  std::uint64_t mask() const;

 private:
  std::size_t universe_;
  std::vector<VertexId> ids_;
};

struct DegreeProfile {
  std::vector<std::size_t> degrees;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
};

/// k if every edge has size k; nullopt for mixed sizes or no edges.
std::optional<std::size_t> uniformity(const Hypergraph& h);

/// True iff any two distinct edges share at most one vertex. Runs in
/// O(sum |e|^2 log) by looking for a vertex pair covered twice.
bool is_linear(const Hypergraph& h);

/// Throws std::invalid_argument for n = 0.
DegreeProfile degree_profile(const Hypergraph& h);

/// e(S): the number of edges meeting S.
std::size_t covered_edges(const Hypergraph& h, const VertexSet& s);

/// Mask form of covered_edges for enumeration paths (n <= 63).
std::size_t covered_edges(const Hypergraph& h, std::uint64_t mask);

/// Deletes v together with every edge through it; ids above v shift down.
Hypergraph remove_vertex(const Hypergraph& h, VertexId v);

}  // namespace zfr
