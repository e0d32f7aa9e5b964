#include "zfr/hypergraph_io.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace zfr {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw HypergraphError(HypergraphError::Kind::Malformed, "malformed hypergraph JSON: " + what);
}

std::uint64_t read_index(const nlohmann::ordered_json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  const auto v = j.get<std::int64_t>();
  if (v < 0) malformed(std::string(what) + " must be non-negative");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

Hypergraph hypergraph_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) malformed("top level must be an object");
  if (!j.contains("n")) malformed("missing \"n\"");
  if (!j.contains("edges")) malformed("missing \"edges\"");
  const std::uint64_t n = read_index(j.at("n"), "\"n\"");
  if (n > std::numeric_limits<VertexId>::max()) malformed("\"n\" too large");
  const auto& edges = j.at("edges");
  if (!edges.is_array()) malformed("\"edges\" must be an array");

  Hypergraph::Builder b(static_cast<std::size_t>(n));
  std::vector<VertexId> scratch;
  for (const auto& e : edges) {
    if (!e.is_array()) malformed("each edge must be an array");
    scratch.clear();
    for (const auto& v : e) {
      const std::uint64_t id = read_index(v, "vertex id");
      if (id >= n) {
        throw HypergraphError(HypergraphError::Kind::VertexOutOfRange,
                              "vertex id out of range: " + std::to_string(id) + " >= n = " + std::to_string(n));
      }
      scratch.push_back(static_cast<VertexId>(id));
    }
    b.add_edge(scratch);
  }
  return std::move(b).build();
}

Hypergraph parse_hypergraph(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    malformed(e.what());
  }
  return hypergraph_from_json(j);
}

nlohmann::ordered_json hypergraph_to_json(const Hypergraph& h) {
  std::vector<std::size_t> order(h.edge_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto ea = h.edge(a);
    auto eb = h.edge(b);
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
  });
  auto edges = nlohmann::ordered_json::array();
  for (std::size_t j : order) {
    auto e = h.edge(j);
    edges.push_back(std::vector<VertexId>(e.begin(), e.end()));
  }
  return nlohmann::ordered_json{{"n", h.vertex_count()}, {"edges", std::move(edges)}};
}

std::string serialize_hypergraph(const Hypergraph& h) { return hypergraph_to_json(h).dump(); }

}  // namespace zfr
