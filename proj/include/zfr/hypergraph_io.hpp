#pragma once

// JSON wire format: {"n": <int>, "edges": [[<int>, ...], ...]}. Unknown keys
// (e.g. the "meta" block written by gen-h) are ignored on input.

#include <string>
#include <string_view>

#include <json.hpp>

#include "zfr/hypergraph.hpp"

namespace zfr {

/// Throws HypergraphError: Malformed for bad JSON or shape, VertexOutOfRange,
/// DuplicateEdge, EmptyEdge or RepeatedVertex for invalid content.
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph hypergraph_from_json(const nlohmann::ordered_json& j);

/// Canonical form: edges sorted lexicographically.
nlohmann::ordered_json hypergraph_to_json(const Hypergraph& h);
std::string serialize_hypergraph(const Hypergraph& h);

}  // namespace zfr
