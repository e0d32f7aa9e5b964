#pragma once

// Small-instance generators shared by the self-test and the test suites.

#include <cstdint>
#include <random>
#include <vector>

#include "zfr/hypergraph.hpp"

namespace zfr {

/// Random hypergraph on n vertices with at most max_edges distinct edges,
/// edge sizes in [1, max_edge_size]. n must be <= 63.
Hypergraph random_hypergraph(std::size_t n, std::size_t max_edges, std::size_t max_edge_size, std::mt19937_64& rng);

/// Every simple graph on n labelled vertices (2^(n choose 2) of them), n <= 7.
std::vector<Hypergraph> all_graphs(std::size_t n);

}  // namespace zfr
