#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zfr/construct.hpp"
#include "zfr/generators.hpp"
#include "zfr/hypergraph_io.hpp"

using namespace zfr;

TEST_SUITE("construct") {
  TEST_CASE("s_transform of the triangle") {
    const Hypergraph t = Hypergraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    const Hypergraph s = s_transform(t);
    CHECK(serialize_hypergraph(s) == R"({"n":6,"edges":[[0,1,3],[0,2,4],[1,2,5]]})");
  }

  TEST_CASE("s_transform of a single edge and of an edgeless hypergraph") {
    const Hypergraph s = s_transform(Hypergraph::from_edges(2, {{0, 1}}));
    CHECK(s.vertex_count() == 3);
    CHECK(s.edge_lists() == std::vector<std::vector<VertexId>>{{0, 1, 2}});
    const Hypergraph empty = s_transform(Hypergraph(4));
    CHECK(empty.vertex_count() == 4);
    CHECK(empty.edge_count() == 0);
  }

  TEST_CASE("s_transform preserves linearity and maximum degree, raises uniformity") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
      const Hypergraph g = random_hypergraph(1 + rng() % 9, 10, 3, rng);
      const Hypergraph s = s_transform(g);
      CHECK(s.vertex_count() == g.vertex_count() + g.edge_count());
      CHECK(s.edge_count() == g.edge_count());
      CHECK(is_linear(s) == oracle::is_linear(g));
      if (g.edge_count() > 0) {
        CHECK(degree_profile(s).max_degree == degree_profile(g).max_degree);
        if (const auto u = uniformity(g)) CHECK(uniformity(s) == *u + 1);
      }
    }
  }

  TEST_CASE("primes") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(25));
    CHECK_FALSE(is_prime(49));
    CHECK(is_prime(1009));
    CHECK(is_prime(1000003));
    CHECK(find_prime_in(2) == 2);
    CHECK(find_prime_in(4) == 5);
    CHECK(find_prime_in(1000) == 1009);
    CHECK(find_prime_in(1000000) == 1000003);
    CHECK_THROWS_AS(find_prime_in(1), std::invalid_argument);
  }

  TEST_CASE("find_prime_in lies in [delta, 2 delta] and is the smallest such prime") {
    for (std::uint64_t d = 2; d <= 3000; ++d) {
      const std::uint64_t p = find_prime_in(d);
      CHECK(p >= d);
      CHECK(p <= 2 * d);
      bool prime = p >= 2;
      for (std::uint64_t q = 2; q * q <= p && prime; ++q) prime = p % q != 0;
      CHECK(prime);
      for (std::uint64_t x = d; x < p; ++x) CHECK_FALSE(is_prime(x));
    }
  }

  TEST_CASE("H_{2,2} and H_{2,3}") {
    const auto [h22, p22] = h_construction(2, 2);
    CHECK(p22 == 2);
    CHECK(h22.vertex_count() == 4);
    CHECK(h22.edge_lists() == std::vector<std::vector<VertexId>>{{1, 2}, {0, 2}, {0, 3}, {1, 3}});

    const auto [h23, p23] = h_construction(2, 3);
    CHECK(p23 == 3);
    CHECK(h23.vertex_count() == 6);
    CHECK(h23.edge_count() == 9);
  }

  TEST_CASE("H_{k,delta} invariants") {
    for (std::size_t k = 2; k <= 5; ++k) {
      for (std::size_t delta = k; delta <= 23; ++delta) {
        CAPTURE(k);
        CAPTURE(delta);
        const auto [h, p] = h_construction(k, delta);
        const DegreeProfile d = degree_profile(h);
        CHECK(p == find_prime_in(delta));
        CHECK(h.vertex_count() == k * p);
        CHECK(h.vertex_count() <= 2 * k * delta);
        CHECK(h.edge_count() == p * delta);
        CHECK(uniformity(h) == k);
        CHECK(is_linear(h));
        CHECK(d.min_degree == delta);
        CHECK(d.max_degree == delta);
        // Every edge meets each part [i] x Z_p exactly once.
        for (std::size_t j = 0; j < h.edge_count(); ++j) {
          const auto e = h.edge(j);
          for (std::size_t i = 0; i < k; ++i) CHECK(e[i] / p == i);
        }
      }
    }
  }

  TEST_CASE("h_construction preconditions") {
    CHECK_THROWS_AS(h_construction(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(h_construction(3, 2), std::invalid_argument);
  }

  TEST_CASE("h_construction is deterministic") {
    CHECK(serialize_hypergraph(h_construction(3, 7).h) == serialize_hypergraph(h_construction(3, 7).h));
  }

  TEST_CASE("counterexample for k = 3, delta = 4") {
    const Counterexample cx = counterexample(3, 4);
    CHECK(cx.meta.p == 5);
    CHECK(cx.meta.n_h == 9);
    REQUIRE(cx.meta.removed_vertex.has_value());
    CHECK(*cx.meta.removed_vertex == 9);
    CHECK(cx.h.vertex_count() == 9);
    CHECK(cx.h.edge_count() == 16);
    CHECK(cx.meta.n_sg == cx.meta.n_h + cx.h.edge_count());
    CHECK(cx.meta.n_sg == 25);
    CHECK(cx.s_h.vertex_count() == 25);
    CHECK(uniformity(cx.s_h) == std::size_t{3});
    CHECK(is_linear(cx.s_h));
    CHECK(degree_profile(cx.s_h).max_degree == 4);
    CHECK(degree_profile(cx.h).min_degree == 3);
  }

  TEST_CASE("counterexample keeps odd vertex counts untouched") {
    // k - 1 = 3, p = 5: 15 vertices, already odd.
    const Counterexample cx = counterexample(4, 5);
    CHECK_FALSE(cx.meta.removed_vertex.has_value());
    CHECK(cx.h.vertex_count() == 15);
    CHECK(cx.meta.n_sg == 15 + 25);
    CHECK(degree_profile(cx.h).min_degree == 5);
  }

  TEST_CASE("counterexample invariants over a grid") {
    for (std::size_t k = 3; k <= 5; ++k) {
      for (std::size_t delta = k - 1; delta <= 20; ++delta) {
        if (delta < 2) continue;
        CAPTURE(k);
        CAPTURE(delta);
        const Counterexample cx = counterexample(k, delta);
        CHECK(cx.meta.n_h % 2 == 1);
        CHECK(cx.meta.n_h == cx.h.vertex_count());
        CHECK(cx.meta.n_sg == cx.meta.n_h + cx.h.edge_count());
        CHECK(cx.s_h.vertex_count() == cx.meta.n_sg);
        CHECK(uniformity(cx.s_h) == k);
        CHECK(is_linear(cx.s_h));
        CHECK(degree_profile(cx.s_h).max_degree <= delta);
        CHECK(degree_profile(cx.h).min_degree >= delta - 1);
      }
    }
  }

  TEST_CASE("counterexample preconditions") {
    CHECK_THROWS_AS(counterexample(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(counterexample(5, 3), std::invalid_argument);
  }
}
