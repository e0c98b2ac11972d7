#include <doctest.h>

#include "helpers.hpp"
#include "incol/coloring.hpp"
#include "incol/error.hpp"
#include "incol/generators.hpp"
#include "incol/levi.hpp"
#include "oracles.hpp"

using namespace incol;
using testing::cycle;
using testing::hg;

TEST_CASE("verify_incidence on a single edge") {
  const Hypergraph h = hg({{"a", "b", "c"}});
  CHECK(verify_incidence(h, {{1, 2, 3}, 3}).empty());
  const auto bad = verify_incidence(h, {{1, 1, 2}, 2});
  REQUIRE(bad.size() == 1);
  CHECK(bad[0] == Violation{0, 1});
}

TEST_CASE("verify_incidence ignores colors across disjoint edges") {
  CHECK(verify_incidence(hg({{"a", "b"}, {"c", "d"}}), {{1, 2, 1, 2}, 2}).empty());
}

TEST_CASE("verify_incidence lists missing incidences") {
  const Hypergraph h = hg({{"a", "b"}, {"b", "c"}});
  CHECK_THROWS_WITH_AS(verify_incidence(h, {{1, 0, 3, 0}, 3}), doctest::Contains("(b, 0) (c, 1)"),
                       PreconditionError);
  CHECK_THROWS_AS(verify_incidence(h, {{1, 2}, 2}), PreconditionError);
  CHECK_THROWS_AS(verify_incidence(h, {{1, 2, 3, 9}, 4}), PreconditionError);
}

TEST_CASE("verify_strong_edge on cycles, paths and matchings") {
  const Graph c6 = cycle(6);
  CHECK(verify_strong_edge(c6, {{1, 2, 3, 1, 2, 3}, 3}).empty());
  CHECK(oracle::strong_proper(c6, {1, 2, 3, 1, 2, 3}));

  Graph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  CHECK(verify_strong_edge(p3, {{1, 1}, 1}).size() == 1);

  Graph m(4);
  m.add_edge(0, 1);
  m.add_edge(2, 3);
  CHECK(verify_strong_edge(m, {{1, 1}, 1}).empty());
  CHECK_THROWS_AS(verify_strong_edge(m, {{1, 0}, 1}), PreconditionError);
}

TEST_CASE("translation keeps violations") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Hypergraph h = testing::random_hg(3 + seed % 4, 1 + seed % 5, 3, seed);
    IncidenceColoring c;
    for (std::size_t i = 0; i < h.num_incidences(); ++i) c.colors.push_back(1 + static_cast<int>((i * seed) % 3));
    c.palette = 3;
    const StrongEdgeColoring s = to_strong_edge(h, c);
    CHECK(verify_incidence(h, c) == verify_strong_edge(levi_graph(h).graph(), s));
    const IncidenceColoring back = to_incidence(h, s);
    CHECK(back.colors == c.colors);
    CHECK(back.palette == c.palette);
  }
}

TEST_CASE("greedy coloring of small hypergraphs") {
  CHECK(greedy_color(hg({{"a", "b", "c"}})).palette == 3);
  CHECK(greedy_color(hg({{"a", "b"}, {"b", "c"}})).palette == 3);
}

TEST_CASE("greedy coloring rejects bad orders") {
  const Hypergraph h = hg({{"a", "b"}});
  CHECK_THROWS_AS(greedy_color(h, std::vector<std::size_t>{0}), PreconditionError);
  CHECK_THROWS_AS(greedy_color(h, std::vector<std::size_t>{0, 0}), PreconditionError);
  CHECK_THROWS_AS(greedy_color(h, std::vector<std::size_t>{0, 2}), PreconditionError);
  CHECK(greedy_color(h, std::vector<std::size_t>{1, 0}).colors == std::vector<int>{2, 1});
}

TEST_CASE("greedy coloring is proper and within 2 r Delta") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Hypergraph h = testing::random_hg(3 + seed % 8, 1 + seed % 9, 1 + seed % 5, seed);
    for (auto order : {GreedyOrder::kCanonical, GreedyOrder::kLeviBfs}) {
      const IncidenceColoring c = greedy_color(h, order);
      CHECK(verify_incidence(h, c).empty());
      CHECK(static_cast<std::size_t>(c.palette) <= conflict_graph(h).graph.max_degree() + 1);
      CHECK(static_cast<std::size_t>(c.palette) <= 2 * rank(h) * max_degree(h));
    }
  }
}

TEST_CASE("Levi BFS order is a permutation") {
  const Hypergraph h = hg({{"a", "b"}, {"c", "d"}, {"b", "c", "e"}});
  auto order = levi_bfs_order(h);
  std::sort(order.begin(), order.end());
  CHECK(order == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6});
}

TEST_CASE("exact chromatic numbers of small hypergraphs") {
  const ExactResult edge = exact_chromatic(hg({{"a", "b", "c"}}));
  CHECK(edge.solved);
  CHECK(edge.chromatic == 3);

  const Hypergraph star = hg({{"c", "a"}, {"c", "b"}, {"c", "d"}});
  CHECK(exact_chromatic(star).chromatic == 4);
  CHECK(oracle::min_incidence_palette(star) == 4);

  // The triangle's Levi graph is C6, whose strong chromatic index is 3.
  const Hypergraph triangle = hg({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  const ExactResult tri = exact_chromatic(triangle);
  CHECK(tri.chromatic == 3);
  CHECK(oracle::min_incidence_palette(triangle) == 3);
  CHECK(verify_incidence(triangle, tri.witness).empty());
}

TEST_CASE("exact solver reports bounds when the budget runs out") {
  const Hypergraph h = gen_linear(9, 8, 3, 4);
  const ExactResult res = exact_chromatic(h, 3);
  if (!res.solved) {
    CHECK(res.lower <= res.upper);
    CHECK(res.chromatic == 0);
    CHECK(verify_incidence(h, res.witness).empty());
  }
  const ExactResult full = exact_chromatic(h);
  CHECK(full.solved);
  CHECK(full.lower <= full.chromatic);
}

TEST_CASE("exact solver enforces its incidence cap") {
  const Hypergraph h = gen_linear(16, 11, 4, 1);
  REQUIRE(h.num_incidences() > kDefaultExactIncidenceCap);
  CHECK_THROWS_AS(exact_chromatic(h), CapExceeded);
}

TEST_CASE("clique lower bound") {
  CHECK(clique_lower_bound(hg({{"a", "b", "c"}})) == 3);
  const Hypergraph path = hg({{"a", "b"}, {"b", "c"}});
  CHECK(clique_lower_bound(path) == 3);
  CHECK(exact_chromatic(path).chromatic == 3);
  CHECK_THROWS_AS(clique_lower_bound(Hypergraph({"a"}, {})), PreconditionError);
}

TEST_CASE("clique witness is pairwise adjacent") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Hypergraph h = testing::random_hg(4 + seed % 5, 2 + seed % 5, 4, seed);
    const auto w = clique_witness(h);
    CHECK(w.size() == clique_lower_bound(h));
    const auto raw = oracle::incidence_list(h);
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) CHECK(oracle::adjacent(h, raw[w[i]], raw[w[j]]));
    }
  }
}

TEST_CASE("k-uniform clique bound is Delta + k - 1") {
  const Hypergraph h = hg({{"x", "a1", "a2"}, {"x", "b1", "b2"}, {"x", "c1", "c2"}, {"a1", "d1", "d2"}});
  CHECK(clique_lower_bound(h) == 3 + 3 - 1);
}

TEST_CASE("exact solver sits between the clique bound and greedy, and matches the oracles") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Hypergraph h = testing::random_hg(3 + seed % 4, 1 + seed % 4, 3, seed);
    if (h.num_incidences() > 10) continue;
    CAPTURE(seed);
    const ExactResult res = exact_chromatic(h);
    REQUIRE(res.solved);
    CHECK(static_cast<int>(clique_lower_bound(h)) <= res.chromatic);
    CHECK(res.chromatic <= greedy_color(h).palette);
    CHECK(res.chromatic == oracle::min_incidence_palette(h));
    CHECK(res.chromatic == oracle::chromatic_number(oracle::square_of_line(oracle::levi(h))));
    CHECK(res.witness.palette == res.chromatic);
    CHECK(verify_incidence(h, res.witness).empty());
  }
}
