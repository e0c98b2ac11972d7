#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "incol/coloring.hpp"
#include "incol/completion.hpp"
#include "incol/error.hpp"
#include "incol/generators.hpp"
#include "incol/io.hpp"
#include "incol/levi.hpp"

using namespace incol;
using testing::hg;

namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_hypergraph_string(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("hypergraph text without a header") {
  const Hypergraph h = parse_hypergraph_string("# two edges\na b c\n\n  c d\n");
  CHECK(h == hg({{"a", "b", "c"}, {"c", "d"}}));
  CHECK(hypergraph_to_string(h) == "a b c\nc d\n");
}

TEST_CASE("hypergraph header keeps isolated vertices and order") {
  const Hypergraph h = parse_hypergraph_string("vertices: z a b\na b\n");
  CHECK(h.num_vertices() == 3);
  CHECK(h.name(0) == "z");
  CHECK(h.degree(0) == 0);
  CHECK(parse_hypergraph_string(hypergraph_to_string(h)) == h);
}

TEST_CASE("hypergraph round trip on random inputs") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Hypergraph h = testing::random_hg(2 + seed % 7, 1 + seed % 5, 4, seed);
    CHECK(parse_hypergraph_string(hypergraph_to_string(h)) == h);
  }
}

TEST_CASE("hypergraph parse errors carry line numbers") {
  CHECK(parse_error_line("a b\nc c\n") == 2);
  CHECK(parse_error_line("a b\n\nb a\n") == 3);
  CHECK(parse_error_line("a b\nvertices: a b\n") == 2);
  CHECK(parse_error_line("vertices: a a\n") == 1);
  CHECK_THROWS_WITH_AS(parse_hypergraph_string("a b\n# note\nb a\n"), "line 3: duplicate of the edge on line 1",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_hypergraph_string("vertices: a\na b\n"), doctest::Contains("'b'"), ParseError);
}

TEST_CASE("bipartite text round trip") {
  const BipartiteGraph g = testing::even_cycle(6);
  std::ostringstream out;
  write_bipartite(out, g);
  const BipartiteGraph back = parse_bipartite_string(out.str());
  CHECK(back.graph().num_edges() == 6);
  CHECK(biregular_profile(back) == biregular_profile(g));
  CHECK(is_k2t1_free(back, 1));
}

TEST_CASE("bipartite parse errors") {
  CHECK_THROWS_AS(parse_bipartite_string("a x\n"), ParseError);
  CHECK_THROWS_WITH_AS(parse_bipartite_string("parts: a b\na b\n"), doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_WITH_AS(parse_bipartite_string("parts: a\na x\na x\n"), doctest::Contains("line 3"), ParseError);
  CHECK_THROWS_AS(parse_bipartite_string(""), ParseError);
}

TEST_CASE("coloring text round trip") {
  const Hypergraph h = hg({{"a", "b", "c"}, {"c", "d", "e"}});
  const IncidenceColoring c = greedy_color(h);
  std::ostringstream out;
  write_coloring(out, h, c, std::string("6"), std::string("greedy"));
  const ColoringFile back = parse_coloring_string(out.str(), h);
  CHECK(back.coloring.colors == c.colors);
  CHECK(back.coloring.palette == c.palette);
  CHECK(back.bound == std::optional<std::string>("6"));
  CHECK(back.status == std::optional<std::string>("greedy"));
}

TEST_CASE("coloring parse errors") {
  const Hypergraph h = hg({{"a", "b"}});
  CHECK_THROWS_WITH_AS(parse_coloring_string("a 0 1\n", h), doctest::Contains("palette"), ParseError);
  CHECK_THROWS_WITH_AS(parse_coloring_string("palette: 2\nq 0 1\n", h), doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_WITH_AS(parse_coloring_string("palette: 2\na 1 1\n", h), doctest::Contains("out of range"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_coloring_string("palette: 2\na 0 1\na 0 2\n", h),
                       doctest::Contains("already colored on line 2"), ParseError);
  CHECK_THROWS_AS(parse_coloring_string("palette: 2\na 0 0\n", h), ParseError);
  CHECK_THROWS_AS(parse_coloring_string("palette: 2\na 0 x\n", h), ParseError);
}

TEST_CASE("partial colorings parse and leave zeros") {
  const Hypergraph h = hg({{"a", "b"}});
  const ColoringFile c = parse_coloring_string("palette: 2\nb 0 2\n", h);
  CHECK(c.coloring.colors == std::vector<int>{0, 2});
}

TEST_CASE("embedding text round trip") {
  const Hypergraph h = hg({{"a", "b"}, {"b", "c"}});
  const Completion c = complete(h);
  std::ostringstream out;
  write_embedding(out, h, c.hypergraph, c.embedding);
  std::istringstream in(out.str());
  const Embedding back = parse_embedding(in, h, c.hypergraph);
  CHECK(back.vertex_map == c.embedding.vertex_map);
  CHECK(back.edge_map == c.embedding.edge_map);
}

TEST_CASE("embedding parse errors") {
  const Hypergraph h = hg({{"a", "b"}});
  std::istringstream missing("[vertices]\na -> a\n[edges]\n0 -> 0\n");
  CHECK_THROWS_WITH_AS(parse_embedding(missing, h, h), doctest::Contains("'b'"), ParseError);
  std::istringstream early("a -> a\n");
  CHECK_THROWS_WITH_AS(parse_embedding(early, h, h), doctest::Contains("line 1"), ParseError);
}

TEST_CASE("key value output") {
  std::ostringstream out;
  write_key_values(out, {{"a", "1"}, {"b", "x y"}});
  CHECK(out.str() == "a=1\nb=x y\n");
}
