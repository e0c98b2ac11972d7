#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "incol/graph.hpp"
#include "incol/hypergraph.hpp"

namespace incol {

/// Levi (incidence) graph. Part U holds the vertices of h, part V one node
/// per edge. Levi edge i corresponds to incidence i in canonical order.
BipartiteGraph levi_graph(const Hypergraph& h);

/// L(g)^2: one vertex per edge of g, adjacent when the edges are at
/// line-graph distance 1 or 2.
Graph line_graph_square(const Graph& g);

/// The conflict graph on incidences: vertex i is incidence i of `source`
/// (canonical order), adjacency is incidence adjacency.
struct ConflictGraph {
  std::vector<Incidence> incidences;
  Graph graph;
};

ConflictGraph conflict_graph(const Hypergraph& h);

/// D2(e): edges of g other than e at line-graph distance at most 2, sorted.
std::vector<std::size_t> d2_neighborhood(const Graph& g, std::size_t edge);
/// Same, with the edge given by its endpoints. Throws on an unknown edge.
std::vector<std::size_t> d2_neighborhood(const Graph& g, std::size_t u, std::size_t v);
/// D2 for every edge at once.
std::vector<std::vector<std::size_t>> all_d2_neighborhoods(const Graph& g);

/// |D2(other) ∩ D2(edge)|. Requires other ∈ D2(edge).
std::size_t zeta(const Graph& g, std::size_t other, std::size_t edge);

/// False iff two vertices on the same side share more than t neighbours.
bool is_k2t1_free(const BipartiteGraph& g, std::size_t t);

/// (a, b) when every U vertex has degree a and every V vertex degree b.
std::optional<std::pair<std::size_t, std::size_t>> biregular_profile(const BipartiteGraph& g);

/// True iff g has no cycle.
bool is_forest(const Graph& g);

}  // namespace incol
