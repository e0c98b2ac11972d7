#include "incol/levi.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "incol/error.hpp"

namespace incol {

BipartiteGraph levi_graph(const Hypergraph& h) {
  std::unordered_set<std::string> taken(h.vertex_names().begin(), h.vertex_names().end());
  std::vector<std::string> edge_nodes;
  edge_nodes.reserve(h.num_edges());
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    std::string n = "e" + std::to_string(e);
    while (taken.count(n)) n += '\'';
    taken.insert(n);
    edge_nodes.push_back(std::move(n));
  }
  BipartiteGraph b(h.vertex_names(), std::move(edge_nodes));
  for (const Incidence& inc : h.incidences()) b.add_edge(inc.vertex, inc.edge);
  return b;
}

namespace {

// Appends to `out` every edge incident to the closed neighbourhoods of the
// endpoints of `edge`, using `mark` (sized num_edges, all zero on entry and
// exit) to deduplicate.
void collect_d2(const Graph& g, std::size_t edge, std::vector<char>& mark, std::vector<std::size_t>& out) {
  out.clear();
  const auto& ed = g.edge(edge);
  mark[edge] = 1;
  auto take_vertex = [&](std::size_t w) {
    for (std::size_t f : g.incident_edges(w)) {
      if (!mark[f]) {
        mark[f] = 1;
        out.push_back(f);
      }
    }
  };
  for (std::size_t end : {ed.u, ed.v}) {
    for (std::size_t f : g.incident_edges(end)) take_vertex(g.other_end(f, end));
  }
  mark[edge] = 0;
  for (std::size_t f : out) mark[f] = 0;
  std::sort(out.begin(), out.end());
}

}  // namespace

std::vector<std::size_t> d2_neighborhood(const Graph& g, std::size_t edge) {
  if (edge >= g.num_edges()) throw PreconditionError("unknown edge index " + std::to_string(edge));
  std::vector<char> mark(g.num_edges(), 0);
  std::vector<std::size_t> out;
  collect_d2(g, edge, mark, out);
  return out;
}

std::vector<std::size_t> d2_neighborhood(const Graph& g, std::size_t u, std::size_t v) {
  auto e = g.find_edge(u, v);
  if (!e) throw PreconditionError("no edge between vertices " + std::to_string(u) + " and " + std::to_string(v));
  return d2_neighborhood(g, *e);
}

std::vector<std::vector<std::size_t>> all_d2_neighborhoods(const Graph& g) {
  std::vector<std::vector<std::size_t>> out(g.num_edges());
  std::vector<char> mark(g.num_edges(), 0);
  for (std::size_t e = 0; e < g.num_edges(); ++e) collect_d2(g, e, mark, out[e]);
  return out;
}

Graph line_graph_square(const Graph& g) {
  Graph sq(g.num_edges());
  auto d2 = all_d2_neighborhoods(g);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    for (std::size_t f : d2[e]) {
      if (f > e) sq.add_edge(e, f);
    }
  }
  return sq;
}

ConflictGraph conflict_graph(const Hypergraph& h) {
  ConflictGraph cg{h.incidences(), Graph(h.num_incidences())};
  // Incidences of each vertex, by canonical index.
  std::vector<std::vector<std::size_t>> at_vertex(h.num_vertices());
  for (std::size_t i = 0; i < cg.incidences.size(); ++i) at_vertex[cg.incidences[i].vertex].push_back(i);

  std::vector<char> mark(cg.incidences.size(), 0);
  std::vector<std::size_t> nbrs;
  for (std::size_t i = 0; i < cg.incidences.size(); ++i) {
    const auto [x, s] = cg.incidences[i];
    nbrs.clear();
    auto take = [&](std::size_t j) {
      if (j != i && !mark[j]) {
        mark[j] = 1;
        nbrs.push_back(j);
      }
    };
    // same vertex, or the other vertex lies in s
    for (VertexId y : h.edge(s)) {
      for (std::size_t j : at_vertex[y]) take(j);
    }
    // x lies in the other incidence's edge
    for (EdgeId f : h.edges_of(x)) {
      for (std::size_t j = h.edge_offset(f); j < h.edge_offset(f) + h.edge_size(f); ++j) take(j);
    }
    std::sort(nbrs.begin(), nbrs.end());
    for (std::size_t j : nbrs) {
      mark[j] = 0;
      if (j > i) cg.graph.add_edge(i, j);
    }
  }
  return cg;
}

std::size_t zeta(const Graph& g, std::size_t other, std::size_t edge) {
  auto de = d2_neighborhood(g, edge);
  if (!std::binary_search(de.begin(), de.end(), other)) {
    throw PreconditionError("zeta requires edge " + std::to_string(other) + " to lie in D2 of edge " +
                            std::to_string(edge));
  }
  auto dother = d2_neighborhood(g, other);
  std::vector<std::size_t> common;
  std::set_intersection(de.begin(), de.end(), dother.begin(), dother.end(), std::back_inserter(common));
  return common.size();
}

bool is_k2t1_free(const BipartiteGraph& b, std::size_t t) {
  const Graph& g = b.graph();
  // Codegree counting: every pair of neighbours of a vertex w gains one common
  // neighbour. Pairs within one side only arise from w on the other side.
  for (int side = 0; side < 2; ++side) {
    std::unordered_map<std::uint64_t, std::size_t> codegree;
    for (std::size_t w = 0; w < g.num_vertices(); ++w) {
      if (b.in_part_u(w) == (side == 0)) continue;
      auto inc = g.incident_edges(w);
      for (std::size_t i = 0; i < inc.size(); ++i) {
        for (std::size_t j = i + 1; j < inc.size(); ++j) {
          std::uint64_t p = g.other_end(inc[i], w), q = g.other_end(inc[j], w);
          if (p > q) std::swap(p, q);
          if (++codegree[(p << 32) | q] > t) return false;
        }
      }
    }
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> biregular_profile(const BipartiteGraph& b) {
  const Graph& g = b.graph();
  std::optional<std::size_t> a, bb;
  for (std::size_t n = 0; n < g.num_vertices(); ++n) {
    auto& slot = b.in_part_u(n) ? a : bb;
    if (!slot) {
      slot = g.degree(n);
    } else if (*slot != g.degree(n)) {
      return std::nullopt;
    }
  }
  if (!a || !bb) return std::nullopt;
  return std::make_pair(*a, *bb);
}

bool is_forest(const Graph& g) {
  std::vector<std::size_t> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) {
    std::size_t a = find(e.u), c = find(e.v);
    if (a == c) return false;
    parent[a] = c;
  }
  return true;
}

}  // namespace incol
