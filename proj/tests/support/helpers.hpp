#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "incol/generators.hpp"
#include "incol/graph.hpp"
#include "incol/hypergraph.hpp"

namespace testing {

inline incol::Hypergraph hg(const std::vector<std::vector<std::string>>& edges,
                            const std::vector<std::string>& extra = {}) {
  return incol::Hypergraph::from_named_edges(edges, extra);
}

inline std::vector<incol::VertexId> ids(const incol::Hypergraph& h, const std::vector<std::string>& names) {
  std::vector<incol::VertexId> out;
  for (const auto& n : names) out.push_back(h.vertex_id(n));
  return out;
}

/// Sorted edge sets by vertex name, for order-insensitive comparison.
inline std::vector<std::vector<std::string>> edge_sets(const incol::Hypergraph& h) {
  std::vector<std::vector<std::string>> out;
  for (incol::EdgeId e = 0; e < h.num_edges(); ++e) {
    std::vector<std::string> names;
    for (auto x : h.edge(e)) names.push_back(h.name(x));
    std::sort(names.begin(), names.end());
    out.push_back(names);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Cycle C_n as a bipartite graph when n is even: part U holds even nodes.
inline incol::BipartiteGraph even_cycle(std::size_t n) {
  std::vector<std::string> u, v;
  for (std::size_t i = 0; i < n; i += 2) u.push_back("p" + std::to_string(i));
  for (std::size_t i = 1; i < n; i += 2) v.push_back("p" + std::to_string(i));
  incol::BipartiteGraph g(u, v);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a = i % 2 == 0 ? i : (i + 1) % n;
    const std::size_t b = i % 2 == 0 ? i + 1 : i;
    g.add_edge(a / 2, b / 2);
  }
  return g;
}

/// n-node cycle as a simple graph, edge i joining i and i+1.
inline incol::Graph cycle(std::size_t n) {
  incol::Graph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

/// gen_random_hypergraph with the edge count clamped to the number of
/// distinct edges of size at most max_rank.
inline incol::Hypergraph random_hg(std::size_t n, std::size_t m, std::size_t max_rank, std::uint64_t seed) {
  std::size_t available = 0;
  std::size_t binom = 1;
  for (std::size_t i = 1; i <= std::min(max_rank, n); ++i) {
    binom = binom * (n - i + 1) / i;
    available += binom;
  }
  return incol::gen_random_hypergraph(n, std::min(m, available), max_rank, seed);
}

}  // namespace testing
