#pragma once

// Reference implementations used only by tests. They follow the definitions
// directly and share no code with the library beyond the data types.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "incol/graph.hpp"
#include "incol/hypergraph.hpp"

namespace oracle {

using incol::Graph;
using incol::Hypergraph;
using incol::Incidence;

inline bool member(const Hypergraph& h, std::size_t edge, std::size_t x) {
  const auto e = h.edge(edge);
  return std::find(e.begin(), e.end(), x) != e.end();
}

/// Incidence adjacency straight from the definition.
inline bool adjacent(const Hypergraph& h, const Incidence& p, const Incidence& q) {
  if (p.vertex == q.vertex) return true;
  const bool in_p = member(h, p.edge, p.vertex) && member(h, p.edge, q.vertex);
  const bool in_q = member(h, q.edge, p.vertex) && member(h, q.edge, q.vertex);
  return in_p || in_q;
}

/// All incidences, edge by edge, members in stored order.
inline std::vector<Incidence> incidence_list(const Hypergraph& h) {
  std::vector<Incidence> out;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    for (std::size_t x : h.edge(e)) out.push_back({x, e});
  }
  return out;
}

/// Smallest k admitting a proper incidence coloring, by plain backtracking
/// over assignments with the raw adjacency test.
inline int min_incidence_palette(const Hypergraph& h) {
  const auto inc = incidence_list(h);
  const std::size_t n = inc.size();
  if (n == 0) return 0;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) adj[i][j] = i != j && adjacent(h, inc[i], inc[j]);
  }
  std::vector<int> color(n, 0);
  for (int k = 1;; ++k) {
    std::function<bool(std::size_t)> place = [&](std::size_t i) {
      if (i == n) return true;
      for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) ok = !(adj[i][j] && color[j] == c);
        if (!ok) continue;
        color[i] = c;
        if (place(i + 1)) return true;
      }
      color[i] = 0;
      return false;
    };
    if (place(0)) return k;
  }
}

/// Levi graph with explicit node numbering: vertices 0..n-1, then edges.
/// Levi edge i joins the members of incidence i.
inline Graph levi(const Hypergraph& h) {
  Graph g(h.num_vertices() + h.num_edges());
  for (const auto& inc : incidence_list(h)) g.add_edge(inc.vertex, h.num_vertices() + inc.edge);
  return g;
}

/// Pairwise line-graph distances between edges of g, by BFS in an explicitly
/// built line graph. Unreachable pairs get SIZE_MAX.
inline std::vector<std::vector<std::size_t>> line_distances(const Graph& g) {
  const std::size_t m = g.num_edges();
  std::vector<std::vector<std::size_t>> line(m);
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t f = 0; f < m; ++f) {
      if (e == f) continue;
      const auto& a = g.edge(e);
      const auto& b = g.edge(f);
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) line[e].push_back(f);
    }
  }
  std::vector<std::vector<std::size_t>> dist(m, std::vector<std::size_t>(m, SIZE_MAX));
  for (std::size_t s = 0; s < m; ++s) {
    std::deque<std::size_t> queue{s};
    dist[s][s] = 0;
    while (!queue.empty()) {
      const std::size_t e = queue.front();
      queue.pop_front();
      for (std::size_t f : line[e]) {
        if (dist[s][f] == SIZE_MAX) {
          dist[s][f] = dist[s][e] + 1;
          queue.push_back(f);
        }
      }
    }
  }
  return dist;
}

/// D2(e) from line-graph BFS.
inline std::vector<std::size_t> d2(const Graph& g, std::size_t e) {
  const auto dist = line_distances(g);
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < g.num_edges(); ++f) {
    if (f != e && dist[e][f] <= 2) out.push_back(f);
  }
  return out;
}

/// Adjacency matrix of L(g)^2.
inline std::vector<std::vector<char>> square_of_line(const Graph& g) {
  const auto dist = line_distances(g);
  const std::size_t m = g.num_edges();
  std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t f = 0; f < m; ++f) adj[e][f] = e != f && dist[e][f] <= 2;
  }
  return adj;
}

/// Chromatic number of a graph given by adjacency matrix: try k = 1, 2, ...
/// with backtracking in a largest-degree-first order.
inline int chromatic_number(const std::vector<std::vector<char>>& adj) {
  const std::size_t n = adj.size();
  if (n == 0) return 0;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto deg = [&](std::size_t v) { return std::count(adj[v].begin(), adj[v].end(), 1); };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg(a) > deg(b); });
  std::vector<int> color(n, 0);
  for (int k = 1;; ++k) {
    std::function<bool(std::size_t)> place = [&](std::size_t i) {
      if (i == n) return true;
      const std::size_t v = order[i];
      for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) ok = !(adj[v][order[j]] && color[order[j]] == c);
        if (!ok) continue;
        color[v] = c;
        if (place(i + 1)) return true;
      }
      color[v] = 0;
      return false;
    };
    if (place(0)) return k;
  }
}

/// Proper strong edge coloring check from pairwise line-graph distances.
inline bool strong_proper(const Graph& g, const std::vector<int>& colors) {
  const auto dist = line_distances(g);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    for (std::size_t f = e + 1; f < g.num_edges(); ++f) {
      if (dist[e][f] <= 2 && colors[e] == colors[f]) return false;
    }
  }
  return true;
}

/// True iff g has no cycle (edges minus vertices plus components == 0).
inline bool acyclic(const Graph& g) {
  std::vector<std::size_t> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (const auto& e : g.edges()) {
    const std::size_t a = find(e.u);
    const std::size_t b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

/// Hypergraph on vertices x0..x{n-1} from edge bitmasks.
inline Hypergraph from_masks(std::size_t n, const std::vector<std::uint32_t>& masks) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<std::vector<std::size_t>> edges;
  for (std::uint32_t m : masks) {
    std::vector<std::size_t> e;
    for (std::size_t i = 0; i < n; ++i) {
      if (m >> i & 1U) e.push_back(i);
    }
    edges.push_back(e);
  }
  return Hypergraph(names, edges);
}

/// Canonical form of an edge-mask family on n vertices: the lexicographically
/// smallest sorted mask list over all vertex permutations.
inline std::vector<std::uint32_t> canonical(std::size_t n, const std::vector<std::uint32_t>& masks) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> best;
  do {
    std::vector<std::uint32_t> mapped;
    for (std::uint32_t m : masks) {
      std::uint32_t out = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (m >> i & 1U) out |= 1U << perm[i];
      }
      mapped.push_back(out);
    }
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = mapped;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Every family of at most `max_edges` distinct non-empty edges on exactly n
/// vertices (no isolated vertices), one per isomorphism class when `up_to_iso`.
inline std::vector<Hypergraph> all_hypergraphs(std::size_t n, std::size_t max_edges, bool up_to_iso) {
  const std::uint32_t full = (1U << n) - 1;
  std::vector<Hypergraph> out;
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::uint32_t> pick;
  std::function<void(std::uint32_t)> extend = [&](std::uint32_t next) {
    if (!pick.empty()) {
      std::uint32_t cover = 0;
      for (std::uint32_t m : pick) cover |= m;
      if (cover == full && (!up_to_iso || seen.insert(canonical(n, pick)).second)) out.push_back(from_masks(n, pick));
    }
    if (pick.size() == max_edges) return;
    for (std::uint32_t m = next; m <= full; ++m) {
      pick.push_back(m);
      extend(m + 1);
      pick.pop_back();
    }
  };
  extend(1);
  return out;
}

}  // namespace oracle
