#include "incol/coloring.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "incol/error.hpp"
#include "incol/levi.hpp"

namespace incol {

int max_color(const std::vector<int>& colors) {
  int m = 0;
  for (int c : colors) m = std::max(m, c);
  return m;
}

std::vector<Violation> verify_incidence(const Hypergraph& h, const IncidenceColoring& c) {
  if (c.colors.size() != h.num_incidences()) {
    throw PreconditionError("coloring covers " + std::to_string(c.colors.size()) + " incidences, hypergraph has " +
                            std::to_string(h.num_incidences()));
  }
  std::string missing;
  for (std::size_t i = 0; i < c.colors.size(); ++i) {
    if (c.colors[i] == 0) {
      const Incidence inc = h.incidence_at(i);
      missing += " (" + h.name(inc.vertex) + ", " + std::to_string(inc.edge) + ")";
    } else if (c.colors[i] < 0 || c.colors[i] > c.palette) {
      throw PreconditionError("incidence " + std::to_string(i) + " has color " + std::to_string(c.colors[i]) +
                              " outside 1.." + std::to_string(c.palette));
    }
  }
  if (!missing.empty()) throw PreconditionError("uncolored incidences:" + missing);

  std::vector<Violation> out;
  const ConflictGraph cg = conflict_graph(h);
  for (const auto& e : cg.graph.edges()) {
    if (c.colors[e.u] == c.colors[e.v]) out.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.first, a.second) < std::tie(b.first, b.second);
  });
  return out;
}

std::vector<Violation> verify_strong_edge(const Graph& g, const StrongEdgeColoring& c) {
  if (c.colors.size() != g.num_edges()) {
    throw PreconditionError("edge coloring covers " + std::to_string(c.colors.size()) + " edges, graph has " +
                            std::to_string(g.num_edges()));
  }
  for (std::size_t e = 0; e < c.colors.size(); ++e) {
    if (c.colors[e] <= 0) throw PreconditionError("edge " + std::to_string(e) + " is uncolored");
  }
  std::vector<Violation> out;
  const auto d2 = all_d2_neighborhoods(g);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    for (std::size_t f : d2[e]) {
      if (f > e && c.colors[e] == c.colors[f]) out.push_back({e, f});
    }
  }
  return out;
}

StrongEdgeColoring to_strong_edge(const Hypergraph& h, const IncidenceColoring& c) {
  if (c.colors.size() != h.num_incidences()) throw PreconditionError("coloring size does not match incidences");
  return {c.colors, c.palette};
}

IncidenceColoring to_incidence(const Hypergraph& h, const StrongEdgeColoring& c) {
  if (c.colors.size() != h.num_incidences()) throw PreconditionError("edge coloring size does not match Levi graph");
  return {c.colors, c.palette};
}

std::vector<std::size_t> levi_bfs_order(const Hypergraph& h) {
  const BipartiteGraph levi = levi_graph(h);
  const Graph& g = levi.graph();
  std::vector<char> seen_node(g.num_vertices(), 0);
  std::vector<char> taken(g.num_edges(), 0);
  std::vector<std::size_t> order;
  order.reserve(g.num_edges());
  for (std::size_t root = 0; root < g.num_vertices(); ++root) {
    if (seen_node[root] || g.degree(root) == 0) continue;
    std::deque<std::size_t> queue{root};
    seen_node[root] = 1;
    while (!queue.empty()) {
      const std::size_t w = queue.front();
      queue.pop_front();
      for (std::size_t e : g.incident_edges(w)) {
        if (!taken[e]) {
          taken[e] = 1;
          order.push_back(e);
        }
        const std::size_t next = g.other_end(e, w);
        if (!seen_node[next]) {
          seen_node[next] = 1;
          queue.push_back(next);
        }
      }
    }
  }
  return order;
}

namespace {

IncidenceColoring first_fit(const Graph& conflict, const std::vector<std::size_t>& order) {
  IncidenceColoring out;
  out.colors.assign(conflict.num_vertices(), 0);
  std::vector<std::size_t> stamp(conflict.num_vertices() + 2, 0);
  std::size_t round = 0;
  for (std::size_t v : order) {
    ++round;
    for (std::size_t e : conflict.incident_edges(v)) {
      const int c = out.colors[conflict.other_end(e, v)];
      if (c > 0 && static_cast<std::size_t>(c) < stamp.size()) stamp[static_cast<std::size_t>(c)] = round;
    }
    int c = 1;
    while (stamp[static_cast<std::size_t>(c)] == round) ++c;
    out.colors[v] = c;
  }
  out.palette = max_color(out.colors);
  return out;
}

}  // namespace

IncidenceColoring greedy_color(const Hypergraph& h, GreedyOrder order) {
  if (order == GreedyOrder::kLeviBfs) return greedy_color(h, levi_bfs_order(h));
  std::vector<std::size_t> canonical(h.num_incidences());
  for (std::size_t i = 0; i < canonical.size(); ++i) canonical[i] = i;
  return greedy_color(h, canonical);
}

IncidenceColoring greedy_color(const Hypergraph& h, const std::vector<std::size_t>& order) {
  std::vector<char> seen(h.num_incidences(), 0);
  if (order.size() != h.num_incidences()) throw PreconditionError("greedy order is not a permutation of incidences");
  for (std::size_t i : order) {
    if (i >= seen.size() || seen[i]) throw PreconditionError("greedy order is not a permutation of incidences");
    seen[i] = 1;
  }
  return first_fit(conflict_graph(h).graph, order);
}

namespace {

struct CliqueChoice {
  VertexId vertex = 0;
  EdgeId edge = 0;
  std::size_t size = 0;
};

CliqueChoice best_clique(const Hypergraph& h) {
  if (h.num_edges() == 0) throw PreconditionError("clique bound needs at least one edge");
  CliqueChoice best;
  for (VertexId x = 0; x < h.num_vertices(); ++x) {
    for (EdgeId e : h.edges_of(x)) {
      const std::size_t size = h.degree(x) + h.edge_size(e) - 1;
      if (size > best.size) best = {x, e, size};
    }
  }
  return best;
}

}  // namespace

std::size_t clique_lower_bound(const Hypergraph& h) { return best_clique(h).size; }

std::vector<std::size_t> clique_witness(const Hypergraph& h) {
  const CliqueChoice c = best_clique(h);
  std::vector<std::size_t> out;
  for (EdgeId e : h.edges_of(c.vertex)) out.push_back(h.incidence_index({c.vertex, e}));
  for (VertexId y : h.edge(c.edge)) {
    if (y != c.vertex) out.push_back(h.incidence_index({y, c.edge}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// DSATUR branch and bound. Ties in saturation go to the lowest vertex index.
class DsaturSearch {
 public:
  DsaturSearch(const Graph& g, int lower, IncidenceColoring initial, std::uint64_t budget)
      : n_(g.num_vertices()),
        adj_(n_),
        color_(n_, 0),
        sat_(n_, 0),
        lower_(lower),
        upper_(initial.palette),
        best_(std::move(initial.colors)),
        budget_(budget) {
    for (std::size_t v = 0; v < n_; ++v) {
      for (std::size_t e : g.incident_edges(v)) adj_[v].push_back(g.other_end(e, v));
    }
    counts_.assign(n_, std::vector<int>(static_cast<std::size_t>(upper_) + 2, 0));
  }

  void run() {
    if (upper_ > lower_) search(0, 0);
  }

  bool aborted() const { return aborted_; }
  int upper() const { return upper_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<int>& best() const { return best_; }

 private:
  void assign(std::size_t v, int c) {
    color_[v] = c;
    for (std::size_t u : adj_[v]) {
      if (counts_[u][static_cast<std::size_t>(c)]++ == 0) ++sat_[u];
    }
  }

  void unassign(std::size_t v) {
    const int c = color_[v];
    for (std::size_t u : adj_[v]) {
      if (--counts_[u][static_cast<std::size_t>(c)] == 0) --sat_[u];
    }
    color_[v] = 0;
  }

  void search(std::size_t colored, int used) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (colored == n_) {
      if (used < upper_) {
        upper_ = used;
        best_ = color_;
      }
      return;
    }
    std::size_t v = n_;
    for (std::size_t i = 0; i < n_; ++i) {
      if (color_[i] == 0 && (v == n_ || sat_[i] > sat_[v])) v = i;
    }
    if (sat_[v] >= upper_ - 1) return;
    const int limit = std::min(used + 1, upper_ - 1);
    for (int c = 1; c <= limit; ++c) {
      if (counts_[v][static_cast<std::size_t>(c)] != 0) continue;
      assign(v, c);
      search(colored + 1, std::max(used, c));
      unassign(v);
      if (aborted_ || upper_ <= lower_) return;
    }
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> color_;
  std::vector<int> sat_;
  std::vector<std::vector<int>> counts_;
  int lower_;
  int upper_;
  std::vector<int> best_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

ExactResult exact_chromatic(const Hypergraph& h, std::uint64_t budget, std::size_t incidence_cap) {
  if (h.num_incidences() > incidence_cap) {
    throw CapExceeded("exact solver is capped at " + std::to_string(incidence_cap) + " incidences (got " +
                      std::to_string(h.num_incidences()) + ")");
  }
  ExactResult res;
  if (h.num_incidences() == 0) {
    res.solved = true;
    return res;
  }
  IncidenceColoring start = greedy_color(h, GreedyOrder::kCanonical);
  IncidenceColoring alt = greedy_color(h, GreedyOrder::kLeviBfs);
  if (alt.palette < start.palette) start = std::move(alt);
  const int lower = static_cast<int>(clique_lower_bound(h));

  const ConflictGraph cg = conflict_graph(h);
  DsaturSearch search(cg.graph, lower, std::move(start), budget);
  search.run();

  res.nodes = search.nodes();
  res.lower = lower;
  res.upper = search.upper();
  res.witness.colors = search.best();
  res.witness.palette = search.upper();
  res.solved = !search.aborted() || res.upper == res.lower;
  if (res.solved) {
    res.chromatic = res.upper;
    res.lower = res.upper;
  }
  return res;
}

}  // namespace incol
