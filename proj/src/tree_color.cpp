#include "incol/tree_color.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <tuple>

#include "incol/acyclicity.hpp"
#include "incol/error.hpp"
#include "incol/levi.hpp"

namespace incol {

namespace {

// A tree given as the active edges of a larger graph.
struct ActiveTree {
  const Graph& graph;
  const std::vector<char>& active;

  std::size_t degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t e : graph.incident_edges(v)) d += active[e] ? 1 : 0;
    return d;
  }
};

constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

// Sorted colors on active edges at v, except `skip`.
std::vector<int> colors_at(const ActiveTree& t, std::size_t v, std::size_t skip, const std::vector<int>& colors) {
  std::vector<int> out;
  for (std::size_t e : t.graph.incident_edges(v)) {
    if (t.active[e] && e != skip) out.push_back(colors[e]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Active edges below `child`, which hangs off its parent via `via`.
std::vector<std::size_t> subtree_edges(const ActiveTree& t, std::size_t child, std::size_t via) {
  std::vector<std::size_t> out;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{child, via}};
  while (!stack.empty()) {
    auto [v, from] = stack.back();
    stack.pop_back();
    for (std::size_t e : t.graph.incident_edges(v)) {
      if (!t.active[e] || e == from) continue;
      out.push_back(e);
      stack.push_back({t.graph.other_end(e, v), e});
    }
  }
  return out;
}

struct Child {
  std::size_t node;
  std::size_t edge;
  std::size_t degree;
};

std::vector<Child> ordered_children(const ActiveTree& t, std::size_t root) {
  std::vector<Child> kids;
  for (std::size_t e : t.graph.incident_edges(root)) {
    if (!t.active[e]) continue;
    const std::size_t u = t.graph.other_end(e, root);
    kids.push_back({u, e, t.degree(u)});
  }
  std::sort(kids.begin(), kids.end(), [](const Child& a, const Child& b) {
    return std::tie(b.degree, a.node) < std::tie(a.degree, b.node);
  });
  return kids;
}

struct NestOutcome {
  std::vector<Child> children;
  std::size_t swaps = 0;
};

// Makes colorset(u_i) \ parent color nested along the ordered children of
// root. While the chain breaks at (u_j, u_{j+1}), pick the smallest color
// alpha below u_{j+1} missing below u_j and the smallest beta below u_j
// missing below u_{j+1}, then exchange alpha and beta throughout the subtree
// of u_{j+1}. Neither color appears at the root, so the result stays proper,
// and each exchange removes alpha from the difference.
NestOutcome nest_at(const ActiveTree& t, std::size_t root, std::vector<int>& colors) {
  NestOutcome out;
  out.children = ordered_children(t, root);
  for (std::size_t j = 0; j + 1 < out.children.size(); ++j) {
    const Child& upper_child = out.children[j];
    const Child& lower_child = out.children[j + 1];
    const auto upper = colors_at(t, upper_child.node, upper_child.edge, colors);
    auto lower = colors_at(t, lower_child.node, lower_child.edge, colors);
    std::vector<std::size_t> subtree;
    while (!std::includes(upper.begin(), upper.end(), lower.begin(), lower.end())) {
      std::vector<int> only_lower, only_upper;
      std::set_difference(lower.begin(), lower.end(), upper.begin(), upper.end(), std::back_inserter(only_lower));
      std::set_difference(upper.begin(), upper.end(), lower.begin(), lower.end(), std::back_inserter(only_upper));
      if (only_upper.empty()) throw std::logic_error("nesting: children are not ordered by degree");
      const int alpha = only_lower.front();
      const int beta = only_upper.front();
      if (subtree.empty()) subtree = subtree_edges(t, lower_child.node, lower_child.edge);
      for (std::size_t e : subtree) {
        if (colors[e] == alpha) {
          colors[e] = beta;
        } else if (colors[e] == beta) {
          colors[e] = alpha;
        }
      }
      ++out.swaps;
      lower = colors_at(t, lower_child.node, lower_child.edge, colors);
    }
  }
  return out;
}

}  // namespace

RootedTree::RootedTree(Graph tree, std::size_t root) : tree_(std::move(tree)), root_(root) {
  const std::size_t n = tree_.num_vertices();
  if (root_ >= n) throw PreconditionError("tree root out of range");
  if (tree_.num_edges() + 1 != n) throw PreconditionError("rooted tree must be connected and acyclic");
  parent_.assign(n, n);
  parent_edge_.assign(n, kNoEdge);
  children_.assign(n, {});
  parent_[root_] = root_;
  std::deque<std::size_t> queue{root_};
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : tree_.incident_edges(v)) {
      const std::size_t u = tree_.other_end(e, v);
      if (e == parent_edge_[v]) continue;
      if (parent_[u] != n) throw PreconditionError("rooted tree must be acyclic");
      parent_[u] = v;
      parent_edge_[u] = e;
      children_[v].push_back(u);
      queue.push_back(u);
      ++reached;
    }
  }
  if (reached != n) throw PreconditionError("rooted tree must be connected");
  for (auto& kids : children_) {
    std::sort(kids.begin(), kids.end(), [&](std::size_t a, std::size_t b) {
      return std::make_tuple(tree_.degree(b), a) < std::make_tuple(tree_.degree(a), b);
    });
  }
}

std::vector<int> RootedTree::child_colorset(const StrongEdgeColoring& c, std::size_t v) const {
  std::vector<int> out;
  for (std::size_t e : tree_.incident_edges(v)) {
    if (v == root_ || e != parent_edge_[v]) out.push_back(c.colors.at(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

NestResult nest_permute(const RootedTree& tree, StrongEdgeColoring c) {
  if (!verify_strong_edge(tree.graph(), c).empty()) {
    throw PreconditionError("nest_permute needs a proper strong edge coloring");
  }
  const std::vector<char> all(tree.graph().num_edges(), 1);
  const ActiveTree view{tree.graph(), all};
  NestResult res;
  res.swaps = nest_at(view, tree.root(), c.colors).swaps;
  res.coloring = std::move(c);
  return res;
}

bool root_nesting_holds(const RootedTree& tree, const StrongEdgeColoring& c) {
  const auto& kids = tree.children(tree.root());
  for (std::size_t i = 0; i + 1 < kids.size(); ++i) {
    const auto upper = tree.child_colorset(c, kids[i]);
    const auto lower = tree.child_colorset(c, kids[i + 1]);
    if (!std::includes(upper.begin(), upper.end(), lower.begin(), lower.end())) return false;
  }
  return true;
}

IncidenceColoring color_acyclic_linear(const Hypergraph& h) {
  if (const auto t = linearity_t(h); t != 1) {
    throw PreconditionError("tree coloring needs a linear hypergraph (linearity t = " + std::to_string(t) + ")");
  }
  if (!is_alpha_acyclic(h)) throw PreconditionError("tree coloring needs an alpha-acyclic hypergraph");

  const BipartiteGraph levi = levi_graph(h);
  const Graph& g = levi.graph();
  std::vector<int> colors(g.num_edges(), 0);
  std::vector<char> active(g.num_edges(), 0);
  const ActiveTree view{g, active};
  std::vector<char> seen(g.num_vertices(), 0);

  for (std::size_t start = 0; start < g.num_vertices(); ++start) {
    if (seen[start] || g.degree(start) == 0) continue;
    // Collect the component.
    std::vector<std::size_t> nodes{start};
    std::vector<std::size_t> edges;
    seen[start] = 1;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t e : g.incident_edges(nodes[i])) {
        const std::size_t u = g.other_end(e, nodes[i]);
        if (!seen[u]) {
          seen[u] = 1;
          nodes.push_back(u);
          edges.push_back(e);
        }
      }
    }
    std::size_t max_vertex_degree = 0, max_edge_size = 0;
    for (std::size_t v : nodes) {
      auto& slot = levi.in_part_u(v) ? max_vertex_degree : max_edge_size;
      slot = std::max(slot, g.degree(v));
    }
    const int palette = static_cast<int>(max_vertex_degree + max_edge_size - 1);

    // Peel leaves (smallest index first) down to a single edge.
    std::vector<std::size_t> degree(g.num_vertices(), 0);
    for (std::size_t e : edges) {
      active[e] = 1;
      ++degree[g.edge(e).u];
      ++degree[g.edge(e).v];
    }
    std::set<std::size_t> leaves;
    for (std::size_t v : nodes) {
      if (degree[v] == 1) leaves.insert(v);
    }
    struct Peel {
      std::size_t leaf, anchor, edge;
    };
    std::vector<Peel> peeled;
    for (std::size_t remaining = edges.size(); remaining > 1; --remaining) {
      const std::size_t leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      std::size_t edge = kNoEdge;
      for (std::size_t e : g.incident_edges(leaf)) {
        if (active[e]) edge = e;
      }
      const std::size_t anchor = g.other_end(edge, leaf);
      active[edge] = 0;
      --degree[leaf];
      if (--degree[anchor] == 1) leaves.insert(anchor);
      peeled.push_back({leaf, anchor, edge});
    }
    for (std::size_t e : edges) {
      if (active[e]) colors[e] = 1;
    }

    // Re-attach in reverse, nesting at the anchor before coloring the leaf edge.
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
      const NestOutcome nest = nest_at(view, it->anchor, colors);
      std::vector<int> forbidden = colors_at(view, it->anchor, kNoEdge, colors);
      if (!nest.children.empty()) {
        const auto below = colors_at(view, nest.children.front().node, kNoEdge, colors);
        forbidden.insert(forbidden.end(), below.begin(), below.end());
      }
      std::sort(forbidden.begin(), forbidden.end());
      int c = 1;
      while (std::binary_search(forbidden.begin(), forbidden.end(), c)) ++c;
      if (c > palette) throw std::logic_error("tree coloring exceeded Delta + r - 1");
      colors[it->edge] = c;
      active[it->edge] = 1;
    }
  }
  IncidenceColoring out{std::move(colors), 0};
  out.palette = max_color(out.colors);
  return out;
}

StrongEdgeColoring greedy_tree_strong(const BipartiteGraph& forest, std::size_t max_degree_a,
                                      std::size_t max_degree_b) {
  const Graph& g = forest.graph();
  if (!is_forest(g)) throw PreconditionError("greedy tree coloring needs an acyclic graph");
  std::size_t du = 0, dv = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto& slot = forest.in_part_u(v) ? du : dv;
    slot = std::max(slot, g.degree(v));
  }
  const bool fits = (du <= max_degree_a && dv <= max_degree_b) || (du <= max_degree_b && dv <= max_degree_a);
  if (!fits) {
    throw PreconditionError("part degrees (" + std::to_string(du) + ", " + std::to_string(dv) +
                            ") exceed the given caps");
  }

  std::vector<std::size_t> order;
  std::vector<char> seen(g.num_vertices(), 0), taken(g.num_edges(), 0);
  for (std::size_t root = 0; root < g.num_vertices(); ++root) {
    if (seen[root] || g.degree(root) == 0) continue;
    std::deque<std::size_t> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      const std::size_t w = queue.front();
      queue.pop_front();
      for (std::size_t e : g.incident_edges(w)) {
        if (taken[e]) continue;
        taken[e] = 1;
        order.push_back(e);
        const std::size_t u = g.other_end(e, w);
        if (!seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
      }
    }
  }

  const auto d2 = all_d2_neighborhoods(g);
  StrongEdgeColoring out{std::vector<int>(g.num_edges(), 0), 0};
  for (std::size_t e : order) {
    std::vector<int> used;
    for (std::size_t f : d2[e]) {
      if (out.colors[f] > 0) used.push_back(out.colors[f]);
    }
    std::sort(used.begin(), used.end());
    int c = 1;
    while (std::binary_search(used.begin(), used.end(), c)) ++c;
    out.colors[e] = c;
  }
  out.palette = max_color(out.colors);
  return out;
}

}  // namespace incol
