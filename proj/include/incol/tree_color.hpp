#pragma once

#include <cstddef>
#include <vector>

#include "incol/coloring.hpp"
#include "incol/graph.hpp"
#include "incol/hypergraph.hpp"

namespace incol {

/// A tree with a designated root. Children of every node are ordered by
/// descending degree in the tree, ties by ascending node index.
class RootedTree {
 public:
  /// Throws PreconditionError unless `tree` is connected and acyclic.
  RootedTree(Graph tree, std::size_t root);

  const Graph& graph() const noexcept { return tree_; }
  std::size_t root() const noexcept { return root_; }
  /// Parent node, or the node itself for the root.
  std::size_t parent(std::size_t v) const { return parent_.at(v); }
  /// Edge to the parent; meaningless for the root.
  std::size_t parent_edge(std::size_t v) const { return parent_edge_.at(v); }
  const std::vector<std::size_t>& children(std::size_t v) const { return children_.at(v); }

  /// Colors on edges at v, minus the color of v's parent edge.
  std::vector<int> child_colorset(const StrongEdgeColoring& c, std::size_t v) const;

 private:
  Graph tree_;
  std::size_t root_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> parent_edge_;
  std::vector<std::vector<std::size_t>> children_;
};

struct NestResult {
  StrongEdgeColoring coloring;
  std::size_t swaps = 0;
};

/// Relabels colors inside child subtrees of the root until, for consecutive
/// children u_i, u_{i+1}, the colors below u_{i+1} are a subset of those
/// below u_i. Each step swaps two colors throughout one subtree. Throws
/// PreconditionError when `c` is not a proper strong edge coloring.
NestResult nest_permute(const RootedTree& tree, StrongEdgeColoring c);

/// True iff the children of the root satisfy the nesting chain under `c`.
bool root_nesting_holds(const RootedTree& tree, const StrongEdgeColoring& c);

/// Optimal-style coloring of a linear alpha-acyclic hypergraph with at most
/// Delta + r - 1 colors per component. Throws PreconditionError naming the
/// failed check when h is not linear or not alpha-acyclic.
IncidenceColoring color_acyclic_linear(const Hypergraph& h);

/// Breadth-first first-fit strong edge coloring of a forest whose parts have
/// maximum degrees within (max_degree_a, max_degree_b) in either
/// orientation. Throws PreconditionError on cycles or cap violations.
StrongEdgeColoring greedy_tree_strong(const BipartiteGraph& forest, std::size_t max_degree_a,
                                      std::size_t max_degree_b);

}  // namespace incol
