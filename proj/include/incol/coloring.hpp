#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "incol/graph.hpp"
#include "incol/hypergraph.hpp"

namespace incol {

/// Colors indexed by canonical incidence index; 0 marks an unassigned
/// incidence. Colors are 1-based.
struct IncidenceColoring {
  std::vector<int> colors;
  int palette = 0;
};

/// Colors indexed by graph edge index; 0 marks an unassigned edge.
struct StrongEdgeColoring {
  std::vector<int> colors;
  int palette = 0;
};

/// A pair of conflicting items (incidence or edge indices), first < second.
struct Violation {
  std::size_t first = 0;
  std::size_t second = 0;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Throws PreconditionError listing missing incidences on a partial
/// assignment, or when a color lies outside 1..palette.
std::vector<Violation> verify_incidence(const Hypergraph& h, const IncidenceColoring& c);

/// Pairs of equally colored edges at line-graph distance at most 2.
std::vector<Violation> verify_strong_edge(const Graph& g, const StrongEdgeColoring& c);

/// Transport along incidence i <-> Levi edge i.
StrongEdgeColoring to_strong_edge(const Hypergraph& h, const IncidenceColoring& c);
IncidenceColoring to_incidence(const Hypergraph& h, const StrongEdgeColoring& c);

enum class GreedyOrder { kCanonical, kLeviBfs };

/// Incidence indices in the order a breadth-first search of the Levi graph
/// discovers the corresponding Levi edges (components by smallest node).
std::vector<std::size_t> levi_bfs_order(const Hypergraph& h);

/// First-fit coloring of the conflict graph in the given order.
IncidenceColoring greedy_color(const Hypergraph& h, GreedyOrder order = GreedyOrder::kCanonical);
/// Throws PreconditionError unless `order` is a permutation of incidence indices.
IncidenceColoring greedy_color(const Hypergraph& h, const std::vector<std::size_t>& order);

/// Max over vertices x of deg(x) + (largest edge through x) - 1. Throws
/// PreconditionError on an edgeless hypergraph.
std::size_t clique_lower_bound(const Hypergraph& h);
/// A pairwise adjacent set of incidence indices of size clique_lower_bound(h).
std::vector<std::size_t> clique_witness(const Hypergraph& h);

inline constexpr std::size_t kDefaultExactIncidenceCap = 40;
inline constexpr std::uint64_t kDefaultExactBudget = 10'000'000;

struct ExactResult {
  bool solved = false;
  /// Valid when solved.
  int chromatic = 0;
  int lower = 0;
  int upper = 0;
  /// Best coloring found; optimal when solved.
  IncidenceColoring witness;
  std::uint64_t nodes = 0;
};

/// Exact incidence chromatic number: DSATUR branch and bound on the conflict
/// graph, seeded with the clique bound below and first-fit above. When the
/// node budget runs out the result is unsolved with bounds [lower, upper].
/// Throws CapExceeded when h has more than `incidence_cap` incidences.
ExactResult exact_chromatic(const Hypergraph& h, std::uint64_t budget = kDefaultExactBudget,
                            std::size_t incidence_cap = kDefaultExactIncidenceCap);

/// Greatest color in use (0 for an empty coloring).
int max_color(const std::vector<int>& colors);

}  // namespace incol
