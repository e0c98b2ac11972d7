#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "incol/hypergraph.hpp"

namespace incol {

enum class GyoRule { kEarVertex, kContainedEdge, kEmptyEdge };

const char* to_string(GyoRule rule);

struct GyoStep {
  GyoRule rule = GyoRule::kEarVertex;
  /// Vertex id for kEarVertex, original edge index otherwise.
  std::size_t item = 0;
};

/// Full record of one GYO run. `residual` keeps the surviving vertices and
/// edges (edges as traced through earlier vertex removals).
struct GyoTrace {
  std::vector<GyoStep> steps;
  Hypergraph residual;
  /// Original index of each residual edge.
  std::vector<EdgeId> residual_edges;

  bool empty() const noexcept { return residual.num_vertices() == 0 && residual.num_edges() == 0; }
};

/// GYO reduction to fixpoint. Rules: (i) delete a vertex lying in at most one
/// edge, (ii) delete an edge contained in another edge, (iii) delete an empty
/// edge. By default the lowest-numbered applicable rule fires on its
/// lowest-numbered item; with `shuffle_seed` set, every step instead picks
/// uniformly among all applicable (rule, item) pairs.
GyoTrace gyo_reduce(const Hypergraph& h, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

bool is_alpha_acyclic(const Hypergraph& h);

inline constexpr std::size_t kDefaultBruteVertexCap = 12;

/// Exhaustive subset test: h is acyclic iff no vertex subset X' makes the
/// minimized trace on X' a graph cycle or the family {X' \ {x}}. Throws
/// CapExceeded when h has more than `vertex_cap` vertices.
bool is_alpha_acyclic_brute(const Hypergraph& h, std::size_t vertex_cap = kDefaultBruteVertexCap);

/// For linear h: acyclic iff the Levi graph is a forest. Throws
/// PreconditionError on non-linear input.
bool linear_forest_test(const Hypergraph& h);

}  // namespace incol
