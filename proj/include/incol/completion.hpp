#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "incol/hypergraph.hpp"

namespace incol {

/// Where the vertices and edges of a source hypergraph live in a larger one.
struct Embedding {
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;

  static Embedding identity(const Hypergraph& h);
  /// Apply `this` first, then `next`.
  Embedding then(const Embedding& next) const;
};

struct Completion {
  Hypergraph hypergraph;
  Embedding embedding;
};

/// Grows every edge shorter than r(h) with fresh, private vertices so the
/// result is r(h)-uniform. Throws PreconditionError when r(h) < 2.
Completion pad_uniform(const Hypergraph& h);

/// k disjoint copies of a k-uniform h (copy vertices named `<orig>#<copy>`,
/// copies 1..k), then one glue edge {x#1, ..., x#k} per vertex x of degree
/// below Delta. The embedding maps h onto copy 1. Throws PreconditionError
/// unless h is k-uniform with k >= 2 and not regular.
Completion regularize_step(const Hypergraph& h);

inline constexpr std::uint64_t kDefaultCompletionCap = 1'000'000;

/// Upper estimate of the incidence count complete() would produce.
std::uint64_t projected_completion_size(const Hypergraph& h);

/// pad_uniform, then regularize_step until regular. The result is
/// r(h)-uniform, Delta(h)-regular, keeps the quasi-linearity parameter and
/// contains h. Throws CapExceeded when the projected incidence count is over
/// `incidence_cap`.
Completion complete(const Hypergraph& h, std::uint64_t incidence_cap = kDefaultCompletionCap);

struct CompletionCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CompletionReport {
  std::vector<CompletionCheck> checks;
  bool ok() const;
};

/// Verifies uniformity, regularity, the quasi-linearity parameter, the
/// embedding, and the biregular K_{2,t+1}-free Levi profile. Never throws on
/// failed checks; they are listed in the report.
CompletionReport check_completion(const Hypergraph& h, const Hypergraph& completed, const Embedding& embedding);

}  // namespace incol
