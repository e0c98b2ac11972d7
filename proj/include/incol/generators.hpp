#pragma once

#include <cstddef>
#include <cstdint>

#include "incol/graph.hpp"
#include "incol/hypergraph.hpp"

namespace incol {

/// Uniform random labelled tree on `nodes` nodes, decoded from a uniform
/// Pruefer sequence. Node names are decimal indices.
Graph gen_random_tree(std::size_t nodes, std::uint64_t seed);

/// Connected linear alpha-acyclic hypergraph with `edges` edges. Each new edge
/// meets the hypergraph built so far in exactly one vertex, chosen uniformly
/// among vertices still below `max_degree`, and brings fresh vertices for the
/// rest. Edge sizes are uniform in [2, max_rank] (a single edge may have size
/// 1 when max_rank is 1). The Levi graph is therefore a tree.
/// Throws PreconditionError when the caps admit no such hypergraph.
Hypergraph gen_acyclic_linear(std::size_t edges, std::size_t max_rank, std::size_t max_degree, std::uint64_t seed);

/// As gen_acyclic_linear with every edge of size k. When edges >= max_degree
/// the first max_degree edges share one vertex, so Delta equals max_degree.
Hypergraph gen_acyclic_linear_uniform(std::size_t edges, std::size_t k, std::size_t max_degree, std::uint64_t seed);

struct BiregularSample {
  BipartiteGraph graph;
  std::size_t tries = 0;
};

inline constexpr std::size_t kDefaultBiregularTries = 100'000;

/// (a, b)-biregular K_{2,t+1}-free bipartite graph with n_u part-U nodes
/// (named u0, u1, ...) and a * n_u / b part-V nodes (v0, v1, ...), by stub
/// matching: U stubs are matched in order to random V stubs, rejecting any
/// stub that would create a parallel edge or a K_{2,t+1}; a dead end starts a
/// new try. Not uniform over the class. Throws PreconditionError on bad
/// parameters and Error with dead-end counts when `max_tries` runs out.
BiregularSample gen_biregular_k2t1_free(std::size_t a, std::size_t b, std::size_t n_u, std::size_t t,
                                        std::uint64_t seed, std::size_t max_tries = kDefaultBiregularTries);

/// k-uniform hypergraph on `vertices` vertices (named x0, x1, ...) with
/// exactly `edges` edges, any two sharing at most t vertices and any two
/// vertices sharing at most t edges. Randomised greedy insertion with
/// restarts. Throws PreconditionError when a counting bound rules the
/// request out and Error when every restart gets stuck.
Hypergraph gen_quasi_linear(std::size_t vertices, std::size_t edges, std::size_t k, std::size_t t, std::uint64_t seed);

/// gen_quasi_linear with t = 1.
Hypergraph gen_linear(std::size_t vertices, std::size_t edges, std::size_t k, std::uint64_t seed);

/// Distinct random edges with sizes uniform in [1, max_rank] over `vertices`
/// vertices (x0, x1, ...). Vertices that end up in no edge stay isolated.
/// Throws PreconditionError when fewer than `edges` distinct edges exist.
Hypergraph gen_random_hypergraph(std::size_t vertices, std::size_t edges, std::size_t max_rank, std::uint64_t seed);

}  // namespace incol
