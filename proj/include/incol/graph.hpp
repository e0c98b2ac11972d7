#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace incol {

/// Simple undirected graph (no loops, no parallel edges). Edges are indexed
/// in insertion order.
class Graph {
 public:
  struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  Graph() = default;
  explicit Graph(std::size_t num_vertices);
  explicit Graph(std::vector<std::string> names);

  /// Throws PreconditionError on loops, parallel edges or bad endpoints.
  std::size_t add_edge(std::size_t u, std::size_t v);

  std::size_t num_vertices() const noexcept { return incident_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  std::size_t other_end(std::size_t e, std::size_t v) const;

  /// Edge indices incident to v, in insertion order.
  std::span<const std::size_t> incident_edges(std::size_t v) const { return incident_.at(v); }
  std::size_t degree(std::size_t v) const { return incident_.at(v).size(); }
  std::size_t max_degree() const noexcept;

  std::optional<std::size_t> find_edge(std::size_t u, std::size_t v) const;
  bool adjacent(std::size_t u, std::size_t v) const { return find_edge(u, v).has_value(); }

  const std::string& name(std::size_t v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  static std::uint64_t key(std::size_t u, std::size_t v) noexcept;

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
};

/// Bipartite graph stored as a Graph whose first |U| vertices form part U.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  /// Throws PreconditionError when a name appears twice across both parts.
  BipartiteGraph(std::vector<std::string> part_u, std::vector<std::string> part_v);

  /// `u` indexes part U and `v` indexes part V. Returns the edge index.
  std::size_t add_edge(std::size_t u, std::size_t v);

  std::size_t size_u() const noexcept { return size_u_; }
  std::size_t size_v() const noexcept { return graph_.num_vertices() - size_u_; }
  std::size_t u_node(std::size_t u) const { return u; }
  std::size_t v_node(std::size_t v) const { return size_u_ + v; }
  bool in_part_u(std::size_t node) const noexcept { return node < size_u_; }

  const Graph& graph() const noexcept { return graph_; }
  std::size_t num_edges() const noexcept { return graph_.num_edges(); }

  /// Endpoints of edge e as (part-U index, part-V index).
  std::pair<std::size_t, std::size_t> endpoints(std::size_t e) const;

 private:
  std::size_t size_u_ = 0;
  Graph graph_;
};

}  // namespace incol
