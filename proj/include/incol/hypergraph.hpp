#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace incol {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// A (vertex, edge) membership pair; the unit that gets colored.
struct Incidence {
  VertexId vertex = 0;
  EdgeId edge = 0;

  friend auto operator<=>(const Incidence&, const Incidence&) = default;
};

/// Finite hypergraph with named vertices and a set (not multiset) of
/// non-empty edges.
///
/// Vertices get dense ids in first-seen order. Each edge keeps the order its
/// members were given in; that order defines the canonical incidence order
/// (edge index, then position inside the edge). Isolated vertices are allowed.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Throws PreconditionError on empty edges, out-of-range ids, a vertex
  /// repeated inside an edge, duplicate edges or duplicate names.
  Hypergraph(std::vector<std::string> vertex_names, std::vector<std::vector<VertexId>> edges);

  /// Builds from edges given by vertex name. Names listed in `extra_vertices`
  /// are registered first, then edge members in first-seen order.
  static Hypergraph from_named_edges(const std::vector<std::vector<std::string>>& edges,
                                     const std::vector<std::string>& extra_vertices = {});

  std::size_t num_vertices() const noexcept { return names_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t num_incidences() const noexcept { return edge_offset_.empty() ? 0 : edge_offset_.back(); }

  const std::string& name(VertexId x) const { return names_.at(x); }
  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  /// Throws PreconditionError naming the vertex when absent.
  VertexId vertex_id(std::string_view name) const;

  std::span<const VertexId> edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<std::vector<VertexId>>& edges() const noexcept { return edges_; }
  /// Members of edge `e` in ascending id order.
  std::span<const VertexId> sorted_edge(EdgeId e) const { return sorted_edges_.at(e); }
  std::size_t edge_size(EdgeId e) const { return edges_.at(e).size(); }
  bool contains(EdgeId e, VertexId x) const;

  /// Edges containing `x`, ascending.
  std::span<const EdgeId> edges_of(VertexId x) const { return vertex_edges_.at(x); }
  std::size_t degree(VertexId x) const { return vertex_edges_.at(x).size(); }

  /// Canonical incidence order: by edge, then by position inside the edge.
  std::vector<Incidence> incidences() const;
  Incidence incidence_at(std::size_t index) const;
  /// Throws PreconditionError if `inc` is not an incidence of this hypergraph.
  std::size_t incidence_index(const Incidence& inc) const;
  std::size_t edge_offset(EdgeId e) const { return edge_offset_.at(e); }
  bool is_incidence(const Incidence& inc) const noexcept;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<VertexId>> edges_;
  std::vector<std::vector<VertexId>> sorted_edges_;
  std::vector<std::vector<EdgeId>> vertex_edges_;
  std::vector<std::size_t> edge_offset_;  // size num_edges + 1
};

struct StructureReport {
  std::size_t max_degree = 0;
  std::size_t rank = 0;
  std::size_t rho = 0;
  std::size_t min_degree = 0;
  std::optional<std::size_t> uniform_k;
  std::optional<std::size_t> regular_d;
  std::size_t linearity_t = 1;
  bool connected = false;
};

enum class InducedSemantics {
  kWholeEdges,  ///< keep every edge meeting Y, whole
  kTrace,       ///< replace each edge meeting Y by its intersection with Y
};

/// Throws PreconditionError naming an unknown vertex.
std::size_t degree(const Hypergraph& h, std::string_view vertex);

std::size_t max_degree(const Hypergraph& h);
std::size_t min_degree(const Hypergraph& h);
std::size_t rank(const Hypergraph& h);

/// Smallest t for which h is t-quasi-linear: the largest pairwise edge
/// intersection or pairwise vertex codegree, floored at 1.
std::size_t linearity_t(const Hypergraph& h);
inline bool is_linear(const Hypergraph& h) { return linearity_t(h) == 1; }
bool is_connected(const Hypergraph& h);

/// Throws PreconditionError when h has no edges.
StructureReport structure_report(const Hypergraph& h);

std::vector<Incidence> incidences(const Hypergraph& h);

/// Adjacent iff same vertex, or both vertices lie in one of the two edges.
/// Throws PreconditionError on invalid or identical incidences.
bool incidences_adjacent(const Hypergraph& h, const Incidence& a, const Incidence& b);

/// Sub-hypergraph induced on `subset`.
///
/// Trace semantics yields vertex set `subset` and the distinct non-empty
/// traces. Whole-edge semantics keeps whole edges, so its vertex set is
/// `subset` plus every member of a kept edge. Vertex order follows h.
Hypergraph induced_sub(const Hypergraph& h, std::span<const VertexId> subset, InducedSemantics semantics);

/// Drops every edge strictly contained in another edge.
Hypergraph minimization(const Hypergraph& h);

/// Maximal connected sub-hypergraphs, ordered by smallest vertex id. An
/// isolated vertex forms its own edgeless component.
std::vector<Hypergraph> components(const Hypergraph& h);

Hypergraph remove_edge(const Hypergraph& h, EdgeId e);

/// Deletes x from the vertex set and from every edge; emptied edges and
/// duplicates created by the deletion are dropped (first occurrence kept).
Hypergraph remove_vertex(const Hypergraph& h, VertexId x);

}  // namespace incol
