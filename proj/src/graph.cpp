#include "incol/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

#include "incol/error.hpp"

namespace incol {

Graph::Graph(std::size_t num_vertices) : incident_(num_vertices) {
  names_.reserve(num_vertices);
  for (std::size_t v = 0; v < num_vertices; ++v) names_.push_back(std::to_string(v));
}

Graph::Graph(std::vector<std::string> names) : names_(std::move(names)), incident_(names_.size()) {}

std::uint64_t Graph::key(std::size_t u, std::size_t v) noexcept {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
}

std::size_t Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= num_vertices() || v >= num_vertices()) throw PreconditionError("edge endpoint out of range");
  if (u == v) throw PreconditionError("loop at vertex '" + names_[u] + "'");
  const std::size_t e = edges_.size();
  if (!lookup_.emplace(key(u, v), e).second) {
    throw PreconditionError("parallel edge " + names_[u] + " " + names_[v]);
  }
  edges_.push_back({u, v});
  incident_[u].push_back(e);
  incident_[v].push_back(e);
  return e;
}

std::size_t Graph::other_end(std::size_t e, std::size_t v) const {
  const Edge& ed = edges_.at(e);
  return ed.u == v ? ed.v : ed.u;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t d = 0;
  for (const auto& inc : incident_) d = std::max(d, inc.size());
  return d;
}

std::optional<std::size_t> Graph::find_edge(std::size_t u, std::size_t v) const {
  if (u >= num_vertices() || v >= num_vertices() || u == v) return std::nullopt;
  auto it = lookup_.find(key(u, v));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

BipartiteGraph::BipartiteGraph(std::vector<std::string> part_u, std::vector<std::string> part_v)
    : size_u_(part_u.size()) {
  std::vector<std::string> all = std::move(part_u);
  all.insert(all.end(), std::make_move_iterator(part_v.begin()), std::make_move_iterator(part_v.end()));
  std::unordered_set<std::string> seen;
  for (const auto& n : all) {
    if (!seen.insert(n).second) throw PreconditionError("bipartite vertex '" + n + "' appears twice");
  }
  graph_ = Graph(std::move(all));
}

std::size_t BipartiteGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size_u_ || v >= size_v()) throw PreconditionError("bipartite edge endpoint out of range");
  return graph_.add_edge(u_node(u), v_node(v));
}

std::pair<std::size_t, std::size_t> BipartiteGraph::endpoints(std::size_t e) const {
  const auto& ed = graph_.edge(e);
  std::size_t a = ed.u, b = ed.v;
  if (!in_part_u(a)) std::swap(a, b);
  return {a, b - size_u_};
}

}  // namespace incol
