#include "incol/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "incol/error.hpp"

namespace incol {

Hypergraph::Hypergraph(std::vector<std::string> vertex_names, std::vector<std::vector<VertexId>> edges)
    : names_(std::move(vertex_names)), edges_(std::move(edges)) {
  for (VertexId x = 0; x < names_.size(); ++x) {
    if (names_[x].empty()) throw PreconditionError("empty vertex name");
    if (!index_.emplace(names_[x], x).second) {
      throw PreconditionError("duplicate vertex name '" + names_[x] + "'");
    }
  }
  vertex_edges_.resize(names_.size());
  sorted_edges_.reserve(edges_.size());
  edge_offset_.assign(1, 0);
  std::set<std::vector<VertexId>> seen;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto& members = edges_[e];
    if (members.empty()) throw PreconditionError("edge " + std::to_string(e) + " is empty");
    auto sorted = members;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.back() >= names_.size()) {
      throw PreconditionError("edge " + std::to_string(e) + " references an unknown vertex id");
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw PreconditionError("edge " + std::to_string(e) + " lists a vertex twice");
    }
    if (!seen.insert(sorted).second) {
      throw PreconditionError("duplicate edge at index " + std::to_string(e));
    }
    for (VertexId x : members) vertex_edges_[x].push_back(e);
    sorted_edges_.push_back(std::move(sorted));
    edge_offset_.push_back(edge_offset_.back() + members.size());
  }
}

Hypergraph Hypergraph::from_named_edges(const std::vector<std::vector<std::string>>& edges,
                                        const std::vector<std::string>& extra_vertices) {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> ids;
  auto intern = [&](const std::string& n) {
    auto [it, inserted] = ids.emplace(n, names.size());
    if (inserted) names.push_back(n);
    return it->second;
  };
  for (const auto& n : extra_vertices) intern(n);
  std::vector<std::vector<VertexId>> idx_edges;
  idx_edges.reserve(edges.size());
  for (const auto& e : edges) {
    std::vector<VertexId> members;
    members.reserve(e.size());
    for (const auto& n : e) members.push_back(intern(n));
    idx_edges.push_back(std::move(members));
  }
  return Hypergraph(std::move(names), std::move(idx_edges));
}

std::optional<VertexId> Hypergraph::find_vertex(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Hypergraph::vertex_id(std::string_view name) const {
  if (auto id = find_vertex(name)) return *id;
  throw PreconditionError("unknown vertex '" + std::string(name) + "'");
}

bool Hypergraph::contains(EdgeId e, VertexId x) const {
  const auto& s = sorted_edges_.at(e);
  return std::binary_search(s.begin(), s.end(), x);
}

std::vector<Incidence> Hypergraph::incidences() const {
  std::vector<Incidence> out;
  out.reserve(num_incidences());
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    for (VertexId x : edges_[e]) out.push_back({x, e});
  }
  return out;
}

Incidence Hypergraph::incidence_at(std::size_t index) const {
  if (index >= num_incidences()) throw PreconditionError("incidence index out of range");
  auto it = std::upper_bound(edge_offset_.begin(), edge_offset_.end(), index);
  const EdgeId e = static_cast<EdgeId>(it - edge_offset_.begin()) - 1;
  return {edges_[e][index - edge_offset_[e]], e};
}

bool Hypergraph::is_incidence(const Incidence& inc) const noexcept {
  return inc.edge < edges_.size() && inc.vertex < names_.size() && contains(inc.edge, inc.vertex);
}

std::size_t Hypergraph::incidence_index(const Incidence& inc) const {
  if (!is_incidence(inc)) {
    throw PreconditionError("(" + (inc.vertex < names_.size() ? names_[inc.vertex] : std::string("?")) +
                            ", e" + std::to_string(inc.edge) + ") is not an incidence");
  }
  const auto& members = edges_[inc.edge];
  auto pos = std::find(members.begin(), members.end(), inc.vertex) - members.begin();
  return edge_offset_[inc.edge] + static_cast<std::size_t>(pos);
}

std::size_t degree(const Hypergraph& h, std::string_view vertex) { return h.degree(h.vertex_id(vertex)); }

std::size_t max_degree(const Hypergraph& h) {
  std::size_t d = 0;
  for (VertexId x = 0; x < h.num_vertices(); ++x) d = std::max(d, h.degree(x));
  return d;
}

std::size_t min_degree(const Hypergraph& h) {
  if (h.num_vertices() == 0) return 0;
  std::size_t d = h.degree(0);
  for (VertexId x = 1; x < h.num_vertices(); ++x) d = std::min(d, h.degree(x));
  return d;
}

std::size_t rank(const Hypergraph& h) {
  std::size_t r = 0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) r = std::max(r, h.edge_size(e));
  return r;
}

std::size_t linearity_t(const Hypergraph& h) {
  std::size_t t = 1;
  // Edge intersections, counted through shared members.
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    std::map<EdgeId, std::size_t> overlap;
    for (VertexId x : h.edge(e)) {
      for (EdgeId f : h.edges_of(x)) {
        if (f > e) t = std::max(t, ++overlap[f]);
      }
    }
  }
  // Vertex codegrees.
  for (VertexId x = 0; x < h.num_vertices(); ++x) {
    std::map<VertexId, std::size_t> codegree;
    for (EdgeId e : h.edges_of(x)) {
      for (VertexId y : h.edge(e)) {
        if (y > x) t = std::max(t, ++codegree[y]);
      }
    }
  }
  return t;
}

namespace {

// Union-find over vertex ids; edges merge their members.
std::vector<VertexId> component_roots(const Hypergraph& h) {
  std::vector<VertexId> parent(h.num_vertices());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : h.edges()) {
    for (std::size_t i = 1; i < e.size(); ++i) {
      VertexId a = find(e[0]), b = find(e[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  for (VertexId x = 0; x < parent.size(); ++x) parent[x] = find(x);
  return parent;
}

// Builds a hypergraph from a vertex subset of h (ids ascending) and edges over
// h's ids, dropping duplicate edges.
Hypergraph rebuild(const Hypergraph& h, const std::vector<VertexId>& keep,
                   const std::vector<std::vector<VertexId>>& edges) {
  std::vector<VertexId> remap(h.num_vertices(), h.num_vertices());
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (VertexId x : keep) {
    remap[x] = names.size();
    names.push_back(h.name(x));
  }
  std::set<std::vector<VertexId>> seen;
  std::vector<std::vector<VertexId>> out;
  for (const auto& e : edges) {
    if (e.empty()) continue;
    std::vector<VertexId> mapped;
    mapped.reserve(e.size());
    for (VertexId x : e) mapped.push_back(remap[x]);
    auto key = mapped;
    std::sort(key.begin(), key.end());
    if (seen.insert(std::move(key)).second) out.push_back(std::move(mapped));
  }
  return Hypergraph(std::move(names), std::move(out));
}

}  // namespace

bool is_connected(const Hypergraph& h) {
  auto roots = component_roots(h);
  return std::all_of(roots.begin(), roots.end(), [](VertexId r) { return r == 0; });
}

StructureReport structure_report(const Hypergraph& h) {
  if (h.num_edges() == 0) throw PreconditionError("structure report needs at least one edge");
  StructureReport rep;
  rep.max_degree = max_degree(h);
  rep.min_degree = min_degree(h);
  rep.rank = rank(h);
  rep.rho = std::max(rep.rank, rep.max_degree);
  bool uniform = true;
  for (EdgeId e = 0; e < h.num_edges(); ++e) uniform = uniform && h.edge_size(e) == rep.rank;
  if (uniform) rep.uniform_k = rep.rank;
  if (rep.min_degree == rep.max_degree) rep.regular_d = rep.max_degree;
  rep.linearity_t = linearity_t(h);
  rep.connected = is_connected(h);
  return rep;
}

std::vector<Incidence> incidences(const Hypergraph& h) { return h.incidences(); }

bool incidences_adjacent(const Hypergraph& h, const Incidence& a, const Incidence& b) {
  h.incidence_index(a);
  h.incidence_index(b);
  if (a == b) throw PreconditionError("an incidence is not adjacent to itself");
  if (a.vertex == b.vertex) return true;
  return h.contains(a.edge, b.vertex) || h.contains(b.edge, a.vertex);
}

Hypergraph induced_sub(const Hypergraph& h, std::span<const VertexId> subset, InducedSemantics semantics) {
  if (subset.empty()) throw PreconditionError("induced sub-hypergraph needs a non-empty vertex set");
  std::vector<char> in_y(h.num_vertices(), 0);
  for (VertexId x : subset) {
    if (x >= h.num_vertices()) throw PreconditionError("induced vertex set is not a subset of the vertices");
    in_y[x] = 1;
  }
  const std::vector<char> original = in_y;
  std::vector<std::vector<VertexId>> kept;
  for (const auto& e : h.edges()) {
    bool meets = std::any_of(e.begin(), e.end(), [&](VertexId x) { return original[x]; });
    if (!meets) continue;
    if (semantics == InducedSemantics::kTrace) {
      std::vector<VertexId> trace;
      for (VertexId x : e) {
        if (original[x]) trace.push_back(x);
      }
      kept.push_back(std::move(trace));
    } else {
      for (VertexId x : e) in_y[x] = 1;
      kept.push_back(e);
    }
  }
  std::vector<VertexId> keep;
  for (VertexId x = 0; x < h.num_vertices(); ++x) {
    if (in_y[x]) keep.push_back(x);
  }
  return rebuild(h, keep, kept);
}

Hypergraph minimization(const Hypergraph& h) {
  std::vector<std::vector<VertexId>> kept;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto se = h.sorted_edge(e);
    bool contained = false;
    for (EdgeId f = 0; f < h.num_edges() && !contained; ++f) {
      if (f == e || h.edge_size(f) <= h.edge_size(e)) continue;
      auto sf = h.sorted_edge(f);
      contained = std::includes(sf.begin(), sf.end(), se.begin(), se.end());
    }
    if (!contained) kept.emplace_back(h.edge(e).begin(), h.edge(e).end());
  }
  std::vector<VertexId> all(h.num_vertices());
  std::iota(all.begin(), all.end(), VertexId{0});
  return rebuild(h, all, kept);
}

std::vector<Hypergraph> components(const Hypergraph& h) {
  auto roots = component_roots(h);
  std::vector<VertexId> order;  // distinct roots, ascending = by smallest member
  for (VertexId x = 0; x < roots.size(); ++x) {
    if (roots[x] == x) order.push_back(x);
  }
  std::vector<Hypergraph> out;
  out.reserve(order.size());
  for (VertexId r : order) {
    std::vector<VertexId> keep;
    for (VertexId x = 0; x < roots.size(); ++x) {
      if (roots[x] == r) keep.push_back(x);
    }
    std::vector<std::vector<VertexId>> edges;
    for (const auto& e : h.edges()) {
      if (roots[e.front()] == r) edges.push_back(e);
    }
    out.push_back(rebuild(h, keep, edges));
  }
  return out;
}

Hypergraph remove_edge(const Hypergraph& h, EdgeId e) {
  if (e >= h.num_edges()) throw PreconditionError("edge index out of range");
  auto edges = h.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
  return Hypergraph(h.vertex_names(), std::move(edges));
}

Hypergraph remove_vertex(const Hypergraph& h, VertexId x) {
  if (x >= h.num_vertices()) throw PreconditionError("vertex id out of range");
  std::vector<VertexId> keep;
  for (VertexId y = 0; y < h.num_vertices(); ++y) {
    if (y != x) keep.push_back(y);
  }
  std::vector<std::vector<VertexId>> edges;
  for (const auto& e : h.edges()) {
    std::vector<VertexId> trimmed;
    for (VertexId y : e) {
      if (y != x) trimmed.push_back(y);
    }
    edges.push_back(std::move(trimmed));
  }
  return rebuild(h, keep, edges);
}

}  // namespace incol
