#include "incol/completion.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "incol/error.hpp"
#include "incol/levi.hpp"

namespace incol {

Embedding Embedding::identity(const Hypergraph& h) {
  Embedding e;
  e.vertex_map.resize(h.num_vertices());
  e.edge_map.resize(h.num_edges());
  for (VertexId x = 0; x < h.num_vertices(); ++x) e.vertex_map[x] = x;
  for (EdgeId s = 0; s < h.num_edges(); ++s) e.edge_map[s] = s;
  return e;
}

Embedding Embedding::then(const Embedding& next) const {
  Embedding out;
  out.vertex_map.reserve(vertex_map.size());
  out.edge_map.reserve(edge_map.size());
  for (VertexId x : vertex_map) out.vertex_map.push_back(next.vertex_map.at(x));
  for (EdgeId s : edge_map) out.edge_map.push_back(next.edge_map.at(s));
  return out;
}

Completion pad_uniform(const Hypergraph& h) {
  const std::size_t k = rank(h);
  if (k < 2) throw PreconditionError("uniform padding needs rank at least 2 (got " + std::to_string(k) + ")");
  std::vector<std::string> names = h.vertex_names();
  std::unordered_set<std::string> taken(names.begin(), names.end());
  auto edges = h.edges();
  for (EdgeId e = 0; e < edges.size(); ++e) {
    for (std::size_t j = 1; edges[e].size() < k; ++j) {
      std::string n = "pad" + std::to_string(e) + "." + std::to_string(j);
      while (taken.count(n)) n += '\'';
      taken.insert(n);
      edges[e].push_back(names.size());
      names.push_back(std::move(n));
    }
  }
  return {Hypergraph(std::move(names), std::move(edges)), Embedding::identity(h)};
}

Completion regularize_step(const Hypergraph& h) {
  if (h.num_edges() == 0) throw PreconditionError("regularize step needs at least one edge");
  const std::size_t k = rank(h);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (h.edge_size(e) != k) throw PreconditionError("regularize step needs a uniform hypergraph");
  }
  if (k < 2) throw PreconditionError("regularize step needs edge size at least 2");
  const std::size_t delta = max_degree(h);
  if (min_degree(h) == delta) throw PreconditionError("regularize step needs a non-regular hypergraph");

  const std::size_t n = h.num_vertices();
  std::vector<std::string> names;
  names.reserve(n * k);
  for (std::size_t copy = 1; copy <= k; ++copy) {
    for (VertexId x = 0; x < n; ++x) names.push_back(h.name(x) + "#" + std::to_string(copy));
  }
  std::vector<std::vector<VertexId>> edges;
  edges.reserve(h.num_edges() * k + n);
  for (std::size_t copy = 0; copy < k; ++copy) {
    for (const auto& e : h.edges()) {
      std::vector<VertexId> shifted;
      shifted.reserve(e.size());
      for (VertexId x : e) shifted.push_back(copy * n + x);
      edges.push_back(std::move(shifted));
    }
  }
  for (VertexId x = 0; x < n; ++x) {
    if (h.degree(x) >= delta) continue;
    std::vector<VertexId> glue;
    glue.reserve(k);
    for (std::size_t copy = 0; copy < k; ++copy) glue.push_back(copy * n + x);
    edges.push_back(std::move(glue));
  }
  return {Hypergraph(std::move(names), std::move(edges)), Embedding::identity(h)};
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return b > std::numeric_limits<std::uint64_t>::max() - a ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

}  // namespace

std::uint64_t projected_completion_size(const Hypergraph& h) {
  const std::uint64_t k = rank(h);
  std::uint64_t vertices = h.num_vertices();
  std::size_t low = h.num_vertices() == 0 ? 0 : std::numeric_limits<std::size_t>::max();
  for (VertexId x = 0; x < h.num_vertices(); ++x) low = std::min(low, h.degree(x));
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (h.edge_size(e) < k) {
      vertices += k - h.edge_size(e);
      low = std::min<std::size_t>(low, 1);
    }
  }
  std::uint64_t incidences = saturating_mul(h.num_edges(), k);
  const std::size_t delta = max_degree(h);
  // Each step copies everything k times and adds at most one glue edge per
  // original vertex.
  for (std::size_t step = low; step < delta; ++step) {
    incidences = saturating_mul(k, saturating_add(incidences, vertices));
    vertices = saturating_mul(k, vertices);
  }
  return incidences;
}

Completion complete(const Hypergraph& h, std::uint64_t incidence_cap) {
  if (rank(h) < 2) throw PreconditionError("completion needs rank at least 2");
  const std::uint64_t projected = projected_completion_size(h);
  if (projected > incidence_cap) {
    throw CapExceeded("completion would reach about " + std::to_string(projected) + " incidences (cap " +
                      std::to_string(incidence_cap) + ")");
  }
  Completion current = pad_uniform(h);
  while (min_degree(current.hypergraph) < max_degree(current.hypergraph)) {
    Completion next = regularize_step(current.hypergraph);
    current.embedding = current.embedding.then(next.embedding);
    current.hypergraph = std::move(next.hypergraph);
  }
  return current;
}

bool CompletionReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CompletionCheck& c) { return c.passed; });
}

namespace {

std::string embedding_problem(const Hypergraph& h, const Hypergraph& big, const Embedding& emb) {
  if (emb.vertex_map.size() != h.num_vertices()) return "vertex map has the wrong size";
  if (emb.edge_map.size() != h.num_edges()) return "edge map has the wrong size";
  std::vector<char> hit(big.num_vertices(), 0);
  std::vector<char> image(big.num_vertices(), 0);
  for (VertexId x = 0; x < h.num_vertices(); ++x) {
    const VertexId y = emb.vertex_map[x];
    if (y >= big.num_vertices()) return "vertex '" + h.name(x) + "' maps out of range";
    if (hit[y]) return "two vertices map to '" + big.name(y) + "'";
    hit[y] = image[y] = 1;
  }
  std::vector<char> edge_hit(big.num_edges(), 0);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const EdgeId f = emb.edge_map[e];
    if (f >= big.num_edges()) return "edge " + std::to_string(e) + " maps out of range";
    if (edge_hit[f]) return "two edges map to edge " + std::to_string(f);
    edge_hit[f] = 1;
    std::vector<VertexId> want;
    for (VertexId x : h.edge(e)) want.push_back(emb.vertex_map[x]);
    std::sort(want.begin(), want.end());
    std::vector<VertexId> traced;
    for (VertexId y : big.sorted_edge(f)) {
      if (image[y]) traced.push_back(y);
    }
    if (traced != want) return "edge " + std::to_string(e) + " is not traced by its image edge";
  }
  return {};
}

}  // namespace

CompletionReport check_completion(const Hypergraph& h, const Hypergraph& completed, const Embedding& embedding) {
  CompletionReport rep;
  const std::size_t k = rank(h);
  const std::size_t delta = max_degree(h);
  const std::size_t t = linearity_t(h);

  bool uniform = completed.num_edges() > 0;
  for (EdgeId e = 0; e < completed.num_edges(); ++e) uniform = uniform && completed.edge_size(e) == k;
  rep.checks.push_back({"uniform", uniform, "every edge has size " + std::to_string(k)});

  const bool regular =
      completed.num_vertices() > 0 && min_degree(completed) == delta && max_degree(completed) == delta;
  rep.checks.push_back({"regular", regular,
                        "degrees in [" + std::to_string(min_degree(completed)) + ", " +
                            std::to_string(max_degree(completed)) + "], want " + std::to_string(delta)});

  const std::size_t t_out = linearity_t(completed);
  rep.checks.push_back(
      {"quasi-linear", t_out <= t, "t = " + std::to_string(t_out) + ", source t = " + std::to_string(t)});

  const std::string problem = embedding_problem(h, completed, embedding);
  rep.checks.push_back({"embedding", problem.empty(), problem.empty() ? "valid" : problem});

  const BipartiteGraph levi = levi_graph(completed);
  const auto profile = biregular_profile(levi);
  const bool biregular = profile && profile->first == delta && profile->second == k;
  const bool free = is_k2t1_free(levi, t);
  rep.checks.push_back({"levi", biregular && free,
                        std::string(biregular ? "biregular" : "not (Delta, k)-biregular") + ", " +
                            (free ? "K_{2,t+1}-free" : "contains K_{2,t+1}")});
  return rep;
}

}  // namespace incol
