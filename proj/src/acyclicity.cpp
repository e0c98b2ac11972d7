#include "incol/acyclicity.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "incol/error.hpp"
#include "incol/levi.hpp"
#include "incol/rng.hpp"

namespace incol {

const char* to_string(GyoRule rule) {
  switch (rule) {
    case GyoRule::kEarVertex:
      return "ear-vertex";
    case GyoRule::kContainedEdge:
      return "contained-edge";
    case GyoRule::kEmptyEdge:
      return "empty-edge";
  }
  return "?";
}

namespace {

struct GyoState {
  std::vector<char> vertex_alive;
  std::vector<std::size_t> vertex_degree;  // live edges containing the vertex
  std::vector<char> edge_alive;
  std::vector<std::vector<VertexId>> members;  // sorted, live vertices only

  explicit GyoState(const Hypergraph& h)
      : vertex_alive(h.num_vertices(), 1), vertex_degree(h.num_vertices(), 0), edge_alive(h.num_edges(), 1) {
    members.reserve(h.num_edges());
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      auto s = h.sorted_edge(e);
      members.emplace_back(s.begin(), s.end());
      for (VertexId x : s) ++vertex_degree[x];
    }
  }

  bool contained_in_other(EdgeId e) const {
    for (EdgeId f = 0; f < members.size(); ++f) {
      if (f == e || !edge_alive[f] || members[f].size() < members[e].size()) continue;
      if (std::includes(members[f].begin(), members[f].end(), members[e].begin(), members[e].end())) return true;
    }
    return false;
  }

  std::vector<GyoStep> applicable(bool first_only) const {
    std::vector<GyoStep> out;
    for (VertexId x = 0; x < vertex_alive.size(); ++x) {
      if (vertex_alive[x] && vertex_degree[x] <= 1) {
        out.push_back({GyoRule::kEarVertex, x});
        if (first_only) return out;
      }
    }
    for (EdgeId e = 0; e < members.size(); ++e) {
      if (edge_alive[e] && contained_in_other(e)) {
        out.push_back({GyoRule::kContainedEdge, e});
        if (first_only) return out;
      }
    }
    for (EdgeId e = 0; e < members.size(); ++e) {
      if (edge_alive[e] && members[e].empty()) {
        out.push_back({GyoRule::kEmptyEdge, e});
        if (first_only) return out;
      }
    }
    return out;
  }

  void apply(const GyoStep& step) {
    if (step.rule == GyoRule::kEarVertex) {
      vertex_alive[step.item] = 0;
      for (EdgeId e = 0; e < members.size(); ++e) {
        if (!edge_alive[e]) continue;
        auto it = std::lower_bound(members[e].begin(), members[e].end(), step.item);
        if (it != members[e].end() && *it == step.item) members[e].erase(it);
      }
      vertex_degree[step.item] = 0;
      return;
    }
    edge_alive[step.item] = 0;
    for (VertexId x : members[step.item]) --vertex_degree[x];
  }
};

}  // namespace

GyoTrace gyo_reduce(const Hypergraph& h, std::optional<std::uint64_t> shuffle_seed) {
  GyoState state(h);
  GyoTrace trace;
  std::optional<Rng> rng;
  if (shuffle_seed) rng.emplace(*shuffle_seed);
  for (;;) {
    auto options = state.applicable(!rng.has_value());
    if (options.empty()) break;
    const GyoStep step = rng ? options[rng->below(options.size())] : options.front();
    state.apply(step);
    trace.steps.push_back(step);
  }

  std::vector<VertexId> remap(h.num_vertices(), 0);
  std::vector<std::string> names;
  for (VertexId x = 0; x < h.num_vertices(); ++x) {
    if (!state.vertex_alive[x]) continue;
    remap[x] = names.size();
    names.push_back(h.name(x));
  }
  std::vector<std::vector<VertexId>> edges;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (!state.edge_alive[e]) continue;
    std::vector<VertexId> live;
    for (VertexId x : h.edge(e)) {
      if (state.vertex_alive[x]) live.push_back(remap[x]);
    }
    edges.push_back(std::move(live));
    trace.residual_edges.push_back(e);
  }
  trace.residual = Hypergraph(std::move(names), std::move(edges));
  return trace;
}

bool is_alpha_acyclic(const Hypergraph& h) { return gyo_reduce(h).empty(); }

namespace {

using Mask = std::uint64_t;

bool is_graph_cycle(const std::vector<Mask>& edges, Mask subset) {
  const int n = std::popcount(subset);
  if (n < 3 || static_cast<int>(edges.size()) != n) return false;
  for (Mask e : edges) {
    if (std::popcount(e) != 2) return false;
  }
  // 2-regular on the subset
  for (Mask bit = subset; bit; bit &= bit - 1) {
    const Mask x = bit & -bit;
    int deg = 0;
    for (Mask e : edges) deg += (e & x) ? 1 : 0;
    if (deg != 2) return false;
  }
  // connected
  Mask reached = subset & -subset;
  for (bool grew = true; grew;) {
    grew = false;
    for (Mask e : edges) {
      if ((e & reached) && (e & ~reached)) {
        reached |= e;
        grew = true;
      }
    }
  }
  return reached == subset;
}

bool is_co_singleton_family(const std::vector<Mask>& edges, Mask subset) {
  const int n = std::popcount(subset);
  if (n < 3 || static_cast<int>(edges.size()) != n) return false;
  std::set<Mask> want;
  for (Mask bit = subset; bit; bit &= bit - 1) want.insert(subset & ~(bit & -bit));
  return std::set<Mask>(edges.begin(), edges.end()) == want;
}

}  // namespace

bool is_alpha_acyclic_brute(const Hypergraph& h, std::size_t vertex_cap) {
  if (h.num_vertices() > vertex_cap || h.num_vertices() > 62) {
    throw CapExceeded("brute-force acyclicity check is capped at " + std::to_string(vertex_cap) +
                      " vertices (got " + std::to_string(h.num_vertices()) + ")");
  }
  std::vector<Mask> edges;
  for (const auto& e : h.edges()) {
    Mask m = 0;
    for (VertexId x : e) m |= Mask{1} << x;
    edges.push_back(m);
  }
  const Mask full = (Mask{1} << h.num_vertices()) - 1;
  std::vector<Mask> traces;
  for (Mask subset = 1; subset <= full && subset != 0; ++subset) {
    traces.clear();
    for (Mask e : edges) {
      if (Mask t = e & subset) traces.push_back(t);
    }
    std::sort(traces.begin(), traces.end());
    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
    // minimization
    std::vector<Mask> minimal;
    for (Mask t : traces) {
      bool strict = std::any_of(traces.begin(), traces.end(), [&](Mask u) { return u != t && (t & ~u) == 0; });
      if (!strict) minimal.push_back(t);
    }
    if (is_graph_cycle(minimal, subset) || is_co_singleton_family(minimal, subset)) return false;
  }
  return true;
}

bool linear_forest_test(const Hypergraph& h) {
  if (const auto t = linearity_t(h); t != 1) {
    throw PreconditionError("forest test needs a linear hypergraph (linearity t = " + std::to_string(t) + ")");
  }
  return is_forest(levi_graph(h).graph());
}

}  // namespace incol
