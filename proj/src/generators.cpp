#include "incol/generators.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "incol/acyclicity.hpp"
#include "incol/error.hpp"
#include "incol/levi.hpp"
#include "incol/rng.hpp"

namespace incol {

Graph gen_random_tree(std::size_t nodes, std::uint64_t seed) {
  Graph g(nodes);
  if (nodes < 2) return g;
  if (nodes == 2) {
    g.add_edge(0, 1);
    return g;
  }
  Rng rng(seed);
  std::vector<std::size_t> code(nodes - 2);
  for (auto& c : code) c = rng.below(nodes);

  std::vector<std::size_t> degree(nodes, 1);
  for (std::size_t c : code) ++degree[c];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> leaves;
  for (std::size_t v = 0; v < nodes; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  for (std::size_t c : code) {
    const std::size_t leaf = leaves.top();
    leaves.pop();
    g.add_edge(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  const std::size_t u = leaves.top();
  leaves.pop();
  g.add_edge(u, leaves.top());
  return g;
}

namespace {

Hypergraph grow_tree_hypergraph(std::size_t edges, std::size_t max_degree, std::size_t star,
                                const std::function<std::size_t()>& next_size, Rng& rng) {
  std::vector<std::string> names;
  std::vector<std::size_t> degree;
  std::vector<std::vector<VertexId>> out;
  auto fresh = [&] {
    names.push_back("x" + std::to_string(names.size()));
    degree.push_back(0);
    return names.size() - 1;
  };

  for (std::size_t e = 0; e < edges; ++e) {
    std::vector<VertexId> members;
    const std::size_t size = next_size();
    if (e > 0) {
      VertexId anchor = 0;
      if (e >= star) {
        std::vector<VertexId> open;
        for (VertexId x = 0; x < names.size(); ++x) {
          if (degree[x] < max_degree) open.push_back(x);
        }
        anchor = open[rng.below(open.size())];
      }
      members.push_back(anchor);
    }
    while (members.size() < size) members.push_back(fresh());
    for (VertexId x : members) ++degree[x];
    out.push_back(std::move(members));
  }
  Hypergraph h(std::move(names), std::move(out));
  if (!is_linear(h) || !is_alpha_acyclic(h)) throw std::logic_error("tree growth produced a cyclic hypergraph");
  return h;
}

}  // namespace

Hypergraph gen_acyclic_linear(std::size_t edges, std::size_t max_rank, std::size_t max_degree, std::uint64_t seed) {
  if (edges == 0 || max_rank == 0 || max_degree == 0) {
    throw PreconditionError("acyclic generator needs positive edge count, rank and degree caps");
  }
  if (edges > 1 && (max_rank < 2 || max_degree < 2)) {
    throw PreconditionError("a connected acyclic hypergraph with several edges needs rank and degree caps of 2 or more");
  }
  Rng rng(seed);
  auto size = [&]() -> std::size_t {
    return max_rank == 1 ? 1 : static_cast<std::size_t>(rng.between(2, static_cast<std::int64_t>(max_rank)));
  };
  return grow_tree_hypergraph(edges, max_degree, 1, size, rng);
}

Hypergraph gen_acyclic_linear_uniform(std::size_t edges, std::size_t k, std::size_t max_degree, std::uint64_t seed) {
  if (edges == 0 || k == 0 || max_degree == 0) {
    throw PreconditionError("acyclic generator needs positive edge count, edge size and degree cap");
  }
  if (edges > 1 && (k < 2 || max_degree < 2)) {
    throw PreconditionError("a connected acyclic hypergraph with several edges needs edge size and degree cap of 2 or more");
  }
  Rng rng(seed);
  const std::size_t star = edges >= max_degree ? max_degree : 1;
  return grow_tree_hypergraph(edges, max_degree, star, [k] { return k; }, rng);
}

BiregularSample gen_biregular_k2t1_free(std::size_t a, std::size_t b, std::size_t n_u, std::size_t t,
                                        std::uint64_t seed, std::size_t max_tries) {
  if (a == 0 || b == 0 || n_u == 0 || t == 0) throw PreconditionError("biregular generator needs positive a, b, n_u, t");
  if ((a * n_u) % b != 0) throw PreconditionError("a * n_u must be divisible by b");
  const std::size_t n_v = a * n_u / b;
  if (n_v < a || n_u < b) throw PreconditionError("parts are too small for a simple biregular graph");

  Rng rng(seed);
  std::size_t parallel = 0;
  std::size_t dense = 0;
  for (std::size_t attempt = 1; attempt <= max_tries; ++attempt) {
    // Match the U stubs in order; each takes a random remaining V stub that
    // keeps the graph simple and every codegree at most t. A dead end restarts.
    std::vector<std::size_t> stubs;
    stubs.reserve(a * n_u);
    for (std::size_t v = 0; v < n_v; ++v) stubs.insert(stubs.end(), b, v);
    rng.shuffle(stubs);
    std::vector<std::vector<std::size_t>> u_adj(n_u);
    std::vector<std::vector<std::size_t>> v_adj(n_v);
    std::vector<std::size_t> co_u(n_u * n_u, 0);
    std::vector<std::size_t> co_v(n_v * n_v, 0);
    bool stuck = false;
    for (std::size_t u = 0; u < n_u && !stuck; ++u) {
      for (std::size_t slot = 0; slot < a && !stuck; ++slot) {
        const std::size_t offset = static_cast<std::size_t>(rng.below(stubs.size()));
        bool saw_dense = false;
        std::size_t chosen = stubs.size();
        for (std::size_t step = 0; step < stubs.size(); ++step) {
          const std::size_t i = (offset + step) % stubs.size();
          const std::size_t v = stubs[i];
          if (std::find(u_adj[u].begin(), u_adj[u].end(), v) != u_adj[u].end()) {
            continue;
          }
          bool ok = true;
          for (std::size_t w : u_adj[u]) ok = ok && co_v[v * n_v + w] < t;
          for (std::size_t x : v_adj[v]) ok = ok && co_u[u * n_u + x] < t;
          if (ok) {
            chosen = i;
            break;
          }
          saw_dense = true;
        }
        if (chosen == stubs.size()) {
          ++(saw_dense ? dense : parallel);
          stuck = true;
          break;
        }
        const std::size_t v = stubs[chosen];
        stubs[chosen] = stubs.back();
        stubs.pop_back();
        for (std::size_t w : u_adj[u]) {
          ++co_v[v * n_v + w];
          ++co_v[w * n_v + v];
        }
        for (std::size_t x : v_adj[v]) {
          ++co_u[u * n_u + x];
          ++co_u[x * n_u + u];
        }
        u_adj[u].push_back(v);
        v_adj[v].push_back(u);
      }
    }
    if (stuck) continue;

    std::vector<std::string> part_u;
    std::vector<std::string> part_v;
    for (std::size_t u = 0; u < n_u; ++u) part_u.push_back("u" + std::to_string(u));
    for (std::size_t v = 0; v < n_v; ++v) part_v.push_back("v" + std::to_string(v));
    BipartiteGraph g(std::move(part_u), std::move(part_v));
    for (std::size_t u = 0; u < n_u; ++u) {
      std::sort(u_adj[u].begin(), u_adj[u].end());
      for (std::size_t v : u_adj[u]) g.add_edge(u, v);
    }
    const auto profile = biregular_profile(g);
    if (!profile || profile->first != a || profile->second != b || !is_k2t1_free(g, t)) {
      throw std::logic_error("biregular generator accepted an invalid graph");
    }
    return {std::move(g), attempt};
  }
  throw Error("no K_{2," + std::to_string(t + 1) + "}-free (" + std::to_string(a) + "," + std::to_string(b) +
              ")-biregular graph after " + std::to_string(max_tries) + " tries (" + std::to_string(parallel) +
              " dead ends on parallel edges, " + std::to_string(dense) + " on a K_{2," + std::to_string(t + 1) +
              "})");
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
    if (out > (std::uint64_t{1} << 40)) return out;
  }
  return out;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<VertexId>&)>& fn) {
  std::vector<VertexId> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    fn(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::vector<VertexId> random_subset(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<VertexId> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(n - i)]);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

class QuasiLinearBuilder {
 public:
  QuasiLinearBuilder(std::size_t n, std::size_t t) : n_(n), t_(t), codegree_(n * n, 0), member_(n) {}

  bool fits(const std::vector<VertexId>& e) const {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        if (codegree_[e[i] * n_ + e[j]] >= t_) return false;
      }
    }
    for (std::size_t f = 0; f < edges_.size(); ++f) {
      std::size_t common = 0;
      for (VertexId x : e) common += member_[x].count(f);
      if (common > t_ || (common == e.size() && common == edges_[f].size())) return false;
    }
    return true;
  }

  void add(std::vector<VertexId> e) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      member_[e[i]].insert(edges_.size());
      for (std::size_t j = i + 1; j < e.size(); ++j) ++codegree_[e[i] * n_ + e[j]];
    }
    edges_.push_back(std::move(e));
  }

  std::vector<std::vector<VertexId>> take() { return std::move(edges_); }

 private:
  std::size_t n_;
  std::size_t t_;
  std::vector<std::size_t> codegree_;
  std::vector<std::set<std::size_t>> member_;
  std::vector<std::vector<VertexId>> edges_;
};

constexpr std::size_t kRestarts = 2000;
constexpr std::size_t kSamplesPerEdge = 2000;
constexpr std::uint64_t kEnumerateLimit = 5000;

}  // namespace

Hypergraph gen_quasi_linear(std::size_t vertices, std::size_t edges, std::size_t k, std::size_t t, std::uint64_t seed) {
  if (k == 0 || t == 0) throw PreconditionError("quasi-linear generator needs positive k and t");
  if (k > vertices) throw PreconditionError("edge size exceeds the vertex count");
  if (edges > binomial(vertices, k)) throw PreconditionError("more edges requested than distinct k-sets exist");
  if (k >= 2 && t * binomial(vertices, 2) < edges * binomial(k, 2)) {
    throw PreconditionError("t * C(n,2) < m * C(k,2): not enough vertex pairs for the requested edges");
  }

  Rng rng(seed);
  const bool enumerate = binomial(vertices, k) <= kEnumerateLimit;
  std::vector<std::string> names;
  for (std::size_t x = 0; x < vertices; ++x) names.push_back("x" + std::to_string(x));

  for (std::size_t restart = 0; restart < kRestarts; ++restart) {
    QuasiLinearBuilder builder(vertices, t);
    bool stuck = false;
    for (std::size_t e = 0; e < edges && !stuck; ++e) {
      if (enumerate) {
        std::vector<std::vector<VertexId>> options;
        for_each_subset(vertices, k, [&](const std::vector<VertexId>& s) {
          if (builder.fits(s)) options.push_back(s);
        });
        if (options.empty()) {
          stuck = true;
        } else {
          builder.add(std::move(options[rng.below(options.size())]));
        }
        continue;
      }
      stuck = true;
      for (std::size_t sample = 0; sample < kSamplesPerEdge; ++sample) {
        auto s = random_subset(vertices, k, rng);
        if (builder.fits(s)) {
          builder.add(std::move(s));
          stuck = false;
          break;
        }
      }
    }
    if (stuck) continue;
    Hypergraph h(names, builder.take());
    if (linearity_t(h) > t) throw std::logic_error("quasi-linear generator broke its invariant");
    return h;
  }
  throw Error("could not place " + std::to_string(edges) + " edges after " + std::to_string(kRestarts) + " restarts");
}

Hypergraph gen_linear(std::size_t vertices, std::size_t edges, std::size_t k, std::uint64_t seed) {
  return gen_quasi_linear(vertices, edges, k, 1, seed);
}

Hypergraph gen_random_hypergraph(std::size_t vertices, std::size_t edges, std::size_t max_rank, std::uint64_t seed) {
  if (max_rank == 0) throw PreconditionError("random hypergraph needs max_rank >= 1");
  const std::size_t top = std::min(max_rank, vertices);
  std::uint64_t available = 0;
  for (std::size_t s = 1; s <= top; ++s) available += binomial(vertices, s);
  if (edges > available) throw PreconditionError("more edges requested than distinct subsets exist");

  Rng rng(seed);
  std::set<std::vector<VertexId>> seen;
  std::vector<std::vector<VertexId>> out;
  while (out.size() < edges) {
    const auto size = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(top)));
    auto e = random_subset(vertices, size, rng);
    if (seen.insert(e).second) out.push_back(std::move(e));
  }
  std::vector<std::string> names;
  for (std::size_t x = 0; x < vertices; ++x) names.push_back("x" + std::to_string(x));
  return Hypergraph(std::move(names), std::move(out));
}

}  // namespace incol
