#include "incol/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "incol/acyclicity.hpp"
#include "incol/coloring.hpp"
#include "incol/error.hpp"
#include "incol/levi.hpp"

namespace incol {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::int64_t poly_bound(std::int64_t a, std::int64_t b, std::int64_t t) {
  if (a < 1 || b < 1 || t < 1) {
    throw PreconditionError("poly_bound needs positive a, b, t (got " + std::to_string(a) + ", " + std::to_string(b) +
                            ", " + std::to_string(t) + ")");
  }
  return (b - 1) * ((a + t - 1) * b - 2 * t) + (a - 1) * ((b + t - 1) * a - 2 * t) +
         (a - 1) * (b - 1) * ((3 * t - 1) * (a - 2) + b * t) + (a - 1) * (b - 1) * ((3 * t - 1) * (b - 2) + a * t);
}

std::int64_t poly_bound_collapsed(std::int64_t a, std::int64_t b, std::int64_t t) {
  return (4 * a - 3) * t * b * b + (4 * t * a * a - (20 * t - 4) * a + 13 * t - 4) * b -
         (3 * t * a * a - (13 * t - 4) * a + 8 * t - 4);
}

bool ZetaAudit::within_bound() const {
  return std::all_of(per_edge.begin(), per_edge.end(), [](const ZetaEdgeAudit& e) { return e.slack >= 0; });
}

bool ZetaAudit::identity_holds() const {
  return std::all_of(per_edge.begin(), per_edge.end(),
                     [](const ZetaEdgeAudit& e) { return e.zeta_sum == 2 * e.neighborhood_edges; });
}

namespace {

std::pair<std::size_t, std::size_t> require_biregular(const BipartiteGraph& g) {
  const auto profile = biregular_profile(g);
  if (!profile) throw PreconditionError("graph is not biregular");
  return *profile;
}

// Edge count of L(g)^2 restricted to `members`, using `mark` as scratch.
std::int64_t induced_edges(const std::vector<std::vector<std::size_t>>& d2, const std::vector<std::size_t>& members,
                           std::vector<char>& mark) {
  for (std::size_t f : members) mark[f] = 1;
  std::int64_t twice = 0;
  for (std::size_t f : members) {
    for (std::size_t h : d2[f]) twice += mark[h];
  }
  for (std::size_t f : members) mark[f] = 0;
  return twice / 2;
}

}  // namespace

ZetaAudit zeta_sum_audit(const BipartiteGraph& g, std::size_t t) {
  if (t < 1) throw PreconditionError("zeta audit needs t >= 1");
  const auto [a, b] = require_biregular(g);
  if (!is_k2t1_free(g, t)) throw PreconditionError("graph contains K_{2," + std::to_string(t + 1) + "}");

  ZetaAudit out;
  out.a = a;
  out.b = b;
  out.t = t;
  const std::int64_t bound =
      poly_bound(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), static_cast<std::int64_t>(t));
  const auto d2 = all_d2_neighborhoods(g.graph());
  std::vector<char> mark(g.num_edges(), 0);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    ZetaEdgeAudit row;
    row.edge = e;
    for (std::size_t f : d2[e]) mark[f] = 1;
    for (std::size_t f : d2[e]) {
      for (std::size_t h : d2[f]) row.zeta_sum += mark[h];
    }
    for (std::size_t f : d2[e]) mark[f] = 0;
    row.neighborhood_edges = induced_edges(d2, d2[e], mark);
    row.poly_bound = bound;
    row.slack = bound - row.zeta_sum;
    const Rational ratio = bound == 0 ? Rational{} : Rational::make(row.zeta_sum, bound);
    if (out.max_ratio < ratio) out.max_ratio = ratio;
    out.per_edge.push_back(row);
  }
  return out;
}

SparsityReport sparsity_empirical(const BipartiteGraph& g, std::size_t t) {
  if (t < 1) throw PreconditionError("sparsity needs t >= 1");
  const auto profile = require_biregular(g);
  const auto d2 = all_d2_neighborhoods(g.graph());
  SparsityReport out;
  std::vector<char> mark(g.num_edges(), 0);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    out.square_max_degree = std::max(out.square_max_degree, d2[e].size());
    const std::int64_t count = induced_edges(d2, d2[e], mark);
    out.neighborhood_edges.push_back(count);
    out.max_neighborhood_edges = std::max(out.max_neighborhood_edges, count);
  }
  const auto delta = static_cast<std::int64_t>(out.square_max_degree);
  if (delta <= 1) {
    out.sigma_emp = {1, 1};
  } else {
    const std::int64_t pairs = delta * (delta - 1) / 2;
    out.sigma_emp = Rational::make(pairs - out.max_neighborhood_edges, pairs);
  }
  const auto a = static_cast<std::int64_t>(profile.first);
  const std::int64_t den = (2 * a - 1) * (2 * a - 1);
  out.target = Rational::make(den - (4 * a - 3) * static_cast<std::int64_t>(t), den);
  return out;
}

double eval_Z(std::size_t a, std::size_t t) {
  if (t < 1 || t >= a) {
    throw PreconditionError("Z(a, t) needs 1 <= t < a (got a = " + std::to_string(a) + ", t = " + std::to_string(t) +
                            "); for t >= a the K_{2,t+1}-free condition is vacuous");
  }
  const double ad = static_cast<double>(a);
  const double x = (4 * ad - 3) * static_cast<double>(t) / ((2 * ad - 1) * (2 * ad - 1));
  return 0.5 * (1 + x) + std::pow(1 - x, 1.5) / 6;
}

double eval_W(std::size_t k, std::size_t t) {
  if (t < 1 || t >= k) {
    throw PreconditionError("W(k, t) needs 1 <= t < k (got k = " + std::to_string(k) + ", t = " + std::to_string(t) +
                            "); for t >= k the K_{2,t+1}-free condition is vacuous");
  }
  const double kd = static_cast<double>(k);
  const double x = (4 * kd - 3) * static_cast<double>(t) / ((2 * kd - 1) * (2 * kd - 1));
  return (1 + x) + std::pow(1 - x, 1.5) / 3;
}

double eval_f(std::size_t r) { return eval_W(r, 1) * static_cast<double>(r); }

const BoundRow* BoundTable::find(const std::string& name) const {
  for (const auto& row : rows) {
    if (row.name == name) return &row;
  }
  return nullptr;
}

BoundTable bound_table(const Hypergraph& h, bool with_exact, std::uint64_t budget) {
  BoundTable table;
  const std::size_t r = rank(h);
  const std::size_t delta = max_degree(h);
  const std::size_t rho = std::max(r, delta);
  const std::size_t t = linearity_t(h);
  const bool linear = t == 1;
  const double rd = static_cast<double>(r);
  const double dd = static_cast<double>(delta);
  const double rhod = static_cast<double>(rho);

  table.rows.push_back({"greedy_2rΔ", 2 * rd * dd, true, false, BoundKind::kUpper, ""});
  table.rows.push_back({"global_1772", 1.772 * rhod * rhod, true, true, BoundKind::kUpper, ""});

  BoundRow w{"W_bound", 0, false, true, BoundKind::kUpper, "needs t < r"};
  if (t < r) {
    w.value = eval_W(r, t) * rd * dd;
    w.applicable = true;
    w.note.clear();
  }
  table.rows.push_back(w);

  BoundRow lin{"linear_1531", 0, false, true, BoundKind::kUpper, "needs linear and r >= 3"};
  if (linear && r >= 3) {
    lin.value = 1.531 * rd * dd;
    lin.applicable = true;
    lin.note.clear();
  }
  table.rows.push_back(lin);

  BoundRow mah{"mahdian", 0, false, true, BoundKind::kUpper, "needs linear and rho >= 3"};
  if (linear && rho >= 3) {
    mah.value = 2 * rhod * rhod / std::log(rhod);
    mah.applicable = true;
    mah.note.clear();
  }
  table.rows.push_back(mah);

  BoundRow acyc{"acyclic_linear", 0, false, false, BoundKind::kUpper, "needs linear and alpha-acyclic"};
  if (linear && h.num_edges() > 0 && is_alpha_acyclic(h)) {
    acyc.value = dd + rd - 1;
    acyc.applicable = true;
    acyc.note.clear();
  }
  table.rows.push_back(acyc);

  BoundRow clique{"clique_lower", 0, false, false, BoundKind::kLower, "needs an edge"};
  if (h.num_edges() > 0) {
    clique.value = static_cast<double>(clique_lower_bound(h));
    clique.applicable = true;
    clique.note.clear();
  }
  table.rows.push_back(clique);

  if (with_exact) {
    BoundRow exact{"exact", 0, false, false, BoundKind::kExact, ""};
    if (h.num_incidences() > kDefaultExactIncidenceCap) {
      exact.note = "over the solver cap of " + std::to_string(kDefaultExactIncidenceCap) + " incidences";
    } else {
      const ExactResult res = exact_chromatic(h, budget);
      if (res.solved) {
        exact.value = res.chromatic;
        exact.applicable = true;
      } else {
        exact.note = "unknown, bounds [" + std::to_string(res.lower) + ", " + std::to_string(res.upper) + "]";
      }
    }
    table.rows.push_back(exact);
  }
  return table;
}

}  // namespace incol
