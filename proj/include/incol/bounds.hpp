#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "incol/graph.hpp"
#include "incol/hypergraph.hpp"

namespace incol {

/// Non-negative fraction kept in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& x, const Rational& y) { return x.num * y.den < y.num * x.den; }
};

/// The four-term bound on the zeta sum of an (a, b)-biregular
/// K_{2,t+1}-free bipartite graph:
///   (b-1)((a+t-1)b-2t) + (a-1)((b+t-1)a-2t)
///   + (a-1)(b-1)((3t-1)(a-2)+bt) + (a-1)(b-1)((3t-1)(b-2)+at).
/// Throws PreconditionError unless a, b, t >= 1.
std::int64_t poly_bound(std::int64_t a, std::int64_t b, std::int64_t t);

/// Collapsed form (4a-3)tb^2 + (4ta^2-(20t-4)a+13t-4)b - (3ta^2-(13t-4)a+8t-4).
std::int64_t poly_bound_collapsed(std::int64_t a, std::int64_t b, std::int64_t t);

struct ZetaEdgeAudit {
  std::size_t edge = 0;
  std::int64_t zeta_sum = 0;
  std::int64_t poly_bound = 0;
  std::int64_t slack = 0;
  /// Edges of L(g)^2 among the D2 neighbours of this edge.
  std::int64_t neighborhood_edges = 0;
};

struct ZetaAudit {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t t = 0;
  std::vector<ZetaEdgeAudit> per_edge;
  /// Largest zeta_sum / poly_bound over edges (0 when every bound is 0).
  Rational max_ratio;

  bool within_bound() const;
  bool identity_holds() const;
};

/// Exact per-edge zeta sums against poly_bound(a, b, t), where (a, b) is the
/// biregular profile. Throws PreconditionError when g is not biregular or not
/// K_{2,t+1}-free.
ZetaAudit zeta_sum_audit(const BipartiteGraph& g, std::size_t t);

struct SparsityReport {
  /// 1 - (max neighbourhood edge count) / C(Delta(L^2), 2); 1 when Delta(L^2) <= 1.
  Rational sigma_emp;
  std::int64_t max_neighborhood_edges = 0;
  std::size_t square_max_degree = 0;
  std::vector<std::int64_t> neighborhood_edges;
  /// 1 - (4a-3)t/(2a-1)^2 with a the part-U degree; for comparison only.
  Rational target;
};

/// Throws PreconditionError when g is not biregular or t < 1.
SparsityReport sparsity_empirical(const BipartiteGraph& g, std::size_t t);

/// Coefficients of the asymptotic bounds. All throw PreconditionError unless
/// 1 <= t < a (resp. t < k), the standing assumption under which the
/// K_{2,t+1}-free condition is not vacuous.
double eval_Z(std::size_t a, std::size_t t);
double eval_W(std::size_t k, std::size_t t);
/// W(r, 1) * r. Requires r >= 2.
double eval_f(std::size_t r);

enum class BoundKind { kUpper, kLower, kExact };

struct BoundRow {
  std::string name;
  double value = 0;
  bool applicable = false;
  /// Only holds for sufficiently large parameters; never compared with exact.
  bool asymptotic = false;
  BoundKind kind = BoundKind::kUpper;
  std::string note;
};

struct BoundTable {
  std::vector<BoundRow> rows;
  const BoundRow* find(const std::string& name) const;
};

/// Every bound formula evaluated for h. The `exact` row is present only when
/// requested; it is inapplicable when the solver cap or budget is hit.
BoundTable bound_table(const Hypergraph& h, bool with_exact = false, std::uint64_t budget = 10'000'000);

}  // namespace incol
