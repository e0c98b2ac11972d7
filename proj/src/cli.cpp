#include "incol/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "incol/acyclicity.hpp"
#include "incol/bounds.hpp"
#include "incol/coloring.hpp"
#include "incol/completion.hpp"
#include "incol/error.hpp"
#include "incol/generators.hpp"
#include "incol/io.hpp"
#include "incol/tree_color.hpp"

namespace incol {
namespace {

// Bad arguments that CLI11 cannot catch on its own (unreadable files, bad lists).
class UsageError : public Error {
 public:
  using Error::Error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

// Prefixes parse errors with the file name.
template <typename Parse>
auto parse_file(const std::string& path, Parse&& parse) {
  auto in = open_input(path);
  try {
    return parse(in);
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

Hypergraph load_hypergraph(const std::string& path) {
  return parse_file(path, [](std::istream& in) { return parse_hypergraph(in); });
}

BipartiteGraph load_bipartite(const std::string& path) {
  return parse_file(path, [](std::istream& in) { return parse_bipartite(in); });
}

template <typename Writer>
void write_file(const std::string& path, Writer&& write) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  write(out);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = display_width(header[i]);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], display_width(row[i]));
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text += "  ";
      text += cells[i];
      if (i + 1 < cells.size()) text.append(width[i] - display_width(cells[i]), ' ');
    }
    out << text << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

std::string fixed(double v, int digits = 3) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

std::string optional_text(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "none"; }

int cmd_check(const std::string& path, std::ostream& out) {
  const Hypergraph h = load_hypergraph(path);
  const StructureReport rep = structure_report(h);
  out << "vertices: " << h.num_vertices() << '\n'
      << "edges: " << h.num_edges() << '\n'
      << "incidences: " << h.num_incidences() << '\n'
      << "max_degree: " << rep.max_degree << '\n'
      << "min_degree: " << rep.min_degree << '\n'
      << "rank: " << rep.rank << '\n'
      << "rho: " << rep.rho << '\n'
      << "uniform_k: " << optional_text(rep.uniform_k) << '\n'
      << "regular_d: " << optional_text(rep.regular_d) << '\n'
      << "linearity_t: " << rep.linearity_t << '\n'
      << "connected: " << yes_no(rep.connected) << '\n'
      << "alpha_acyclic: " << yes_no(is_alpha_acyclic(h)) << '\n';
  return kExitOk;
}

std::vector<std::size_t> parse_order_list(const std::string& text) {
  std::vector<std::size_t> order;
  std::stringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || end != tok.data() + tok.size()) throw UsageError("bad --order entry '" + tok + "'");
    order.push_back(v);
  }
  return order;
}

struct ColorArgs {
  std::string file;
  std::string method = "greedy";
  std::string order = "canonical";
  std::uint64_t budget = kDefaultExactBudget;
  std::string out;
};

int cmd_color(const ColorArgs& args, std::ostream& out) {
  const Hypergraph h = load_hypergraph(args.file);
  IncidenceColoring coloring;
  std::optional<std::string> bound;
  std::optional<std::string> status;
  int code = kExitOk;
  if (args.method == "greedy") {
    if (args.order == "canonical") {
      coloring = greedy_color(h, GreedyOrder::kCanonical);
    } else if (args.order == "levi-bfs") {
      coloring = greedy_color(h, GreedyOrder::kLeviBfs);
    } else {
      coloring = greedy_color(h, parse_order_list(args.order));
    }
  } else if (args.method == "exact") {
    const ExactResult res = exact_chromatic(h, args.budget);
    coloring = res.witness;
    if (res.solved) {
      status = "optimal";
    } else {
      status = "unknown, bounds [" + std::to_string(res.lower) + ", " + std::to_string(res.upper) + "]";
      code = kExitCap;
    }
  } else {
    coloring = color_acyclic_linear(h);
    bound = "Δ+r-1 = " + std::to_string(max_degree(h) + rank(h) - 1);
  }
  if (args.out.empty()) {
    write_coloring(out, h, coloring, bound, status);
  } else {
    write_file(args.out, [&](std::ostream& f) { write_coloring(f, h, coloring, bound, status); });
    out << "palette: " << coloring.palette << '\n';
    if (bound) out << "bound: " << *bound << '\n';
    if (status) out << "status: " << *status << '\n';
  }
  return code;
}

std::string describe(const Hypergraph& h, std::size_t incidence) {
  const Incidence inc = h.incidence_at(incidence);
  return "(" + h.name(inc.vertex) + ", " + std::to_string(inc.edge) + ")";
}

int cmd_verify(const std::string& file, const std::string& coloring_file, std::ostream& out) {
  const Hypergraph h = load_hypergraph(file);
  const ColoringFile parsed =
      parse_file(coloring_file, [&h](std::istream& in) { return parse_coloring(in, h); });
  const auto violations = verify_incidence(h, parsed.coloring);
  for (const auto& v : violations) {
    out << "violation: " << describe(h, v.first) << ' ' << describe(h, v.second) << " share color "
        << parsed.coloring.colors[v.first] << '\n';
  }
  if (!violations.empty()) {
    out << "violations: " << violations.size() << '\n';
    return kExitFailed;
  }
  out << "ok: proper incidence coloring with palette " << parsed.coloring.palette << '\n';
  return kExitOk;
}

struct CompleteArgs {
  std::string file;
  std::uint64_t cap = kDefaultCompletionCap;
  std::string out;
  std::string embedding;
};

int cmd_complete(const CompleteArgs& args, std::ostream& out) {
  const Hypergraph h = load_hypergraph(args.file);
  const Completion c = complete(h, args.cap);
  const CompletionReport rep = check_completion(h, c.hypergraph, c.embedding);
  if (!args.embedding.empty()) {
    write_file(args.embedding, [&](std::ostream& f) { write_embedding(f, h, c.hypergraph, c.embedding); });
  }
  if (args.out.empty()) {
    write_hypergraph(out, c.hypergraph);
  } else {
    write_file(args.out, [&](std::ostream& f) { write_hypergraph(f, c.hypergraph); });
    out << "vertices: " << c.hypergraph.num_vertices() << '\n'
        << "edges: " << c.hypergraph.num_edges() << '\n'
        << "incidences: " << c.hypergraph.num_incidences() << '\n';
    std::vector<std::vector<std::string>> rows;
    for (const auto& check : rep.checks) rows.push_back({check.name, check.passed ? "pass" : "FAIL", check.detail});
    print_table(out, {"check", "result", "detail"}, rows);
  }
  return rep.ok() ? kExitOk : kExitFailed;
}

int cmd_acyclicity(const std::string& file, const std::string& method, std::ostream& out) {
  const Hypergraph h = load_hypergraph(file);
  if (method == "brute") {
    out << "alpha_acyclic: " << yes_no(is_alpha_acyclic_brute(h)) << '\n';
    return kExitOk;
  }
  const GyoTrace trace = gyo_reduce(h);
  for (const auto& step : trace.steps) {
    out << to_string(step.rule) << ' ';
    if (step.rule == GyoRule::kEarVertex) {
      out << h.name(step.item);
    } else {
      out << step.item;
    }
    out << '\n';
  }
  out << "residual: " << (trace.empty() ? "empty" : "nonempty") << '\n';
  return kExitOk;
}

std::string edge_label(const BipartiteGraph& g, std::size_t e) {
  const Graph::Edge& edge = g.graph().edge(e);
  return g.graph().name(edge.u) + "-" + g.graph().name(edge.v);
}

int cmd_audit(const std::string& kind, const std::string& file, std::size_t t, const std::string& out_path,
              std::ostream& out) {
  const BipartiteGraph g = load_bipartite(file);
  std::vector<std::pair<std::string, std::string>> kv;
  int code = kExitOk;
  if (kind == "zeta") {
    const ZetaAudit audit = zeta_sum_audit(g, t);
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : audit.per_edge) {
      rows.push_back({edge_label(g, row.edge), std::to_string(row.zeta_sum), std::to_string(row.poly_bound),
                      std::to_string(row.slack), std::to_string(row.neighborhood_edges)});
    }
    print_table(out, {"edge", "zeta_sum", "poly_bound", "slack", "nbhd_edges"}, rows);
    const bool ok = audit.within_bound() && audit.identity_holds();
    out << "profile: (" << audit.a << ", " << audit.b << "), t = " << audit.t << '\n'
        << "max_ratio: " << audit.max_ratio.str() << '\n'
        << "within_bound: " << yes_no(audit.within_bound()) << '\n'
        << "identity: " << yes_no(audit.identity_holds()) << '\n';
    kv = {{"a", std::to_string(audit.a)},
          {"b", std::to_string(audit.b)},
          {"t", std::to_string(audit.t)},
          {"max_ratio", audit.max_ratio.str()},
          {"within_bound", yes_no(audit.within_bound())},
          {"identity", yes_no(audit.identity_holds())}};
    if (!ok) code = kExitFailed;
  } else {
    const SparsityReport rep = sparsity_empirical(g, t);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t e = 0; e < rep.neighborhood_edges.size(); ++e) {
      rows.push_back({edge_label(g, e), std::to_string(rep.neighborhood_edges[e])});
    }
    print_table(out, {"edge", "nbhd_edges"}, rows);
    out << "square_max_degree: " << rep.square_max_degree << '\n'
        << "sigma_emp: " << rep.sigma_emp.str() << '\n'
        << "asymptotic_target: " << rep.target.str() << '\n';
    kv = {{"square_max_degree", std::to_string(rep.square_max_degree)},
          {"sigma_emp", rep.sigma_emp.str()},
          {"asymptotic_target", rep.target.str()}};
  }
  if (!out_path.empty()) write_file(out_path, [&](std::ostream& f) { write_key_values(f, kv); });
  return code;
}

const char* kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::kUpper:
      return "upper";
    case BoundKind::kLower:
      return "lower";
    case BoundKind::kExact:
      return "exact";
  }
  return "?";
}

int cmd_bounds(const std::string& file, bool exact, std::uint64_t budget, const std::string& out_path,
               std::ostream& out) {
  const Hypergraph h = load_hypergraph(file);
  const BoundTable table = bound_table(h, exact, budget);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> kv;
  for (const auto& row : table.rows) {
    const std::string value = row.applicable ? fixed(row.value) : "-";
    rows.push_back({row.name, value, kind_name(row.kind), row.asymptotic ? "asymptotic" : "finite", row.note});
    kv.emplace_back(row.name, row.applicable ? fixed(row.value, 6) : "n/a");
  }
  print_table(out, {"bound", "value", "kind", "scope", "note"}, rows);
  if (!out_path.empty()) write_file(out_path, [&](std::ostream& f) { write_key_values(f, kv); });
  return kExitOk;
}

struct GenArgs {
  std::string kind;
  std::uint64_t seed = 0;
  std::size_t edges = 5;
  std::size_t vertices = 8;
  std::size_t max_rank = 3;
  std::size_t max_degree = 3;
  std::size_t k = 3;
  std::size_t t = 1;
  std::size_t a = 2;
  std::size_t b = 2;
  std::size_t nu = 3;
  std::size_t tries = kDefaultBiregularTries;
  std::string out;
};

int cmd_gen(const GenArgs& args, std::ostream& out) {
  std::ostringstream text;
  if (args.kind == "biregular") {
    const BiregularSample s = gen_biregular_k2t1_free(args.a, args.b, args.nu, args.t, args.seed, args.tries);
    text << "# tries: " << s.tries << '\n';
    write_bipartite(text, s.graph);
  } else {
    Hypergraph h;
    if (args.kind == "acyclic-linear") {
      h = gen_acyclic_linear(args.edges, args.max_rank, args.max_degree, args.seed);
    } else if (args.kind == "acyclic-uniform") {
      h = gen_acyclic_linear_uniform(args.edges, args.k, args.max_degree, args.seed);
    } else if (args.kind == "linear") {
      h = gen_linear(args.vertices, args.edges, args.k, args.seed);
    } else if (args.kind == "quasi-linear") {
      h = gen_quasi_linear(args.vertices, args.edges, args.k, args.t, args.seed);
    } else {
      h = gen_random_hypergraph(args.vertices, args.edges, args.max_rank, args.seed);
    }
    write_hypergraph(text, h);
  }
  if (args.out.empty()) {
    out << text.str();
  } else {
    write_file(args.out, [&](std::ostream& f) { f << text.str(); });
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Incidence coloring toolkit for hypergraphs", "incol"};
  app.require_subcommand(1);

  std::string file;
  std::string second;

  auto* check = app.add_subcommand("check", "Structure report and alpha-acyclicity");
  check->add_option("file", file, "hypergraph (.hg)")->required();

  ColorArgs color;
  auto* color_cmd = app.add_subcommand("color", "Color the incidences of a hypergraph");
  color_cmd->add_option("file", color.file, "hypergraph (.hg)")->required();
  color_cmd->add_option("--method", color.method)->check(CLI::IsMember({"greedy", "exact", "tree"}));
  color_cmd->add_option("--order", color.order, "canonical, levi-bfs or comma-separated incidence indices");
  color_cmd->add_option("--budget", color.budget, "node budget of the exact solver");
  color_cmd->add_option("--out", color.out, "write the coloring here");

  auto* verify = app.add_subcommand("verify", "Check a coloring file against a hypergraph");
  verify->add_option("file", file, "hypergraph (.hg)")->required();
  verify->add_option("coloring", second, "coloring file")->required();

  CompleteArgs comp;
  auto* complete_cmd = app.add_subcommand("complete", "Embed into a uniform regular hypergraph");
  complete_cmd->add_option("file", comp.file, "hypergraph (.hg)")->required();
  complete_cmd->add_option("--cap", comp.cap, "incidence cap");
  complete_cmd->add_option("--out", comp.out, "write the completed hypergraph here");
  complete_cmd->add_option("--embedding", comp.embedding, "write the embedding here");

  std::string acyc_method = "gyo";
  auto* acyc = app.add_subcommand("acyclicity", "GYO reduction trace or exhaustive test");
  acyc->add_option("file", file, "hypergraph (.hg)")->required();
  acyc->add_option("--method", acyc_method)->check(CLI::IsMember({"gyo", "brute"}));

  std::string audit_kind;
  std::size_t audit_t = 1;
  std::string audit_out;
  auto* audit = app.add_subcommand("audit", "Zeta-sum audit or empirical sparsity of a biregular graph");
  audit->add_option("kind", audit_kind)->required()->check(CLI::IsMember({"zeta", "sparsity"}));
  audit->add_option("graph", file, "bipartite edge list")->required();
  audit->add_option("--t", audit_t, "quasi-linearity parameter")->check(CLI::PositiveNumber);
  audit->add_option("--out", audit_out, "write name=value results here");

  bool bounds_exact = false;
  std::uint64_t bounds_budget = kDefaultExactBudget;
  std::string bounds_out;
  auto* bounds = app.add_subcommand("bounds", "Evaluate every bound formula");
  bounds->add_option("file", file, "hypergraph (.hg)")->required();
  bounds->add_flag("--exact", bounds_exact, "also run the exact solver");
  bounds->add_option("--budget", bounds_budget, "node budget of the exact solver");
  bounds->add_option("--out", bounds_out, "write name=value results here");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("class", gen.kind)
      ->required()
      ->check(CLI::IsMember({"acyclic-linear", "acyclic-uniform", "linear", "quasi-linear", "random", "biregular"}));
  gen_cmd->add_option("--seed", gen.seed)->required();
  gen_cmd->add_option("--edges", gen.edges);
  gen_cmd->add_option("--vertices", gen.vertices);
  gen_cmd->add_option("--max-rank", gen.max_rank);
  gen_cmd->add_option("--max-degree", gen.max_degree);
  gen_cmd->add_option("--k", gen.k);
  gen_cmd->add_option("--t", gen.t);
  gen_cmd->add_option("--a", gen.a);
  gen_cmd->add_option("--b", gen.b);
  gen_cmd->add_option("--nu", gen.nu, "part-U size for biregular graphs");
  gen_cmd->add_option("--tries", gen.tries);
  gen_cmd->add_option("--out", gen.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(file, out);
    if (color_cmd->parsed()) return cmd_color(color, out);
    if (verify->parsed()) return cmd_verify(file, second, out);
    if (complete_cmd->parsed()) return cmd_complete(comp, out);
    if (acyc->parsed()) return cmd_acyclicity(file, acyc_method, out);
    if (audit->parsed()) return cmd_audit(audit_kind, file, audit_t, audit_out, out);
    if (bounds->parsed()) return cmd_bounds(file, bounds_exact, bounds_budget, bounds_out, out);
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace incol
