#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "incol/coloring.hpp"
#include "incol/completion.hpp"
#include "incol/graph.hpp"
#include "incol/hypergraph.hpp"

namespace incol {

// All parsers throw ParseError carrying the 1-based line number. Lines whose
// first non-blank character is '#' are comments; blank lines are skipped.

/// `.hg`: an optional `vertices: v1 v2 ...` header, then one edge per line as
/// whitespace-separated vertex tokens.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph_string(const std::string& text);
/// Writes the header only when it is needed to reproduce the vertex set and
/// its order, so parse(write(h)) == h.
void write_hypergraph(std::ostream& out, const Hypergraph& h);
std::string hypergraph_to_string(const Hypergraph& h);

/// Bipartite edge list: `parts: u1 u2 ...` naming part U, then one `u v`
/// pair per line. Part V is every other name, in first-seen order.
BipartiteGraph parse_bipartite(std::istream& in);
BipartiteGraph parse_bipartite_string(const std::string& text);
void write_bipartite(std::ostream& out, const BipartiteGraph& g);

struct ColoringFile {
  IncidenceColoring coloring;
  std::optional<std::string> bound;
  std::optional<std::string> status;
};

/// `palette: k`, optional `bound: ...` and `status: ...` lines, then one
/// `vertex edge_index color` line per incidence, in any order.
ColoringFile parse_coloring(std::istream& in, const Hypergraph& h);
ColoringFile parse_coloring_string(const std::string& text, const Hypergraph& h);
void write_coloring(std::ostream& out, const Hypergraph& h, const IncidenceColoring& c,
                    const std::optional<std::string>& bound = std::nullopt,
                    const std::optional<std::string>& status = std::nullopt);

/// `[vertices]` section of `orig -> new` name lines, then `[edges]` section of
/// `orig_index -> new_index` lines.
void write_embedding(std::ostream& out, const Hypergraph& source, const Hypergraph& target, const Embedding& e);
Embedding parse_embedding(std::istream& in, const Hypergraph& source, const Hypergraph& target);

/// One `name=value` per line.
void write_key_values(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows);

}  // namespace incol
