#include "incol/io.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "incol/error.hpp"

namespace incol {
namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
  std::string text;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream split(raw);
    Line line{number, {}, raw};
    for (std::string tok; split >> tok;) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    out.push_back(std::move(line));
  }
  return out;
}

std::size_t parse_index(const std::string& tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || end != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" + tok + "'");
  }
  return value;
}

// Text after the first ':' of the line, trimmed.
std::string header_value(const std::string& text) {
  const auto colon = text.find(':');
  const auto begin = text.find_first_not_of(" \t", colon + 1);
  if (begin == std::string::npos) return {};
  const auto end = text.find_last_not_of(" \t");
  return text.substr(begin, end - begin + 1);
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
  std::vector<std::string> header;
  bool seen_header = false;
  std::vector<std::vector<std::string>> edges;
  std::map<std::set<std::string>, std::size_t> edge_line;
  for (const Line& line : read_lines(in)) {
    if (line.tokens.front() == "vertices:") {
      if (seen_header) throw ParseError(line.number, "second 'vertices:' header");
      if (!edges.empty()) throw ParseError(line.number, "'vertices:' header must come before the edges");
      seen_header = true;
      std::unordered_set<std::string> names;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        if (!names.insert(line.tokens[i]).second) {
          throw ParseError(line.number, "vertex '" + line.tokens[i] + "' listed twice");
        }
        header.push_back(line.tokens[i]);
      }
      continue;
    }
    std::set<std::string> members(line.tokens.begin(), line.tokens.end());
    if (members.size() != line.tokens.size()) throw ParseError(line.number, "a vertex is repeated inside the edge");
    const auto [it, fresh] = edge_line.emplace(std::move(members), line.number);
    if (!fresh) throw ParseError(line.number, "duplicate of the edge on line " + std::to_string(it->second));
    edges.push_back(line.tokens);
  }
  if (seen_header) {
    const std::unordered_set<std::string> declared(header.begin(), header.end());
    for (const auto& e : edges) {
      for (const auto& x : e) {
        if (!declared.count(x)) throw ParseError(0, "vertex '" + x + "' is missing from the 'vertices:' header");
      }
    }
  }
  return Hypergraph::from_named_edges(edges, header);
}

Hypergraph parse_hypergraph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  std::vector<char> seen(h.num_vertices(), 0);
  std::vector<VertexId> order;
  for (const auto& e : h.edges()) {
    for (VertexId x : e) {
      if (!seen[x]) {
        seen[x] = 1;
        order.push_back(x);
      }
    }
  }
  bool natural = order.size() == h.num_vertices();
  for (std::size_t i = 0; natural && i < order.size(); ++i) natural = order[i] == i;
  if (!natural) {
    out << "vertices:";
    for (const auto& name : h.vertex_names()) out << ' ' << name;
    out << '\n';
  }
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << h.name(e[i]);
    out << '\n';
  }
}

std::string hypergraph_to_string(const Hypergraph& h) {
  std::ostringstream out;
  write_hypergraph(out, h);
  return out.str();
}

BipartiteGraph parse_bipartite(std::istream& in) {
  std::vector<std::string> part_u;
  std::unordered_map<std::string, std::size_t> u_index;
  std::vector<std::string> part_v;
  std::unordered_map<std::string, std::size_t> v_index;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_line;
  bool seen_header = false;
  for (const Line& line : read_lines(in)) {
    if (line.tokens.front() == "parts:") {
      if (seen_header) throw ParseError(line.number, "second 'parts:' header");
      seen_header = true;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        if (!u_index.emplace(line.tokens[i], part_u.size()).second) {
          throw ParseError(line.number, "node '" + line.tokens[i] + "' listed twice");
        }
        part_u.push_back(line.tokens[i]);
      }
      continue;
    }
    if (!seen_header) throw ParseError(line.number, "missing 'parts:' header before the first edge");
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'u v'");
    const auto u = u_index.find(line.tokens[0]);
    if (u == u_index.end()) throw ParseError(line.number, "'" + line.tokens[0] + "' is not in the 'parts:' header");
    if (u_index.count(line.tokens[1])) {
      throw ParseError(line.number, "'" + line.tokens[1] + "' is in part U; edges must cross the parts");
    }
    const auto [v, added] = v_index.emplace(line.tokens[1], part_v.size());
    if (added) part_v.push_back(line.tokens[1]);
    const auto [it, fresh] = edge_line.emplace(std::make_pair(u->second, v->second), line.number);
    if (!fresh) throw ParseError(line.number, "duplicate of the edge on line " + std::to_string(it->second));
    edges.emplace_back(u->second, v->second);
  }
  if (!seen_header) throw ParseError(0, "missing 'parts:' header");
  BipartiteGraph g(std::move(part_u), std::move(part_v));
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

BipartiteGraph parse_bipartite_string(const std::string& text) {
  std::istringstream in(text);
  return parse_bipartite(in);
}

void write_bipartite(std::ostream& out, const BipartiteGraph& g) {
  const Graph& graph = g.graph();
  out << "parts:";
  for (std::size_t u = 0; u < g.size_u(); ++u) out << ' ' << graph.name(g.u_node(u));
  out << '\n';
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.endpoints(e);
    out << graph.name(g.u_node(u)) << ' ' << graph.name(g.v_node(v)) << '\n';
  }
}

ColoringFile parse_coloring(std::istream& in, const Hypergraph& h) {
  ColoringFile file;
  file.coloring.colors.assign(h.num_incidences(), 0);
  std::vector<std::size_t> assigned_on(h.num_incidences(), 0);
  bool seen_palette = false;
  for (const Line& line : read_lines(in)) {
    const std::string& head = line.tokens.front();
    if (head == "palette:") {
      if (seen_palette) throw ParseError(line.number, "second 'palette:' line");
      if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'palette: k'");
      seen_palette = true;
      file.coloring.palette = static_cast<int>(parse_index(line.tokens[1], line.number, "the palette"));
      continue;
    }
    if (head == "bound:") {
      file.bound = header_value(line.text);
      continue;
    }
    if (head == "status:") {
      file.status = header_value(line.text);
      continue;
    }
    if (!seen_palette) throw ParseError(line.number, "missing 'palette:' line before the first color");
    if (line.tokens.size() != 3) throw ParseError(line.number, "expected 'vertex edge_index color'");
    const auto x = h.find_vertex(line.tokens[0]);
    if (!x) throw ParseError(line.number, "unknown vertex '" + line.tokens[0] + "'");
    const std::size_t e = parse_index(line.tokens[1], line.number, "the edge index");
    if (e >= h.num_edges()) throw ParseError(line.number, "edge index " + line.tokens[1] + " is out of range");
    if (!h.contains(e, *x)) {
      throw ParseError(line.number, "vertex '" + line.tokens[0] + "' is not in edge " + line.tokens[1]);
    }
    const std::size_t color = parse_index(line.tokens[2], line.number, "the color");
    if (color == 0) throw ParseError(line.number, "colors start at 1");
    const std::size_t i = h.incidence_index({*x, e});
    if (assigned_on[i]) {
      throw ParseError(line.number, "incidence already colored on line " + std::to_string(assigned_on[i]));
    }
    assigned_on[i] = line.number;
    file.coloring.colors[i] = static_cast<int>(color);
  }
  if (!seen_palette) throw ParseError(0, "missing 'palette:' line");
  return file;
}

ColoringFile parse_coloring_string(const std::string& text, const Hypergraph& h) {
  std::istringstream in(text);
  return parse_coloring(in, h);
}

void write_coloring(std::ostream& out, const Hypergraph& h, const IncidenceColoring& c,
                    const std::optional<std::string>& bound, const std::optional<std::string>& status) {
  out << "palette: " << c.palette << '\n';
  if (bound) out << "bound: " << *bound << '\n';
  if (status) out << "status: " << *status << '\n';
  for (std::size_t i = 0; i < h.num_incidences(); ++i) {
    const Incidence inc = h.incidence_at(i);
    out << h.name(inc.vertex) << ' ' << inc.edge << ' ' << c.colors.at(i) << '\n';
  }
}

void write_embedding(std::ostream& out, const Hypergraph& source, const Hypergraph& target, const Embedding& e) {
  out << "[vertices]\n";
  for (VertexId x = 0; x < source.num_vertices(); ++x) {
    out << source.name(x) << " -> " << target.name(e.vertex_map.at(x)) << '\n';
  }
  out << "[edges]\n";
  for (EdgeId s = 0; s < source.num_edges(); ++s) out << s << " -> " << e.edge_map.at(s) << '\n';
}

Embedding parse_embedding(std::istream& in, const Hypergraph& source, const Hypergraph& target) {
  Embedding e;
  e.vertex_map.assign(source.num_vertices(), 0);
  e.edge_map.assign(source.num_edges(), 0);
  std::vector<char> vertex_done(source.num_vertices(), 0);
  std::vector<char> edge_done(source.num_edges(), 0);
  enum { kNone, kVertices, kEdges } section = kNone;
  for (const Line& line : read_lines(in)) {
    if (line.tokens.size() == 1 && line.tokens[0] == "[vertices]") {
      section = kVertices;
      continue;
    }
    if (line.tokens.size() == 1 && line.tokens[0] == "[edges]") {
      section = kEdges;
      continue;
    }
    if (line.tokens.size() != 3 || line.tokens[1] != "->") throw ParseError(line.number, "expected 'from -> to'");
    if (section == kVertices) {
      const auto from = source.find_vertex(line.tokens[0]);
      const auto to = target.find_vertex(line.tokens[2]);
      if (!from) throw ParseError(line.number, "unknown source vertex '" + line.tokens[0] + "'");
      if (!to) throw ParseError(line.number, "unknown target vertex '" + line.tokens[2] + "'");
      e.vertex_map[*from] = *to;
      vertex_done[*from] = 1;
    } else if (section == kEdges) {
      const std::size_t from = parse_index(line.tokens[0], line.number, "the source edge");
      const std::size_t to = parse_index(line.tokens[2], line.number, "the target edge");
      if (from >= source.num_edges()) throw ParseError(line.number, "source edge out of range");
      if (to >= target.num_edges()) throw ParseError(line.number, "target edge out of range");
      e.edge_map[from] = to;
      edge_done[from] = 1;
    } else {
      throw ParseError(line.number, "mapping line before any [vertices] or [edges] section");
    }
  }
  for (VertexId x = 0; x < source.num_vertices(); ++x) {
    if (!vertex_done[x]) throw ParseError(0, "no image for vertex '" + source.name(x) + "'");
  }
  for (EdgeId s = 0; s < source.num_edges(); ++s) {
    if (!edge_done[s]) throw ParseError(0, "no image for edge " + std::to_string(s));
  }
  return e;
}

void write_key_values(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  for (const auto& [key, value] : rows) out << key << '=' << value << '\n';
}

}  // namespace incol
