#include "impsep/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "impsep/errors.hpp"

namespace impsep {

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long number(std::string_view token, std::size_t line) {
  long long value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  return value;
}

}  // namespace

GraphFile parse_graph_file(std::string_view text) {
  std::optional<long long> n;
  long long declared_edges = 0;
  std::size_t header_line = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen_edges;
  GraphFile file;
  std::size_t x_line = 0;
  std::size_t y_line = 0;

  auto vertex = [&](std::string_view token, std::size_t line) {
    const long long v = number(token, line);
    if (v < 1 || v > *n)
      throw ParseError(line, "vertex id " + std::to_string(v) + " out of range 1.." + std::to_string(*n));
    return static_cast<VertexId>(v);
  };
  auto id_list = [&](const std::vector<std::string_view>& tok, std::size_t line, const char* what) {
    if (tok.size() < 2) throw ParseError(line, std::string(what) + " line lists no vertices");
    std::vector<VertexId> ids;
    for (std::size_t i = 1; i < tok.size(); ++i) ids.push_back(vertex(tok[i], line));
    VertexSet set(ids);
    if (set.size() != ids.size()) throw ParseError(line, std::string("duplicate id in ") + what + " line");
    return set;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tok = tokens_of(line);
    if (tok.empty() || tok[0] == "c") continue;

    if (tok[0] == "p") {
      if (n) throw ParseError(line_no, "second header line");
      if (tok.size() != 4 || tok[1] != "sep") throw ParseError(line_no, "malformed header, expected 'p sep <n> <m>'");
      n = number(tok[2], line_no);
      declared_edges = number(tok[3], line_no);
      if (*n < 1 || declared_edges < 0) throw ParseError(line_no, "malformed header, bad vertex or edge count");
      header_line = line_no;
      continue;
    }
    if (!n) throw ParseError(line_no, "missing header 'p sep <n> <m>' before data");

    if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError(line_no, "edge line needs exactly two ids");
      const VertexId u = vertex(tok[1], line_no);
      const VertexId v = vertex(tok[2], line_no);
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      const Edge key{std::min(u, v), std::max(u, v)};
      if (!seen_edges.insert(key).second)
        throw ParseError(line_no, "duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second));
      edges.push_back(key);
    } else if (tok[0] == "x" || tok[0] == "y" || tok[0] == "t") {
      auto& slot = tok[0] == "x" ? file.x : tok[0] == "y" ? file.y : file.terminals;
      if (slot) throw ParseError(line_no, "repeated '" + std::string(tok[0]) + "' line");
      slot = id_list(tok, line_no, tok[0] == "x" ? "x" : tok[0] == "y" ? "y" : "t");
      if (tok[0] == "x") x_line = line_no;
      if (tok[0] == "y") y_line = line_no;
      if (tok[0] == "t" && slot->size() < 2) throw ParseError(line_no, "t line needs at least two distinct terminals");
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }

  if (!n) throw ParseError(0, "missing header 'p sep <n> <m>'");
  if (static_cast<long long>(edges.size()) != declared_edges)
    throw ParseError(header_line, "header declares " + std::to_string(declared_edges) + " edges, file has " +
                                      std::to_string(edges.size()));
  if (file.x && file.y && file.x->intersects(*file.y))
    throw ParseError(std::max(x_line, y_line), "x and y overlap");

  std::vector<VertexId> vertices;
  for (long long v = 1; v <= *n; ++v) vertices.push_back(static_cast<VertexId>(v));
  file.graph = Graph::from_edges(std::move(vertices), edges);
  return file;
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_file(buffer.str());
}

std::string format_graph_file(const GraphFile& file) {
  std::ostringstream out;
  const auto edges = file.graph.edges();
  out << "p sep " << file.graph.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << "e " << u << ' ' << v << '\n';
  auto list = [&](char tag, const std::optional<VertexSet>& s) {
    if (!s) return;
    out << tag;
    for (VertexId v : *s) out << ' ' << v;
    out << '\n';
  };
  list('x', file.x);
  list('y', file.y);
  list('t', file.terminals);
  return out.str();
}

}  // namespace impsep
