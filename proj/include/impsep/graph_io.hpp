#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "impsep/graph.hpp"

namespace impsep {

/// In-memory form of the text graph format:
///
///   c <comment>                 (anywhere, ignored)
///   p sep <n> <m>               header, exactly once, first
///   e <u> <v>                   m edge lines, 1 <= u,v <= n, u != v
///   x <ids...>                  optional source set
///   y <ids...>                  optional target set
///   t <ids...>                  optional terminals, at least two
///
/// Vertices are the ids 1..n; all of them are deletable.
struct GraphFile {
  Graph graph;
  std::optional<VertexSet> x;
  std::optional<VertexSet> y;
  std::optional<VertexSet> terminals;
};

/// Throws ParseError naming the offending line.
GraphFile parse_graph_file(std::string_view text);
GraphFile read_graph_file(const std::string& path);

/// Inverse of parse_graph_file for graphs on vertices 1..n.
std::string format_graph_file(const GraphFile& file);

}  // namespace impsep
