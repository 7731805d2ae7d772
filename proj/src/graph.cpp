#include "impsep/graph.hpp"

#include <algorithm>
#include <string>

#include "impsep/errors.hpp"

namespace impsep {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotASeparator: return "NotASeparator";
    case ErrorKind::NonMinimalSeparator: return "NonMinimalSeparator";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::SNotInNeighborhood: return "SNotInNeighborhood";
    case ErrorKind::AdjacentTerminals: return "AdjacentTerminals";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Graph Graph::from_edges(std::vector<VertexId> vertices, const std::vector<Edge>& edges,
                        const VertexSet& undeletable) {
  Graph g;
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw Error(ErrorKind::InvalidArgument, "duplicate vertex id");
  if (!vertices.empty() && vertices.front() < 0)
    throw Error(ErrorKind::InvalidArgument, "vertex ids must be non-negative");

  g.ids_ = std::move(vertices);
  g.index_.assign(g.ids_.empty() ? 0 : static_cast<std::size_t>(g.ids_.back()) + 1, -1);
  for (std::size_t i = 0; i < g.ids_.size(); ++i)
    g.index_[static_cast<std::size_t>(g.ids_[i])] = static_cast<int>(i);
  g.adj_.assign(g.ids_.size(), {});
  g.undeletable_.assign(g.ids_.size(), 0);

  for (const auto& [u, v] : edges) {
    const int iu = g.index_of(u);
    const int iv = g.index_of(v);
    if (iu < 0 || iv < 0)
      throw Error(ErrorKind::InvalidArgument,
                  "edge " + std::to_string(u) + "-" + std::to_string(v) + " names an unknown vertex");
    if (iu == iv) throw Error(ErrorKind::InvalidArgument, "self-loop at " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(iu)].push_back(iv);
    g.adj_[static_cast<std::size_t>(iv)].push_back(iu);
  }
  for (auto& row : g.adj_) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw Error(ErrorKind::InvalidArgument, "parallel edge");
  }
  g.edge_count_ = edges.size();

  for (VertexId v : undeletable) {
    const int i = g.index_of(v);
    if (i < 0) throw Error(ErrorKind::InvalidArgument, "undeletable vertex " + std::to_string(v) + " is unknown");
    g.undeletable_[static_cast<std::size_t>(i)] = 1;
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < adj_.size(); ++i)
    for (int j : adj_[i])
      if (static_cast<std::size_t>(j) > i) out.emplace_back(ids_[i], ids_[static_cast<std::size_t>(j)]);
  return out;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const int iu = index_of(u);
  const int iv = index_of(v);
  if (iu < 0 || iv < 0) return false;
  const auto& row = adj_[static_cast<std::size_t>(iu)];
  return std::binary_search(row.begin(), row.end(), iv);
}

VertexSet Graph::neighbors(VertexId v) const {
  const int i = index_of(v);
  if (i < 0) throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " is not in the graph");
  std::vector<VertexId> out;
  out.reserve(adj_[static_cast<std::size_t>(i)].size());
  for (int j : adj_[static_cast<std::size_t>(i)]) out.push_back(id_at(j));
  return VertexSet(std::move(out));
}

bool Graph::is_deletable(VertexId v) const {
  const int i = index_of(v);
  if (i < 0) throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " is not in the graph");
  return deletable_at(i);
}

VertexSet Graph::undeletable() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < ids_.size(); ++i)
    if (undeletable_[i]) out.push_back(ids_[i]);
  return VertexSet(std::move(out));
}

void Graph::require_vertices(const VertexSet& s, const char* what) const {
  for (VertexId v : s)
    if (!has_vertex(v))
      throw Error(ErrorKind::InvalidVertex,
                  std::string(what) + " contains " + std::to_string(v) + ", which is not a vertex");
}

std::vector<char> Graph::mask_of(const VertexSet& s) const {
  std::vector<char> mask(ids_.size(), 0);
  for (VertexId v : s) mask[static_cast<std::size_t>(index_of(v))] = 1;
  return mask;
}

VertexSet Graph::set_of_mask(const std::vector<char>& mask) const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(ids_[i]);
  return VertexSet(std::move(out));
}

}  // namespace impsep
