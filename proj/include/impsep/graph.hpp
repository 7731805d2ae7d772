#pragma once

#include <span>
#include <utility>
#include <vector>

#include "impsep/vertex_set.hpp"

namespace impsep {

using Edge = std::pair<VertexId, VertexId>;

/// Immutable undirected simple graph over stable, non-negative vertex
/// identifiers. Vertices flagged undeletable may never appear in a separator.
///
/// Internally every vertex also has a dense index (its rank among the ids);
/// index-level accessors exist for the algorithms in this library and map
/// back through id_at().
class Graph {
 public:
  Graph() = default;

  /// Throws Error(InvalidArgument) on negative or duplicate ids, self-loops,
  /// parallel edges, or edges / undeletable entries naming unknown vertices.
  static Graph from_edges(std::vector<VertexId> vertices, const std::vector<Edge>& edges,
                          const VertexSet& undeletable = {});

  [[nodiscard]] std::size_t order() const noexcept { return ids_.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }
  [[nodiscard]] const std::vector<VertexId>& vertices() const noexcept { return ids_; }
  [[nodiscard]] VertexSet vertex_set() const { return VertexSet(ids_); }
  [[nodiscard]] std::vector<Edge> edges() const;

  [[nodiscard]] bool has_vertex(VertexId v) const noexcept { return index_of(v) >= 0; }
  [[nodiscard]] bool adjacent(VertexId u, VertexId v) const;
  [[nodiscard]] VertexSet neighbors(VertexId v) const;
  [[nodiscard]] bool is_deletable(VertexId v) const;
  [[nodiscard]] VertexSet undeletable() const;
  [[nodiscard]] VertexId max_id() const noexcept { return ids_.empty() ? -1 : ids_.back(); }

  [[nodiscard]] int index_of(VertexId v) const noexcept {
    if (v < 0 || static_cast<std::size_t>(v) >= index_.size()) return -1;
    return index_[static_cast<std::size_t>(v)];
  }
  [[nodiscard]] VertexId id_at(int i) const { return ids_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] std::span<const int> adjacency(int i) const {
    return adj_[static_cast<std::size_t>(i)];
  }
  [[nodiscard]] bool deletable_at(int i) const { return !undeletable_[static_cast<std::size_t>(i)]; }

  /// Throws Error(InvalidVertex) unless every member of s is a vertex.
  void require_vertices(const VertexSet& s, const char* what) const;
  /// Dense membership mask of s; s must consist of vertices.
  [[nodiscard]] std::vector<char> mask_of(const VertexSet& s) const;
  [[nodiscard]] VertexSet set_of_mask(const std::vector<char>& mask) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.ids_ == b.ids_ && a.adj_ == b.adj_ && a.undeletable_ == b.undeletable_;
  }

 private:
  std::vector<VertexId> ids_;
  std::vector<int> index_;
  std::vector<std::vector<int>> adj_;
  std::vector<char> undeletable_;
  std::size_t edge_count_ = 0;
};

}  // namespace impsep
