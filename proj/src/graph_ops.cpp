#include "impsep/graph_ops.hpp"

#include <string>

#include "impsep/errors.hpp"

namespace impsep {

namespace detail {

std::vector<char> reach_mask(const Graph& g, const std::vector<char>& seeds,
                             const std::vector<char>& blocked) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<int> queue;
  queue.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    if (seeds[i] && !blocked[i]) {
      seen[i] = 1;
      queue.push_back(static_cast<int>(i));
    }
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int w : g.adjacency(queue[head])) {
      const auto uw = static_cast<std::size_t>(w);
      if (!seen[uw] && !blocked[uw]) {
        seen[uw] = 1;
        queue.push_back(w);
      }
    }
  return seen;
}

}  // namespace detail

VertexSet neighborhood(const Graph& g, const VertexSet& c) {
  g.require_vertices(c, "neighborhood set");
  const auto in_c = g.mask_of(c);
  std::vector<char> out(g.order(), 0);
  for (VertexId v : c)
    for (int w : g.adjacency(g.index_of(v)))
      if (!in_c[static_cast<std::size_t>(w)]) out[static_cast<std::size_t>(w)] = 1;
  return g.set_of_mask(out);
}

VertexSet reach_complement(const Graph& g, const VertexSet& a, const VertexSet& b) {
  g.require_vertices(a, "source set");
  g.require_vertices(b, "blocking set");
  if (a.intersects(b)) throw Error(ErrorKind::InvalidArgument, "reach_complement: source and blocking sets overlap");
  const auto blocked = g.mask_of(b);
  auto seen = detail::reach_mask(g, g.mask_of(a), blocked);
  for (std::size_t i = 0; i < seen.size(); ++i) seen[i] = !seen[i] && !blocked[i];
  return g.set_of_mask(seen);
}

VertexSet reachable(const Graph& g, const VertexSet& a, const VertexSet& b) {
  g.require_vertices(a, "source set");
  g.require_vertices(b, "blocking set");
  return g.set_of_mask(detail::reach_mask(g, g.mask_of(a), g.mask_of(b)));
}

Graph contract_set(const Graph& g, const VertexSet& s, VertexId label) {
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "contract_set: empty set");
  g.require_vertices(s, "contracted set");
  if (g.has_vertex(label) && !s.contains(label))
    throw Error(ErrorKind::InvalidArgument, "contract_set: label " + std::to_string(label) + " already names another vertex");

  const auto in_s = g.mask_of(s);
  std::vector<VertexId> vertices;
  std::vector<VertexId> undeletable;
  bool label_undeletable = false;
  for (int i = 0; i < static_cast<int>(g.order()); ++i) {
    if (in_s[static_cast<std::size_t>(i)]) {
      label_undeletable = label_undeletable || !g.deletable_at(i);
      continue;
    }
    vertices.push_back(g.id_at(i));
    if (!g.deletable_at(i)) undeletable.push_back(g.id_at(i));
  }
  vertices.push_back(label);
  if (label_undeletable) undeletable.push_back(label);

  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    const bool su = s.contains(u);
    const bool sv = s.contains(v);
    if (!su && !sv) edges.emplace_back(u, v);
  }
  for (VertexId w : neighborhood(g, s)) edges.emplace_back(label, w);
  return Graph::from_edges(std::move(vertices), edges, VertexSet(std::move(undeletable)));
}

Graph torso(const Graph& g, const VertexSet& s) {
  g.require_vertices(s, "torso set");
  const std::size_t n = g.order();
  const auto in_s = g.mask_of(s);

  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (s.contains(u) && s.contains(v)) edges.emplace_back(u, v);

  // Each component of G - s makes its attachment points pairwise adjacent.
  std::vector<char> done(n, 0);
  std::vector<std::vector<char>> extra(n, std::vector<char>(n, 0));
  std::vector<int> queue;
  std::vector<int> attach;
  std::vector<char> attached(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (in_s[root] || done[root]) continue;
    queue.assign(1, static_cast<int>(root));
    done[root] = 1;
    attach.clear();
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int w : g.adjacency(queue[head])) {
        const auto uw = static_cast<std::size_t>(w);
        if (in_s[uw]) {
          if (!attached[uw]) {
            attached[uw] = 1;
            attach.push_back(w);
          }
        } else if (!done[uw]) {
          done[uw] = 1;
          queue.push_back(w);
        }
      }
    for (std::size_t a = 0; a < attach.size(); ++a) {
      attached[static_cast<std::size_t>(attach[a])] = 0;
      for (std::size_t b = a + 1; b < attach.size(); ++b) {
        auto u = static_cast<std::size_t>(attach[a]);
        auto v = static_cast<std::size_t>(attach[b]);
        if (u > v) std::swap(u, v);
        extra[u][v] = 1;
      }
    }
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (extra[u][v] && !g.adjacent(g.id_at(static_cast<int>(u)), g.id_at(static_cast<int>(v))))
        edges.emplace_back(g.id_at(static_cast<int>(u)), g.id_at(static_cast<int>(v)));

  std::vector<VertexId> vertices(s.begin(), s.end());
  return Graph::from_edges(std::move(vertices), edges, g.undeletable() & s);
}

Graph project(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& k) {
  g.require_vertices(x, "X");
  g.require_vertices(y, "Y");
  g.require_vertices(k, "separator");
  if (k.intersects(x | y))
    throw Error(ErrorKind::NotASeparator, "project: separator meets X or Y");
  const VertexSet x_side = reach_complement(g, y, k);
  if (!x.is_subset_of(x_side))
    throw Error(ErrorKind::NotASeparator, "project: K does not separate X from Y");

  const VertexSet removed = x_side - x;
  std::vector<VertexId> vertices;
  for (VertexId v : g.vertices())
    if (!removed.contains(v)) vertices.push_back(v);

  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (!removed.contains(u) && !removed.contains(v)) edges.emplace_back(u, v);
  for (VertexId a : x)
    for (VertexId b : k)
      if (!g.adjacent(a, b)) edges.emplace_back(a, b);
  return Graph::from_edges(std::move(vertices), edges, g.undeletable() - removed);
}

Graph make_undeletable(const Graph& g, const VertexSet& s) {
  g.require_vertices(s, "undeletable set");
  if (s.empty()) return g;
  return Graph::from_edges(g.vertices(), g.edges(), g.undeletable() | s);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  g.require_vertices(keep, "kept set");
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (keep.contains(u) && keep.contains(v)) edges.emplace_back(u, v);
  return Graph::from_edges(keep.ids(), edges, g.undeletable() & keep);
}

Graph delete_vertices(const Graph& g, const VertexSet& s) {
  g.require_vertices(s, "deleted set");
  return induced_subgraph(g, g.vertex_set() - s);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<char> done(n, 0);
  const std::vector<char> none(n, 0);
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    std::vector<char> seed(n, 0);
    seed[i] = 1;
    auto comp = detail::reach_mask(g, seed, none);
    for (std::size_t j = 0; j < n; ++j) done[j] = done[j] || comp[j];
    out.push_back(g.set_of_mask(comp));
  }
  return out;
}

}  // namespace impsep
