#include "impsep/separator.hpp"

#include <stdexcept>
#include <string>

#include "impsep/errors.hpp"
#include "impsep/graph_ops.hpp"

namespace impsep {

const char* to_string(Order order) noexcept {
  switch (order) {
    case Order::Less: return "Less";
    case Order::Greater: return "Greater";
    case Order::Equal: return "Equal";
    case Order::Incomparable: return "Incomparable";
  }
  return "Unknown";
}

Separator Separator::certify(const Graph& g, const VertexSet& x, const VertexSet& y, VertexSet cut) {
  detail::validate_terminal_sets(g, x, y);
  g.require_vertices(cut, "separator");
  if (cut.intersects(x | y)) throw Error(ErrorKind::NotASeparator, "separator meets X or Y");
  for (VertexId v : cut)
    if (!g.is_deletable(v))
      throw Error(ErrorKind::NotASeparator, "separator contains undeletable vertex " + std::to_string(v));
  VertexSet x_side = reach_complement(g, y, cut);
  if (!x.is_subset_of(x_side)) throw Error(ErrorKind::NotASeparator, "an X-Y path avoids the separator");

  Separator s;
  s.y_side_ = g.vertex_set() - x_side - cut;
  s.x_side_ = std::move(x_side);
  s.cut_ = std::move(cut);
  return s;
}

std::optional<Separator> min_separator(const Graph& g, const VertexSet& x, const VertexSet& y) {
  const auto flow = detail::solve_flow(g, x, y, nullptr);
  if (!flow) return std::nullopt;
  std::vector<char> in_cut(g.order(), 0);
  for (std::size_t v = 0; v < g.order(); ++v) in_cut[v] = flow->in_reached[v] && !flow->out_reached[v];
  return Separator::certify(g, x, y, g.set_of_mask(in_cut));
}

bool is_separator(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& k) {
  detail::validate_terminal_sets(g, x, y);
  g.require_vertices(k, "candidate separator");
  if (k.intersects(x | y)) throw Error(ErrorKind::InvalidArgument, "candidate separator meets X or Y");
  for (VertexId v : k)
    if (!g.is_deletable(v)) return false;
  const auto seen = detail::reach_mask(g, g.mask_of(x), g.mask_of(k));
  for (VertexId v : y)
    if (seen[static_cast<std::size_t>(g.index_of(v))]) return false;
  return true;
}

bool is_minimal(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& k) {
  if (!is_separator(g, x, y, k)) return false;
  const auto blocked = g.mask_of(k);
  const auto from_x = detail::reach_mask(g, g.mask_of(x), blocked);
  const auto from_y = detail::reach_mask(g, g.mask_of(y), blocked);
  for (VertexId v : k) {
    bool touches_x = false;
    bool touches_y = false;
    for (int w : g.adjacency(g.index_of(v))) {
      touches_x = touches_x || from_x[static_cast<std::size_t>(w)];
      touches_y = touches_y || from_y[static_cast<std::size_t>(w)];
    }
    if (!touches_x || !touches_y) return false;
  }
  return true;
}

namespace {

void require_minimal(const Graph& g, const VertexSet& x, const VertexSet& y, const Separator& k) {
  if (!is_minimal(g, x, y, k.cut()))
    throw Error(ErrorKind::NonMinimalSeparator, "separator is not minimal");
}

}  // namespace

Order compare(const Graph& g, const VertexSet& x, const VertexSet& y, const Separator& k1,
              const Separator& k2) {
  require_minimal(g, x, y, k1);
  require_minimal(g, x, y, k2);
  if (k1.cut() == k2.cut()) return Order::Equal;
  const bool below = (k1.cut() - k2.cut()).is_subset_of(k2.x_side());
  const bool above = (k2.cut() - k1.cut()).is_subset_of(k1.x_side());
  if (below && above) return Order::Equal;
  if (below) return Order::Less;
  if (above) return Order::Greater;
  return Order::Incomparable;
}

Separator top(const Graph& g, const VertexSet& x, const VertexSet& y, const Separator& k1,
              const Separator& k2) {
  require_minimal(g, x, y, k1);
  require_minimal(g, x, y, k2);
  const VertexSet common = k1.cut() & k2.cut();
  return Separator::certify(g, x, y, (k1.cut() & k2.x_side()) | (k2.cut() & k1.x_side()) | common);
}

Separator bottom(const Graph& g, const VertexSet& x, const VertexSet& y, const Separator& k1,
                 const Separator& k2) {
  require_minimal(g, x, y, k1);
  require_minimal(g, x, y, k2);
  const VertexSet common = k1.cut() & k2.cut();
  const VertexSet k1_bottom = k1.cut() - k2.x_side() - common;
  const VertexSet k2_bottom = k2.cut() - k1.x_side() - common;
  return Separator::certify(g, x, y, k1_bottom | k2_bottom | common);
}

bool is_important(const Graph& g, const VertexSet& x, const VertexSet& y, const Separator& k) {
  require_minimal(g, x, y, k);
  const Graph projected = project(g, x, y, k.cut());
  const auto smallest = smallest_important_separator(projected, x, y);
  return smallest && smallest->size() == k.size() && smallest->cut() == k.cut();
}

namespace detail {

namespace {

// The torso the frontier search runs on, with every path rewritten over its
// vertices (dense indices of `graph`).
struct FrontierGraph {
  Graph graph;
  std::vector<std::vector<int>> paths;
  std::vector<VertexId> original;  // graph index -> vertex of the input, -1 for X/Y/twins
};

FrontierGraph build_frontier_graph(const Graph& g, const VertexSet& x, const VertexSet& y,
                                   const PathSystem& paths) {
  VertexId next = g.max_id() + 1;
  const VertexId x_label = next++;
  const VertexId y_label = next++;
  Graph contracted = contract_set(contract_set(g, x, x_label), y, y_label);

  // Twins for undeletable vertices that carry paths.
  std::vector<int> usage(static_cast<std::size_t>(next), 0);
  for (const auto& path : paths.paths)
    for (std::size_t i = 1; i + 1 < path.size(); ++i) ++usage[static_cast<std::size_t>(path[i])];
  std::vector<std::vector<VertexId>> twins(static_cast<std::size_t>(next));
  std::vector<VertexId> vertices = contracted.vertices();
  for (VertexId v : g.vertices())
    if (!g.is_deletable(v) && !x.contains(v) && !y.contains(v))
      for (int c = 0; c < usage[static_cast<std::size_t>(v)]; ++c) {
        twins[static_cast<std::size_t>(v)].push_back(next);
        vertices.push_back(next++);
      }

  std::vector<Edge> edges;
  auto reps = [&](VertexId v) {
    std::vector<VertexId> out{v};
    if (static_cast<std::size_t>(v) < twins.size())
      out.insert(out.end(), twins[static_cast<std::size_t>(v)].begin(), twins[static_cast<std::size_t>(v)].end());
    return out;
  };
  for (const auto& [u, v] : contracted.edges())
    for (VertexId a : reps(u))
      for (VertexId b : reps(v)) edges.emplace_back(a, b);
  const Graph expanded = Graph::from_edges(std::move(vertices), edges);

  std::vector<std::vector<VertexId>> rewritten;
  std::vector<std::size_t> handed_out(twins.size(), 0);
  std::vector<VertexId> core{x_label, y_label};
  for (const auto& path : paths.paths) {
    std::vector<VertexId> p{x_label};
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      const auto v = static_cast<std::size_t>(path[i]);
      p.push_back(twins[v].empty() ? path[i] : twins[v][handed_out[v]++]);
    }
    p.push_back(y_label);
    core.insert(core.end(), p.begin() + 1, p.end() - 1);
    rewritten.push_back(std::move(p));
  }

  FrontierGraph out{torso(expanded, VertexSet(std::move(core))), {}, {}};
  out.original.assign(out.graph.order(), -1);
  for (int i = 0; i < static_cast<int>(out.graph.order()); ++i) {
    const VertexId id = out.graph.id_at(i);
    if (g.has_vertex(id) && !x.contains(id) && !y.contains(id)) out.original[static_cast<std::size_t>(i)] = id;
  }
  for (const auto& p : rewritten) {
    std::vector<int> indices;
    indices.reserve(p.size());
    for (VertexId v : p) indices.push_back(out.graph.index_of(v));
    out.paths.push_back(std::move(indices));
  }
  return out;
}

VertexSet frontier_search(const FrontierGraph& fg) {
  const Graph& h = fg.graph;
  const std::size_t n = h.order();
  std::vector<char> frontier(n, 0);
  frontier[static_cast<std::size_t>(fg.paths.front().back())] = 1;

  while (true) {
    std::vector<char> touches(n, 0);
    for (std::size_t v = 0; v < n; ++v)
      if (frontier[v])
        for (int w : h.adjacency(static_cast<int>(v))) touches[static_cast<std::size_t>(w)] = 1;

    bool settled = true;
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    for (const auto& p : fg.paths) {
      std::size_t last_outside = p.size() - 1;
      while (frontier[static_cast<std::size_t>(p[last_outside])]) --last_outside;
      std::size_t first_touching = 0;
      while (!touches[static_cast<std::size_t>(p[first_touching])]) ++first_touching;
      if (first_touching == 0 || first_touching > last_outside)
        throw std::logic_error("frontier search reached the X end of a path");
      spans.emplace_back(first_touching, last_outside);
      settled = settled && first_touching == last_outside;
    }
    if (settled) {
      std::vector<VertexId> cut;
      for (std::size_t j = 0; j < fg.paths.size(); ++j) {
        const VertexId v = fg.original[static_cast<std::size_t>(fg.paths[j][spans[j].first])];
        if (v < 0) throw std::logic_error("frontier search settled on an undeletable twin");
        cut.push_back(v);
      }
      return VertexSet(std::move(cut));
    }
    for (std::size_t j = 0; j < fg.paths.size(); ++j)
      for (std::size_t i = spans[j].first + 1; i <= spans[j].second; ++i)
        frontier[static_cast<std::size_t>(fg.paths[j][i])] = 1;
  }
}

}  // namespace

ImportantResult smallest_important(const Graph& g, const VertexSet& x, const VertexSet& y,
                                   const PathSystem* seed) {
  auto flow = solve_flow(g, x, y, seed);
  if (!flow) return {};
  ImportantResult out;
  out.seeded_paths = flow->seeded_paths;
  if (flow->paths.size() == 0) {
    out.separator = Separator::certify(g, x, y, {});
  } else {
    const FrontierGraph fg = build_frontier_graph(g, x, y, flow->paths);
    VertexSet cut = frontier_search(fg);
    if (cut.size() != flow->paths.size()) throw std::logic_error("frontier search returned a non-minimum cut");
    out.separator = Separator::certify(g, x, y, std::move(cut));
  }
  out.paths = std::move(flow->paths);
  return out;
}

}  // namespace detail

std::optional<Separator> smallest_important_separator(const Graph& g, const VertexSet& x,
                                                      const VertexSet& y) {
  return detail::smallest_important(g, x, y, nullptr).separator;
}

std::optional<Normalized> normalize(const Graph& g, const VertexSet& x, const VertexSet& y) {
  auto smallest = smallest_important_separator(g, x, y);
  if (!smallest) return std::nullopt;
  Graph projected = project(g, x, y, smallest->cut());
  return Normalized{std::move(projected), std::move(*smallest)};
}

}  // namespace impsep
