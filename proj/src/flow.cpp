#include "impsep/flow.hpp"

#include <algorithm>
#include <limits>

#include "impsep/errors.hpp"
#include "impsep/graph_ops.hpp"

namespace impsep {

namespace {

// Vertex-split unit network. Vertex index i owns nodes 2i (in) and 2i+1
// (out); the super source and sink come last.
class SplitNetwork {
 public:
  SplitNetwork(const Graph& g, const std::vector<char>& in_x, const std::vector<char>& in_y)
      : n_(static_cast<int>(g.order())),
        infinite_(n_ + 1),
        out_arcs_(static_cast<std::size_t>(2 * n_ + 2)) {
    for (int v = 0; v < n_; ++v) {
      const auto uv = static_cast<std::size_t>(v);
      const bool unbounded = in_x[uv] || in_y[uv] || !g.deletable_at(v);
      add_arc(in_node(v), out_node(v), unbounded ? infinite_ : 1);
    }
    for (int v = 0; v < n_; ++v)
      for (int w : g.adjacency(v)) add_arc(out_node(v), in_node(w), infinite_);
    for (int v = 0; v < n_; ++v) {
      const auto uv = static_cast<std::size_t>(v);
      if (in_x[uv]) add_arc(source(), in_node(v), infinite_);
      if (in_y[uv]) add_arc(out_node(v), sink(), infinite_);
    }
  }

  [[nodiscard]] int source() const { return 2 * n_; }
  [[nodiscard]] int sink() const { return 2 * n_ + 1; }
  [[nodiscard]] static int in_node(int v) { return 2 * v; }
  [[nodiscard]] static int out_node(int v) { return 2 * v + 1; }

  // Pushes one unit along a node walk if every arc has residual capacity.
  bool push_walk(const std::vector<int>& nodes) {
    std::vector<int> arcs;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      const int a = find_arc(nodes[i], nodes[i + 1]);
      if (a < 0 || cap_[static_cast<std::size_t>(a)] <= 0) return false;
      arcs.push_back(a);
    }
    for (int a : arcs) augment(a, 1);
    return true;
  }

  // One breadth-first augmentation; returns false when the sink is cut off.
  bool augment_once() {
    std::vector<int> via(out_arcs_.size(), -1);
    std::vector<char> seen(out_arcs_.size(), 0);
    std::vector<int> queue{source()};
    seen[static_cast<std::size_t>(source())] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int a : out_arcs_[static_cast<std::size_t>(u)]) {
        const int w = to_[static_cast<std::size_t>(a)];
        if (cap_[static_cast<std::size_t>(a)] <= 0 || seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        via[static_cast<std::size_t>(w)] = a;
        if (w == sink()) {
          for (int node = sink(); node != source();) {
            const int arc = via[static_cast<std::size_t>(node)];
            augment(arc, 1);
            node = to_[static_cast<std::size_t>(arc ^ 1)];
          }
          return true;
        }
        queue.push_back(w);
      }
    }
    return false;
  }

  [[nodiscard]] std::vector<char> residual_reach() const {
    std::vector<char> seen(out_arcs_.size(), 0);
    std::vector<int> queue{source()};
    seen[static_cast<std::size_t>(source())] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int a : out_arcs_[static_cast<std::size_t>(queue[head])]) {
        const int w = to_[static_cast<std::size_t>(a)];
        if (cap_[static_cast<std::size_t>(a)] > 0 && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    return seen;
  }

  // Splits the current flow into source-sink node walks; circulations that
  // show up on the way (possible through unbounded nodes) are discarded.
  [[nodiscard]] std::vector<std::vector<int>> decompose() const {
    std::vector<int> flow(to_.size(), 0);
    for (std::size_t a = 0; a < to_.size(); a += 2) flow[a] = cap_[a + 1];

    std::vector<std::vector<int>> walks;
    std::vector<int> position(out_arcs_.size(), -1);
    while (true) {
      std::vector<int> nodes{source()};
      std::vector<int> arcs;
      position[static_cast<std::size_t>(source())] = 0;
      bool reached = false;
      while (true) {
        const int u = nodes.back();
        if (u == sink()) {
          reached = true;
          break;
        }
        int next_arc = -1;
        for (int a : out_arcs_[static_cast<std::size_t>(u)])
          if ((a & 1) == 0 && flow[static_cast<std::size_t>(a)] > 0) {
            next_arc = a;
            break;
          }
        if (next_arc < 0) break;
        const int w = to_[static_cast<std::size_t>(next_arc)];
        const int seen_at = position[static_cast<std::size_t>(w)];
        if (seen_at >= 0) {
          flow[static_cast<std::size_t>(next_arc)] -= 1;
          for (std::size_t i = static_cast<std::size_t>(seen_at); i < arcs.size(); ++i)
            flow[static_cast<std::size_t>(arcs[i])] -= 1;
          for (std::size_t i = static_cast<std::size_t>(seen_at) + 1; i < nodes.size(); ++i)
            position[static_cast<std::size_t>(nodes[i])] = -1;
          nodes.resize(static_cast<std::size_t>(seen_at) + 1);
          arcs.resize(static_cast<std::size_t>(seen_at));
          continue;
        }
        position[static_cast<std::size_t>(w)] = static_cast<int>(nodes.size());
        nodes.push_back(w);
        arcs.push_back(next_arc);
      }
      for (int node : nodes) position[static_cast<std::size_t>(node)] = -1;
      if (!reached) break;
      for (int a : arcs) flow[static_cast<std::size_t>(a)] -= 1;
      walks.push_back(std::move(nodes));
    }
    return walks;
  }

 private:
  void add_arc(int from, int to, int cap) {
    out_arcs_[static_cast<std::size_t>(from)].push_back(static_cast<int>(to_.size()));
    to_.push_back(to);
    cap_.push_back(cap);
    out_arcs_[static_cast<std::size_t>(to)].push_back(static_cast<int>(to_.size()));
    to_.push_back(from);
    cap_.push_back(0);
  }

  [[nodiscard]] int find_arc(int from, int to) const {
    for (int a : out_arcs_[static_cast<std::size_t>(from)])
      if ((a & 1) == 0 && to_[static_cast<std::size_t>(a)] == to) return a;
    return -1;
  }

  void augment(int arc, int amount) {
    cap_[static_cast<std::size_t>(arc)] -= amount;
    cap_[static_cast<std::size_t>(arc ^ 1)] += amount;
  }

  int n_;
  int infinite_;
  std::vector<std::vector<int>> out_arcs_;
  std::vector<int> to_;
  std::vector<int> cap_;
};

// Re-roots a path from an earlier graph at X of g: the prefix before the
// last vertex that touches X is replaced by one X neighbor. Returns an empty
// vector if the path does not survive.
std::vector<VertexId> reroot(const Graph& g, const VertexSet& x, const VertexSet& y,
                             const std::vector<VertexId>& path) {
  std::size_t anchor = path.size();
  VertexId root = -1;
  for (std::size_t i = path.size(); i-- > 0;) {
    const VertexId v = path[i];
    if (!g.has_vertex(v) || y.contains(v)) continue;
    if (x.contains(v)) {
      anchor = i;
      root = v;
      break;
    }
    const int iv = g.index_of(v);
    for (int w : g.adjacency(iv))
      if (x.contains(g.id_at(w))) {
        root = g.id_at(w);
        break;
      }
    if (root >= 0) {
      anchor = i;
      break;
    }
  }
  if (root < 0) return {};

  std::vector<VertexId> out{root};
  for (std::size_t i = anchor; i < path.size(); ++i) {
    if (path[i] == root) continue;
    const VertexId v = path[i];
    if (!g.has_vertex(v) || x.contains(v) || !g.adjacent(out.back(), v)) return {};
    out.push_back(v);
    if (y.contains(v)) return out;
  }
  return {};
}

}  // namespace

namespace detail {

void validate_terminal_sets(const Graph& g, const VertexSet& x, const VertexSet& y) {
  g.require_vertices(x, "X");
  g.require_vertices(y, "Y");
  if (x.empty() || y.empty()) throw Error(ErrorKind::InvalidArgument, "X and Y must be non-empty");
  if (x.intersects(y)) throw Error(ErrorKind::InvalidArgument, "X and Y overlap");
}

std::optional<FlowOutcome> solve_flow(const Graph& g, const VertexSet& x, const VertexSet& y,
                                      const PathSystem* seed) {
  validate_terminal_sets(g, x, y);
  if (!separator_exists(g, x, y)) return std::nullopt;

  const auto in_x = g.mask_of(x);
  const auto in_y = g.mask_of(y);
  SplitNetwork net(g, in_x, in_y);
  FlowOutcome out;

  auto walk_of = [&](const std::vector<VertexId>& path) {
    std::vector<int> nodes{net.source()};
    for (VertexId v : path) {
      const int i = g.index_of(v);
      nodes.push_back(SplitNetwork::in_node(i));
      nodes.push_back(SplitNetwork::out_node(i));
    }
    nodes.push_back(net.sink());
    return nodes;
  };
  if (seed != nullptr)
    for (const auto& path : seed->paths) {
      const auto rerooted = reroot(g, x, y, path);
      if (!rerooted.empty() && net.push_walk(walk_of(rerooted))) ++out.seeded_paths;
    }

  while (net.augment_once()) {
  }

  for (const auto& nodes : net.decompose()) {
    std::vector<VertexId> walk;
    for (std::size_t i = 1; i + 1 < nodes.size(); i += 2) walk.push_back(g.id_at(nodes[i] / 2));
    // Keep the stretch from the last X vertex before the first Y vertex.
    std::size_t first_y = 0;
    while (!in_y[static_cast<std::size_t>(g.index_of(walk[first_y]))]) ++first_y;
    std::size_t last_x = first_y;
    while (!in_x[static_cast<std::size_t>(g.index_of(walk[last_x]))]) --last_x;
    out.paths.paths.emplace_back(walk.begin() + static_cast<std::ptrdiff_t>(last_x),
                                 walk.begin() + static_cast<std::ptrdiff_t>(first_y) + 1);
  }

  const auto reach = net.residual_reach();
  out.in_reached.resize(g.order());
  out.out_reached.resize(g.order());
  for (int v = 0; v < static_cast<int>(g.order()); ++v) {
    out.in_reached[static_cast<std::size_t>(v)] = reach[static_cast<std::size_t>(SplitNetwork::in_node(v))];
    out.out_reached[static_cast<std::size_t>(v)] = reach[static_cast<std::size_t>(SplitNetwork::out_node(v))];
  }
  return out;
}

}  // namespace detail

bool separator_exists(const Graph& g, const VertexSet& x, const VertexSet& y) {
  detail::validate_terminal_sets(g, x, y);
  const auto in_x = g.mask_of(x);
  const auto in_y = g.mask_of(y);
  std::vector<char> cuttable(g.order(), 0);
  for (int v = 0; v < static_cast<int>(g.order()); ++v) {
    const auto uv = static_cast<std::size_t>(v);
    cuttable[uv] = !in_x[uv] && !in_y[uv] && g.deletable_at(v);
  }
  const auto seen = detail::reach_mask(g, in_x, cuttable);
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (seen[v] && in_y[v]) return false;
  return true;
}

std::optional<PathSystem> max_disjoint_paths(const Graph& g, const VertexSet& x, const VertexSet& y,
                                             const PathSystem* seed) {
  auto outcome = detail::solve_flow(g, x, y, seed);
  if (!outcome) return std::nullopt;
  return std::move(outcome->paths);
}

}  // namespace impsep
