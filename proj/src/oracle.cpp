#include "impsep/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "impsep/errors.hpp"

namespace impsep::oracle {

namespace {

using Mask = std::uint64_t;

constexpr std::size_t kMaxVertices = 64;
constexpr std::size_t kMaxCandidates = 26;

Mask bit(std::size_t i) { return Mask{1} << i; }

struct BitGraph {
  explicit BitGraph(const Graph& g) : graph(&g), n(g.order()), adj(n, 0) {
    if (n > kMaxVertices) throw Error(ErrorKind::InvalidArgument, "oracle: graph has more than 64 vertices");
    for (const auto& [u, v] : g.edges()) {
      const auto iu = static_cast<std::size_t>(g.index_of(u));
      const auto iv = static_cast<std::size_t>(g.index_of(v));
      adj[iu] |= bit(iv);
      adj[iv] |= bit(iu);
    }
    for (std::size_t i = 0; i < n; ++i)
      if (g.deletable_at(static_cast<int>(i))) deletable |= bit(i);
    all = n == 64 ? ~Mask{0} : bit(n) - 1;
  }

  [[nodiscard]] Mask mask(const VertexSet& s) const {
    Mask m = 0;
    for (VertexId v : s) {
      const int i = graph->index_of(v);
      if (i < 0) throw Error(ErrorKind::InvalidVertex, "oracle: vertex " + std::to_string(v) + " is not in the graph");
      m |= bit(static_cast<std::size_t>(i));
    }
    return m;
  }

  [[nodiscard]] VertexSet set(Mask m) const {
    std::vector<VertexId> out;
    for (; m != 0; m &= m - 1) out.push_back(graph->id_at(std::countr_zero(m)));
    return VertexSet(std::move(out));
  }

  // Vertices reachable from seeds in G - blocked.
  [[nodiscard]] Mask reach(Mask seeds, Mask blocked) const {
    Mask seen = seeds & ~blocked;
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= ~blocked & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  [[nodiscard]] Mask not_reachable(Mask from, Mask blocked) const {
    return all & ~reach(from, blocked) & ~blocked;
  }

  [[nodiscard]] bool separates(Mask x, Mask y, Mask k) const { return (reach(x, k) & y) == 0; }

  [[nodiscard]] bool minimal(Mask x, Mask y, Mask k) const {
    if (!separates(x, y, k)) return false;
    for (Mask r = k; r != 0; r &= r - 1)
      if (separates(x, y, k & ~(r & -r))) return false;
    return true;
  }

  const Graph* graph;
  std::size_t n;
  std::vector<Mask> adj;
  Mask deletable = 0;
  Mask all = 0;
};

// Calls visit(mask) for every subset of `pool` with at most max_size
// members, in order of increasing size. Stops early if visit returns false.
template <typename Visit>
void for_each_subset(Mask pool, std::size_t max_size, Visit&& visit) {
  std::vector<std::size_t> members;
  for (Mask p = pool; p != 0; p &= p - 1) members.push_back(static_cast<std::size_t>(std::countr_zero(p)));
  if (members.size() > kMaxCandidates)
    throw Error(ErrorKind::InvalidArgument, "oracle: too many candidate vertices");
  const std::size_t m = members.size();
  for (std::size_t size = 0; size <= std::min(max_size, m); ++size) {
    // Subsets of {0..m-1} of this size, via Gosper's hack on compact masks.
    Mask compact = size == 0 ? 0 : (Mask{1} << size) - 1;
    const Mask limit = Mask{1} << m;
    while (compact < limit) {
      Mask real = 0;
      for (Mask c = compact; c != 0; c &= c - 1) real |= bit(members[static_cast<std::size_t>(std::countr_zero(c))]);
      if (!visit(real)) return;
      if (compact == 0) break;
      const Mask low = compact & -compact;
      const Mask ripple = compact + low;
      compact = (((ripple ^ compact) >> 2) / low) | ripple;
    }
  }
}

void check_sets(const BitGraph& bg, Mask x, Mask y) {
  if (x == 0 || y == 0) throw Error(ErrorKind::InvalidArgument, "oracle: X and Y must be non-empty");
  if ((x & y) != 0) throw Error(ErrorKind::InvalidArgument, "oracle: X and Y overlap");
  (void)bg;
}

struct SeparatorFamily {
  std::vector<Mask> cuts;
  std::vector<Mask> x_sides;  // NR(G,Y,K)
};

SeparatorFamily all_separators(const BitGraph& bg, Mask x, Mask y, Mask forbidden, std::size_t max_size) {
  SeparatorFamily family;
  const Mask pool = bg.deletable & ~x & ~y & ~forbidden;
  for_each_subset(pool, max_size, [&](Mask k) {
    if (bg.separates(x, y, k)) {
      family.cuts.push_back(k);
      family.x_sides.push_back(bg.not_reachable(y, k));
    }
    return true;
  });
  return family;
}

std::vector<VertexSet> sorted_sets(const BitGraph& bg, const std::vector<Mask>& masks) {
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(bg.set(m));
  std::sort(out.begin(), out.end(), size_then_lex_less);
  return out;
}

// Importance of family member i against every separator in `reference`
// (which must contain all separators of size <= |K_i|).
bool important_in(const BitGraph& bg, Mask x, Mask y, Mask k, Mask k_side, const SeparatorFamily& reference) {
  if (!bg.minimal(x, y, k)) return false;
  const int size = std::popcount(k);
  for (std::size_t j = 0; j < reference.cuts.size(); ++j) {
    if (std::popcount(reference.cuts[j]) > size) continue;
    const Mask other = reference.x_sides[j];
    if ((other & k_side) == k_side && other != k_side) return false;
  }
  return true;
}

}  // namespace

VertexSet not_reachable(const Graph& g, const VertexSet& a, const VertexSet& b) {
  const BitGraph bg(g);
  return bg.set(bg.not_reachable(bg.mask(a), bg.mask(b)));
}

VertexSet reachable_from(const Graph& g, const VertexSet& a, const VertexSet& b) {
  const BitGraph bg(g);
  return bg.set(bg.reach(bg.mask(a), bg.mask(b)));
}

bool separates(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& k) {
  const BitGraph bg(g);
  const Mask km = bg.mask(k);
  if ((km & ~bg.deletable) != 0) return false;
  return bg.separates(bg.mask(x), bg.mask(y), km);
}

bool is_minimal(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& k) {
  const BitGraph bg(g);
  const Mask km = bg.mask(k);
  if ((km & ~bg.deletable) != 0) return false;
  return bg.minimal(bg.mask(x), bg.mask(y), km);
}

std::vector<VertexSet> separators(const Graph& g, const VertexSet& x, const VertexSet& y,
                                  std::size_t max_size) {
  const BitGraph bg(g);
  const Mask xm = bg.mask(x);
  const Mask ym = bg.mask(y);
  check_sets(bg, xm, ym);
  return sorted_sets(bg, all_separators(bg, xm, ym, 0, max_size).cuts);
}

std::vector<VertexSet> important(const Graph& g, const VertexSet& x, const VertexSet& y,
                                 std::size_t max_size) {
  const BitGraph bg(g);
  const Mask xm = bg.mask(x);
  const Mask ym = bg.mask(y);
  check_sets(bg, xm, ym);
  const auto family = all_separators(bg, xm, ym, 0, max_size);
  std::vector<Mask> out;
  for (std::size_t i = 0; i < family.cuts.size(); ++i)
    if (important_in(bg, xm, ym, family.cuts[i], family.x_sides[i], family)) out.push_back(family.cuts[i]);
  return sorted_sets(bg, out);
}

std::optional<std::size_t> min_separator_size(const Graph& g, const VertexSet& x, const VertexSet& y) {
  const BitGraph bg(g);
  const Mask xm = bg.mask(x);
  const Mask ym = bg.mask(y);
  check_sets(bg, xm, ym);
  std::optional<std::size_t> best;
  for_each_subset(bg.deletable & ~xm & ~ym, bg.n, [&](Mask k) {
    if (!bg.separates(xm, ym, k)) return true;
    best = static_cast<std::size_t>(std::popcount(k));
    return false;
  });
  return best;
}

std::vector<VertexSet> important_witnesses(const Graph& g, const VertexSet& x, const VertexSet& y,
                                           const VertexSet& s) {
  const BitGraph bg(g);
  const Mask xm = bg.mask(x);
  const Mask ym = bg.mask(y);
  const Mask sm = bg.mask(s);
  check_sets(bg, xm, ym);
  const auto avoiding = all_separators(bg, xm, ym, sm, bg.n);
  if (avoiding.cuts.empty()) return {};
  int smallest = 64;
  for (Mask k : avoiding.cuts) smallest = std::min(smallest, std::popcount(k));
  const auto reference = all_separators(bg, xm, ym, 0, static_cast<std::size_t>(smallest));
  std::vector<Mask> out;
  for (std::size_t i = 0; i < avoiding.cuts.size(); ++i)
    if (std::popcount(avoiding.cuts[i]) == smallest &&
        important_in(bg, xm, ym, avoiding.cuts[i], avoiding.x_sides[i], reference))
      out.push_back(avoiding.cuts[i]);
  return sorted_sets(bg, out);
}

bool is_normalized(const Graph& g, const VertexSet& x, const VertexSet& y) {
  const BitGraph bg(g);
  const Mask xm = bg.mask(x);
  const Mask ym = bg.mask(y);
  check_sets(bg, xm, ym);
  Mask nx = 0;
  for (Mask m = xm; m != 0; m &= m - 1) nx |= bg.adj[static_cast<std::size_t>(std::countr_zero(m))];
  nx &= ~xm;
  if ((nx & ym) != 0 || (nx & ~bg.deletable) != 0 || !bg.separates(xm, ym, nx)) return false;
  std::size_t minimum = 0;
  std::size_t count = 0;
  for_each_subset(bg.deletable & ~xm & ~ym, bg.n, [&](Mask k) {
    const auto size = static_cast<std::size_t>(std::popcount(k));
    if (count > 0 && size > minimum) return false;
    if (bg.separates(xm, ym, k)) {
      minimum = size;
      ++count;
    }
    return true;
  });
  return count == 1 && static_cast<std::size_t>(std::popcount(nx)) == minimum;
}

Graph project(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& k) {
  const BitGraph bg(g);
  const Mask xm = bg.mask(x);
  const Mask km = bg.mask(k);
  const Mask removed = bg.not_reachable(bg.mask(y), km) & ~xm;
  std::vector<VertexId> vertices;
  for (std::size_t i = 0; i < bg.n; ++i)
    if ((removed & bit(i)) == 0) vertices.push_back(g.id_at(static_cast<int>(i)));
  std::set<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 0; i < bg.n; ++i)
    for (std::size_t j = i + 1; j < bg.n; ++j) {
      if (((removed >> i) & 1) || ((removed >> j) & 1)) continue;
      const bool edge = (bg.adj[i] >> j) & 1;
      const bool joined = (((xm >> i) & 1) && ((km >> j) & 1)) || (((xm >> j) & 1) && ((km >> i) & 1));
      if (edge || joined) edges.emplace(g.id_at(static_cast<int>(i)), g.id_at(static_cast<int>(j)));
    }
  return Graph::from_edges(std::move(vertices), {edges.begin(), edges.end()}, bg.set(~bg.deletable & bg.all & ~removed));
}

std::optional<VertexSet> compound_witness(const Graph& g, const VertexSet& x, const VertexSet& y,
                                          const Attribute& attr) {
  if (!oracle::is_normalized(g, x, y)) return std::nullopt;
  Graph current = g;
  std::vector<VertexId> nx;
  for (VertexId v : g.vertices())
    if (!x.contains(v) && std::any_of(x.begin(), x.end(), [&](VertexId a) { return g.adjacent(a, v); }))
      nx.push_back(v);
  VertexSet previous(std::move(nx));
  for (const auto& part : attr.sets()) {
    if (!part.is_subset_of(previous)) return std::nullopt;
    current = oracle::project(current, x, y, previous);
    const auto witnesses = oracle::important_witnesses(current, x, y, part);
    if (witnesses.size() != 1) return std::nullopt;
    previous = witnesses.front();
  }
  return previous;
}

std::optional<MultiwayOptimum> min_multiway_cut(const MwcInstance& inst) {
  const Graph& g = inst.graph();
  const BitGraph bg(g);
  const Mask tm = bg.mask(inst.terminals());
  std::optional<MultiwayOptimum> best;
  for_each_subset(bg.deletable & ~tm, bg.n, [&](Mask k) {
    for (Mask t = tm; t != 0; t &= t - 1) {
      const Mask self = t & -t;
      if ((bg.reach(self, k) & (tm & ~self)) != 0) return true;
    }
    const VertexSet cut = bg.set(k);
    best = MultiwayOptimum{cut.size(), certify_cut(g, inst.terminals(), cut)};
    return false;
  });
  return best;
}

std::optional<std::size_t> lower_bound_m(const MwcInstance& inst) {
  std::size_t m = 0;
  for (VertexId t : inst.terminals()) {
    const auto size = min_separator_size(inst.graph(), VertexSet{t}, inst.terminals() - VertexSet{t});
    if (!size) return std::nullopt;
    m = std::max(m, *size);
  }
  return m;
}

// --- corpus ---------------------------------------------------------------

namespace {

using Rows = std::vector<std::uint16_t>;

// Canonical code of a small graph: colour refinement fixes an invariant cell
// order, then every ordering inside the cells is tried and the largest
// upper-triangle bit string wins.
std::uint64_t canonical_code(const Rows& rows) {
  const std::size_t n = rows.size();
  std::vector<std::size_t> color(n, 0);
  std::size_t classes = 1;
  while (true) {
    std::vector<std::pair<std::vector<std::size_t>, std::size_t>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].first.push_back(color[v]);
      std::vector<std::size_t> around;
      for (std::size_t w = 0; w < n; ++w)
        if ((rows[v] >> w) & 1) around.push_back(color[w]);
      std::sort(around.begin(), around.end());
      sig[v].first.insert(sig[v].first.end(), around.begin(), around.end());
      sig[v].second = v;
    }
    std::map<std::vector<std::size_t>, std::size_t> rank;
    for (const auto& s : sig) rank.emplace(s.first, 0);
    std::size_t next = 0;
    for (auto& [key, value] : rank) value = next++;
    for (std::size_t v = 0; v < n; ++v) color[v] = rank[sig[v].first];
    if (rank.size() == classes) break;
    classes = rank.size();
  }

  std::vector<std::vector<std::size_t>> cells(classes);
  for (std::size_t v = 0; v < n; ++v) cells[color[v]].push_back(v);

  std::uint64_t best = 0;
  bool first = true;
  std::vector<std::size_t> order;
  while (true) {
    order.clear();
    for (const auto& cell : cells) order.insert(order.end(), cell.begin(), cell.end());
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | ((rows[order[i]] >> order[j]) & 1);
    if (first || code > best) best = code;
    first = false;
    std::size_t c = 0;
    while (c < cells.size() && !std::next_permutation(cells[c].begin(), cells[c].end())) ++c;
    if (c == cells.size()) break;
  }
  return best;
}

Rows decode(std::uint64_t code, std::size_t n) {
  Rows rows(n, 0);
  std::size_t bit_index = n * (n - 1) / 2;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      --bit_index;
      if ((code >> bit_index) & 1) {
        rows[i] |= static_cast<std::uint16_t>(1u << j);
        rows[j] |= static_cast<std::uint16_t>(1u << i);
      }
    }
  return rows;
}

Graph graph_of_rows(const Rows& rows) {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    vertices.push_back(static_cast<VertexId>(i + 1));
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if ((rows[i] >> j) & 1) edges.emplace_back(static_cast<VertexId>(i + 1), static_cast<VertexId>(j + 1));
  }
  return Graph::from_edges(std::move(vertices), edges);
}

// Greedy pairwise non-adjacent choice of up to `want` vertices from `order`.
VertexSet independent_pick(const Graph& g, const std::vector<VertexId>& order, std::size_t want) {
  std::vector<VertexId> chosen;
  for (VertexId v : order) {
    if (chosen.size() == want) break;
    bool free = true;
    for (VertexId c : chosen) free = free && !g.adjacent(c, v);
    if (free) chosen.push_back(v);
  }
  if (chosen.size() < 2) return {};
  return VertexSet(std::move(chosen));
}

}  // namespace

std::vector<Graph> connected_graphs(std::size_t n) {
  if (n == 0 || n > 11) throw Error(ErrorKind::InvalidArgument, "connected_graphs supports 1 <= n <= 11");
  std::set<std::uint64_t> level{0};  // the single vertex
  for (std::size_t size = 2; size <= n; ++size) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const Rows base = decode(code, size - 1);
      for (std::uint32_t attach = 1; attach < (1u << (size - 1)); ++attach) {
        Rows rows = base;
        rows.push_back(static_cast<std::uint16_t>(attach));
        for (std::size_t v = 0; v + 1 < size; ++v)
          if ((attach >> v) & 1) rows[v] |= static_cast<std::uint16_t>(1u << (size - 1));
        next.insert(canonical_code(rows));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (std::uint64_t code : level) out.push_back(graph_of_rows(decode(code, n)));
  return out;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::InvalidArgument, "uniform_below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % bound;
}

Graph random_graph(std::size_t n, double edge_prob, std::mt19937_64& rng) {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i) vertices.push_back(static_cast<VertexId>(i));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < edge_prob) edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  return Graph::from_edges(std::move(vertices), edges);
}

std::vector<CorpusInstance> generate_corpus(const CorpusConfig& config) {
  if (config.n < 2) throw Error(ErrorKind::InvalidArgument, "corpus: n must be at least 2");
  std::vector<CorpusInstance> out;
  if (config.mode == CorpusMode::Exhaustive) {
    for (Graph& g : connected_graphs(config.n)) {
      if (config.count != 0 && out.size() == config.count) break;
      // X = {1}, Y = the largest vertex not adjacent to 1.
      VertexId target = -1;
      for (VertexId v : g.vertices())
        if (v != 1 && !g.adjacent(1, v)) target = v;
      if (target < 0) continue;
      std::vector<VertexId> order(g.vertices().rbegin(), g.vertices().rend());
      VertexSet terminals = independent_pick(g, order, config.terminals);
      out.push_back(CorpusInstance{std::move(g), VertexSet{1}, VertexSet{target}, std::move(terminals)});
    }
    return out;
  }

  if (config.count == 0) throw Error(ErrorKind::InvalidArgument, "corpus: random mode needs a count");
  std::mt19937_64 rng(config.seed);
  while (out.size() < config.count) {
    Graph g = random_graph(config.n, config.edge_prob, rng);
    std::vector<VertexId> order = g.vertices();
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[uniform_below(rng, i)]);
    const VertexId source = order[0];
    VertexId target = -1;
    for (std::size_t i = 1; i < order.size() && target < 0; ++i)
      if (!g.adjacent(source, order[i])) target = order[i];
    if (target < 0) continue;
    VertexSet terminals = independent_pick(g, order, config.terminals);
    out.push_back(CorpusInstance{std::move(g), VertexSet{source}, VertexSet{target}, std::move(terminals)});
  }
  return out;
}

}  // namespace impsep::oracle
