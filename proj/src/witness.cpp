#include "impsep/witness.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>

#include "impsep/errors.hpp"
#include "impsep/graph_ops.hpp"

namespace impsep {

Attribute::Attribute(std::vector<VertexSet> sets) : sets_(std::move(sets)) {
  VertexSet seen;
  for (const auto& s : sets_) {
    if (s.empty()) throw Error(ErrorKind::InvalidArgument, "attribute member is empty");
    if (s.intersects(seen)) throw Error(ErrorKind::InvalidArgument, "attribute members overlap");
    seen = seen | s;
  }
}

std::size_t Attribute::rank() const noexcept {
  std::size_t r = 0;
  for (const auto& s : sets_) r += s.size();
  return r;
}

VertexSet Attribute::support() const {
  VertexSet out;
  for (const auto& s : sets_) out = out | s;
  return out;
}

bool is_normalized(const Graph& g, const VertexSet& x, const VertexSet& y) {
  const auto smallest = smallest_important_separator(g, x, y);
  return smallest && smallest->cut() == neighborhood(g, x);
}

namespace {

VertexSet require_normalized(const Graph& g, const VertexSet& x, const VertexSet& y) {
  if (!is_normalized(g, x, y))
    throw Error(ErrorKind::NotNormalized, "N(X) is not the unique minimum X-Y separator");
  return neighborhood(g, x);
}

void require_in_neighborhood(const VertexSet& s, const VertexSet& nx) {
  if (!s.is_subset_of(nx)) throw Error(ErrorKind::SNotInNeighborhood, "S is not a subset of N(X)");
}

bool touches(const Graph& g, const VertexSet& s, const VertexSet& y) {
  for (VertexId v : s)
    for (int w : g.adjacency(g.index_of(v)))
      if (y.contains(g.id_at(w))) return true;
  return false;
}

}  // namespace

namespace detail {

std::optional<Separator> important_witness_unchecked(const Graph& g, const VertexSet& x,
                                                     const VertexSet& y, const VertexSet& s) {
  if (touches(g, s, y)) return std::nullopt;
  auto witness = smallest_important_separator(make_undeletable(g, s), x, y);
  if (!witness) return std::nullopt;
  return Separator::certify(g, x, y, witness->cut());
}

std::optional<Attribute> attribute_of_unchecked(const Graph& g, const VertexSet& x,
                                                const VertexSet& y, const VertexSet& s) {
  if (s.empty()) return std::nullopt;
  std::vector<VertexSet> peels;
  Graph current = g;
  VertexSet remaining = s;
  while (true) {
    VertexSet peel = remaining & neighborhood(current, x);
    if (peel.empty() || touches(current, peel, y)) return std::nullopt;
    Graph frozen = make_undeletable(current, peel);
    const auto witness = smallest_important_separator(frozen, x, y);
    if (!witness) return std::nullopt;
    remaining = remaining - peel;
    peels.push_back(std::move(peel));
    if (remaining.empty()) return Attribute(std::move(peels));
    current = project(frozen, x, y, witness->cut());
  }
}

WitnessTrace compound_witness_unchecked(const Graph& g, const VertexSet& x, const VertexSet& y,
                                        const Attribute& attr) {
  WitnessTrace trace;
  auto stage = smallest_important(g, x, y, nullptr);
  if (!stage.separator) return trace;
  trace.flow_values.push_back(stage.paths.size());
  trace.seeded_paths.push_back(0);

  Graph current = g;
  for (const auto& part : attr.sets()) {
    if (!part.is_subset_of(stage.separator->cut())) return trace;
    current = make_undeletable(project(current, x, y, stage.separator->cut()), part);
    const PathSystem previous = std::move(stage.paths);
    stage = smallest_important(current, x, y, &previous);
    if (!stage.separator) return trace;
    trace.flow_values.push_back(stage.paths.size());
    trace.seeded_paths.push_back(stage.seeded_paths);
  }
  trace.witness = Separator::certify(g, x, y, stage.separator->cut());
  return trace;
}

}  // namespace detail

ExcessValue cover_excess(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& s) {
  const VertexSet nx = require_normalized(g, x, y);
  require_in_neighborhood(s, nx);
  const auto witness = detail::important_witness_unchecked(g, x, y, s);
  if (!witness) return ExcessValue::infinite();
  return ExcessValue::finite(witness->size() - nx.size());
}

std::optional<Separator> important_witness(const Graph& g, const VertexSet& x, const VertexSet& y,
                                           const VertexSet& s) {
  const VertexSet nx = require_normalized(g, x, y);
  require_in_neighborhood(s, nx);
  return detail::important_witness_unchecked(g, x, y, s);
}

std::optional<Attribute> attribute_of(const Graph& g, const VertexSet& x, const VertexSet& y,
                                      const VertexSet& s) {
  require_normalized(g, x, y);
  g.require_vertices(s, "S");
  return detail::attribute_of_unchecked(g, x, y, s);
}

std::optional<Separator> compound_witness(const Graph& g, const VertexSet& x, const VertexSet& y,
                                          const Attribute& attr) {
  return compound_witness_trace(g, x, y, attr).witness;
}

WitnessTrace compound_witness_trace(const Graph& g, const VertexSet& x, const VertexSet& y,
                                    const Attribute& attr) {
  require_normalized(g, x, y);
  return detail::compound_witness_unchecked(g, x, y, attr);
}

std::uint64_t binomial_bound(std::size_t n, std::size_t k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t term = 1;  // C(n, i)
  for (std::size_t i = 0; i <= std::min(n, k); ++i) {
    if (i > 0) {
      // term * (n - i + 1) / i stays exact; guard the multiplication.
      const std::uint64_t factor = n - i + 1;
      if (term > kMax / factor) return kMax;
      term = term * factor / i;
    }
    if (total > kMax - term) return kMax;
    total += term;
  }
  return total;
}

namespace {

// All subsets of `pool` with 1..k members, by size then lexicographically.
std::vector<VertexSet> subsets_up_to(const std::vector<VertexId>& pool, std::size_t k) {
  std::vector<VertexSet> out;
  const std::size_t n = pool.size();
  for (std::size_t size = 1; size <= std::min(k, n); ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<VertexId> members;
      members.reserve(size);
      for (std::size_t i : pick) members.push_back(pool[i]);
      out.emplace_back(std::move(members));
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace

std::optional<std::vector<Separator>> enumerate_important(const Graph& g, const VertexSet& x,
                                                          const VertexSet& y, std::size_t max_excess,
                                                          const EnumerationOptions& options) {
  auto normalized = normalize(g, x, y);
  if (!normalized) return std::nullopt;
  const Graph& gn = normalized->graph;
  const std::size_t r = normalized->smallest.size();

  std::vector<VertexId> pool;
  for (VertexId v : gn.vertices())
    if (!x.contains(v) && !y.contains(v) && gn.is_deletable(v)) pool.push_back(v);
  const auto subsets = subsets_up_to(pool, max_excess);

  std::vector<std::optional<Separator>> found(subsets.size());
  auto evaluate = [&](std::size_t i) {
    const auto attr = detail::attribute_of_unchecked(gn, x, y, subsets[i]);
    if (!attr) return;
    auto witness = detail::compound_witness_unchecked(gn, x, y, *attr).witness;
    if (!witness || witness->size() > r + max_excess) return;
    auto in_g = Separator::certify(g, x, y, witness->cut());
    if (!is_minimal(g, x, y, in_g.cut()) || !is_important(g, x, y, in_g)) return;
    found[i] = std::move(in_g);
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < subsets.size(); ++i) evaluate(i);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t)
      workers.emplace_back([&, t] {
        for (std::size_t i = t; i < subsets.size(); i += threads) evaluate(i);
      });
    for (auto& w : workers) w.join();
  }

  std::vector<Separator> out{normalized->smallest};
  std::vector<VertexSet> keys{normalized->smallest.cut()};
  for (auto& candidate : found) {
    if (!candidate) continue;
    auto pos = std::lower_bound(keys.begin(), keys.end(), candidate->cut());
    if (pos != keys.end() && *pos == candidate->cut()) continue;
    keys.insert(pos, candidate->cut());
    out.push_back(std::move(*candidate));
  }
  return out;
}

}  // namespace impsep
