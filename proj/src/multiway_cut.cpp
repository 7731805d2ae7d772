#include "impsep/multiway_cut.hpp"

#include <atomic>
#include <future>
#include <string>

#include "impsep/errors.hpp"
#include "impsep/graph_ops.hpp"
#include "impsep/witness.hpp"

namespace impsep {

MwcInstance::MwcInstance(Graph graph, VertexSet terminals)
    : graph_(std::move(graph)), terminals_(std::move(terminals)) {
  if (terminals_.size() < 2) throw Error(ErrorKind::InvalidArgument, "need at least two terminals");
  graph_.require_vertices(terminals_, "terminal set");
}

bool is_multiway_cut(const Graph& g, const VertexSet& terminals, const VertexSet& cut) {
  if (cut.intersects(terminals)) return false;
  for (VertexId v : cut)
    if (!g.has_vertex(v) || !g.is_deletable(v)) return false;
  for (const auto& comp : connected_components(delete_vertices(g, cut)))
    if ((comp & terminals).size() > 1) return false;
  return true;
}

CutCertificate certify_cut(const Graph& g, const VertexSet& terminals, VertexSet cut) {
  if (!is_multiway_cut(g, terminals, cut))
    throw Error(ErrorKind::InvalidArgument, "set is not a multiway cut");
  auto components = connected_components(delete_vertices(g, cut));
  return CutCertificate{std::move(cut), std::move(components)};
}

std::optional<Separator> min_isolating_cut(const MwcInstance& inst, VertexId t) {
  if (!inst.terminals().contains(t))
    throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(t) + " is not a terminal");
  return min_separator(inst.graph(), VertexSet{t}, inst.terminals() - VertexSet{t});
}

namespace {

// Lower bound over the terminals that still share a component with another
// terminal; nullopt if some pair cannot be separated at all.
std::optional<LowerBound> bound_over_live_terminals(const Graph& g, const VertexSet& terminals) {
  LowerBound best;
  for (VertexId t : terminals) {
    const VertexSet rest = terminals - VertexSet{t};
    const auto cut = min_separator(g, VertexSet{t}, rest);
    if (!cut) return std::nullopt;
    if (best.terminal < 0 || cut->size() > best.m) best = LowerBound{cut->size(), t};
  }
  return best;
}

// Terminals whose component holds another terminal, and the graph trimmed
// to the components that hold any terminal.
struct Residual {
  Graph graph;
  VertexSet live_terminals;
};

Residual trim(const Graph& g, const VertexSet& terminals) {
  VertexSet keep;
  VertexSet live;
  for (const auto& comp : connected_components(g)) {
    const VertexSet here = comp & terminals;
    if (here.empty()) continue;
    keep = keep | comp;
    if (here.size() > 1) live = live | here;
  }
  return Residual{induced_subgraph(g, keep), live};
}

std::optional<VertexSet> branch(const Graph& g, const VertexSet& terminals, std::size_t budget) {
  const Residual residual = trim(g, terminals);
  if (residual.live_terminals.size() < 2) return VertexSet{};
  const auto bound = bound_over_live_terminals(residual.graph, residual.live_terminals);
  if (!bound || bound->m > budget) return std::nullopt;

  const VertexId t = bound->terminal;
  const VertexSet others = residual.live_terminals - VertexSet{t};
  const auto cuts = enumerate_important(residual.graph, VertexSet{t}, others, budget - bound->m);
  if (!cuts) return std::nullopt;
  for (const auto& k : *cuts) {
    auto rest = branch(delete_vertices(residual.graph, k.cut()), others, budget - k.size());
    if (rest) return *rest | k.cut();
  }
  return std::nullopt;
}

}  // namespace

LowerBound lower_bound_m(const MwcInstance& inst) {
  const auto bound = bound_over_live_terminals(inst.graph(), inst.terminals());
  if (!bound) throw Error(ErrorKind::AdjacentTerminals, "two terminals cannot be separated by deleting non-terminals");
  return *bound;
}

std::optional<CutCertificate> solve_budget(const MwcInstance& inst, std::size_t budget) {
  auto cut = branch(inst.graph(), inst.terminals(), budget);
  if (!cut) return std::nullopt;
  return certify_cut(inst.graph(), inst.terminals(), std::move(*cut));
}

std::optional<CutCertificate> solve_above_guarantee(const MwcInstance& inst, std::size_t k,
                                                    const SolveOptions& options) {
  const Graph& g = inst.graph();
  const LowerBound bound = lower_bound_m(inst);
  const VertexSet t{bound.terminal};
  const VertexSet others = inst.terminals() - t;

  if (k == 0) {
    const auto smallest = smallest_important_separator(g, t, others);
    if (smallest && is_multiway_cut(g, inst.terminals(), smallest->cut()))
      return certify_cut(g, inst.terminals(), smallest->cut());
    return std::nullopt;
  }

  const auto cuts = enumerate_important(g, t, others, k);
  if (!cuts) return std::nullopt;
  const std::size_t total = bound.m + k;
  auto attempt = [&](const Separator& isolating) -> std::optional<VertexSet> {
    auto rest = branch(delete_vertices(g, isolating.cut()), others, total - isolating.size());
    if (!rest) return std::nullopt;
    return *rest | isolating.cut();
  };

  if (!options.parallel) {
    for (const auto& isolating : *cuts)
      if (auto cut = attempt(isolating)) return certify_cut(g, inst.terminals(), std::move(*cut));
    return std::nullopt;
  }

  std::atomic<bool> done{false};
  std::vector<std::future<std::optional<VertexSet>>> branches;
  for (const auto& isolating : *cuts)
    branches.push_back(std::async(std::launch::async, [&, isolating]() -> std::optional<VertexSet> {
      if (done.load()) return std::nullopt;
      auto cut = attempt(isolating);
      if (cut) done.store(true);
      return cut;
    }));
  std::optional<VertexSet> winner;
  for (auto& f : branches) {
    auto cut = f.get();
    if (cut && !winner) winner = std::move(cut);
  }
  if (!winner) return std::nullopt;
  return certify_cut(g, inst.terminals(), std::move(*winner));
}

}  // namespace impsep
