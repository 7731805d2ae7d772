#pragma once

#include <optional>
#include <vector>

#include "impsep/separator.hpp"

namespace impsep {

/// Graph plus at least two terminals. Terminals never belong to a cut.
class MwcInstance {
 public:
  /// Throws InvalidArgument for fewer than two terminals, InvalidVertex for
  /// terminals outside the graph.
  MwcInstance(Graph graph, VertexSet terminals);

  [[nodiscard]] const Graph& graph() const noexcept { return graph_; }
  [[nodiscard]] const VertexSet& terminals() const noexcept { return terminals_; }

 private:
  Graph graph_;
  VertexSet terminals_;
};

/// A multiway cut and the components of the graph left after deleting it.
struct CutCertificate {
  VertexSet cut;
  std::vector<VertexSet> components;

  [[nodiscard]] std::size_t size() const noexcept { return cut.size(); }
};

/// Deleting cut (non-terminals only) leaves every terminal in its own
/// component.
bool is_multiway_cut(const Graph& g, const VertexSet& terminals, const VertexSet& cut);

/// Builds the certificate for cut; throws InvalidArgument if it is not a
/// multiway cut.
CutCertificate certify_cut(const Graph& g, const VertexSet& terminals, VertexSet cut);

/// Minimum separator between t and the other terminals; its size is m(t).
std::optional<Separator> min_isolating_cut(const MwcInstance& inst, VertexId t);

struct LowerBound {
  std::size_t m = 0;
  VertexId terminal = -1;  // smallest terminal attaining m
};

/// m = max over terminals of m(t). Throws AdjacentTerminals when no vertex
/// multiway cut exists.
LowerBound lower_bound_m(const MwcInstance& inst);

struct SolveOptions {
  // Explore the top-level branches concurrently. The answer is the same; the
  // certificate may come from any successful branch.
  bool parallel = false;
};

/// A multiway cut of size at most budget, found by branching on important
/// isolating cuts; nullopt if none exists (including infeasible instances).
std::optional<CutCertificate> solve_budget(const MwcInstance& inst, std::size_t budget);

/// Decides whether a multiway cut of size at most m + k exists and returns
/// one if so. Throws AdjacentTerminals on infeasible instances.
std::optional<CutCertificate> solve_above_guarantee(const MwcInstance& inst, std::size_t k,
                                                    const SolveOptions& options = {});

}  // namespace impsep
