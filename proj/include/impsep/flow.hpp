#pragma once

#include <optional>
#include <vector>

#include "impsep/graph.hpp"

namespace impsep {

/// X-Y paths, each listed from its X end to its Y end. Every path has exactly
/// one X vertex (its first) and one Y vertex (its last). Deletable internal
/// vertices are never shared between paths; undeletable ones may be, since
/// they carry unbounded capacity.
struct PathSystem {
  std::vector<std::vector<VertexId>> paths;

  [[nodiscard]] std::size_t size() const noexcept { return paths.size(); }
};

/// Maximum system of internally vertex-disjoint X-Y paths, found with
/// breadth-first augmentation on the vertex-split network (neighbors scanned
/// in ascending id order). Returns nullopt when no X-Y separator exists: X
/// touches Y, or they are joined through undeletable vertices only.
///
/// `seed`, when given, is a path system from an earlier, related graph (for
/// instance the graph before a projection). Paths that can be re-rooted at X
/// in `g` are pushed as initial flow before augmenting.
std::optional<PathSystem> max_disjoint_paths(const Graph& g, const VertexSet& x, const VertexSet& y,
                                             const PathSystem* seed = nullptr);

/// False iff X and Y are adjacent or joined through undeletable vertices.
bool separator_exists(const Graph& g, const VertexSet& x, const VertexSet& y);

namespace detail {

struct FlowOutcome {
  PathSystem paths;
  // Vertices whose split in-node the source still reaches in the residual
  // network, and the same for out-nodes. A vertex with only its in-node
  // reached is a member of the X-closest minimum cut.
  std::vector<char> in_reached;
  std::vector<char> out_reached;
  std::size_t seeded_paths = 0;
};

std::optional<FlowOutcome> solve_flow(const Graph& g, const VertexSet& x, const VertexSet& y,
                                      const PathSystem* seed);

void validate_terminal_sets(const Graph& g, const VertexSet& x, const VertexSet& y);

}  // namespace detail

}  // namespace impsep
