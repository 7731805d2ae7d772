#pragma once

#include <optional>

#include "impsep/flow.hpp"
#include "impsep/graph.hpp"

namespace impsep {

/// A certified X-Y separator of a particular graph: `cut` is deletable,
/// avoids X and Y, and leaves no X-Y path. The cached sides partition the
/// vertex set together with the cut: x_side = NR(G,Y,cut), y_side = the rest.
class Separator {
 public:
  /// Throws NotASeparator if cut meets X, Y or an undeletable vertex, or if
  /// an X-Y path survives its deletion.
  static Separator certify(const Graph& g, const VertexSet& x, const VertexSet& y, VertexSet cut);

  [[nodiscard]] const VertexSet& cut() const noexcept { return cut_; }
  [[nodiscard]] const VertexSet& x_side() const noexcept { return x_side_; }
  [[nodiscard]] const VertexSet& y_side() const noexcept { return y_side_; }
  [[nodiscard]] std::size_t size() const noexcept { return cut_.size(); }

  friend bool operator==(const Separator& a, const Separator& b) { return a.cut_ == b.cut_; }

 private:
  Separator() = default;

  VertexSet cut_;
  VertexSet x_side_;
  VertexSet y_side_;
};

enum class Order { Less, Greater, Equal, Incomparable };

const char* to_string(Order order) noexcept;

/// A minimum X-Y separator (the one closest to X), or nullopt when none exists.
std::optional<Separator> min_separator(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Deleting k leaves no X-Y path. k must avoid X and Y (InvalidArgument);
/// a k containing an undeletable vertex is never a separator.
bool is_separator(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& k);

/// Separator no proper subset of which separates: every member touches both
/// the X-reachable and the Y-reachable part of G - k.
bool is_minimal(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& k);

/// Verdict of k1 against k2 in the order K1 >= K2 iff NR(G,Y,K1) contains
/// NR(G,Y,K2). Both inputs must be minimal (NonMinimalSeparator otherwise).
Order compare(const Graph& g, const VertexSet& x, const VertexSet& y, const Separator& k1,
              const Separator& k2);

/// Members of either separator lying on the X side of the other, plus the
/// common part.
Separator top(const Graph& g, const VertexSet& x, const VertexSet& y, const Separator& k1,
              const Separator& k2);
/// Members of either separator lying on neither's X side, plus the common
/// part. Dominates both inputs.
Separator bottom(const Graph& g, const VertexSet& x, const VertexSet& y, const Separator& k1,
                 const Separator& k2);

/// Importance via projection: k is important iff in Pr(G,X,Y,k) it is the
/// unique minimum separator. Requires a minimal k.
bool is_important(const Graph& g, const VertexSet& x, const VertexSet& y, const Separator& k);

/// The unique important separator of minimum size.
///
/// X and Y are contracted to single vertices, a maximum family of disjoint
/// paths is packed, and the torso on the path vertices is searched by
/// growing a frontier from Y: on each round, every path whose first vertex
/// adjacent to the frontier is not yet the last vertex outside it has the
/// stretch in between absorbed. When the two coincide on all paths they
/// form the answer.
///
/// Undeletable vertices carrying k > 0 paths are split into k on-path twins
/// plus one spare, which reproduces the n+1-copies graph on the torso.
std::optional<Separator> smallest_important_separator(const Graph& g, const VertexSet& x,
                                                      const VertexSet& y);

struct Normalized {
  Graph graph;        // Pr(G,X,Y,K*): N(X) = K* is its only minimum separator
  Separator smallest; // K*, certified against the input graph
};

std::optional<Normalized> normalize(const Graph& g, const VertexSet& x, const VertexSet& y);

namespace detail {

struct ImportantResult {
  std::optional<Separator> separator;
  PathSystem paths;
  std::size_t seeded_paths = 0;
};

// smallest_important_separator that also hands back the path system it
// packed, and accepts one from an earlier stage as a flow seed.
ImportantResult smallest_important(const Graph& g, const VertexSet& x, const VertexSet& y,
                                   const PathSystem* seed);

}  // namespace detail

}  // namespace impsep
