#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "impsep/separator.hpp"

namespace impsep {

/// Excess of a separator over the minimum separator size, or infinity when
/// no qualifying separator exists.
class ExcessValue {
 public:
  static ExcessValue finite(std::size_t e) { return ExcessValue(e); }
  static ExcessValue infinite() { return ExcessValue(); }

  [[nodiscard]] bool is_infinite() const noexcept { return !value_.has_value(); }
  [[nodiscard]] std::size_t value() const { return value_.value(); }

  friend bool operator==(const ExcessValue&, const ExcessValue&) = default;

 private:
  ExcessValue() = default;
  explicit ExcessValue(std::size_t e) : value_(e) {}

  std::optional<std::size_t> value_;
};

/// Sequence (S_1, ..., S_r) of pairwise-disjoint non-empty vertex sets
/// naming a compound witness. Whether it is well formed for a particular
/// graph is only settled by compound_witness().
class Attribute {
 public:
  /// Throws InvalidArgument on an empty member or overlapping members.
  explicit Attribute(std::vector<VertexSet> sets);

  [[nodiscard]] const std::vector<VertexSet>& sets() const noexcept { return sets_; }
  [[nodiscard]] std::size_t rank() const noexcept;
  [[nodiscard]] VertexSet support() const;

  friend bool operator==(const Attribute&, const Attribute&) = default;

 private:
  std::vector<VertexSet> sets_;
};

/// N(X) is the only minimum X-Y separator.
bool is_normalized(const Graph& g, const VertexSet& x, const VertexSet& y);

// The operations below take an X-Y normalized graph and throw NotNormalized
// otherwise; those taking s also require s to lie inside N(X)
// (SNotInNeighborhood).

/// Excess of the smallest X-Y separator disjoint with s.
ExcessValue cover_excess(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& s);

/// K(s): the unique important separator among the smallest separators
/// disjoint with s, found as the smallest important separator once s is
/// made undeletable. nullopt when the cover excess is infinite.
std::optional<Separator> important_witness(const Graph& g, const VertexSet& x, const VertexSet& y,
                                           const VertexSet& s);

/// The only attribute s can be the support of: peel S_1 = s ∩ N(X), move to
/// Pr(G,X,Y,K(S_1)) and repeat on the remainder. nullopt if s is empty, a
/// peel comes out empty, or a witness along the way is infinite.
std::optional<Attribute> attribute_of(const Graph& g, const VertexSet& x, const VertexSet& y,
                                      const VertexSet& s);

/// The compound witness of attr, or nullopt if attr has none.
std::optional<Separator> compound_witness(const Graph& g, const VertexSet& x, const VertexSet& y,
                                          const Attribute& attr);

/// Per-stage record of a compound witness computation. flow_values[i] is the
/// maximum flow of stage i (stage 0 is the normalized graph itself), and
/// seeded_paths[i] counts the paths carried over from stage i-1.
struct WitnessTrace {
  std::optional<Separator> witness;
  std::vector<std::size_t> flow_values;
  std::vector<std::size_t> seeded_paths;
};

WitnessTrace compound_witness_trace(const Graph& g, const VertexSet& x, const VertexSet& y,
                                    const Attribute& attr);

struct EnumerationOptions {
  // Worker threads evaluating subsets; output does not depend on it.
  unsigned threads = 1;
};

/// Every important X-Y separator of excess at most max_excess, in the order
/// of the first subset generating it (subsets by size, then
/// lexicographically), so the smallest important separator comes first.
/// nullopt when no X-Y separator exists.
std::optional<std::vector<Separator>> enumerate_important(const Graph& g, const VertexSet& x,
                                                          const VertexSet& y, std::size_t max_excess,
                                                          const EnumerationOptions& options = {});

/// Sum of C(n, i) for i = 0..k, saturating at UINT64_MAX.
std::uint64_t binomial_bound(std::size_t n, std::size_t k);

namespace detail {

std::optional<Separator> important_witness_unchecked(const Graph& g, const VertexSet& x,
                                                     const VertexSet& y, const VertexSet& s);
std::optional<Attribute> attribute_of_unchecked(const Graph& g, const VertexSet& x,
                                                const VertexSet& y, const VertexSet& s);
WitnessTrace compound_witness_unchecked(const Graph& g, const VertexSet& x, const VertexSet& y,
                                        const Attribute& attr);

}  // namespace detail

}  // namespace impsep
