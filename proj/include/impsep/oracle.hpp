#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "impsep/multiway_cut.hpp"
#include "impsep/witness.hpp"

/// Definitional brute-force references. Everything here works on 64-bit
/// vertex masks and plain breadth-first reachability; nothing calls into the
/// flow, frontier or witness code it is used to check. Exponential by
/// design: graphs are capped at 64 vertices and 26 candidate vertices.
namespace impsep::oracle {

/// NR(G,A,B) computed by direct reachability.
VertexSet not_reachable(const Graph& g, const VertexSet& a, const VertexSet& b);
/// R(G,A,B).
VertexSet reachable_from(const Graph& g, const VertexSet& a, const VertexSet& b);

bool separates(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& k);
/// No proper subset of k separates.
bool is_minimal(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& k);

/// All deletable K avoiding X and Y, |K| <= max_size, that separate X from Y.
std::vector<VertexSet> separators(const Graph& g, const VertexSet& x, const VertexSet& y,
                                  std::size_t max_size);
/// Minimal separators of size <= max_size with no separator K' of size at
/// most |K| such that NR(G,Y,K) is a proper subset of NR(G,Y,K').
std::vector<VertexSet> important(const Graph& g, const VertexSet& x, const VertexSet& y,
                                 std::size_t max_size);
std::optional<std::size_t> min_separator_size(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Important separators of G among the smallest separators disjoint with s.
std::vector<VertexSet> important_witnesses(const Graph& g, const VertexSet& x, const VertexSet& y,
                                           const VertexSet& s);
/// N(X) is the only minimum separator.
bool is_normalized(const Graph& g, const VertexSet& x, const VertexSet& y);
/// Pr(G,X,Y,K) built straight from its definition.
Graph project(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& k);
/// Replays the compound witness definition stage by stage with brute-force
/// important witnesses; nullopt when a stage has no unique witness or a
/// member is not inside the previous witness.
std::optional<VertexSet> compound_witness(const Graph& g, const VertexSet& x, const VertexSet& y,
                                          const Attribute& attr);

struct MultiwayOptimum {
  std::size_t size = 0;
  CutCertificate certificate;
};

/// Smallest multiway cut by increasing-size subset scan; nullopt if infeasible.
std::optional<MultiwayOptimum> min_multiway_cut(const MwcInstance& inst);
/// max over terminals of the smallest isolating cut, by subset scan;
/// nullopt if some terminal cannot be isolated.
std::optional<std::size_t> lower_bound_m(const MwcInstance& inst);

// --- corpus ---------------------------------------------------------------

enum class CorpusMode { Exhaustive, Random };

struct CorpusConfig {
  std::uint64_t seed = 1;
  std::size_t n = 6;
  std::size_t count = 0;  // 0 = every graph (exhaustive) / required in random mode
  double edge_prob = 0.3;
  std::size_t terminals = 3;
  CorpusMode mode = CorpusMode::Random;
};

struct CorpusInstance {
  Graph graph;
  VertexSet x;
  VertexSet y;
  VertexSet terminals;  // empty when no pairwise non-adjacent pair exists
};

/// Every connected graph on n vertices up to isomorphism, vertices 1..n,
/// in canonical-code order.
std::vector<Graph> connected_graphs(std::size_t n);

/// G(n, p) on vertices 1..n. Reproducible across platforms for a given
/// generator state.
Graph random_graph(std::size_t n, double edge_prob, std::mt19937_64& rng);

/// Uniform draw from [0, bound) without implementation-defined distributions.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

std::vector<CorpusInstance> generate_corpus(const CorpusConfig& config);

}  // namespace impsep::oracle
