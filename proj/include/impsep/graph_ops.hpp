#pragma once

#include <vector>

#include "impsep/graph.hpp"

namespace impsep {

/// N(C): vertices outside c adjacent to some vertex of c.
VertexSet neighborhood(const Graph& g, const VertexSet& c);

/// NR(G,A,B): vertices outside b that no path from a reaches in G - b.
/// Throws InvalidArgument if a and b overlap.
VertexSet reach_complement(const Graph& g, const VertexSet& a, const VertexSet& b);

/// R(G,A,B): vertices of G - b lying in a component that meets a.
VertexSet reachable(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Replaces s by the single vertex `label`, adjacent to N(s). The label may
/// reuse a member of s or be a fresh id; it is undeletable if any member was.
Graph contract_set(const Graph& g, const VertexSet& s, VertexId label);

/// Graph on s: edges of g[s] plus u-v whenever some u-v path has all of its
/// intermediate vertices outside s.
Graph torso(const Graph& g, const VertexSet& s);

/// Pr(G,X,Y,K): deletes NR(G,Y,K) - X and joins every vertex of X to every
/// vertex of K. Throws NotASeparator unless k is an X-Y separator.
Graph project(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& k);

/// Marks s undeletable (equivalent to blowing each vertex up into n+1 twins).
Graph make_undeletable(const Graph& g, const VertexSet& s);

Graph induced_subgraph(const Graph& g, const VertexSet& keep);
Graph delete_vertices(const Graph& g, const VertexSet& s);

/// Connected components, each sorted, listed by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

namespace detail {

// BFS over dense indices from every seed, never entering blocked vertices.
std::vector<char> reach_mask(const Graph& g, const std::vector<char>& seeds,
                             const std::vector<char>& blocked);

}  // namespace detail

}  // namespace impsep
