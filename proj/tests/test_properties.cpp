#include <doctest.h>

#include <algorithm>

#include "impsep/graph_ops.hpp"
#include "impsep/witness.hpp"
#include "test_support.hpp"

using namespace impsep;
using namespace impsep::testing;

TEST_CASE("projection keeps the separators above K") {
  std::mt19937_64 rng(91);
  for (int round = 0; round < 60; ++round) {
    const auto inst = random_separable_xy(rng, 6 + oracle::uniform_below(rng, 5), 0.3);
    const std::size_t r = *oracle::min_separator_size(inst.graph, inst.x, inst.y);
    std::vector<VertexSet> minimal;
    for (const auto& k : oracle::separators(inst.graph, inst.x, inst.y, inst.graph.order()))
      if (oracle::is_minimal(inst.graph, inst.x, inst.y, k)) minimal.push_back(k);
    for (const auto& k : minimal) {
      const Graph pr = project(inst.graph, inst.x, inst.y, k);
      CHECK(pr == oracle::project(inst.graph, inst.x, inst.y, k));
      CHECK(neighborhood(pr, inst.x) == k);
      const VertexSet nr_k = oracle::not_reachable(inst.graph, inst.y, k);
      for (const auto& k1 : minimal) {
        if (!nr_k.is_subset_of(oracle::not_reachable(inst.graph, inst.y, k1))) continue;
        CHECK(oracle::separates(pr, inst.x, inst.y, k1));
        if (k1.size() == r) CHECK(*oracle::min_separator_size(pr, inst.x, inst.y) == r);
      }
    }
  }
}

TEST_CASE("larger budgets only add separators") {
  std::mt19937_64 rng(93);
  for (int round = 0; round < 40; ++round) {
    const auto inst = random_separable_xy(rng, 8 + oracle::uniform_below(rng, 7), 0.3);
    std::vector<VertexSet> previous;
    for (std::size_t k = 0; k <= 3; ++k) {
      const auto found = enumerate_important(inst.graph, inst.x, inst.y, k);
      REQUIRE(found);
      std::vector<VertexSet> cuts;
      for (const auto& s : *found) cuts.push_back(s.cut());
      // Output order is by generating subset, so the previous list is a prefix
      // once both are filtered to the smaller excess.
      std::vector<VertexSet> kept;
      const std::size_t r = found->front().size();
      for (const auto& c : cuts)
        if (c.size() <= r + k - (k > 0 ? 1 : 0)) kept.push_back(c);
      if (k > 0) CHECK(kept == previous);
      CHECK(std::adjacent_find(cuts.begin(), cuts.end()) == cuts.end());
      previous = cuts;
    }
  }
}

TEST_CASE("witnesses depend only on the attribute") {
  std::mt19937_64 rng(95);
  for (int round = 0; round < 30; ++round) {
    const auto inst = random_separable_xy(rng, 9, 0.3);
    const auto norm = normalize(inst.graph, inst.x, inst.y);
    REQUIRE(norm);
    const VertexSet nx = neighborhood(norm->graph, inst.x);
    for (VertexId v : nx) {
      const Attribute attr({VertexSet{v}});
      const auto a = compound_witness(norm->graph, inst.x, inst.y, attr);
      const auto b = compound_witness(norm->graph, inst.x, inst.y, attr);
      CHECK(a == b);
      const auto replay = oracle::compound_witness(norm->graph, inst.x, inst.y, attr);
      CHECK(replay.has_value() == a.has_value());
      if (a && replay) CHECK(*replay == a->cut());
    }
  }
}

TEST_CASE("enumeration output does not depend on the thread count") {
  std::mt19937_64 rng(97);
  for (int round = 0; round < 6; ++round) {
    const auto inst = layered(rng, 5, 4, 0.4, 0.3);
    const auto base = enumerate_important(inst.graph, inst.x, inst.y, 3);
    for (unsigned threads : {2u, 3u, 8u})
      CHECK(enumerate_important(inst.graph, inst.x, inst.y, 3, EnumerationOptions{threads}) == base);
  }
}
