#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "dichro/canon.hpp"
#include "dichro/enumerate.hpp"
#include "oracles.hpp"

using namespace dichro;

namespace {

template <typename Graphs>
std::set<CanonicalCode> codes(const Graphs& graphs) {
  std::set<CanonicalCode> result;
  for (const auto& g : graphs) result.insert(canonical_form(g));
  return result;
}

}  // namespace

TEST_CASE("tournament counts match brute-force classification") {
  for (int n = 1; n <= 6; ++n) {
    const std::vector<Digraph> ts = tournaments(n);
    CHECK(ts.size() == oracle::tournament_classes(n).size());
    CHECK(codes(ts).size() == ts.size());
    for (const Digraph& t : ts) CHECK(t.is_tournament());
  }
}

TEST_CASE("8-vertex tournaments match an extend-and-dedupe count") {
  const std::vector<Digraph> t7 = tournaments(7);
  CHECK(t7.size() == 456);
  CHECK(oracle::extend_and_dedupe_tournaments(t7) == 6880);
  CHECK(tournaments(8).size() == 6880);
}

TEST_CASE("oriented graph counts match brute force") {
  for (int n = 1; n <= 5; ++n) {
    const std::vector<Digraph> gs = oriented_graphs(n);
    CHECK(gs.size() == oracle::oriented_classes(n).size());
    CHECK(codes(gs).size() == gs.size());
  }
  CHECK(oriented_graphs(6).size() == 21480);
}

TEST_CASE("undirected graphs with edge and degree constraints match brute force") {
  for (int n = 1; n <= 5; ++n)
    for (int m = 0; m <= n * (n - 1) / 2; ++m)
      for (int d = 0; d <= n - 1; ++d) {
        if (2 * m < n * d) continue;
        const auto gs = undirected_graphs(n, m, d);
        REQUIRE(gs.size() == oracle::undirected_classes(n, m, d).size());
        for (const auto& g : gs) {
          REQUIRE(g.edge_count() == m);
          REQUIRE(g.min_degree() >= d);
        }
      }
  CHECK(undirected_graphs(3, 3, 2).size() == 1);
  CHECK(undirected_graphs(4, 4, 2).size() == 1);
  CHECK_THROWS_AS(undirected_graphs(5, 4, 2), Error);
}

TEST_CASE("orientations of a triangle") {
  const std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {0, 2}};
  const UndirectedGraph k3 = UndirectedGraph::build(3, edges);
  CHECK(orientations(k3, 0, 0).size() == 2);
  CHECK(orientations(k3, 1, 1).size() == 1);
  const OrientationCount c = for_each_orientation(k3, 0, 0, [](const Digraph&) {});
  CHECK(c.labeled == 8);
  CHECK(c.classes == 2);
}

TEST_CASE("orientation classes match canonical dedupe of every labelled orientation") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Digraph base = oracle::random_oriented(rng, n, 0.6);
    const UndirectedGraph g = underlying_graph(base);
    const std::vector<std::pair<int, int>> edges = g.edges();
    if (edges.size() > 14) continue;
    const int min_in = static_cast<int>(trial % 2);
    std::set<CanonicalCode> brute;
    std::int64_t labeled = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << edges.size()); ++bits) {
      std::vector<Arc> arcs;
      for (std::size_t e = 0; e < edges.size(); ++e)
        arcs.push_back(bits >> e & 1 ? Arc{edges[e].first, edges[e].second} : Arc{edges[e].second, edges[e].first});
      const Digraph d = Digraph::build(n, arcs);
      if (d.min_in_degree() < min_in || d.min_out_degree() < min_in) continue;
      ++labeled;
      brute.insert(canonical_form(d));
    }
    std::set<CanonicalCode> seen;
    const OrientationCount c = for_each_orientation(g, min_in, min_in, [&](const Digraph& d) {
      REQUIRE(std::ranges::equal(underlying_graph(d).rows(), g.rows()));
      REQUIRE(seen.insert(canonical_form(d)).second);
    });
    REQUIRE(c.labeled == labeled);
    REQUIRE(seen == brute);
  }
}

TEST_CASE("shards are disjoint and cover the full enumeration") {
  const std::set<CanonicalCode> full = codes(tournaments(7));
  std::set<CanonicalCode> merged;
  std::size_t total = 0;
  for (int i = 0; i < 3; ++i) {
    const auto part = tournaments(7, {i, 3});
    total += part.size();
    for (const CanonicalCode& c : codes(part)) merged.insert(c);
  }
  CHECK(total == full.size());
  CHECK(merged == full);

  std::size_t graph_total = 0;
  for (int i = 0; i < 4; ++i) graph_total += undirected_graphs(8, 16, 4, {i, 4}).size();
  CHECK(graph_total == undirected_graphs(8, 16, 4).size());
}
