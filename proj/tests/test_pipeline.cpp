#include <atomic>

#include "doctest.h"
#include "dichro/canon.hpp"
#include "dichro/constructions.hpp"
#include "dichro/dicolor.hpp"
#include "dichro/pipeline.hpp"

using namespace dichro;

TEST_CASE("census7 is deterministic and its witnesses check out") {
  const CensusReport a = census_7();
  const CensusReport b = census_7({2, {}});
  CHECK(a.serialize(false) == b.serialize(false));
  CHECK(verify_report(a).empty());
  CHECK(a.count("chi3_tournaments") == 4);
  for (const Digraph& d : a.graphs("dicritical")) {
    CHECK(is_k_dicritical(d, 3));
    CHECK(min_degree_prune(d, 3));
  }
}

TEST_CASE("descent from a dicritical graph returns it alone") {
  const std::vector<Digraph> out = dicritical_descend(d1());
  REQUIRE(out.size() == 1);
  CHECK(are_isomorphic(out.front(), d1()));
  const Digraph c3 = Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_THROWS_AS(dicritical_descend(c3, 3), Error);
  CHECK(dicritical_descend(c3, 2).size() == 1);
}

TEST_CASE("covering set") {
  const std::vector<Digraph> targets{d3(), d2(), d1()};
  const CoverResult self = covering_set(targets, targets);
  CHECK(self.cover.size() == 3);

  const Digraph c3 = Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}});
  const std::vector<Digraph> pool{d2(), c3};
  const CoverResult r = covering_set(targets, pool);
  REQUIRE(r.cover.size() == 1);
  CHECK(are_isomorphic(r.cover.front(), c3));
  CHECK(r.cover_counts == std::vector<int>{3});

  const std::vector<Digraph> useless{d1()};
  CHECK_THROWS_AS(covering_set(targets, useless), Error);

  const CensusReport rep = cover_report(targets, pool);
  CHECK(verify_report(rep).empty());
}

TEST_CASE("expectation checks") {
  CensusReport r;
  r.pipeline = "census7";
  r.set_count("tournaments", 456);
  r.set_count("chi3_tournaments", 4);
  r.set_count("dicritical_20_arcs", 1);
  CHECK(check_expectations(r));
  CHECK(r.discrepancies.empty());

  r.set_count("chi3_tournaments", 5);
  CHECK_FALSE(check_expectations(r));
  CHECK(r.discrepancies.size() == 1);

  CensusReport sharded = r;
  sharded.discrepancies.clear();
  CHECK(check_expectations(sharded, {0, 2}));
  CHECK(sharded.discrepancies.empty());
}

TEST_CASE("verify_report catches a bad witness") {
  CensusReport r;
  r.pipeline = "test";
  ReportEntry e;
  e.group = "g";
  e.graph = Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}});
  e.coloring = Coloring::from_string("000");
  e.coloring->classes = 2;
  r.entries.push_back(e);
  CHECK(verify_report(r).size() == 1);
  r.entries.front().coloring = Coloring::from_string("001");
  r.entries.front().coloring->classes = 2;
  CHECK(verify_report(r).empty());
  r.entries.push_back(r.entries.front());
  CHECK(verify_report(r).size() == 1);
}

TEST_CASE("parallel_for visits every index once") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  for (const auto& h : hits) CHECK(h.load() == 1);
}
