#include <algorithm>
#include <random>

#include "doctest.h"
#include "dichro/dicolor.hpp"
#include "dichro/digraph.hpp"
#include "oracles.hpp"

using namespace dichro;

namespace {

Digraph c3() { return Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}}); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::BadVertex;
}

}  // namespace

TEST_CASE("build") {
  const Digraph d = c3();
  CHECK(d.order() == 3);
  CHECK(d.arc_count() == 3);
  CHECK(d.has_arc(2, 0));
  CHECK_FALSE(d.has_arc(0, 2));
  CHECK(d.in(0) == singleton(2));

  const Digraph single = Digraph::build(1, {});
  CHECK(single.order() == 1);
  CHECK(single.arc_count() == 0);

  CHECK(code_of([] { Digraph::build(2, {{0, 1}, {1, 0}}); }) == ErrorCode::TwoCycle);
  CHECK(code_of([] { Digraph::build(2, {{1, 1}}); }) == ErrorCode::LoopArc);
  CHECK(code_of([] { Digraph::build(2, {{0, 1}, {0, 1}}); }) == ErrorCode::DuplicateArc);
  CHECK(code_of([] { Digraph::build(63, {}); }) == ErrorCode::TooLarge);
  CHECK(code_of([] { Digraph::build(2, {{0, 2}}); }) == ErrorCode::BadVertex);
}

TEST_CASE("remove_arc") {
  const Digraph path = c3().without_arc({0, 1});
  CHECK(path.arc_count() == 2);
  CHECK(is_acyclic(path));
  CHECK(c3().arc_count() == 3);
  CHECK(code_of([] { c3().without_arc({1, 0}); }) == ErrorCode::MissingArc);
}

TEST_CASE("delete_vertex") {
  const Digraph d = c3().without_vertex(2);
  CHECK(d == Digraph::build(2, {{0, 1}}));

  const Digraph t8 = oracle::labeled_tournament(8, 0x5a5a5a5ULL);
  for (int v = 0; v < 8; ++v) {
    const Digraph t7 = t8.without_vertex(v);
    CHECK(t7.order() == 7);
    CHECK(t7.is_tournament());
  }
  CHECK(code_of([] { Digraph::build(1, {}).without_vertex(0); }) == ErrorCode::LastVertex);
}

TEST_CASE("degrees") {
  for (const DegreePair& p : c3().degrees()) CHECK(p == DegreePair{1, 1});

  // Transitive tournament: i -> j for i < j.
  const Digraph tt = oracle::labeled_tournament(4, 0b111111);
  std::vector<int> outs;
  for (const DegreePair& p : tt.degrees()) outs.push_back(p.out);
  CHECK(outs == std::vector<int>{3, 2, 1, 0});
}

TEST_CASE("relabelling preserves order, size and the degree multiset") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Digraph d = oracle::random_oriented(rng, n, 0.5);
    const Digraph r = d.relabeled(oracle::random_permutation(rng, n));
    CHECK(r.order() == d.order());
    CHECK(r.arc_count() == d.arc_count());
    auto a = d.degrees();
    auto b = r.degrees();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK(d.transposed().transposed() == d);
    for (const Arc& arc : d.arcs()) REQUIRE(d.without_arc(arc).with_arc(arc) == d);
  }
}

TEST_CASE("in rows are the transpose of out rows") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph d = oracle::random_oriented(rng, 10, 0.6);
    int total = 0;
    for (int u = 0; u < 10; ++u) {
      total += d.out_degree(u);
      CHECK((d.out(u) & singleton(u)) == 0);
      for (int v = 0; v < 10; ++v) CHECK(d.has_arc(u, v) == static_cast<bool>((d.in(v) >> u) & 1U));
    }
    CHECK(total == d.arc_count());
  }
}
