#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "dichro/canon.hpp"
#include "dichro/constructions.hpp"
#include "oracles.hpp"

using namespace dichro;

namespace {

Digraph c3() { return Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}}); }

bool is_automorphism(const Digraph& d, const Permutation& p) { return d.relabeled(p) == d; }

bool is_embedding(const Digraph& h, const Digraph& g, const std::vector<int>& map) {
  std::set<int> image(map.begin(), map.end());
  if (image.size() != map.size()) return false;
  for (const Arc& a : h.arcs())
    if (!g.has_arc(map[a.tail], map[a.head])) return false;
  return true;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Digraph d = oracle::random_oriented(rng, n, (trial % 4 + 1) / 4.0);
    const Digraph p = d.relabeled(oracle::random_permutation(rng, n));
    REQUIRE(canonical_form(d) == canonical_form(p));
  }
}

TEST_CASE("canonical digraph is isomorphic to its input and idempotent") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Digraph d = oracle::random_oriented(rng, n, 0.6);
    const Labeling lab = canonical_labeling(d);
    REQUIRE(d.relabeled(lab.label) == canonical_digraph(d));
    REQUIRE(canonical_digraph(canonical_digraph(d)) == canonical_digraph(d));
    REQUIRE(canonical_form(d).to_digraph() == canonical_digraph(d));
  }
}

TEST_CASE("C3 and its transpose") {
  CHECK(canonical_form(c3()) == canonical_form(c3().transposed()));
  const Digraph path = Digraph::build(3, {{0, 1}, {1, 2}});
  CHECK(canonical_form(path) != canonical_form(c3()));
  CHECK_FALSE(are_isomorphic(path, c3()));
}

TEST_CASE("canonical codes separate exactly the brute-force classes (n <= 4)") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::vector<VertexSet>> brute;
    std::set<CanonicalCode> fast;
    std::map<CanonicalCode, std::vector<VertexSet>> seen;
    for (const Digraph& d : oracle::all_labeled_oriented(n)) {
      const auto b = oracle::brute_canonical(d);
      const CanonicalCode c = canonical_form(d);
      brute.insert(b);
      fast.insert(c);
      const auto [it, fresh] = seen.emplace(c, b);
      REQUIRE(it->second == b);
    }
    CHECK(fast.size() == brute.size());
  }
}

TEST_CASE("random graphs agree with brute-force canonisation up to n = 7") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Digraph a = oracle::random_oriented(rng, n, 0.5);
    const Digraph b = trial % 2 ? a.relabeled(oracle::random_permutation(rng, n)) : oracle::random_oriented(rng, n, 0.5);
    REQUIRE((oracle::brute_canonical(a) == oracle::brute_canonical(b)) == are_isomorphic(a, b));
  }
}

TEST_CASE("dedupe of labelled 4-tournaments") {
  std::vector<Digraph> all;
  for (std::uint64_t bits = 0; bits < 64; ++bits) all.push_back(oracle::labeled_tournament(4, bits));
  CHECK(dedupe(all).size() == 4);
}

TEST_CASE("orbits and generators match brute-force automorphisms") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Digraph d = trial % 3 == 0 ? oracle::labeled_tournament(n, rng()) : oracle::random_oriented(rng, n, 0.3);
    const Labeling lab = canonical_labeling(d);
    std::vector<Permutation> brute;
    Permutation p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do {
      if (is_automorphism(d, p)) brute.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    for (const Permutation& g : lab.generators) REQUIRE(is_automorphism(d, g));
    const std::vector<Permutation> group = group_elements(n, lab.generators);
    REQUIRE(group.size() == brute.size());
    std::vector<int> orbit(n);
    for (int v = 0; v < n; ++v) {
      orbit[v] = v;
      for (const Permutation& g : brute) orbit[v] = std::min(orbit[v], g[v]);
    }
    REQUIRE(lab.orbit == orbit);
  }
}

TEST_CASE("group_elements") {
  const std::vector<Permutation> gens{{1, 2, 0}};
  CHECK(group_elements(3, gens).size() == 3);
  const std::vector<Permutation> s4{{1, 0, 2, 3}, {1, 2, 3, 0}};
  CHECK(group_elements(4, s4).size() == 24);
  CHECK(group_elements(5, {}).size() == 1);
}

TEST_CASE("subdigraph containment") {
  CHECK(contains_subdigraph(d3(), d3()));
  CHECK(contains_subdigraph(c3(), d3()));
  CHECK_FALSE(contains_subdigraph(d3(), c3()));
  const auto map = find_embedding(c3(), d3());
  REQUIRE(map.has_value());
  CHECK(is_embedding(c3(), d3(), *map));
  CHECK_FALSE(contains_subdigraph(c3(), oracle::labeled_tournament(6, ~std::uint64_t{0})));
}

TEST_CASE("containment is monotone under adding arcs and agrees with the embedding search") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Digraph g = oracle::random_oriented(rng, n, 0.6);
    const int hn = 2 + static_cast<int>(rng() % (n - 1));
    const Digraph h = oracle::random_oriented(rng, hn, 0.4);
    const auto map = find_embedding(h, g);
    REQUIRE(contains_subdigraph(h, g) == map.has_value());
    if (map) REQUIRE(is_embedding(h, g, *map));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && !g.adjacent(u, v) && map) REQUIRE(contains_subdigraph(h, g.with_arc({u, v})));
  }
}

TEST_CASE("tournament containment one vertex short") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph g = oracle::labeled_tournament(8, rng());
    const Digraph h = oracle::labeled_tournament(7, rng());
    bool brute = false;
    for (int v = 0; v < 8 && !brute; ++v) brute = are_isomorphic(g.without_vertex(v), h);
    REQUIRE(contains_subdigraph(h, g) == brute);
    REQUIRE(contains_subdigraph(g.without_vertex(trial % 8), g));
  }
}

TEST_CASE("orders above the canonical limit are rejected") {
  std::vector<Arc> arcs;
  const Digraph big = Digraph::build(kMaxCanonicalOrder + 1, arcs);
  CHECK_THROWS_AS(canonical_form(big), Error);
}
