// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. All comparisons are exact integer matches.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "dichro/canon.hpp"
#include "dichro/constructions.hpp"
#include "dichro/dicolor.hpp"
#include "dichro/enumerate.hpp"
#include "dichro/pipeline.hpp"
#include "oracles.hpp"

using namespace dichro;

namespace {

constexpr int kJobs = 4;
constexpr int kInvarianceTrials = 100000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(const std::string& name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
  failures += !o.pass;
}

std::int64_t count_of(const CensusReport& r, const std::string& key) { return r.count(key).value_or(-1); }

std::string histogram_text(const std::map<int, std::int64_t>& h) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [arcs, n] : h) {
    os << (first ? "" : ", ") << arcs << ":" << n;
    first = false;
  }
  os << "}";
  return os.str();
}

// Every orientation of an undirected graph, colouring each one directly.
std::int64_t uncolourable_orientations(int n, const std::vector<std::pair<int, int>>& edges) {
  std::int64_t bad = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << edges.size()); ++bits) {
    std::vector<Arc> arcs;
    for (std::size_t e = 0; e < edges.size(); ++e)
      arcs.push_back(bits >> e & 1 ? Arc{edges[e].first, edges[e].second} : Arc{edges[e].second, edges[e].first});
    bad += !two_dicolorable(Digraph::build(n, arcs)).has_value();
  }
  return bad;
}

}  // namespace

int main() {
  const PipelineOptions options{kJobs, {}};
  CensusReport c7, c8, descent;

  run("1 census7 chi3 tournaments", [&] {
    c7 = census_7(options);
    const std::int64_t got = count_of(c7, "chi3_tournaments");
    return Outcome{got == 4 && verify_report(c7).empty(), "got " + std::to_string(got) + ", want 4"};
  });

  run("2 census8 chi3-free tournaments", [&] {
    c8 = census_8_tournaments(c7.graphs("chi3-tournament"), options);
    const std::int64_t got = count_of(c8, "chi3_free_tournaments");
    return Outcome{got == 64 && verify_report(c8).empty(),
                   "got " + std::to_string(got) + ", want 64 (from " + std::to_string(count_of(c8, "tournaments")) +
                       " tournaments)"};
  });

  run("3 dicritical descent", [&] {
    descent = dicritical_census(c8.graphs("chi3-free-tournament"), options);
    const std::map<int, std::int64_t> want{{21, 1}, {22, 11}, {23, 84}, {24, 51}, {25, 12}};
    const std::int64_t got = count_of(descent, "dicritical");
    return Outcome{got == 159 && descent.arc_histogram == want && verify_report(descent).empty(),
                   "got " + std::to_string(got) + " " + histogram_text(descent.arc_histogram) + ", want 159 " +
                       histogram_text(want)};
  });

  for (const auto& [edges, want] : {std::pair{19, std::int64_t{33700}}, std::pair{20, std::int64_t{721603}}}) {
    run("4 minarcs9 stage " + std::to_string(edges - 18), [&, edges = edges, want = want] {
      const CensusReport r = min_arcs_9(edges, options);
      const std::int64_t got = count_of(r, "orientations");
      const std::int64_t fails = count_of(r, "failures");
      return Outcome{got == want && fails == 0,
                     "orientations " + std::to_string(got) + " (want " + std::to_string(want) + "), failures " +
                         std::to_string(fails) + " (want 0), underlying graphs " +
                         std::to_string(count_of(r, "underlying_graphs"))};
    });
  }

  run("5 unique 20-arc 3-dicritical graph", [&] {
    std::set<CanonicalCode> twenty;
    for (const CensusReport* r : {&c7, &descent})
      for (const Digraph& d : r->graphs("dicritical"))
        if (d.arc_count() == 20) twenty.insert(canonical_form(d));
    const bool is_d2 = twenty.size() == 1 && *twenty.begin() == canonical_form(d2());
    return Outcome{is_d2, std::to_string(twenty.size()) + " class(es), isomorphic to d2: " + (is_d2 ? "yes" : "no")};
  });

  run("6 constructions are 3-dicritical", [&] {
    std::vector<std::pair<std::string, Digraph>> cases{{"d1", d1()},
                                                       {"d3", d3()},
                                                       {"d2", d2()},
                                                       {"d1_general(5,[3,3,3,3,3])", d1_general(5, {3, 3, 3, 3, 3})}};
    for (int k = 3; k <= 5; ++k)
      for (int l = 3; l <= 5; ++l) cases.emplace_back("o_kl(" + std::to_string(k) + "," + std::to_string(l) + ")", o_kl(k, l));
    std::string bad;
    for (const auto& [name, d] : cases)
      if (!is_k_dicritical(d, 3)) bad += " " + name;
    return Outcome{bad.empty(), std::to_string(cases.size()) + " instances" + (bad.empty() ? "" : ", not dicritical:" + bad)};
  });

  run("7 butterfly collapse", [&] {
    // o_kl(4,3): x1 = 0, x2 = 1, v = 7.
    const Digraph cut = o_kl(4, 3).without_arc({7, 1});
    const bool colourable = two_dicolorable(cut).has_value();
    const bool iso = are_isomorphic(butterfly_contract(cut, {0, 1}), o_kl(3, 3));
    return Outcome{colourable && iso, std::string("2-colourable ") + (colourable ? "yes" : "no") +
                                          ", contraction isomorphic to o_kl(3,3) " + (iso ? "yes" : "no")};
  });

  run("8 no saturated 2-dichromatic graph", [&] {
    std::string detail;
    bool ok = true;
    for (int n = 3; n <= 5; ++n) {
      const SaturationReport s = saturation_scan(n);
      ok = ok && s.saturated.empty();
      detail += "n=" + std::to_string(n) + ": " + std::to_string(s.saturated.size()) + " of " +
                std::to_string(s.two_dichromatic_non_tournaments) + (n < 5 ? "; " : "");
    }
    return Outcome{ok, detail};
  });

  run("9 4-regular orientations", [&] {
    std::vector<std::pair<int, int>> k5, circulant;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) k5.emplace_back(i, j);
    for (int i = 0; i < 9; ++i)
      for (int s : {1, 2}) circulant.emplace_back(i, (i + s) % 9);
    const std::int64_t bad5 = uncolourable_orientations(5, k5);
    const std::int64_t bad9 = uncolourable_orientations(9, circulant);
    return Outcome{bad5 == 0 && bad9 == 0, "K5: " + std::to_string(bad5) + " of 1024 fail; C9(1,2): " +
                                               std::to_string(bad9) + " of 262144 fail"};
  });

  run("10a differential 2-colourability", [&] {
    std::int64_t checked = 0, bad = 0;
    const auto check = [&](const Digraph& d) {
      ++checked;
      bad += two_dicolorable(d).has_value() != reference::two_dicolorable(d).has_value();
    };
    // Every labelled oriented graph up to 6 vertices, pair states in base 3.
    for (int n = 1; n <= 6; ++n) {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
      std::vector<int> state(pairs.size(), 0);
      for (;;) {
        std::vector<Arc> arcs;
        for (std::size_t p = 0; p < pairs.size(); ++p)
          if (state[p] == 1) arcs.push_back({pairs[p].first, pairs[p].second});
          else if (state[p] == 2) arcs.push_back({pairs[p].second, pairs[p].first});
        check(Digraph::build(n, arcs));
        std::size_t p = 0;
        while (p < state.size() && state[p] == 2) state[p++] = 0;
        if (p == state.size()) break;
        ++state[p];
      }
    }
    return Outcome{bad == 0, std::to_string(bad) + " mismatches over " + std::to_string(checked) +
                                 " labelled oriented graphs with n<=6"};
  });

  run("10b canonical form invariance", [&] {
    std::mt19937_64 rng(20240601);
    int bad = 0;
    for (int t = 0; t < kInvarianceTrials; ++t) {
      const int n = 1 + static_cast<int>(rng() % 12);
      const Digraph d = oracle::random_oriented(rng, n, (t % 5 + 1) / 5.0);
      bad += canonical_form(d) != canonical_form(d.relabeled(oracle::random_permutation(rng, n)));
    }
    return Outcome{bad == 0, std::to_string(bad) + " violations in " + std::to_string(kInvarianceTrials) + " trials"};
  });

  run("10c enumeration completeness", [&] {
    std::string bad;
    for (int n = 1; n <= 5; ++n) {
      if (tournaments(n).size() != oracle::tournament_classes(n).size()) bad += " tournaments(" + std::to_string(n) + ")";
      if (oriented_graphs(n).size() != oracle::oriented_classes(n).size()) bad += " oriented(" + std::to_string(n) + ")";
      for (int m = 0; m <= n * (n - 1) / 2; ++m)
        for (int d = 0; d < n; ++d)
          if (2 * m >= n * d && undirected_graphs(n, m, d).size() != oracle::undirected_classes(n, m, d).size())
            bad += " undirected(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(d) + ")";
    }
    return Outcome{bad.empty(), bad.empty() ? "tournaments, oriented and undirected graphs agree for n<=5"
                                            : "mismatch:" + bad};
  });

  std::printf("%d criterion line(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
