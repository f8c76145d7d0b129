#include "dichro/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "dichro/constructions.hpp"
#include "dichro/expected_counts.hpp"

namespace dichro {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> workers;
  const int threads = static_cast<int>(std::min<std::size_t>(count, static_cast<std::size_t>(jobs)));
  for (int t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  workers.clear();
  if (error) std::rethrow_exception(error);
}

namespace {

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(now - start_).count();
    start_ = now;
    return seconds;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Digraph drop_isolated(const Digraph& d) {
  VertexSet keep = 0;
  for (int v = 0; v < d.order(); ++v)
    if (d.neighbours(v) != 0) keep |= singleton(v);
  return keep == d.vertices() ? d : d.induced(keep);
}

ReportEntry critical_entry(const std::string& group, const Digraph& d, int k) {
  ReportEntry e;
  e.group = group;
  e.graph = d;
  e.coloring = k_dicolorable(d, k);
  e.not_two_colorable = k == 3;
  for (const Arc& a : d.arcs()) {
    auto c = k_dicolorable(d.without_arc(a), k - 1);
    if (!c) throw std::logic_error("descent returned a non-critical digraph");
    e.arc_colorings.emplace_back(a, std::move(*c));
  }
  return e;
}

void add_histogram(CensusReport& report, const std::string& group) {
  report.histogram_group = group;
  report.arc_histogram.clear();
  for (const ReportEntry& e : report.entries)
    if (e.group == group) ++report.arc_histogram[e.graph.arc_count()];
}

std::string shard_text(const Shard& s) { return std::to_string(s.index) + "/" + std::to_string(s.count); }

}  // namespace

DescentResult descend(std::span<const Digraph> roots, int k, int jobs) {
  std::map<int, std::set<CanonicalCode>> buckets;
  for (const Digraph& r : roots) {
    if (k_dicolorable(r, k - 1))
      throw Error(ErrorCode::Not3Dichromatic, "descent root is " + std::to_string(k - 1) + "-dicolourable");
    buckets[r.arc_count()].insert(canonical_form(r));
  }
  DescentResult result;
  std::set<CanonicalCode> critical;
  while (!buckets.empty()) {
    auto top = std::prev(buckets.end());
    const std::vector<CanonicalCode> states(top->second.begin(), top->second.end());
    const int arcs = top->first;
    buckets.erase(top);
    result.states += static_cast<std::int64_t>(states.size());

    std::vector<std::vector<CanonicalCode>> children(states.size());
    parallel_for(states.size(), jobs, [&](std::size_t i) {
      const Digraph d = states[i].to_digraph();
      for (const Arc& a : d.arcs()) {
        const Digraph child = d.without_arc(a);
        if (!k_dicolorable(child, k - 1)) children[i].push_back(canonical_form(child));
      }
    });
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (children[i].empty()) {
        critical.insert(canonical_form(drop_isolated(states[i].to_digraph())));
        continue;
      }
      buckets[arcs - 1].insert(children[i].begin(), children[i].end());
    }
  }
  for (const CanonicalCode& c : critical) result.critical.push_back(c.to_digraph());
  return result;
}

std::vector<Digraph> dicritical_descend(const Digraph& d, int k) {
  const Digraph roots[] = {d};
  return descend(roots, k).critical;
}

CensusReport census_7(const PipelineOptions& options) {
  Stopwatch clock;
  CensusReport report;
  report.pipeline = "census7";
  const std::vector<Digraph> all = tournaments(7);
  report.timing.emplace_back("enumerate", clock.lap());

  std::vector<std::optional<Coloring>> witness(all.size());
  parallel_for(all.size(), options.jobs, [&](std::size_t i) {
    if (!two_dicolorable(all[i])) witness[i] = dichromatic_number(all[i]).witness;
  });
  std::vector<Digraph> chi3;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!witness[i]) continue;
    if (witness[i]->classes != 3) throw std::logic_error("7-vertex tournament with dichromatic number above 3");
    chi3.push_back(all[i]);
    report.entries.push_back({"chi3-tournament", all[i], witness[i], true, {}, {}});
  }
  report.timing.emplace_back("colour", clock.lap());

  const DescentResult descent = descend(chi3, 3, options.jobs);
  for (const Digraph& d : descent.critical) report.entries.push_back(critical_entry("dicritical", d, 3));
  report.timing.emplace_back("descend", clock.lap());

  report.params.emplace_back("n", "7");
  report.params.emplace_back("k", "3");
  report.set_count("tournaments", static_cast<std::int64_t>(all.size()));
  report.set_count("chi3_tournaments", static_cast<std::int64_t>(chi3.size()));
  report.set_count("descent_states", descent.states);
  report.set_count("dicritical", static_cast<std::int64_t>(descent.critical.size()));
  report.set_count("dicritical_20_arcs",
                   std::count_if(descent.critical.begin(), descent.critical.end(),
                                 [](const Digraph& d) { return d.arc_count() == 20; }));
  report.sort_entries();
  add_histogram(report, "dicritical");
  return report;
}

CensusReport census_8_tournaments(std::span<const Digraph> chi3_tournaments_7, const PipelineOptions& options) {
  Stopwatch clock;
  CensusReport report;
  report.pipeline = "census8";
  std::unordered_set<CanonicalCode, CanonicalCodeHash> forbidden;
  for (const Digraph& t : chi3_tournaments_7) forbidden.insert(canonical_form(t));

  const std::vector<Digraph> all = tournaments(8, options.shard);
  report.timing.emplace_back("enumerate", clock.lap());

  enum Outcome : std::uint8_t { kTwoColourable, kContainsForbidden, kFree };
  std::vector<Outcome> outcome(all.size(), kTwoColourable);
  std::vector<std::uint8_t> colourable(all.size(), 1);  // vector<bool> is not safe to fill concurrently
  std::vector<std::optional<Coloring>> witness(all.size());
  parallel_for(all.size(), options.jobs, [&](std::size_t i) {
    const Digraph& t = all[i];
    colourable[i] = two_dicolorable(t).has_value();
    bool contains = false;
    for (int v = 0; v < t.order() && !contains; ++v) contains = forbidden.contains(canonical_form(t.without_vertex(v)));
    if (contains) {
      outcome[i] = kContainsForbidden;
    } else if (!colourable[i]) {
      outcome[i] = kFree;
      witness[i] = dichromatic_number(t).witness;
    }
  });
  std::int64_t containing = 0;
  std::int64_t not_colourable = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    containing += outcome[i] == kContainsForbidden;
    not_colourable += !colourable[i];
    if (outcome[i] == kFree) report.entries.push_back({"chi3-free-tournament", all[i], witness[i], true, {}, {}});
  }
  report.timing.emplace_back("filter", clock.lap());

  report.params.emplace_back("n", "8");
  report.params.emplace_back("forbidden", std::to_string(forbidden.size()));
  if (options.shard.count > 1) report.params.emplace_back("shard", shard_text(options.shard));
  report.set_count("tournaments", static_cast<std::int64_t>(all.size()));
  report.set_count("containing_chi3_7", containing);
  report.set_count("chi3_tournaments", not_colourable);
  report.set_count("chi3_free_tournaments", static_cast<std::int64_t>(report.entries.size()));
  report.sort_entries();
  return report;
}

CensusReport dicritical_census(std::span<const Digraph> roots, const PipelineOptions& options) {
  Stopwatch clock;
  CensusReport report;
  report.pipeline = "descend";
  const DescentResult descent = descend(roots, 3, options.jobs);
  report.timing.emplace_back("descend", clock.lap());
  std::vector<ReportEntry> entries(descent.critical.size());
  parallel_for(entries.size(), options.jobs,
               [&](std::size_t i) { entries[i] = critical_entry("dicritical", descent.critical[i], 3); });
  report.entries = std::move(entries);
  report.timing.emplace_back("witness", clock.lap());

  report.params.emplace_back("k", "3");
  report.set_count("roots", static_cast<std::int64_t>(roots.size()));
  report.set_count("descent_states", descent.states);
  report.set_count("dicritical", static_cast<std::int64_t>(descent.critical.size()));
  report.sort_entries();
  add_histogram(report, "dicritical");
  for (const auto& [arcs, n] : report.arc_histogram) report.set_count("arcs_" + std::to_string(arcs), n);
  return report;
}

namespace {

class SetCover {
 public:
  SetCover(std::vector<std::uint64_t> masks, std::uint64_t universe) : masks_(std::move(masks)), universe_(universe) {}

  std::vector<int> greedy() const {
    std::vector<int> chosen;
    std::uint64_t covered = 0;
    while (covered != universe_) {
      int best = -1;
      int gain = 0;
      for (std::size_t i = 0; i < masks_.size(); ++i) {
        const int g = std::popcount(masks_[i] & ~covered);
        if (g > gain) {
          gain = g;
          best = static_cast<int>(i);
        }
      }
      chosen.push_back(best);
      covered |= masks_[best];
    }
    return chosen;
  }

  std::vector<int> exact() {
    best_ = greedy();
    std::sort(best_.begin(), best_.end());
    std::vector<int> chosen;
    branch(0, chosen);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void branch(std::uint64_t covered, std::vector<int>& chosen) {
    if (covered == universe_) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    const std::uint64_t open = universe_ & ~covered;
    int max_gain = 0;
    for (std::uint64_t m : masks_) max_gain = std::max(max_gain, std::popcount(m & open));
    const int bound = (std::popcount(open) + max_gain - 1) / max_gain;
    if (chosen.size() + bound >= best_.size()) return;

    // Branch on the open target with the fewest covering sets.
    int target = -1;
    int fewest = 0;
    for (std::uint64_t rest = open; rest != 0; rest &= rest - 1) {
      const int t = std::countr_zero(rest);
      int options = 0;
      for (std::uint64_t m : masks_) options += (m >> t) & 1U;
      if (target < 0 || options < fewest) {
        target = t;
        fewest = options;
      }
    }
    std::vector<int> candidates;
    for (std::size_t i = 0; i < masks_.size(); ++i)
      if ((masks_[i] >> target) & 1U) candidates.push_back(static_cast<int>(i));
    std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      return std::popcount(masks_[a] & open) > std::popcount(masks_[b] & open);
    });
    for (int c : candidates) {
      chosen.push_back(c);
      branch(covered | masks_[c], chosen);
      chosen.pop_back();
    }
  }

  std::vector<std::uint64_t> masks_;
  std::uint64_t universe_;
  std::vector<int> best_;
};

}  // namespace

CoverResult covering_set(std::span<const Digraph> targets, std::span<const Digraph> pool, int jobs) {
  if (targets.size() > 64) throw Error(ErrorCode::TooLarge, "covering supports at most 64 targets");
  if (pool.empty()) throw Error(ErrorCode::Uncoverable, "empty pool");
  CoverResult result;
  result.containment.assign(pool.size(), std::vector<bool>(targets.size(), false));
  std::vector<std::uint64_t> masks(pool.size(), 0);
  parallel_for(pool.size(), jobs, [&](std::size_t i) {
    std::vector<bool> row(targets.size(), false);
    for (std::size_t t = 0; t < targets.size(); ++t)
      if (contains_subdigraph(pool[i], targets[t])) {
        row[t] = true;
        masks[i] |= std::uint64_t{1} << t;
      }
    result.containment[i] = std::move(row);
  });
  const std::uint64_t universe = targets.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << targets.size()) - 1;
  std::uint64_t reachable = 0;
  for (std::uint64_t m : masks) reachable |= m;
  if (reachable != universe) {
    const int t = std::countr_zero(universe & ~reachable);
    throw Error(ErrorCode::Uncoverable, "target #" + std::to_string(t + 1) + " contains no pool element");
  }
  if (targets.empty()) return result;
  SetCover solver(masks, universe);
  result.greedy_size = static_cast<int>(solver.greedy().size());
  for (int i : solver.exact()) {
    result.cover.push_back(pool[i]);
    result.cover_counts.push_back(std::popcount(masks[i]));
  }
  return result;
}

CensusReport cover_report(std::span<const Digraph> targets, std::span<const Digraph> pool,
                          const PipelineOptions& options) {
  Stopwatch clock;
  CensusReport report;
  report.pipeline = "cover";
  const CoverResult cover = covering_set(targets, pool, options.jobs);
  report.timing.emplace_back("cover", clock.lap());
  for (const Digraph& t : targets) report.entries.push_back({"target", canonical_digraph(t), {}, false, {}, {}});
  for (std::size_t i = 0; i < cover.cover.size(); ++i)
    report.entries.push_back({"cover", canonical_digraph(cover.cover[i]), {}, false, {}, cover.cover_counts[i]});
  report.set_count("targets", static_cast<std::int64_t>(targets.size()));
  report.set_count("pool", static_cast<std::int64_t>(pool.size()));
  report.set_count("greedy_size", cover.greedy_size);
  report.set_count("cover_size", static_cast<std::int64_t>(cover.cover.size()));
  if (!cover.cover_counts.empty()) {
    report.set_count("min_containment", *std::min_element(cover.cover_counts.begin(), cover.cover_counts.end()));
    report.set_count("max_containment", *std::max_element(cover.cover_counts.begin(), cover.cover_counts.end()));
  }
  report.sort_entries();
  return report;
}

CensusReport min_arcs_9(int edges, const PipelineOptions& options) {
  Stopwatch clock;
  CensusReport report;
  report.pipeline = "minarcs9-" + std::to_string(edges);
  const std::vector<UndirectedGraph> graphs = undirected_graphs(9, edges, 4, options.shard);
  report.timing.emplace_back("underlying", clock.lap());

  struct PerGraph {
    OrientationCount count;
    std::int64_t verified = 0;
    std::vector<Digraph> failures;
  };
  std::vector<PerGraph> per(graphs.size());
  parallel_for(graphs.size(), options.jobs, [&](std::size_t i) {
    PerGraph& r = per[i];
    r.count = for_each_orientation(graphs[i], 2, 2, [&](const Digraph& d) {
      if (auto c = two_dicolorable(d)) {
        if (!is_valid_coloring(d, *c)) throw std::logic_error("invalid 2-colouring witness");
        ++r.verified;
      } else {
        r.failures.push_back(d);
      }
    });
  });
  report.timing.emplace_back("orient", clock.lap());

  OrientationCount total;
  std::int64_t verified = 0;
  std::int64_t failures = 0;
  for (PerGraph& r : per) {
    total.labeled += r.count.labeled;
    total.classes += r.count.classes;
    verified += r.verified;
    for (Digraph& d : r.failures) {
      ++failures;
      report.entries.push_back({"failure", canonical_digraph(d), std::nullopt, true, {}, {}});
    }
  }
  report.params.emplace_back("n", "9");
  report.params.emplace_back("edges", std::to_string(edges));
  report.params.emplace_back("min_degree", "4");
  report.params.emplace_back("min_in_out", "2");
  if (options.shard.count > 1) report.params.emplace_back("shard", shard_text(options.shard));
  report.set_count("underlying_graphs", static_cast<std::int64_t>(graphs.size()));
  report.set_count("orientations", total.classes);
  report.set_count("labeled_orientations", total.labeled);
  report.set_count("witnesses_verified", verified);
  report.set_count("failures", failures);
  report.sort_entries();
  return report;
}

CensusReport saturation_report(int n) {
  Stopwatch clock;
  CensusReport report;
  report.pipeline = "saturate";
  const SaturationReport scan = saturation_scan(n);
  report.timing.emplace_back("scan", clock.lap());
  report.params.emplace_back("n", std::to_string(n));
  report.set_count("graphs_scanned", scan.graphs_scanned);
  report.set_count("two_dichromatic_non_tournaments", scan.two_dichromatic_non_tournaments);
  report.set_count("saturated", static_cast<std::int64_t>(scan.saturated.size()));
  for (const Digraph& d : scan.saturated)
    report.entries.push_back({"saturated", canonical_digraph(d), two_dicolorable(d), false, {}, {}});
  report.sort_entries();
  return report;
}

bool check_expectations(CensusReport& report, const Shard& shard) {
  if (shard.count > 1) return true;
  bool ok = true;
  for (const ExpectedCount& e : kExpectedCounts) {
    if (e.pipeline != report.pipeline) continue;
    const std::optional<std::int64_t> actual = report.count(std::string(e.key));
    if (!actual) continue;
    const bool match = e.relation == Relation::Equal ? *actual == e.value : *actual <= e.value;
    if (match) continue;
    report.discrepancies.push_back(std::string(e.key) + ": computed " + std::to_string(*actual) + ", expected " +
                                   (e.relation == Relation::AtMost ? "at most " : "") + std::to_string(e.value) +
                                   " (" + std::string(e.source) + ")" +
                                   (e.severity == Severity::Gate ? " [gate]" : " [note]"));
    if (e.severity == Severity::Gate) ok = false;
  }
  return ok;
}

}  // namespace dichro
