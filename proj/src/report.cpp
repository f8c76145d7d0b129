#include "dichro/report.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "dichro/canon.hpp"
#include "dichro/io.hpp"

namespace dichro {

void CensusReport::set_count(const std::string& name, std::int64_t value) {
  for (auto& [key, v] : counts)
    if (key == name) {
      v = value;
      return;
    }
  counts.emplace_back(name, value);
}

std::optional<std::int64_t> CensusReport::count(const std::string& name) const {
  for (const auto& [key, v] : counts)
    if (key == name) return v;
  return std::nullopt;
}

std::vector<Digraph> CensusReport::graphs(const std::string& group) const {
  std::vector<Digraph> result;
  for (const ReportEntry& e : entries)
    if (e.group == group) result.push_back(e.graph);
  return result;
}

void CensusReport::sort_entries() {
  std::vector<std::pair<CanonicalCode, std::size_t>> keys;
  for (std::size_t i = 0; i < entries.size(); ++i) keys.emplace_back(canonical_form(entries[i].graph), i);
  std::vector<std::size_t> order(entries.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (entries[a].group != entries[b].group) return entries[a].group < entries[b].group;
    return keys[a].first < keys[b].first;
  });
  std::vector<ReportEntry> sorted;
  sorted.reserve(entries.size());
  for (std::size_t i : order) sorted.push_back(std::move(entries[i]));
  entries = std::move(sorted);
}

std::string CensusReport::serialize(bool include_timing) const {
  std::ostringstream os;
  os << "report " << pipeline << "\n";
  for (const auto& [key, value] : params) os << "param " << key << " " << value << "\n";
  for (const auto& [key, value] : counts) os << "count " << key << " " << value << "\n";
  if (!arc_histogram.empty()) {
    os << "histogram-group " << histogram_group << "\n";
    for (const auto& [arcs, n] : arc_histogram) os << "histogram " << arcs << " " << n << "\n";
  }
  for (const std::string& note : discrepancies) os << "discrepancy " << note << "\n";
  if (include_timing)
    for (const auto& [stage, seconds] : timing)
      os << "timing " << stage << " " << std::fixed << std::setprecision(3) << seconds << "\n";
  std::map<std::string, int> index;
  for (const ReportEntry& e : entries) {
    os << "graph " << e.group << " " << ++index[e.group] << " n=" << e.graph.order()
       << " arcs=" << e.graph.arc_count();
    if (e.graph.order() <= kMaxCanonicalOrder) os << " code=" << canonical_form(e.graph).hex();
    os << "\n" << emit_matrix(e.graph);
    if (e.coloring) os << "coloring " << e.coloring->to_string() << "\n";
    if (e.not_two_colorable) os << "not-2-colorable\n";
    for (const auto& [arc, c] : e.arc_colorings)
      os << "without " << arc.tail + 1 << ">" << arc.head + 1 << " " << c.to_string() << "\n";
    if (e.tally) os << "contained-in " << *e.tally << "\n";
    os << "end\n";
  }
  return os.str();
}

namespace {

// Exhaustive checks built only from the literal reference cycle test.
bool reference_acyclic(const Digraph& d, VertexSet members) {
  for (int f = 0; f < d.order(); ++f)
    if (reference::contains_cycle(d, members, 0, f)) return false;
  return true;
}

bool reference_valid(const Digraph& d, const Coloring& c, int max_classes) {
  if (static_cast<int>(c.color.size()) != d.order()) return false;
  for (std::uint8_t col : c.color)
    if (col >= max_classes) return false;
  for (int cls = 0; cls < max_classes; ++cls)
    if (!reference_acyclic(d, c.class_set(cls))) return false;
  return true;
}

}  // namespace

std::vector<std::string> verify_report(const CensusReport& report) {
  std::vector<std::string> problems;
  std::map<std::string, std::set<CanonicalCode>> seen;
  std::map<std::string, int> index;
  for (const ReportEntry& e : report.entries) {
    const std::string where = e.group + " #" + std::to_string(++index[e.group]);
    const Digraph& d = e.graph;
    if (d.order() <= kMaxCanonicalOrder && !seen[e.group].insert(canonical_form(d)).second)
      problems.push_back(where + ": isomorphic to an earlier entry of the same group");
    if (e.coloring && !reference_valid(d, *e.coloring, e.coloring->classes))
      problems.push_back(where + ": colouring witness is not a valid dicolouring");
    if (e.not_two_colorable && reference::two_dicolorable(d))
      problems.push_back(where + ": claimed not 2-colourable but a 2-colouring exists");
    if (!e.arc_colorings.empty()) {
      std::set<Arc> covered;
      for (const auto& [arc, c] : e.arc_colorings) {
        if (!d.has_arc(arc.tail, arc.head)) {
          problems.push_back(where + ": arc witness for a missing arc");
          continue;
        }
        covered.insert(arc);
        if (!reference_valid(d.without_arc(arc), c, c.classes))
          problems.push_back(where + ": arc-deletion colouring is invalid");
      }
      if (static_cast<int>(covered.size()) != d.arc_count())
        problems.push_back(where + ": not every arc has a deletion witness");
    }
  }

  if (!report.arc_histogram.empty()) {
    std::map<int, std::int64_t> actual;
    for (const ReportEntry& e : report.entries)
      if (e.group == report.histogram_group) ++actual[e.graph.arc_count()];
    if (actual != report.arc_histogram) problems.push_back("arc histogram does not match the entries");
  }

  const std::vector<Digraph> targets = report.graphs("target");
  if (!targets.empty()) {
    std::vector<int> covered(targets.size(), 0);
    for (const ReportEntry& e : report.entries) {
      if (e.group != "cover") continue;
      int tally = 0;
      for (std::size_t t = 0; t < targets.size(); ++t)
        if (find_embedding(e.graph, targets[t])) {
          ++tally;
          ++covered[t];
        }
      if (e.tally && *e.tally != tally) problems.push_back("cover element tally mismatch");
    }
    for (std::size_t t = 0; t < targets.size(); ++t)
      if (covered[t] == 0) problems.push_back("target #" + std::to_string(t + 1) + " contains no cover element");
  }
  return problems;
}

}  // namespace dichro
