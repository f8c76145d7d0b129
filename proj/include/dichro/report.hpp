#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dichro/dicolor.hpp"
#include "dichro/digraph.hpp"

namespace dichro {

/// One graph in a report together with the evidence for its membership.
struct ReportEntry {
  std::string group;
  Digraph graph;
  /// Valid colouring; proves the dichromatic number is at most its class count.
  std::optional<Coloring> coloring;
  /// Claim that no 2-colouring exists; re-checked exhaustively.
  bool not_two_colorable = false;
  /// (k-1)-colouring of graph - arc for every arc; proves criticality.
  std::vector<std::pair<Arc, Coloring>> arc_colorings;
  /// Cover reports: number of targets containing this graph.
  std::optional<int> tally;
};

/// Deterministic result of a pipeline run. Entries are sorted by group and
/// then by canonical code; serialize() is byte-identical across runs unless
/// timing is requested.
struct CensusReport {
  std::string pipeline;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::pair<std::string, std::int64_t>> counts;
  /// Arc-count histogram over the entries of `histogram_group`.
  std::map<int, std::int64_t> arc_histogram;
  std::string histogram_group;
  std::vector<ReportEntry> entries;
  std::vector<std::string> discrepancies;
  std::vector<std::pair<std::string, double>> timing;

  void set_count(const std::string& name, std::int64_t value);
  std::optional<std::int64_t> count(const std::string& name) const;
  std::vector<Digraph> graphs(const std::string& group) const;
  void sort_entries();

  std::string serialize(bool include_timing = false) const;
};

/// Re-checks every witness in the report with the exhaustive reference
/// routines only (no search code): colourings are valid, non-2-colourable
/// claims hold, arc witnesses cover every arc, entries within a group are
/// pairwise non-isomorphic, the histogram matches, and in cover reports each
/// target contains a cover element. Returns human-readable problems.
std::vector<std::string> verify_report(const CensusReport& report);

}  // namespace dichro
