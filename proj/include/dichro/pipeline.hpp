#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dichro/enumerate.hpp"
#include "dichro/report.hpp"

namespace dichro {

struct PipelineOptions {
  int jobs = 1;
  Shard shard;
};

/// Runs fn(i) for i in [0, count) on `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

/// Tournaments on 7 vertices with dichromatic number 3 (group
/// "chi3-tournament") and the 3-dicritical oriented graphs below them
/// (group "dicritical").
CensusReport census_7(const PipelineOptions& options = {});

/// 8-vertex tournaments that are not 2-dicolourable and have no
/// vertex-deleted subtournament among the 7-vertex 3-dichromatic ones
/// (group "chi3-free-tournament").
CensusReport census_8_tournaments(std::span<const Digraph> chi3_tournaments_7, const PipelineOptions& options = {});

struct DescentResult {
  /// k-dicritical subdigraphs, canonical forms sorted by code.
  std::vector<Digraph> critical;
  /// Isomorphism classes of non-(k-1)-colourable subdigraphs visited.
  std::int64_t states = 0;
};

/// Deletes arcs while the digraph stays non-(k-1)-colourable, level by level
/// in arc count, each isomorphism class visited once. Leaves of this deletion
/// DAG are exactly the k-dicritical subdigraphs spanning the same vertex set.
/// Throws Not3Dichromatic if some root is (k-1)-colourable.
DescentResult descend(std::span<const Digraph> roots, int k = 3, int jobs = 1);
std::vector<Digraph> dicritical_descend(const Digraph& d, int k = 3);

/// Report over the descent from `roots` (group "dicritical") with an
/// arc histogram.
CensusReport dicritical_census(std::span<const Digraph> roots, const PipelineOptions& options = {});

struct CoverResult {
  std::vector<Digraph> cover;
  /// containment[i][t]: pool element i embeds in target t.
  std::vector<std::vector<bool>> containment;
  /// Number of targets containing each cover element.
  std::vector<int> cover_counts;
  /// Size of the greedy cover used as the initial upper bound.
  int greedy_size = 0;
};

/// Minimum-cardinality subset of `pool` such that every target contains at
/// least one chosen element, by branch and bound seeded with a greedy cover.
/// At most 64 targets. Throws Uncoverable when some target contains no pool
/// element.
CoverResult covering_set(std::span<const Digraph> targets, std::span<const Digraph> pool, int jobs = 1);

CensusReport cover_report(std::span<const Digraph> targets, std::span<const Digraph> pool,
                          const PipelineOptions& options = {});

/// Orientations with minimum in- and out-degree 2 of every 9-vertex graph
/// with `edges` edges and minimum degree 4; each must be 2-dicolourable.
/// Failures (if any) are listed in group "failure".
CensusReport min_arcs_9(int edges, const PipelineOptions& options = {});

/// Saturation scan wrapped as a report (group "saturated").
CensusReport saturation_report(int n);

/// Compares the report's counts with the manifest for its pipeline, adds a
/// discrepancy line for every mismatch and returns false if a gate failed.
/// Sharded runs are not checked.
bool check_expectations(CensusReport& report, const Shard& shard = {});

}  // namespace dichro
