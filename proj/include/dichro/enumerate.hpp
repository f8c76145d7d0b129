#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dichro/canon.hpp"
#include "dichro/digraph.hpp"

namespace dichro {

/// Simple undirected graph on at most kMaxCanonicalOrder vertices.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  static UndirectedGraph from_rows(std::span<const VertexSet> rows);
  static UndirectedGraph build(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;
  int degree(int v) const { return popcount(adj_[v]); }
  int min_degree() const;
  VertexSet neighbours(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  std::span<const VertexSet> rows() const { return adj_; }
  /// Edges (u, v) with u < v in row-major order.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  std::vector<VertexSet> adj_;
};

UndirectedGraph underlying_graph(const Digraph& d);
CanonicalCode canonical_form(const UndirectedGraph& g);

/// Restricts the last augmentation level to parents whose index in the
/// (deterministic) previous level is congruent to `index` mod `count`.
/// Shards are disjoint and their union is the full output.
struct Shard {
  int index = 0;
  int count = 1;
};

/// One representative (canonical form) per isomorphism class of tournaments
/// on n vertices, sorted by canonical code. Generated by canonical
/// augmentation: a child is kept only when the added vertex lies in the
/// automorphism orbit of the child's canonical deletion vertex (the vertex
/// labelled last), with same-parent duplicates merged. n <= 9.
std::vector<Digraph> tournaments(int n, Shard shard = {});

/// All oriented graphs on n vertices up to isomorphism, n <= 7.
std::vector<Digraph> oriented_graphs(int n, Shard shard = {});

/// Undirected graphs on n vertices with exactly m edges and minimum degree
/// at least min_deg, one per isomorphism class, sorted by canonical code.
/// Throws Error{Infeasible} when m < ceil(n * min_deg / 2). n <= 10.
std::vector<UndirectedGraph> undirected_graphs(int n, int m, int min_deg, Shard shard = {});

struct OrientationCount {
  /// Valid orientations of the given labelled graph.
  std::int64_t labeled = 0;
  /// Isomorphism classes among them (orbits of Aut(G)).
  std::int64_t classes = 0;
};

/// Visits one orientation per isomorphism class of orientations of g with
/// minimum in-degree >= min_in and minimum out-degree >= min_out. Any
/// isomorphism between two orientations of g is an automorphism of g, so
/// classes are the Aut(g)-orbits; the visited orientation is the least
/// orbit member under the edge-bit order. Backtracks over edges in row-major
/// order and prunes as soon as a vertex can no longer reach its bounds.
OrientationCount for_each_orientation(const UndirectedGraph& g, int min_in, int min_out,
                                      const std::function<void(const Digraph&)>& visit);

/// Canonical representatives of the orientation classes, sorted by code.
std::vector<Digraph> orientations(const UndirectedGraph& g, int min_in, int min_out);

}  // namespace dichro
