#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dichro/digraph.hpp"

namespace dichro {

inline constexpr int kMaxCanonicalOrder = 16;

/// Adjacency of the canonically relabelled digraph: the order, then one
/// out-neighbour row per canonical position. Equal codes mean isomorphic
/// digraphs; the ordering (order first, then rows lexicographically) is the
/// total order used for every sorted output.
struct CanonicalCode {
  std::uint8_t n = 0;
  std::array<std::uint16_t, kMaxCanonicalOrder> rows{};

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

  /// Order byte followed by the n*n adjacency bits, row-major, MSB first.
  std::string bytes() const;
  std::string hex() const;
  Digraph to_digraph() const;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept;
};

using Permutation = std::vector<int>;

struct Labeling {
  CanonicalCode code;
  /// label[v] is the canonical position of vertex v.
  Permutation label;
  /// orbit[v] is the least vertex in v's automorphism orbit.
  std::vector<int> orbit;
  /// Generators of the automorphism group found during the search.
  std::vector<Permutation> generators;
};

/// Canonical labelling by equitable refinement on (out, in) neighbour counts
/// followed by individualisation-refinement backtracking, keeping the least
/// adjacency code over all leaves. Automorphisms found at equal leaves prune
/// the search. Works on raw rows so undirected graphs (out == in) share it.
/// Throws Error{TooLarge} above kMaxCanonicalOrder vertices.
Labeling canonical_labeling(std::span<const VertexSet> out_rows, std::span<const VertexSet> in_rows);
Labeling canonical_labeling(const Digraph& d);

CanonicalCode canonical_form(const Digraph& d);
/// The canonical representative itself (code decoded).
Digraph canonical_digraph(const Digraph& d);

bool are_isomorphic(const Digraph& a, const Digraph& b);

/// One canonical representative per isomorphism class, sorted by code.
std::vector<Digraph> dedupe(std::span<const Digraph> graphs);

/// Injective map f from V(h) to V(g) with every arc u->v of h sent to an arc
/// f(u)->f(v) of g. Non-arcs of h are unconstrained. Candidate images are
/// tried in ascending vertex order, so the result is deterministic.
std::optional<std::vector<int>> find_embedding(const Digraph& h, const Digraph& g);
bool contains_subdigraph(const Digraph& h, const Digraph& g);

/// Every element of the group generated by `generators` on n points.
std::vector<Permutation> group_elements(int n, std::span<const Permutation> generators);

}  // namespace dichro
