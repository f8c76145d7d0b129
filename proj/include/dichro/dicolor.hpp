#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dichro/digraph.hpp"

namespace dichro {

/// Vertex colouring with colours 0..classes-1. For two colours, 0 is red
/// and 1 is blue.
struct Coloring {
  std::vector<std::uint8_t> color;
  int classes = 0;

  VertexSet class_set(int c) const;
  /// Colour digits, one per vertex, e.g. "0110".
  std::string to_string() const;
  static Coloring from_string(std::string_view digits);
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Directed cycle listed in traversal order; `color` is the colour class it
/// was found in, or -1 when found outside a colouring.
struct CycleWitness {
  std::vector<int> vertices;
  int color = -1;
};

/// True iff the subdigraph induced on `subset` has no directed cycle.
bool is_acyclic(const Digraph& d, VertexSet subset);
bool is_acyclic(const Digraph& d);

/// Iterative depth-first search from every vertex of `subset`; returns a
/// cycle of the induced subdigraph, or nullopt when it is acyclic.
std::optional<CycleWitness> find_cycle(const Digraph& d, VertexSet subset);

/// True iff v lies on a directed cycle inside subset ∪ {v}.
bool closes_cycle(const Digraph& d, VertexSet subset, int v);

/// A colouring is valid when it covers every vertex and each class is acyclic.
bool is_valid_coloring(const Digraph& d, const Coloring& c);
/// First monochromatic cycle of an invalid colouring.
std::optional<CycleWitness> monochromatic_cycle(const Digraph& d, const Coloring& c);

/// Backtracking search for an acyclic k-colouring. Vertices are coloured in
/// descending total degree (ties by index) and each assignment only checks
/// cycles through the new vertex. Colour c is allowed only once colours
/// 0..c-1 have appeared, so the first vertex is always colour 0. The result
/// is the lexicographically least valid colouring in that vertex order.
std::optional<Coloring> k_dicolorable(const Digraph& d, int k);
std::optional<Coloring> two_dicolorable(const Digraph& d);

struct DichromaticResult {
  int chi = 0;
  Coloring witness;
};

/// Exact dichromatic number with a witness colouring of that many classes.
DichromaticResult dichromatic_number(const Digraph& d);

/// k-dicritical: not (k-1)-colourable, while every one-arc deletion is.
///
/// Arc deletions suffice once isolated vertices are excluded. The
/// dichromatic number is monotone under subdigraphs, and a proper subdigraph
/// either misses an arc a, or misses a vertex v; if v has an incident arc a
/// the subdigraph lies inside D - a. The remaining case, D minus an isolated
/// vertex, keeps the dichromatic number, so a digraph with an isolated
/// vertex is never dicritical.
bool is_k_dicritical(const Digraph& d, int k);

/// Cheap necessary condition for k-dicriticality: minimum in- and
/// out-degree both at least k-1.
bool min_degree_prune(const Digraph& d, int k);

namespace reference {

/// Literal recursive cycle test: from f, follow arcs into `members`; a cycle
/// is reported when the walk returns to a vertex of `path` (the vertices
/// visited before f).
bool contains_cycle(const Digraph& d, VertexSet members, VertexSet path, int f);

/// Enumerates every 2-colouring (mask bit v set = blue) in increasing mask
/// order and tests each class with contains_cycle started from every
/// vertex. Exponential; kept as an independent oracle.
std::optional<Coloring> two_dicolorable(const Digraph& d);

/// Exhaustive k^n enumeration, for tiny digraphs only.
std::optional<Coloring> k_dicolorable(const Digraph& d, int k);

}  // namespace reference
}  // namespace dichro
