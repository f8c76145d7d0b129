#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dichro {

/// Set of vertices of one graph, bit v set iff vertex v is a member.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 62;

inline constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet all_vertices(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }

/// Calls fn(v) for every member of s in ascending order.
template <typename Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s != 0) {
    fn(lowest(s));
    s &= s - 1;
  }
}

enum class ErrorCode {
  LoopArc,
  TwoCycle,
  DuplicateArc,
  TooLarge,
  BadVertex,
  MissingArc,
  LastVertex,
  BadChar,
  NotAntisymmetric,
  NonZeroDiagonal,
  RaggedRows,
  BadHeader,
  BadLength,
  EvenMiddle,
  TooShort,
  NotButterfly,
  CreatesTwoCycle,
  Infeasible,
  Not3Dichromatic,
  Uncoverable,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Arc {
  int tail = 0;
  int head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct DegreePair {
  int in = 0;
  int out = 0;
  int total() const { return in + out; }
  friend auto operator<=>(const DegreePair&, const DegreePair&) = default;
};

/// Loopless oriented graph (no 2-cycles, no parallel arcs) on at most
/// kMaxVertices vertices. Vertices are 0-based internally. Values are
/// immutable once built; every surgery returns a new digraph.
class Digraph {
 public:
  Digraph() = default;

  /// Throws Error{TooLarge, BadVertex, LoopArc, TwoCycle, DuplicateArc}.
  static Digraph build(int n, std::span<const Arc> arcs);
  static Digraph build(int n, std::initializer_list<Arc> arcs) {
    return build(n, std::span<const Arc>(arcs.begin(), arcs.size()));
  }
  /// Builds from out-neighbour rows; rows.size() is the order.
  static Digraph from_rows(std::span<const VertexSet> out_rows);

  int order() const { return n_; }
  int arc_count() const { return arcs_; }
  VertexSet vertices() const { return all_vertices(n_); }
  VertexSet out(int v) const { return out_[v]; }
  VertexSet in(int v) const { return in_[v]; }
  VertexSet neighbours(int v) const { return out_[v] | in_[v]; }
  bool has_arc(int tail, int head) const { return (out_[tail] >> head) & 1U; }
  bool adjacent(int u, int v) const { return (neighbours(u) >> v) & 1U; }

  int out_degree(int v) const { return popcount(out_[v]); }
  int in_degree(int v) const { return popcount(in_[v]); }
  std::vector<DegreePair> degrees() const;
  int min_in_degree() const;
  int min_out_degree() const;

  bool is_tournament() const;

  /// Arcs in row-major order (by tail, then head).
  std::vector<Arc> arcs() const;
  std::span<const VertexSet> out_rows() const { return {out_.data(), static_cast<std::size_t>(n_)}; }

  Digraph without_arc(Arc a) const;
  Digraph with_arc(Arc a) const;
  Digraph without_vertex(int v) const;
  /// Subdigraph induced on `keep`, indices compacted in ascending order.
  Digraph induced(VertexSet keep) const;
  Digraph transposed() const;
  /// Vertex v of this digraph becomes vertex perm[v] of the result.
  Digraph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Digraph& a, const Digraph& b);

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int arcs_ = 0;
  std::array<VertexSet, kMaxVertices> out_{};
  std::array<VertexSet, kMaxVertices> in_{};
};

}  // namespace dichro
