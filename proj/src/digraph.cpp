#include "dichro/digraph.hpp"

#include <algorithm>
#include <numeric>

namespace dichro {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopArc: return "LoopArc";
    case ErrorCode::TwoCycle: return "TwoCycle";
    case ErrorCode::DuplicateArc: return "DuplicateArc";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadVertex: return "BadVertex";
    case ErrorCode::MissingArc: return "MissingArc";
    case ErrorCode::LastVertex: return "LastVertex";
    case ErrorCode::BadChar: return "BadChar";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::NonZeroDiagonal: return "NonZeroDiagonal";
    case ErrorCode::RaggedRows: return "RaggedRows";
    case ErrorCode::BadHeader: return "BadHeader";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::EvenMiddle: return "EvenMiddle";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::NotButterfly: return "NotButterfly";
    case ErrorCode::CreatesTwoCycle: return "CreatesTwoCycle";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::Not3Dichromatic: return "Not3Dichromatic";
    case ErrorCode::Uncoverable: return "Uncoverable";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

Digraph Digraph::build(int n, std::span<const Arc> arcs) {
  if (n < 0 || n > kMaxVertices)
    throw Error(ErrorCode::TooLarge, "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
  Digraph d;
  d.n_ = n;
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
      throw Error(ErrorCode::BadVertex, "arc endpoint out of range");
    if (a.tail == a.head)
      throw Error(ErrorCode::LoopArc, "loop at vertex " + std::to_string(a.tail + 1));
    if (d.has_arc(a.tail, a.head))
      throw Error(ErrorCode::DuplicateArc,
                  "arc " + std::to_string(a.tail + 1) + "->" + std::to_string(a.head + 1) + " repeated");
    if (d.has_arc(a.head, a.tail))
      throw Error(ErrorCode::TwoCycle,
                  "both directions between " + std::to_string(a.tail + 1) + " and " + std::to_string(a.head + 1));
    d.out_[a.tail] |= singleton(a.head);
    d.in_[a.head] |= singleton(a.tail);
    ++d.arcs_;
  }
  return d;
}

Digraph Digraph::from_rows(std::span<const VertexSet> out_rows) {
  const int n = static_cast<int>(out_rows.size());
  if (n > kMaxVertices)
    throw Error(ErrorCode::TooLarge, "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
  Digraph d;
  d.n_ = n;
  for (int u = 0; u < n; ++u) {
    const VertexSet row = out_rows[u];
    if (row & ~all_vertices(n)) throw Error(ErrorCode::BadVertex, "row has bits beyond the order");
    if (row & singleton(u)) throw Error(ErrorCode::LoopArc, "loop at vertex " + std::to_string(u + 1));
    d.out_[u] = row;
    d.arcs_ += popcount(row);
    for_each_vertex(row, [&](int v) { d.in_[v] |= singleton(u); });
  }
  for (int u = 0; u < n; ++u)
    if (d.out_[u] & d.in_[u])
      throw Error(ErrorCode::TwoCycle, "vertex " + std::to_string(u + 1) + " lies on a 2-cycle");
  return d;
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(v + 1) + " out of range");
}

std::vector<DegreePair> Digraph::degrees() const {
  std::vector<DegreePair> result(n_);
  for (int v = 0; v < n_; ++v) result[v] = {in_degree(v), out_degree(v)};
  return result;
}

int Digraph::min_in_degree() const {
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, in_degree(v));
  return n_ == 0 ? 0 : best;
}

int Digraph::min_out_degree() const {
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, out_degree(v));
  return n_ == 0 ? 0 : best;
}

bool Digraph::is_tournament() const { return arcs_ == n_ * (n_ - 1) / 2; }

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arcs_);
  for (int u = 0; u < n_; ++u) for_each_vertex(out_[u], [&](int v) { result.push_back({u, v}); });
  return result;
}

Digraph Digraph::without_arc(Arc a) const {
  check_vertex(a.tail);
  check_vertex(a.head);
  if (!has_arc(a.tail, a.head))
    throw Error(ErrorCode::MissingArc,
                "no arc " + std::to_string(a.tail + 1) + "->" + std::to_string(a.head + 1));
  Digraph d = *this;
  d.out_[a.tail] &= ~singleton(a.head);
  d.in_[a.head] &= ~singleton(a.tail);
  --d.arcs_;
  return d;
}

Digraph Digraph::with_arc(Arc a) const {
  check_vertex(a.tail);
  check_vertex(a.head);
  if (a.tail == a.head) throw Error(ErrorCode::LoopArc, "loop at vertex " + std::to_string(a.tail + 1));
  if (has_arc(a.tail, a.head)) throw Error(ErrorCode::DuplicateArc, "arc already present");
  if (has_arc(a.head, a.tail)) throw Error(ErrorCode::TwoCycle, "reverse arc present");
  Digraph d = *this;
  d.out_[a.tail] |= singleton(a.head);
  d.in_[a.head] |= singleton(a.tail);
  ++d.arcs_;
  return d;
}

Digraph Digraph::without_vertex(int v) const {
  check_vertex(v);
  if (n_ == 1) throw Error(ErrorCode::LastVertex, "cannot delete the only vertex");
  return induced(vertices() & ~singleton(v));
}

Digraph Digraph::induced(VertexSet keep) const {
  keep &= vertices();
  std::array<int, kMaxVertices> index{};
  int m = 0;
  for_each_vertex(keep, [&](int v) { index[v] = m++; });
  std::vector<VertexSet> rows(m, 0);
  for_each_vertex(keep, [&](int u) {
    for_each_vertex(out_[u] & keep, [&](int v) { rows[index[u]] |= singleton(index[v]); });
  });
  return from_rows(rows);
}

Digraph Digraph::transposed() const {
  Digraph d = *this;
  std::swap(d.out_, d.in_);
  return d;
}

Digraph Digraph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw Error(ErrorCode::BadVertex, "permutation size mismatch");
  Digraph d;
  d.n_ = n_;
  d.arcs_ = arcs_;
  for (int u = 0; u < n_; ++u) {
    VertexSet row = 0;
    for_each_vertex(out_[u], [&](int v) { row |= singleton(perm[v]); });
    d.out_[perm[u]] = row;
    for_each_vertex(row, [&](int v) { d.in_[v] |= singleton(perm[u]); });
  }
  return d;
}

bool operator==(const Digraph& a, const Digraph& b) {
  return a.n_ == b.n_ && std::equal(a.out_.begin(), a.out_.begin() + a.n_, b.out_.begin());
}

}  // namespace dichro
