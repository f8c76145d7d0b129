#include "dichro/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

namespace dichro {

UndirectedGraph UndirectedGraph::from_rows(std::span<const VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  if (n > kMaxCanonicalOrder) throw Error(ErrorCode::TooLarge, "undirected graphs are limited to 16 vertices");
  UndirectedGraph g;
  g.adj_.assign(rows.begin(), rows.end());
  for (int u = 0; u < n; ++u) {
    if (g.adj_[u] & (singleton(u) | ~all_vertices(n))) throw Error(ErrorCode::LoopArc, "bad adjacency row");
    for_each_vertex(g.adj_[u], [&](int v) {
      if (!g.adjacent(v, u)) throw Error(ErrorCode::NotAntisymmetric, "adjacency is not symmetric");
    });
  }
  return g;
}

UndirectedGraph UndirectedGraph::build(int n, std::span<const std::pair<int, int>> edges) {
  std::vector<VertexSet> rows(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorCode::BadVertex, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::LoopArc, "loop edge");
    if (rows[u] & singleton(v)) throw Error(ErrorCode::DuplicateArc, "edge repeated");
    rows[u] |= singleton(v);
    rows[v] |= singleton(u);
  }
  return from_rows(rows);
}

int UndirectedGraph::edge_count() const {
  int twice = 0;
  for (VertexSet row : adj_) twice += popcount(row);
  return twice / 2;
}

int UndirectedGraph::min_degree() const {
  int best = order();
  for (int v = 0; v < order(); ++v) best = std::min(best, degree(v));
  return order() == 0 ? 0 : best;
}

std::vector<std::pair<int, int>> UndirectedGraph::edges() const {
  std::vector<std::pair<int, int>> result;
  for (int u = 0; u < order(); ++u)
    for_each_vertex(adj_[u] & ~all_vertices(u + 1), [&](int v) { result.emplace_back(u, v); });
  return result;
}

UndirectedGraph underlying_graph(const Digraph& d) {
  std::vector<VertexSet> rows(d.order());
  for (int v = 0; v < d.order(); ++v) rows[v] = d.neighbours(v);
  return UndirectedGraph::from_rows(rows);
}

CanonicalCode canonical_form(const UndirectedGraph& g) { return canonical_labeling(g.rows(), g.rows()).code; }

namespace {

using Rows = std::vector<VertexSet>;

std::vector<VertexSet> transpose(const Rows& out) {
  Rows in(out.size(), 0);
  for (std::size_t u = 0; u < out.size(); ++u)
    for_each_vertex(out[u], [&](int v) { in[v] |= singleton(static_cast<int>(u)); });
  return in;
}

Rows rows_of(const CanonicalCode& code) {
  Rows rows(code.n);
  for (int v = 0; v < code.n; ++v) rows[v] = code.rows[v];
  return rows;
}

// One canonical-augmentation step. `extend(parent, emit)` calls emit(child)
// for every one-vertex extension of `parent`, the new vertex being the last.
template <typename Extend, typename Keep>
std::vector<CanonicalCode> augment(const std::vector<CanonicalCode>& parents, Extend extend, Keep keep,
                                   Shard shard) {
  std::vector<CanonicalCode> level;
  std::vector<CanonicalCode> siblings;
  for (std::size_t p = 0; p < parents.size(); ++p) {
    if (static_cast<int>(p % shard.count) != shard.index) continue;
    siblings.clear();
    const Rows parent = rows_of(parents[p]);
    const int added = static_cast<int>(parent.size());
    extend(parent, [&](const Rows& child) {
      if (!keep(child)) return;
      const Rows in = transpose(child);
      const Labeling lab = canonical_labeling(child, in);
      const int last = static_cast<int>(std::find(lab.label.begin(), lab.label.end(), added) - lab.label.begin());
      if (lab.orbit[last] != lab.orbit[added]) return;
      siblings.push_back(lab.code);
    });
    std::sort(siblings.begin(), siblings.end());
    siblings.erase(std::unique(siblings.begin(), siblings.end()), siblings.end());
    level.insert(level.end(), siblings.begin(), siblings.end());
  }
  std::sort(level.begin(), level.end());
  return level;
}

const auto keep_all = [](const Rows&) { return true; };

std::vector<Digraph> decode(const std::vector<CanonicalCode>& codes) {
  std::vector<Digraph> result;
  result.reserve(codes.size());
  for (const CanonicalCode& c : codes) result.push_back(c.to_digraph());
  return result;
}

std::vector<CanonicalCode> single_vertex() {
  CanonicalCode c;
  c.n = 1;
  return {c};
}

}  // namespace

std::vector<Digraph> tournaments(int n, Shard shard) {
  if (n < 1) throw Error(ErrorCode::BadVertex, "tournaments need at least one vertex");
  if (n > 9) throw Error(ErrorCode::TooLarge, "tournament enumeration is limited to 9 vertices");
  const auto extend = [](const Rows& parent, const auto& emit) {
    const int j = static_cast<int>(parent.size());
    Rows child(parent);
    child.push_back(0);
    for (VertexSet outs = 0; outs < singleton(j); ++outs) {
      const VertexSet ins = all_vertices(j) & ~outs;
      for (int v = 0; v < j; ++v) child[v] = parent[v] | ((ins >> v) & 1U ? singleton(j) : 0);
      child[j] = outs;
      emit(child);
    }
  };
  std::vector<CanonicalCode> level = single_vertex();
  for (int j = 1; j < n; ++j) level = augment(level, extend, keep_all, j + 1 == n ? shard : Shard{});
  if (n == 1 && shard.index != 0) level.clear();
  return decode(level);
}

std::vector<Digraph> oriented_graphs(int n, Shard shard) {
  if (n < 1) throw Error(ErrorCode::BadVertex, "need at least one vertex");
  if (n > 7) throw Error(ErrorCode::TooLarge, "oriented graph enumeration is limited to 7 vertices");
  const auto extend = [](const Rows& parent, const auto& emit) {
    const int j = static_cast<int>(parent.size());
    Rows child(parent);
    child.push_back(0);
    std::vector<int> relation(j, 0);  // 0 none, 1 v->new, 2 new->v
    for (;;) {
      for (int v = 0; v < j; ++v) child[v] = parent[v] | (relation[v] == 1 ? singleton(j) : 0);
      child[j] = 0;
      for (int v = 0; v < j; ++v)
        if (relation[v] == 2) child[j] |= singleton(v);
      emit(child);
      int i = 0;
      while (i < j && ++relation[i] == 3) relation[i++] = 0;
      if (i == j) break;
    }
  };
  std::vector<CanonicalCode> level = single_vertex();
  for (int j = 1; j < n; ++j) level = augment(level, extend, keep_all, j + 1 == n ? shard : Shard{});
  if (n == 1 && shard.index != 0) level.clear();
  return decode(level);
}

std::vector<UndirectedGraph> undirected_graphs(int n, int m, int min_deg, Shard shard) {
  if (n < 1) throw Error(ErrorCode::BadVertex, "need at least one vertex");
  if (n > 10) throw Error(ErrorCode::TooLarge, "undirected enumeration is limited to 10 vertices");
  if (m < 0 || 2 * m < n * min_deg || m > n * (n - 1) / 2)
    throw Error(ErrorCode::Infeasible, "no graph on " + std::to_string(n) + " vertices with " + std::to_string(m) +
                                           " edges and minimum degree " + std::to_string(min_deg));
  const auto extend = [](const Rows& parent, const auto& emit) {
    const int j = static_cast<int>(parent.size());
    Rows child(parent);
    child.push_back(0);
    for (VertexSet nbrs = 0; nbrs < singleton(j); ++nbrs) {
      for (int v = 0; v < j; ++v) child[v] = parent[v] | ((nbrs >> v) & 1U ? singleton(j) : 0);
      child[j] = nbrs;
      emit(child);
    }
  };
  // A graph on j vertices can still grow into the target only if its edge
  // count and degrees leave room for the n - j vertices still to come. Any
  // vertex deletion preserves these bounds, so every canonical parent of a
  // kept child is itself kept.
  const auto keep = [n, m, min_deg](const Rows& rows) {
    const int j = static_cast<int>(rows.size());
    const int missing = n - j;
    int twice = 0;
    for (VertexSet r : rows) {
      if (popcount(r) + missing < min_deg) return false;
      twice += popcount(r);
    }
    const int edges = twice / 2;
    const int room = missing * j + missing * (missing - 1) / 2;
    return edges <= m && edges + room >= m;
  };
  std::vector<CanonicalCode> level = single_vertex();
  if (!keep(rows_of(level.front()))) level.clear();
  for (int j = 1; j < n; ++j) level = augment(level, extend, keep, j + 1 == n ? shard : Shard{});
  if (n == 1 && shard.index != 0) level.clear();
  std::vector<UndirectedGraph> result;
  for (const CanonicalCode& c : level) {
    UndirectedGraph g = UndirectedGraph::from_rows(rows_of(c));
    if (g.edge_count() == m && g.min_degree() >= min_deg) result.push_back(std::move(g));
  }
  return result;
}

namespace {

class OrientationSearch {
 public:
  OrientationSearch(const UndirectedGraph& g, int min_in, int min_out,
                    const std::function<void(const Digraph&)>& visit)
      : g_(g), edges_(g.edges()), min_in_(min_in), min_out_(min_out), visit_(visit) {
    const int n = g.order();
    if (edges_.size() > 30) throw Error(ErrorCode::TooLarge, "orientation enumeration is limited to 30 edges");
    in_.assign(n, 0);
    out_.assign(n, 0);
    remaining_.resize(n);
    for (int v = 0; v < n; ++v) remaining_[v] = g.degree(v);

    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      index[edges_[e].first][edges_[e].second] = static_cast<int>(e);
      index[edges_[e].second][edges_[e].first] = static_cast<int>(e);
    }
    const Labeling lab = canonical_labeling(g.rows(), g.rows());
    for (const Permutation& p : group_elements(n, lab.generators)) {
      bool identity = true;
      for (int v = 0; v < n; ++v) identity = identity && p[v] == v;
      if (identity) continue;
      EdgeMap map;
      for (std::size_t e = 0; e < edges_.size(); ++e) {
        const int a = p[edges_[e].first];
        const int b = p[edges_[e].second];
        map.target.push_back(static_cast<std::uint8_t>(index[a][b]));
        map.flip.push_back(a > b ? 1 : 0);
      }
      automorphisms_.push_back(std::move(map));
    }
  }

  OrientationCount run() {
    if (feasible_start()) assign(0, 0);
    return count_;
  }

 private:
  struct EdgeMap {
    std::vector<std::uint8_t> target;
    std::vector<std::uint8_t> flip;
  };

  bool feasible_start() const {
    for (int v = 0; v < g_.order(); ++v)
      if (remaining_[v] < min_in_ || remaining_[v] < min_out_) return false;
    return true;
  }

  bool ok(int v) const { return in_[v] + remaining_[v] >= min_in_ && out_[v] + remaining_[v] >= min_out_; }

  // Bit e set: edge e = (u, v), u < v, is oriented u -> v.
  void assign(std::size_t e, std::uint32_t bits) {
    if (e == edges_.size()) {
      finish(bits);
      return;
    }
    const auto [u, v] = edges_[e];
    --remaining_[u];
    --remaining_[v];
    for (int dir = 0; dir < 2; ++dir) {
      const int tail = dir == 1 ? u : v;
      const int head = dir == 1 ? v : u;
      ++out_[tail];
      ++in_[head];
      if (ok(u) && ok(v)) assign(e + 1, bits | (static_cast<std::uint32_t>(dir) << e));
      --out_[tail];
      --in_[head];
    }
    ++remaining_[u];
    ++remaining_[v];
  }

  void finish(std::uint32_t bits) {
    ++count_.labeled;
    for (const EdgeMap& map : automorphisms_) {
      std::uint32_t image = 0;
      for (std::size_t e = 0; e < edges_.size(); ++e)
        image |= (((bits >> e) & 1U) ^ map.flip[e]) << map.target[e];
      if (image < bits) return;
    }
    ++count_.classes;
    if (!visit_) return;
    std::vector<VertexSet> rows(g_.order(), 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto [u, v] = edges_[e];
      if ((bits >> e) & 1U)
        rows[u] |= singleton(v);
      else
        rows[v] |= singleton(u);
    }
    visit_(Digraph::from_rows(rows));
  }

  const UndirectedGraph& g_;
  std::vector<std::pair<int, int>> edges_;
  int min_in_;
  int min_out_;
  const std::function<void(const Digraph&)>& visit_;
  std::vector<int> in_;
  std::vector<int> out_;
  std::vector<int> remaining_;
  std::vector<EdgeMap> automorphisms_;
  OrientationCount count_;
};

}  // namespace

OrientationCount for_each_orientation(const UndirectedGraph& g, int min_in, int min_out,
                                      const std::function<void(const Digraph&)>& visit) {
  return OrientationSearch(g, min_in, min_out, visit).run();
}

std::vector<Digraph> orientations(const UndirectedGraph& g, int min_in, int min_out) {
  std::vector<CanonicalCode> codes;
  for_each_orientation(g, min_in, min_out, [&](const Digraph& d) { codes.push_back(canonical_form(d)); });
  std::sort(codes.begin(), codes.end());
  return decode(codes);
}

}  // namespace dichro
