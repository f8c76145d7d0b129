#include "dichro/canon.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <set>

namespace dichro {

std::string CanonicalCode::bytes() const {
  std::string out(1, static_cast<char>(n));
  const int bits = n * n;
  unsigned acc = 0;
  for (int k = 0; k < bits; ++k) {
    acc = (acc << 1) | ((rows[k / n] >> (k % n)) & 1U);
    if (k % 8 == 7) {
      out.push_back(static_cast<char>(acc));
      acc = 0;
    }
  }
  if (bits % 8 != 0) out.push_back(static_cast<char>(acc << (8 - bits % 8)));
  return out;
}

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes()) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

Digraph CanonicalCode::to_digraph() const {
  std::vector<VertexSet> out(n);
  for (int v = 0; v < n; ++v) out[v] = rows[v];
  return Digraph::from_rows(out);
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ c.n;
  for (int v = 0; v < c.n; ++v) {
    h ^= c.rows[v];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

namespace {

struct Partition {
  int count = 0;
  std::array<VertexSet, kMaxCanonicalOrder> cells{};
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

class Canonizer {
 public:
  Canonizer(std::span<const VertexSet> out, std::span<const VertexSet> in)
      : n_(static_cast<int>(out.size())), out_(out), in_(in) {}

  Labeling run() {
    Partition p;
    if (n_ > 0) {
      p.count = 1;
      p.cells[0] = all_vertices(n_);
    }
    refine(p);
    std::vector<int> prefix;
    search(p, prefix);

    Labeling result;
    result.code = best_code_;
    result.label = best_label_;
    result.generators = generators_;
    UnionFind uf(n_);
    for (const Permutation& g : generators_)
      for (int v = 0; v < n_; ++v) uf.unite(v, g[v]);
    result.orbit.resize(n_);
    for (int v = 0; v < n_; ++v) result.orbit[v] = uf.find(v);
    return result;
  }

 private:
  using Signature = std::array<std::uint8_t, 2 * kMaxCanonicalOrder>;

  // Splits every cell by the number of out- and in-neighbours its vertices
  // have in each cell, until the partition is equitable.
  void refine(Partition& p) const {
    struct Item {
      Signature sig;
      int v;
    };
    std::array<Item, kMaxCanonicalOrder> items;
    for (;;) {
      Partition next;
      for (int ci = 0; ci < p.count; ++ci) {
        const VertexSet cell = p.cells[ci];
        if ((cell & (cell - 1)) == 0) {
          next.cells[next.count++] = cell;
          continue;
        }
        int m = 0;
        for_each_vertex(cell, [&](int v) {
          Item& it = items[m++];
          it.sig.fill(0);
          it.v = v;
          for (int j = 0; j < p.count; ++j) {
            it.sig[2 * j] = static_cast<std::uint8_t>(popcount(out_[v] & p.cells[j]));
            it.sig[2 * j + 1] = static_cast<std::uint8_t>(popcount(in_[v] & p.cells[j]));
          }
        });
        std::sort(items.begin(), items.begin() + m, [](const Item& a, const Item& b) {
          return std::memcmp(a.sig.data(), b.sig.data(), a.sig.size()) < 0;
        });
        VertexSet current = singleton(items[0].v);
        for (int i = 1; i < m; ++i) {
          if (std::memcmp(items[i].sig.data(), items[i - 1].sig.data(), items[i].sig.size()) != 0) {
            next.cells[next.count++] = current;
            current = 0;
          }
          current |= singleton(items[i].v);
        }
        next.cells[next.count++] = current;
      }
      const bool stable = next.count == p.count;
      p = next;
      if (stable) return;
    }
  }

  void leaf(const Partition& p) {
    Permutation label(n_);
    for (int c = 0; c < n_; ++c) label[lowest(p.cells[c])] = c;
    CanonicalCode code;
    code.n = static_cast<std::uint8_t>(n_);
    for (int u = 0; u < n_; ++u) {
      std::uint16_t row = 0;
      for_each_vertex(out_[u], [&](int v) { row |= static_cast<std::uint16_t>(1U << label[v]); });
      code.rows[label[u]] = row;
    }
    if (!have_leaf_) {
      have_leaf_ = true;
      first_code_ = best_code_ = code;
      first_label_ = best_label_ = label;
      return;
    }
    if (code == first_code_) {
      add_automorphism(first_label_, label);
    } else if (code == best_code_) {
      add_automorphism(best_label_, label);
    } else if (code < best_code_) {
      best_code_ = code;
      best_label_ = label;
    }
  }

  // Both labellings produce the same code, so v -> reference^-1(label(v))
  // is an automorphism.
  void add_automorphism(const Permutation& reference, const Permutation& label) {
    Permutation inverse(n_);
    for (int v = 0; v < n_; ++v) inverse[reference[v]] = v;
    Permutation g(n_);
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      g[v] = inverse[label[v]];
      identity = identity && g[v] == v;
    }
    if (!identity) generators_.push_back(std::move(g));
  }

  void search(const Partition& p, std::vector<int>& prefix) {
    if (p.count == n_) {
      leaf(p);
      return;
    }
    int target = -1;
    for (int c = 0; c < p.count; ++c) {
      const int size = popcount(p.cells[c]);
      if (size > 1 && (target < 0 || size < popcount(p.cells[target]))) target = c;
    }
    const VertexSet candidates = p.cells[target];
    VertexSet explored = 0;
    for_each_vertex(candidates, [&](int v) {
      if (explored != 0 && equivalent_to_explored(prefix, v, explored)) return;
      explored |= singleton(v);
      Partition child;
      for (int c = 0; c < target; ++c) child.cells[child.count++] = p.cells[c];
      child.cells[child.count++] = singleton(v);
      child.cells[child.count++] = candidates & ~singleton(v);
      for (int c = target + 1; c < p.count; ++c) child.cells[child.count++] = p.cells[c];
      refine(child);
      prefix.push_back(v);
      search(child, prefix);
      prefix.pop_back();
    });
  }

  // Orbits of the group generated by the known automorphisms fixing every
  // individualised vertex; v may be skipped if it shares one with an
  // explored sibling.
  bool equivalent_to_explored(const std::vector<int>& prefix, int v, VertexSet explored) const {
    UnionFind uf(n_);
    bool any = false;
    for (const Permutation& g : generators_) {
      if (!std::all_of(prefix.begin(), prefix.end(), [&](int x) { return g[x] == x; })) continue;
      any = true;
      for (int u = 0; u < n_; ++u) uf.unite(u, g[u]);
    }
    if (!any) return false;
    bool hit = false;
    const int root = uf.find(v);
    for_each_vertex(explored, [&](int u) { hit = hit || uf.find(u) == root; });
    return hit;
  }

  int n_;
  std::span<const VertexSet> out_;
  std::span<const VertexSet> in_;
  bool have_leaf_ = false;
  CanonicalCode first_code_;
  CanonicalCode best_code_;
  Permutation first_label_;
  Permutation best_label_;
  std::vector<Permutation> generators_;
};

}  // namespace

Labeling canonical_labeling(std::span<const VertexSet> out_rows, std::span<const VertexSet> in_rows) {
  if (out_rows.size() > static_cast<std::size_t>(kMaxCanonicalOrder))
    throw Error(ErrorCode::TooLarge,
                "canonical labelling supports at most " + std::to_string(kMaxCanonicalOrder) + " vertices");
  return Canonizer(out_rows, in_rows).run();
}

Labeling canonical_labeling(const Digraph& d) {
  std::array<VertexSet, kMaxVertices> in{};
  for (int v = 0; v < d.order(); ++v) in[v] = d.in(v);
  return canonical_labeling(d.out_rows(), std::span<const VertexSet>(in.data(), d.order()));
}

CanonicalCode canonical_form(const Digraph& d) { return canonical_labeling(d).code; }

Digraph canonical_digraph(const Digraph& d) { return canonical_form(d).to_digraph(); }

bool are_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
  std::vector<DegreePair> da = a.degrees();
  std::vector<DegreePair> db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Digraph> dedupe(std::span<const Digraph> graphs) {
  std::vector<CanonicalCode> codes;
  codes.reserve(graphs.size());
  for (const Digraph& d : graphs) codes.push_back(canonical_form(d));
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<Digraph> result;
  result.reserve(codes.size());
  for (const CanonicalCode& c : codes) result.push_back(c.to_digraph());
  return result;
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Digraph& h, const Digraph& g) : h_(h), g_(g), image_(h.order(), -1) {
    const int n = h.order();
    // Most constrained first: each next vertex has the most arcs to the
    // vertices already placed, then the highest degree.
    VertexSet placed = 0;
    for (int step = 0; step < n; ++step) {
      int best = -1;
      int best_links = -1;
      int best_degree = -1;
      for (int v = 0; v < n; ++v) {
        if (placed & singleton(v)) continue;
        const int links = popcount(h.neighbours(v) & placed);
        const int degree = popcount(h.neighbours(v));
        if (links > best_links || (links == best_links && degree > best_degree)) {
          best = v;
          best_links = links;
          best_degree = degree;
        }
      }
      order_.push_back(best);
      placed |= singleton(best);
    }
    feasible_.resize(n, 0);
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < g.order(); ++w)
        if (g.in_degree(w) >= h.in_degree(v) && g.out_degree(w) >= h.out_degree(v)) feasible_[v] |= singleton(w);
  }

  std::optional<std::vector<int>> run() {
    if (place(0, 0)) return image_;
    return std::nullopt;
  }

 private:
  bool place(int depth, VertexSet used) {
    if (depth == h_.order()) return true;
    const int x = order_[depth];
    VertexSet candidates = feasible_[x] & ~used;
    for (int i = 0; i < depth && candidates != 0; ++i) {
      const int u = order_[i];
      if (h_.has_arc(x, u)) candidates &= g_.in(image_[u]);
      if (h_.has_arc(u, x)) candidates &= g_.out(image_[u]);
    }
    while (candidates != 0) {
      const int w = lowest(candidates);
      candidates &= candidates - 1;
      image_[x] = w;
      if (place(depth + 1, used | singleton(w))) return true;
    }
    image_[x] = -1;
    return false;
  }

  const Digraph& h_;
  const Digraph& g_;
  std::vector<int> order_;
  std::vector<VertexSet> feasible_;
  std::vector<int> image_;
};

}  // namespace

std::optional<std::vector<int>> find_embedding(const Digraph& h, const Digraph& g) {
  if (h.order() > g.order() || h.arc_count() > g.arc_count()) return std::nullopt;
  return EmbeddingSearch(h, g).run();
}

bool contains_subdigraph(const Digraph& h, const Digraph& g) {
  // Tournament one vertex short: an embedding is exactly an isomorphism onto
  // some vertex-deleted subtournament.
  if (h.is_tournament() && g.is_tournament() && h.order() + 1 == g.order() && g.order() <= kMaxCanonicalOrder) {
    const CanonicalCode target = canonical_form(h);
    for (int v = 0; v < g.order(); ++v)
      if (canonical_form(g.without_vertex(v)) == target) return true;
    return false;
  }
  return find_embedding(h, g).has_value();
}

std::vector<Permutation> group_elements(int n, std::span<const Permutation> generators) {
  Permutation identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  std::set<Permutation> seen{identity};
  std::vector<Permutation> elements{identity};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Permutation& g : generators) {
      Permutation next(n);
      for (int v = 0; v < n; ++v) next[v] = g[elements[i][v]];
      if (seen.insert(next).second) elements.push_back(std::move(next));
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

}  // namespace dichro
