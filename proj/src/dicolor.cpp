#include "dichro/dicolor.hpp"

#include <algorithm>
#include <numeric>

namespace dichro {

VertexSet Coloring::class_set(int c) const {
  VertexSet s = 0;
  for (std::size_t v = 0; v < color.size(); ++v)
    if (color[v] == c) s |= singleton(static_cast<int>(v));
  return s;
}

std::string Coloring::to_string() const {
  std::string s;
  s.reserve(color.size());
  for (std::uint8_t c : color) s.push_back(static_cast<char>('0' + c));
  return s;
}

Coloring Coloring::from_string(std::string_view digits) {
  Coloring c;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw Error(ErrorCode::BadChar, "colour digit expected");
    c.color.push_back(static_cast<std::uint8_t>(ch - '0'));
    c.classes = std::max(c.classes, ch - '0' + 1);
  }
  return c;
}

bool is_acyclic(const Digraph& d, VertexSet subset) {
  VertexSet live = subset & d.vertices();
  for (;;) {
    VertexSet sinks = 0;
    for_each_vertex(live, [&](int v) {
      if ((d.out(v) & live) == 0) sinks |= singleton(v);
    });
    if (sinks == 0) return live == 0;
    live &= ~sinks;
  }
}

bool is_acyclic(const Digraph& d) { return is_acyclic(d, d.vertices()); }

std::optional<CycleWitness> find_cycle(const Digraph& d, VertexSet subset) {
  subset &= d.vertices();
  enum : std::uint8_t { kWhite, kGray, kBlack };
  std::vector<std::uint8_t> state(d.order(), kWhite);
  struct Frame {
    int vertex;
    VertexSet pending;
  };
  std::vector<Frame> stack;
  std::optional<CycleWitness> found;
  for_each_vertex(subset, [&](int root) {
    if (found || state[root] != kWhite) return;
    state[root] = kGray;
    stack.push_back({root, d.out(root) & subset});
    while (!stack.empty() && !found) {
      Frame& top = stack.back();
      if (top.pending == 0) {
        state[top.vertex] = kBlack;
        stack.pop_back();
        continue;
      }
      const int next = lowest(top.pending);
      top.pending &= top.pending - 1;
      if (state[next] == kGray) {
        CycleWitness w;
        auto start = std::find_if(stack.begin(), stack.end(), [&](const Frame& f) { return f.vertex == next; });
        for (auto it = start; it != stack.end(); ++it) w.vertices.push_back(it->vertex);
        found = std::move(w);
      } else if (state[next] == kWhite) {
        state[next] = kGray;
        stack.push_back({next, d.out(next) & subset});
      }
    }
    stack.clear();
  });
  return found;
}

bool closes_cycle(const Digraph& d, VertexSet subset, int v) {
  const VertexSet targets = d.in(v) & subset;
  if (targets == 0) return false;
  VertexSet reach = d.out(v) & subset;
  VertexSet frontier = reach;
  while (frontier != 0) {
    if (reach & targets) return true;
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int u) { next |= d.out(u); });
    next &= subset & ~reach;
    reach |= next;
    frontier = next;
  }
  return (reach & targets) != 0;
}

std::optional<CycleWitness> monochromatic_cycle(const Digraph& d, const Coloring& c) {
  for (int cls = 0; cls < c.classes; ++cls) {
    if (auto w = find_cycle(d, c.class_set(cls))) {
      w->color = cls;
      return w;
    }
  }
  return std::nullopt;
}

bool is_valid_coloring(const Digraph& d, const Coloring& c) {
  if (static_cast<int>(c.color.size()) != d.order()) return false;
  for (std::uint8_t col : c.color)
    if (col >= c.classes) return false;
  for (int cls = 0; cls < c.classes; ++cls)
    if (!is_acyclic(d, c.class_set(cls))) return false;
  return true;
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const Digraph& d, int k) : d_(d), k_(k), order_(d.order()), color_(d.order(), 0) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return d.in_degree(a) + d.out_degree(a) > d.in_degree(b) + d.out_degree(b);
    });
    classes_.fill(0);
  }

  std::optional<Coloring> run() {
    if (!assign(0, 0)) return std::nullopt;
    return Coloring{color_, k_};
  }

 private:
  bool assign(int depth, int used) {
    if (depth == d_.order()) return true;
    const int v = order_[depth];
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (closes_cycle(d_, classes_[c], v)) continue;
      classes_[c] |= singleton(v);
      color_[v] = static_cast<std::uint8_t>(c);
      if (assign(depth + 1, std::max(used, c + 1))) return true;
      classes_[c] &= ~singleton(v);
    }
    return false;
  }

  const Digraph& d_;
  int k_;
  std::vector<int> order_;
  std::vector<std::uint8_t> color_;
  std::array<VertexSet, kMaxVertices> classes_{};
};

}  // namespace

std::optional<Coloring> k_dicolorable(const Digraph& d, int k) {
  if (k <= 0) return d.order() == 0 ? std::optional<Coloring>(Coloring{{}, 0}) : std::nullopt;
  return ColoringSearch(d, k).run();
}

std::optional<Coloring> two_dicolorable(const Digraph& d) { return k_dicolorable(d, 2); }

DichromaticResult dichromatic_number(const Digraph& d) {
  if (d.order() == 0) return {0, Coloring{}};
  for (int k = 1;; ++k)
    if (auto c = k_dicolorable(d, k)) return {k, std::move(*c)};
}

bool is_k_dicritical(const Digraph& d, int k) {
  if (k < 2) return false;
  for (int v = 0; v < d.order(); ++v)
    if (d.neighbours(v) == 0) return false;
  if (k_dicolorable(d, k - 1)) return false;
  for (const Arc& a : d.arcs())
    if (!k_dicolorable(d.without_arc(a), k - 1)) return false;
  return true;
}

bool min_degree_prune(const Digraph& d, int k) {
  return d.min_in_degree() >= k - 1 && d.min_out_degree() >= k - 1;
}

namespace reference {

bool contains_cycle(const Digraph& d, VertexSet members, VertexSet path, int f) {
  const VertexSet extended = path | singleton(f);
  for (int v = 0; v < d.order(); ++v) {
    if (!(members & singleton(v))) continue;
    if (!d.has_arc(f, v)) continue;
    if (path & singleton(v)) return true;
    if (contains_cycle(d, members, extended, v)) return true;
  }
  return false;
}

std::optional<Coloring> two_dicolorable(const Digraph& d) {
  const int n = d.order();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (int c = 0; c < 2; ++c) {
      const VertexSet members = c == 0 ? (~mask & d.vertices()) : mask;
      for (int f = 0; f < n; ++f)
        if (contains_cycle(d, members, 0, f)) ok = false;
    }
    if (ok) {
      Coloring col{std::vector<std::uint8_t>(n, 0), 2};
      for (int v = 0; v < n; ++v) col.color[v] = (mask >> v) & 1U;
      return col;
    }
  }
  return std::nullopt;
}

std::optional<Coloring> k_dicolorable(const Digraph& d, int k) {
  const int n = d.order();
  if (k <= 0) return n == 0 ? std::optional<Coloring>(Coloring{{}, 0}) : std::nullopt;
  Coloring col{std::vector<std::uint8_t>(n, 0), k};
  for (;;) {
    bool ok = true;
    for (int c = 0; c < k && ok; ++c) {
      const VertexSet members = col.class_set(c);
      for (int f = 0; f < n && ok; ++f)
        if (contains_cycle(d, members, 0, f)) ok = false;
    }
    if (ok) return col;
    int i = 0;
    while (i < n && ++col.color[i] == k) col.color[i++] = 0;
    if (i == n) return std::nullopt;
  }
}

}  // namespace reference
}  // namespace dichro
