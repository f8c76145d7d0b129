#include "dichro/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "dichro/dicolor.hpp"
#include "dichro/enumerate.hpp"

namespace dichro {
namespace {

void add_circuit(std::vector<Arc>& arcs, int first, int len) {
  for (int i = 0; i < len; ++i) arcs.push_back({first + i, first + (i + 1) % len});
}

}  // namespace

Digraph gadget_s() {
  constexpr int a = 0, b = 1;
  std::vector<Arc> arcs;
  add_circuit(arcs, 2, 3);
  arcs.push_back({a, b});
  for (int x = 2; x < 5; ++x) {
    arcs.push_back({b, x});
    arcs.push_back({x, a});
  }
  return Digraph::build(5, arcs);
}

Digraph d1_general(int middle_len, const std::vector<int>& outer_lens) {
  if (middle_len < 3) throw Error(ErrorCode::TooShort, "middle circuit needs length at least 3");
  if (middle_len % 2 == 0) throw Error(ErrorCode::EvenMiddle, "middle circuit length must be odd");
  if (static_cast<int>(outer_lens.size()) != middle_len)
    throw Error(ErrorCode::BadVertex, "need one outer circuit length per middle arc");
  if (std::any_of(outer_lens.begin(), outer_lens.end(), [](int len) { return len < 3; }))
    throw Error(ErrorCode::TooShort, "outer circuits need length at least 3");
  const int n = middle_len + std::accumulate(outer_lens.begin(), outer_lens.end(), 0);
  if (n > kMaxVertices) throw Error(ErrorCode::TooLarge, "construction exceeds the vertex cap");

  std::vector<Arc> arcs;
  add_circuit(arcs, 0, middle_len);
  int next = middle_len;
  for (int i = 0; i < middle_len; ++i) {
    const int a = i;
    const int b = (i + 1) % middle_len;
    add_circuit(arcs, next, outer_lens[i]);
    for (int y = next; y < next + outer_lens[i]; ++y) {
      arcs.push_back({y, a});
      arcs.push_back({b, y});
    }
    next += outer_lens[i];
  }
  Digraph d = Digraph::build(n, arcs);
  const int expected_arcs = middle_len + 3 * (n - middle_len);
  if (d.arc_count() != expected_arcs) throw std::logic_error("d1_general arc count formula violated");
  return d;
}

Digraph d1() { return d1_general(3, {3, 3, 3}); }

Digraph d3() {
  std::vector<Arc> arcs;
  add_circuit(arcs, 0, 3);
  add_circuit(arcs, 3, 3);
  for (int i = 0; i < 3; ++i) {
    arcs.push_back({i, 6});
    arcs.push_back({6, 3 + i});
    for (int j = 0; j < 3; ++j) arcs.push_back({3 + j, i});
  }
  return Digraph::build(7, arcs);
}

Digraph o_kl(int k, int l) {
  if (k < 3 || l < 3) throw Error(ErrorCode::TooShort, "both circuits need length at least 3");
  const int v = k + l;
  if (v + 1 > kMaxVertices) throw Error(ErrorCode::TooLarge, "construction exceeds the vertex cap");
  std::vector<Arc> arcs;
  add_circuit(arcs, 0, k);
  add_circuit(arcs, k, l);
  for (int x = 0; x < k; ++x) arcs.push_back({v, x});
  for (int y = k; y < k + l; ++y) arcs.push_back({y, v});
  for (int x = 0; x < k; ++x)
    for (int y = k; y < k + l; ++y) arcs.push_back({x, y});
  Digraph d = Digraph::build(v + 1, arcs);
  if (d.arc_count() != k * l + 2 * k + 2 * l) throw std::logic_error("o_kl arc count formula violated");
  return d;
}

Digraph d2() {
  return d3()
      .without_arc({3, 0})
      .without_arc({4, 1})
      .without_arc({5, 2})
      .with_arc({1, 4})
      .with_arc({2, 5});
}

Digraph d2_general(int k) {
  if (k < 3) throw Error(ErrorCode::TooShort, "circuits need length at least 3");
  const int x = 2 * k;
  if (x + 1 > kMaxVertices) throw Error(ErrorCode::TooLarge, "construction exceeds the vertex cap");
  const auto u = [](int i) { return i; };
  const auto v = [k](int i) { return k + i; };
  std::vector<Arc> arcs;
  add_circuit(arcs, 0, k);
  add_circuit(arcs, k, k);
  for (int i = 0; i < k; ++i) {
    arcs.push_back({x, v(i)});
    arcs.push_back({u(i), x});
    for (int j = 0; j < k; ++j)
      if (i != j) arcs.push_back({v(i), u(j)});
  }
  arcs.push_back({u(0), v(0)});
  arcs.push_back({u(1), v(1)});
  return Digraph::build(x + 1, arcs);
}

Family parse_family(std::string_view name) {
  std::string key;
  for (char c : name)
    if (c != '-' && c != '_') key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (key == "s") return Family::S;
  if (key == "d1") return Family::D1;
  if (key == "d1general") return Family::D1General;
  if (key == "d2") return Family::D2;
  if (key == "d2general") return Family::D2General;
  if (key == "d3") return Family::D3;
  if (key == "okl") return Family::Okl;
  throw Error(ErrorCode::BadChar, "unknown family '" + std::string(name) + "'");
}

Digraph build(const ConstructionSpec& spec) {
  switch (spec.family) {
    case Family::S: return gadget_s();
    case Family::D1: return d1();
    case Family::D1General: {
      std::vector<int> outer = spec.outer_lens;
      if (outer.size() == 1 && spec.middle_len > 1) outer.assign(spec.middle_len, outer.front());
      if (outer.empty()) outer.assign(spec.middle_len, 3);
      return d1_general(spec.middle_len, outer);
    }
    case Family::D2: return d2();
    case Family::D2General: return d2_general(spec.k);
    case Family::D3: return d3();
    case Family::Okl: return o_kl(spec.k, spec.l);
  }
  throw std::logic_error("unhandled family");
}

Digraph butterfly_contract(const Digraph& d, Arc a) {
  if (!d.has_arc(a.tail, a.head))
    throw Error(ErrorCode::MissingArc,
                "no arc " + std::to_string(a.tail + 1) + "->" + std::to_string(a.head + 1));
  if (d.out_degree(a.tail) != 1 && d.in_degree(a.head) != 1)
    throw Error(ErrorCode::NotButterfly, "arc is neither the only out-arc of its tail nor the only in-arc of its head");
  const int n = d.order();
  const auto image = [&](int w) {
    const int merged = w == a.head ? a.tail : w;
    return merged > a.head ? merged - 1 : merged;
  };
  std::vector<VertexSet> rows(n - 1, 0);
  for (const Arc& arc : d.arcs()) {
    const int t = image(arc.tail);
    const int h = image(arc.head);
    if (t != h) rows[t] |= singleton(h);
  }
  for (int u = 0; u < n - 1; ++u)
    for (int w = u + 1; w < n - 1; ++w)
      if ((rows[u] & singleton(w)) && (rows[w] & singleton(u)))
        throw Error(ErrorCode::CreatesTwoCycle, "contraction would create a 2-cycle");
  return Digraph::from_rows(rows);
}

SaturationReport saturation_scan(int n, const TwoColorabilityOracle& oracle) {
  if (n > 6) throw Error(ErrorCode::TooLarge, "saturation scan is limited to 6 vertices");
  const TwoColorabilityOracle colorable =
      oracle ? oracle : TwoColorabilityOracle([](const Digraph& d) { return two_dicolorable(d).has_value(); });
  SaturationReport report;
  report.n = n;
  for (const Digraph& d : oriented_graphs(n)) {
    ++report.graphs_scanned;
    if (d.is_tournament() || !colorable(d)) continue;
    ++report.two_dichromatic_non_tournaments;
    bool extendable = false;
    for (int u = 0; u < n && !extendable; ++u)
      for (int v = 0; v < n && !extendable; ++v)
        if (u != v && !d.adjacent(u, v)) extendable = colorable(d.with_arc({u, v}));
    if (!extendable) report.saturated.push_back(d);
  }
  return report;
}

}  // namespace dichro
