#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dichro/digraph.hpp"

namespace dichro {

// Vertex numbering (0-based) of every family, fixed so that golden codes
// stay stable:
//   gadget_s     a = 0, b = 1, triangle x1 x2 x3 = 2 3 4
//   d1_general   middle circuit c_0..c_{m-1} = 0..m-1 (arcs c_i -> c_{i+1});
//                then, for each middle arc c_i -> c_{i+1} in turn, its
//                outer circuit in order
//   d3, d2       v1..v7 = 0..6
//   o_kl         x1..xk = 0..k-1, y1..yl = k..k+l-1, v = k+l
//   d2_general   u1..uk = 0..k-1, v1..vk = k..2k-1, x = 2k

/// Directed triangle x1x2x3, arc a->b, b dominating each x_i and each x_i
/// dominating a: an orientation of K5.
Digraph gadget_s();

/// Odd middle circuit; for each middle arc a->b an outer circuit whose
/// vertices all dominate a and are all dominated by b.
/// Throws EvenMiddle, TooShort, or BadVertex (outer_lens size mismatch).
Digraph d1_general(int middle_len, const std::vector<int>& outer_lens);
Digraph d1();

Digraph d3();

/// Circuits x1..xk and y1..yl, special vertex v with v -> x_i, y_j -> v,
/// and every arc x_i -> y_j. Throws TooShort when k < 3 or l < 3.
Digraph o_kl(int k, int l);

/// d3 without v4->v1, v5->v2, v6->v3 and with v2->v5, v3->v6 added.
Digraph d2();

/// Circuits u1..uk and v1..vk, x -> v_i, u_i -> x, v_i -> u_j for i != j,
/// plus u1 -> v1 and u2 -> v2. Throws TooShort when k < 3.
Digraph d2_general(int k);

enum class Family { S, D1, D1General, D2, D2General, D3, Okl };

struct ConstructionSpec {
  Family family = Family::D1;
  int middle_len = 3;
  std::vector<int> outer_lens;
  int k = 3;
  int l = 3;
};

/// Accepts s, d1, d1-general, d2, d2-general, d3, okl (case-insensitive).
Family parse_family(std::string_view name);
Digraph build(const ConstructionSpec& spec);

/// Contracts arc a = t->h, which must be the only out-arc of t or the only
/// in-arc of h. The merged vertex keeps t's index and h is removed, later
/// indices shifting down by one. Parallel arcs collapse; a resulting 2-cycle
/// throws CreatesTwoCycle, a bad arc throws MissingArc or NotButterfly.
Digraph butterfly_contract(const Digraph& d, Arc a);

struct SaturationReport {
  int n = 0;
  std::int64_t graphs_scanned = 0;
  std::int64_t two_dichromatic_non_tournaments = 0;
  /// 2-dichromatic non-tournaments to which every addable arc adds a
  /// monochromatic-cycle obstruction; expected empty.
  std::vector<Digraph> saturated;
};

using TwoColorabilityOracle = std::function<bool(const Digraph&)>;

/// For each oriented graph on n vertices (up to isomorphism) that is
/// 2-dicolourable and not a tournament, looks for one missing arc, in
/// either direction, whose addition stays 2-dicolourable. The oracle
/// defaults to two_dicolorable. n <= 6.
SaturationReport saturation_scan(int n, const TwoColorabilityOracle& oracle = {});

}  // namespace dichro
