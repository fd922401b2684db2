// Copyright 2026 The cyclepack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact counting of the four orientation classes of the 4-cycles of K_{m,n},
// co-degree tables, per-arc 4-cycle degrees and the two lower bounds on the
// number of directed 4-cycles of an Eulerian orientation:
//
//   x >= m^2 n^2 / 32
//   x >= m^2 n^2 (1/16 - alpha + 4 alpha^2),  alpha = min over arcs of alpha(e)
//
// where alpha(e) = min(d(e)/mn, 1/4 - d(e)/mn) and d(e) is the number of
// directed 4-cycles through e.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "cyclepack/core_model.hpp"
#include "cyclepack/error.hpp"
#include "cyclepack/four_cycles.hpp"

namespace cyclepack {

inline constexpr std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

/// Orientation classes of an undirected 4-cycle. kH1, kH2, kH3 are the
/// acyclic orientations whose longest directed path has length 1, 2, 3.
enum class QuadKind { kCyclic, kH1, kH2, kH3 };

struct QuadClass {
  QuadKind kind = QuadKind::kCyclic;
  int sources = 0;
};

/// Classifies an orientation of a 4-cycle on local vertices 0..3 given as
/// four (tail, head) pairs. Brute force: degree check for the cyclic case,
/// otherwise longest path by exhaustive DFS.
inline QuadClass classify_quad(const std::array<std::pair<int, int>, 4>& arcs) {
  std::array<int, 4> in{};
  std::array<int, 4> out{};
  for (auto [u, v] : arcs) {
    ++out[u];
    ++in[v];
  }
  QuadClass c;
  for (int v = 0; v < 4; ++v) c.sources += (in[v] == 0) ? 1 : 0;
  bool cyclic = true;
  for (int v = 0; v < 4; ++v) cyclic = cyclic && in[v] == 1 && out[v] == 1;
  if (cyclic) return c;

  auto longest_from = [&](auto&& self, int v) -> int {
    int best = 0;
    for (auto [a, b] : arcs)
      if (a == v) best = std::max(best, 1 + self(self, b));
    return best;
  };
  int longest = 0;
  for (int v = 0; v < 4; ++v) longest = std::max(longest, longest_from(longest_from, v));
  c.kind = longest == 1 ? QuadKind::kH1 : longest == 2 ? QuadKind::kH2 : QuadKind::kH3;
  return c;
}

struct Census {
  int m = 0;
  int n = 0;
  std::int64_t x = 0;   // directed 4-cycles
  std::int64_t h1 = 0;
  std::int64_t h2 = 0;
  std::int64_t h3 = 0;
  std::int64_t t = 0;   // sources summed over all 2+2 vertex subsets

  friend bool operator==(const Census&, const Census&) = default;
};

/// Scans all C(m,2)*C(n,2) 2+2 vertex subsets and classifies each induced
/// 4-cycle. Works on any complete orientation.
inline Census four_cycle_census(const BipartiteTournament& g) {
  Census c;
  c.m = g.m();
  c.n = g.n();
  // Local ids: 0 = a1, 1 = a2, 2 = b1, 3 = b2.
  for (int a1 = 0; a1 < g.m(); ++a1) {
    for (int a2 = a1 + 1; a2 < g.m(); ++a2) {
      for (int b1 = 0; b1 < g.n(); ++b1) {
        for (int b2 = b1 + 1; b2 < g.n(); ++b2) {
          auto oriented = [&](int row, int col, int lr, int lc) {
            return g.row_to_col(row, col) ? std::pair{lr, lc} : std::pair{lc, lr};
          };
          const QuadClass q = classify_quad({oriented(a1, b1, 0, 2), oriented(a1, b2, 0, 3),
                                             oriented(a2, b1, 1, 2), oriented(a2, b2, 1, 3)});
          c.t += q.sources;
          switch (q.kind) {
            case QuadKind::kCyclic: ++c.x; break;
            case QuadKind::kH1: ++c.h1; break;
            case QuadKind::kH2: ++c.h2; break;
            case QuadKind::kH3: ++c.h3; break;
          }
        }
      }
    }
  }
  return c;
}

/// Co-degree data for one same-class vertex pair (vertex ids in host space).
struct PairCoDegree {
  int u = 0;
  int v = 0;
  int common_out = 0;
  int common_in = 0;
  std::int64_t four_cycles = 0;  // directed 4-cycles through both u and v
};

struct CoDegreeTable {
  int m = 0;
  int n = 0;
  std::vector<PairCoDegree> row_pairs;  // lexicographic (u < v)
  std::vector<PairCoDegree> col_pairs;
  /// For Eulerian hosts: every pair has common_in == common_out and
  /// four_cycles == (half - k)^2 with half = n/2 (rows) or m/2 (columns).
  /// Always false for non-Eulerian hosts.
  bool pair_formula_ok = false;

  /// Right-hand side of 2x + 2h1 = sum over same-class pairs of
  /// (half - k)^2 + 2*C(k, 2). Only meaningful for Eulerian hosts.
  std::int64_t pair_sum() const {
    std::int64_t total = 0;
    for (const auto& p : row_pairs) {
      const std::int64_t d = n / 2 - p.common_out;
      total += d * d + 2 * choose2(p.common_out);
    }
    for (const auto& p : col_pairs) {
      const std::int64_t d = m / 2 - p.common_out;
      total += d * d + 2 * choose2(p.common_out);
    }
    return total;
  }
};

inline CoDegreeTable codegree_table(const BipartiteTournament& g) {
  const int m = g.m();
  const int n = g.n();
  CoDegreeTable table;
  table.m = m;
  table.n = n;
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) {
      PairCoDegree p{g.row_vertex(u), g.row_vertex(v), 0, 0, 0};
      std::int64_t fwd = 0;
      std::int64_t bwd = 0;
      for (int j = 0; j < n; ++j) {
        const bool uj = g.row_to_col(u, j);
        const bool vj = g.row_to_col(v, j);
        p.common_out += (uj && vj) ? 1 : 0;
        p.common_in += (!uj && !vj) ? 1 : 0;
        fwd += (uj && !vj) ? 1 : 0;
        bwd += (vj && !uj) ? 1 : 0;
      }
      p.four_cycles = fwd * bwd;
      table.row_pairs.push_back(p);
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      PairCoDegree p{g.col_vertex(u), g.col_vertex(v), 0, 0, 0};
      std::int64_t fwd = 0;
      std::int64_t bwd = 0;
      for (int i = 0; i < m; ++i) {
        // b_u -> a_i iff the (i, u) entry is -1.
        const bool ui = !g.row_to_col(i, u);
        const bool vi = !g.row_to_col(i, v);
        p.common_out += (ui && vi) ? 1 : 0;
        p.common_in += (!ui && !vi) ? 1 : 0;
        fwd += (ui && !vi) ? 1 : 0;
        bwd += (vi && !ui) ? 1 : 0;
      }
      p.four_cycles = fwd * bwd;
      table.col_pairs.push_back(p);
    }
  }
  if (is_eulerian(g)) {
    bool ok = true;
    for (const auto& p : table.row_pairs) {
      const std::int64_t d = n / 2 - p.common_out;
      ok = ok && p.common_in == p.common_out && p.four_cycles == d * d;
    }
    for (const auto& p : table.col_pairs) {
      const std::int64_t d = m / 2 - p.common_out;
      ok = ok && p.common_in == p.common_out && p.four_cycles == d * d;
    }
    table.pair_formula_ok = ok;
  }
  return table;
}

/// The exact identities that tie the census together on an Eulerian host.
struct CensusIdentities {
  bool total_ok = false;          // x + h1 + h2 + h3 = C(m,2) C(n,2)
  bool sources_ok = false;        // 2 h1 + h2 + h3 = t
  bool difference_ok = false;     // x - h1 = (mn/4)(m/2 + n/2 - 1)
  bool source_formula_ok = false; // t = n(n-1) C(m/2,2) + m(m-1) C(n/2,2)
  bool pair_sum_ok = false;       // 2x + 2h1 = co-degree pair sum

  bool all() const {
    return total_ok && sources_ok && difference_ok && source_formula_ok && pair_sum_ok;
  }
};

/// Evaluates the identities in exact integer arithmetic. The last three
/// presuppose Eulerian degrees; `m` and `n` must be even for them to be
/// meaningful.
inline CensusIdentities check_census_identities(const Census& c, const CoDegreeTable& table) {
  const std::int64_t m = c.m;
  const std::int64_t n = c.n;
  CensusIdentities r;
  r.total_ok = c.x + c.h1 + c.h2 + c.h3 == choose2(m) * choose2(n);
  r.sources_ok = 2 * c.h1 + c.h2 + c.h3 == c.t;
  r.difference_ok = c.x - c.h1 == (m * n / 4) * (m / 2 + n / 2 - 1);
  r.source_formula_ok = c.t == n * (n - 1) * choose2(m / 2) + m * (m - 1) * choose2(n / 2);
  r.pair_sum_ok = 2 * c.x + 2 * c.h1 == table.pair_sum();
  return r;
}

inline CensusIdentities check_census_identities(const BipartiteTournament& g) {
  return check_census_identities(four_cycle_census(g), codegree_table(g));
}

/// Per-arc 4-cycle degrees and the alpha balance measure of an Eulerian host.
struct ArcProfile {
  int m = 0;
  int n = 0;
  /// d[e] = number of directed 4-cycles through arc e (indexed as in arcs()).
  std::vector<std::int64_t> d;
  /// alpha(e) * mn = min(d(e), mn/4 - d(e)); exact integer form.
  std::vector<std::int64_t> alpha_scaled;
  std::int64_t alpha_g_scaled = 0;
  int argmin_arc = 0;  // smallest index attaining alpha(G)
  int argmax_arc = 0;  // smallest index attaining max d(e)

  std::int64_t mn() const { return static_cast<std::int64_t>(m) * n; }
  double alpha(int arc) const { return static_cast<double>(alpha_scaled[arc]) / mn(); }
  double alpha_g() const { return static_cast<double>(alpha_g_scaled) / mn(); }
  std::int64_t max_d() const { return d[argmax_arc]; }
};

/// d(e) for e = (x, y) is the number of arcs from N+(y) to N-(x); each closes
/// x -> y -> u -> v -> x. The value is cross-checked against a tally over the
/// full 4-cycle enumeration.
inline ArcProfile arc_profile(const BipartiteTournament& g) {
  require_eulerian(g, "arc_profile");
  ArcProfile p;
  p.m = g.m();
  p.n = g.n();
  const int arcs_total = g.num_arcs();
  const int nv = g.num_vertices();
  std::vector<std::vector<int>> out_nb(nv);
  std::vector<std::vector<int>> in_nb(nv);
  for (int idx = 0; idx < arcs_total; ++idx) {
    const ArcRef a = g.arc(idx);
    out_nb[a.tail].push_back(a.head);
    in_nb[a.head].push_back(a.tail);
  }
  p.d.assign(arcs_total, 0);
  for (int idx = 0; idx < arcs_total; ++idx) {
    const ArcRef e = g.arc(idx);
    std::int64_t count = 0;
    for (int u : out_nb[e.head])
      for (int v : in_nb[e.tail]) count += g.has_arc(u, v) ? 1 : 0;
    p.d[idx] = count;
  }

  std::vector<std::int64_t> tally(arcs_total, 0);
  for_each_four_cycle(g, [&](const QuadCycle& q) {
    for (int a : q.arc_indices(g)) ++tally[a];
  });
  if (tally != p.d)
    throw InvariantError("arc_profile: d(e) disagrees with the 4-cycle enumeration");

  const std::int64_t quarter = p.mn() / 4;
  p.alpha_scaled.resize(arcs_total);
  p.alpha_g_scaled = std::numeric_limits<std::int64_t>::max();
  for (int idx = 0; idx < arcs_total; ++idx) {
    p.alpha_scaled[idx] = std::min(p.d[idx], quarter - p.d[idx]);
    if (p.alpha_scaled[idx] < p.alpha_g_scaled) {
      p.alpha_g_scaled = p.alpha_scaled[idx];
      p.argmin_arc = idx;
    }
    if (p.d[idx] > p.d[p.argmax_arc]) p.argmax_arc = idx;
  }
  return p;
}

/// Minimizer over [0, 1/8] of the balanced objective, and its value.
inline const double kBalancePoint = 1.0 / 8.0 - std::sqrt(1.0 / 128.0);
inline const double kBalanceValue = (2.0 - std::sqrt(2.0)) / 4.0;

/// max{(1/32)/(1/4 - z), (1/16 - z + 4z^2)/(1/4 - z)}: the packing fraction
/// guaranteed (up to 1 + eps) when alpha(G) = z. Minimum kBalanceValue at
/// z = kBalancePoint.
inline double balanced_objective(double z) {
  const double denom = 0.25 - z;
  return std::max((1.0 / 32.0) / denom, (1.0 / 16.0 - z + 4.0 * z * z) / denom);
}

struct BoundReport {
  int m = 0;
  int n = 0;
  std::int64_t x = 0;
  double alpha_g = 0.0;
  double bound_l21 = 0.0;        // m^2 n^2 / 32
  double bound_l22 = 0.0;        // m^2 n^2 (1/16 - alpha + 4 alpha^2)
  double effective_bound = 0.0;  // max of the two
  bool satisfied_l21 = false;
  bool satisfied_l22 = false;
  bool satisfied = false;
  double objective_at_alpha = 0.0;  // balanced_objective(alpha_g)
  double packing_target = 0.0;      // mn (2 - sqrt 2) / 4
};

/// Compares x against both lower bounds. Comparisons are done in scaled
/// integers: 32x >= m^2 n^2 and 16x >= m^2 n^2 - 16 a mn + 64 a^2 with
/// a = alpha(G) * mn.
inline BoundReport evaluate_bounds(const Census& census, const ArcProfile& profile) {
  BoundReport r;
  r.m = census.m;
  r.n = census.n;
  r.x = census.x;
  const std::int64_t mn = static_cast<std::int64_t>(r.m) * r.n;
  const std::int64_t a = profile.alpha_g_scaled;
  r.alpha_g = profile.alpha_g();
  const double mn2 = static_cast<double>(mn) * static_cast<double>(mn);
  r.bound_l21 = mn2 / 32.0;
  r.bound_l22 = mn2 / 16.0 - static_cast<double>(a) * mn + 4.0 * static_cast<double>(a) * a;
  r.effective_bound = std::max(r.bound_l21, r.bound_l22);
  r.satisfied_l21 = 32 * census.x >= mn * mn;
  r.satisfied_l22 = 16 * census.x >= mn * mn - 16 * a * mn + 64 * a * a;
  r.satisfied = r.satisfied_l21 && r.satisfied_l22;
  r.objective_at_alpha = balanced_objective(r.alpha_g);
  r.packing_target = static_cast<double>(mn) * kBalanceValue;
  return r;
}

inline BoundReport evaluate_bounds(const BipartiteTournament& g) {
  return evaluate_bounds(four_cycle_census(g), arc_profile(g));
}

}  // namespace cyclepack
