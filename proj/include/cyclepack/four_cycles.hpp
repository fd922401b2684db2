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

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cyclepack/core_model.hpp"

namespace cyclepack {

/// A directed 4-cycle of a bipartite host, given by matrix coordinates:
/// a_{row1} -> b_{col1} -> a_{row2} -> b_{col2} -> a_{row1}, with row1 < row2.
struct QuadCycle {
  int row1 = 0;
  int col1 = 0;
  int row2 = 0;
  int col2 = 0;

  /// Arc indices in traversal order, starting with a_{row1} -> b_{col1}.
  std::array<int, 4> arc_indices(const BipartiteTournament& g) const {
    return {g.arc_index(row1, col1), g.arc_index(row2, col1), g.arc_index(row2, col2),
            g.arc_index(row1, col2)};
  }

  friend bool operator==(const QuadCycle&, const QuadCycle&) = default;
};

/// Visits every directed 4-cycle of `g` exactly once. Each cycle has one row
/// pair {u < v}; it is reported as u -> b1 -> v -> b2 -> u where b1 ranges
/// over N+(u) \ N+(v) and b2 over N+(v) \ N+(u). Order: row pair
/// lexicographic, then col1, then col2.
template <typename Visit>
void for_each_four_cycle(const BipartiteTournament& g, Visit&& visit) {
  const int m = g.m();
  const int n = g.n();
  std::vector<int> forward;
  std::vector<int> backward;
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) {
      forward.clear();
      backward.clear();
      for (int j = 0; j < n; ++j) {
        const bool uj = g.row_to_col(u, j);
        const bool vj = g.row_to_col(v, j);
        if (uj && !vj) forward.push_back(j);
        if (vj && !uj) backward.push_back(j);
      }
      for (int b1 : forward)
        for (int b2 : backward) visit(QuadCycle{u, b1, v, b2});
    }
  }
}

/// Number of directed 4-cycles via row-pair co-degrees:
/// sum over row pairs of |N+(u) \ N+(v)| * |N+(v) \ N+(u)|.
inline std::int64_t count_four_cycles(const BipartiteTournament& g) {
  std::int64_t total = 0;
  for (int u = 0; u < g.m(); ++u) {
    for (int v = u + 1; v < g.m(); ++v) {
      std::int64_t fwd = 0;
      std::int64_t bwd = 0;
      for (int j = 0; j < g.n(); ++j) {
        const bool uj = g.row_to_col(u, j);
        const bool vj = g.row_to_col(v, j);
        fwd += (uj && !vj) ? 1 : 0;
        bwd += (vj && !uj) ? 1 : 0;
      }
      total += fwd * bwd;
    }
  }
  return total;
}

}  // namespace cyclepack
