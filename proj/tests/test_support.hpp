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

// Test-only helpers and brute-force oracles. Nothing here calls into the
// library's counting or search code.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cyclepack/core_model.hpp"
#include "cyclepack/decomposition.hpp"

namespace cyclepack::testing {

inline BipartiteTournament from_rows(const std::vector<std::string>& rows) {
  const int m = static_cast<int>(rows.size());
  const int n = static_cast<int>(rows.front().size());
  std::vector<std::int8_t> s;
  for (const auto& r : rows)
    for (char c : r) s.push_back(c == '+' ? 1 : -1);
  return {m, n, std::move(s)};
}

inline std::vector<std::string> to_rows(const BipartiteTournament& g) {
  std::vector<std::string> rows;
  for (int i = 0; i < g.m(); ++i) {
    std::string r;
    for (int j = 0; j < g.n(); ++j) r += g.row_to_col(i, j) ? '+' : '-';
    rows.push_back(r);
  }
  return rows;
}

inline std::string row_major_string(const BipartiteTournament& g) {
  std::string s;
  for (const auto& r : to_rows(g)) s += r;
  return s;
}

/// Every sign matrix of size m x n with balanced rows and columns, found by
/// scanning all 2^(mn) candidates.
inline std::vector<std::string> brute_force_eulerian(int m, int n) {
  std::vector<std::string> out;
  for (std::uint32_t bits = 0; bits < (1u << (m * n)); ++bits) {
    std::string s(m * n, '-');
    for (int k = 0; k < m * n; ++k)
      if (bits >> k & 1u) s[k] = '+';
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      ok = std::count(s.begin() + i * n, s.begin() + (i + 1) * n, '+') == n / 2;
    for (int j = 0; j < n && ok; ++j) {
      int plus = 0;
      for (int i = 0; i < m; ++i) plus += s[i * n + j] == '+';
      ok = plus == m / 2;
    }
    if (ok) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Classification by source/sink pattern: cyclic when every vertex has one in
/// and one out arc; two sources -> H1; otherwise one source and one sink,
/// adjacent -> H3 (a Hamiltonian path plus the closing arc), opposite -> H2.
/// Returns {kind 0..3, sources}.
inline std::pair<int, int> pattern_classify(const std::array<std::pair<int, int>, 4>& arcs) {
  std::array<int, 4> in{};
  std::array<int, 4> out{};
  for (auto [u, v] : arcs) {
    ++out[u];
    ++in[v];
  }
  std::vector<int> sources;
  std::vector<int> sinks;
  for (int v = 0; v < 4; ++v) {
    if (in[v] == 0) sources.push_back(v);
    if (out[v] == 0) sinks.push_back(v);
  }
  if (sources.empty()) return {0, 0};
  if (sources.size() == 2) return {1, 2};
  const int s = sources[0];
  const int t = sinks[0];
  const bool adjacent =
      std::any_of(arcs.begin(), arcs.end(), [&](auto a) { return a == std::pair{s, t}; });
  return {adjacent ? 3 : 2, 1};
}

struct OracleCensus {
  std::int64_t x = 0, h1 = 0, h2 = 0, h3 = 0, t = 0;
};

inline OracleCensus oracle_census(const BipartiteTournament& g) {
  OracleCensus c;
  for (int a1 = 0; a1 < g.m(); ++a1)
    for (int a2 = a1 + 1; a2 < g.m(); ++a2)
      for (int b1 = 0; b1 < g.n(); ++b1)
        for (int b2 = b1 + 1; b2 < g.n(); ++b2) {
          std::array<std::pair<int, int>, 4> arcs;
          int k = 0;
          for (auto [a, la] : {std::pair{a1, 0}, std::pair{a2, 1}})
            for (auto [b, lb] : {std::pair{b1, 2}, std::pair{b2, 3}})
              arcs[k++] = g.row_to_col(a, b) ? std::pair{la, lb} : std::pair{lb, la};
          const auto [kind, src] = pattern_classify(arcs);
          c.t += src;
          (kind == 0 ? c.x : kind == 1 ? c.h1 : kind == 2 ? c.h2 : c.h3) += 1;
        }
  return c;
}

/// Maximum number of cycles in a decomposition, by enumerating every simple
/// cycle as an arc set and searching exact covers. Small digraphs only.
inline int brute_force_max_decomposition(const Digraph& d) {
  const int k = static_cast<int>(d.arcs.size());
  std::set<std::vector<int>> cycles;
  // Simple cycles as sorted arc-id lists, from DFS over arc sequences.
  std::vector<int> path;
  std::vector<int> visited(d.num_vertices, 0);
  auto dfs = [&](auto&& self, int start, int v) -> void {
    for (int id = 0; id < k; ++id) {
      if (d.arcs[id].first != v) continue;
      const int w = d.arcs[id].second;
      path.push_back(id);
      if (w == start) {
        auto c = path;
        std::sort(c.begin(), c.end());
        cycles.insert(c);
      } else if (!visited[w]) {
        visited[w] = 1;
        self(self, start, w);
        visited[w] = 0;
      }
      path.pop_back();
    }
  };
  for (int s = 0; s < d.num_vertices; ++s) {
    visited[s] = 1;
    dfs(dfs, s, s);
    visited[s] = 0;
  }
  std::vector<std::vector<int>> list(cycles.begin(), cycles.end());
  std::vector<int> cover(k, 0);
  int best = -1;
  auto search = [&](auto&& self, int count) -> void {
    int first = -1;
    for (int a = 0; a < k; ++a)
      if (!cover[a]) {
        first = a;
        break;
      }
    if (first < 0) {
      best = std::max(best, count);
      return;
    }
    for (const auto& c : list) {
      if (!std::binary_search(c.begin(), c.end(), first)) continue;
      if (std::any_of(c.begin(), c.end(), [&](int a) { return cover[a] != 0; })) continue;
      for (int a : c) cover[a] = 1;
      self(self, count + 1);
      for (int a : c) cover[a] = 0;
    }
  };
  search(search, 0);
  return best;
}

}  // namespace cyclepack::testing
