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

// Canonical instances, degree-preserving Markov-chain randomization, and
// exhaustive enumeration of Eulerian orientations of K_{m,n} at tiny sizes.
//
// Chains are "heuristic-random": no uniformity or mixing-time claim is made.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cyclepack/core_model.hpp"
#include "cyclepack/error.hpp"

namespace cyclepack {

using Rng = std::mt19937_64;
inline constexpr std::string_view kRngAlgorithm = "mt19937_64";

struct SamplerConfig {
  std::uint64_t seed = 0;
  /// Attempted moves; rejected attempts still count.
  std::uint64_t steps = 0;
};

inline std::uint64_t default_bipartite_steps(int m, int n) {
  return 20ULL * static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n);
}
inline std::uint64_t default_tournament_steps(int n) {
  return 20ULL * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
}

namespace detail {

inline int uniform_index(Rng& rng, int bound) {
  return std::uniform_int_distribution<int>(0, bound - 1)(rng);
}

// Two distinct indices in [0, bound).
inline std::pair<int, int> distinct_pair(Rng& rng, int bound) {
  const int a = uniform_index(rng, bound);
  int b = uniform_index(rng, bound - 1);
  if (b >= a) ++b;
  return {a, b};
}

}  // namespace detail

/// Row i is +1 exactly on the n/2 cyclically consecutive columns starting at
/// floor(i*n/m). For m == n this is the circulant orientation.
inline BipartiteTournament canonical_bipartite(int m, int n) {
  if (m < 2 || n < 2 || m % 2 != 0 || n % 2 != 0)
    throw DomainError("K_{" + std::to_string(m) + "," + std::to_string(n) +
                      "} has no Eulerian orientation (sizes must be even and >= 2)");
  std::vector<std::int8_t> signs(static_cast<std::size_t>(m) * n, -1);
  for (int i = 0; i < m; ++i) {
    const int start = static_cast<int>(static_cast<long long>(i) * n / m);
    for (int t = 0; t < n / 2; ++t) signs[i * n + (start + t) % n] = 1;
  }
  return {m, n, std::move(signs)};
}

/// Random rectangle flips: pick rows i != j and columns k != l; when the 2x2
/// sign submatrix is [[+,-],[-,+]] or [[-,+],[+,-]], negate it. Degrees are
/// preserved by every move.
inline BipartiteTournament randomize_bipartite(const BipartiteTournament& g,
                                               const SamplerConfig& cfg) {
  require_eulerian(g, "randomize_bipartite");
  const int m = g.m();
  const int n = g.n();
  std::vector<std::int8_t> s(g.signs().begin(), g.signs().end());
  Rng rng(cfg.seed);
  for (std::uint64_t step = 0; step < cfg.steps; ++step) {
    const auto [i, j] = detail::distinct_pair(rng, m);
    const auto [k, l] = detail::distinct_pair(rng, n);
    std::int8_t& ik = s[i * n + k];
    std::int8_t& il = s[i * n + l];
    std::int8_t& jk = s[j * n + k];
    std::int8_t& jl = s[j * n + l];
    if (ik == jl && il == jk && ik == -il) {
      ik = static_cast<std::int8_t>(-ik);
      il = static_cast<std::int8_t>(-il);
      jk = static_cast<std::int8_t>(-jk);
      jl = static_cast<std::int8_t>(-jl);
    }
  }
  return {m, n, std::move(s)};
}

/// Rotational tournament: i -> j iff (j - i) mod n lies in 1..(n-1)/2.
inline Tournament canonical_regular_tournament(int n) {
  if (n < 3 || n % 2 == 0)
    throw DomainError("regular tournaments need an odd order >= 3, got " +
                      std::to_string(n));
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int d = 1; d <= (n - 1) / 2; ++d) adj[i * n + (i + d) % n] = 1;
  return {n, std::move(adj)};
}

/// Random triangle reversals: pick three distinct vertices; when they span a
/// directed triangle, reverse it. Out-degrees are preserved by every move.
inline Tournament randomize_tournament(const Tournament& t, const SamplerConfig& cfg) {
  require_regular(t, "randomize_tournament");
  const int n = t.n();
  std::vector<std::uint8_t> adj(t.adjacency().begin(), t.adjacency().end());
  Rng rng(cfg.seed);
  for (std::uint64_t step = 0; step < cfg.steps; ++step) {
    const int a = detail::uniform_index(rng, n);
    int b = detail::uniform_index(rng, n - 1);
    if (b >= a) ++b;
    int c = detail::uniform_index(rng, n - 2);
    if (c >= std::min(a, b)) ++c;
    if (c >= std::max(a, b)) ++c;
    const bool ab = adj[a * n + b] != 0;
    const bool bc = adj[b * n + c] != 0;
    const bool ca = adj[c * n + a] != 0;
    if (ab == bc && bc == ca) {
      // a->b->c->a or its reverse: flip all three pairs.
      for (auto [u, v] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, a}}) {
        std::swap(adj[u * n + v], adj[v * n + u]);
      }
    }
  }
  return {n, std::move(adj)};
}

inline constexpr int kMaxEnumerationArcs = 36;

/// Calls `visit(const BipartiteTournament&)` for every Eulerian orientation of
/// K_{m,n}, in lexicographic order of the row-major '+'/'-' string ('+' sorts
/// first). Guarded to m*n <= 36.
template <typename Visit>
void for_each_eulerian_bipartite(int m, int n, Visit&& visit) {
  if (m < 2 || n < 2 || m % 2 != 0 || n % 2 != 0)
    throw DomainError("K_{" + std::to_string(m) + "," + std::to_string(n) +
                      "} has no Eulerian orientation");
  if (m * n > kMaxEnumerationArcs)
    throw ResourceError("exhaustive enumeration is limited to m*n <= " +
                        std::to_string(kMaxEnumerationArcs));
  std::vector<std::int8_t> s(static_cast<std::size_t>(m) * n, -1);
  std::vector<int> col_plus(n, 0);
  const int row_quota = n / 2;
  const int col_quota = m / 2;

  // Cell-by-cell DFS, '+' before '-'. row_plus counts '+' in the current row.
  auto rec = [&](auto&& self, int cell, int row_plus) -> void {
    if (cell == m * n) {
      visit(BipartiteTournament(m, n, s));
      return;
    }
    const int i = cell / n;
    const int j = cell % n;
    const int cols_left = n - j;  // including this one
    const int rows_left = m - i;
    // '+'
    if (row_plus < row_quota && col_plus[j] < col_quota) {
      s[cell] = 1;
      ++col_plus[j];
      const int next_row_plus = (j == n - 1) ? 0 : row_plus + 1;
      if (j < n - 1 || row_plus + 1 == row_quota) self(self, cell + 1, next_row_plus);
      --col_plus[j];
    }
    // '-': the row must still be able to reach its quota and the column must
    // still be able to reach its quota from the rows below.
    if (row_quota - row_plus <= cols_left - 1 &&
        col_quota - col_plus[j] <= rows_left - 1) {
      s[cell] = -1;
      const int next_row_plus = (j == n - 1) ? 0 : row_plus;
      if (j < n - 1 || row_plus == row_quota) self(self, cell + 1, next_row_plus);
    }
    s[cell] = -1;
  };
  rec(rec, 0, 0);
}

inline std::vector<BipartiteTournament> enumerate_eulerian_bipartite(int m, int n) {
  std::vector<BipartiteTournament> out;
  for_each_eulerian_bipartite(m, n, [&](const BipartiteTournament& g) { out.push_back(g); });
  return out;
}

}  // namespace cyclepack
