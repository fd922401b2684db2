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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cyclepack/core_model.hpp"
#include "cyclepack/error.hpp"

namespace cyclepack {

/// Plain simple digraph given by an arc list; arc ids are positions in `arcs`.
struct Digraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> arcs;

  bool is_balanced() const {
    std::vector<int> balance(num_vertices, 0);
    for (auto [u, v] : arcs) {
      ++balance[u];
      --balance[v];
    }
    return std::all_of(balance.begin(), balance.end(), [](int b) { return b == 0; });
  }
};

/// Arcs of a bipartite orientation, arc id = index in arcs(g).
inline Digraph to_digraph(const BipartiteTournament& g) {
  Digraph d;
  d.num_vertices = g.num_vertices();
  d.arcs.reserve(g.num_arcs());
  for (const ArcRef& a : arcs(g)) d.arcs.emplace_back(a.tail, a.head);
  return d;
}

/// Partition of every arc into directed cycles. Each cycle lists arc ids in
/// traversal order.
struct Decomposition {
  std::vector<std::vector<int>> cycles;
  int q = 0;
  bool certified_maximal = false;
};

struct DecompositionLimits {
  int max_arcs = 32;  // exact search above this falls back to the heuristic
};

namespace detail {

// Shortest possible directed cycle length, used only for bounding.
inline int min_cycle_length(const Digraph& d) {
  std::set<std::pair<int, int>> present(d.arcs.begin(), d.arcs.end());
  for (auto [u, v] : d.arcs)
    if (present.contains({v, u})) return 2;
  std::vector<std::vector<int>> und(d.num_vertices);
  for (auto [u, v] : d.arcs) {
    und[u].push_back(v);
    und[v].push_back(u);
  }
  std::vector<int> side(d.num_vertices, -1);
  for (int s = 0; s < d.num_vertices; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : und[u]) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return 3;
        }
      }
    }
  }
  return 4;
}

class ExactDecomposer {
 public:
  explicit ExactDecomposer(const Digraph& d) : d_(d), out_(d.num_vertices) {
    for (int id = 0; id < static_cast<int>(d.arcs.size()); ++id)
      out_[d.arcs[id].first].push_back(id);
    min_len_ = min_cycle_length(d);
  }

  Decomposition run() {
    const int k = static_cast<int>(d_.arcs.size());
    const std::uint64_t all = k == 64 ? ~0ULL : ((1ULL << k) - 1);
    solve(all);
    Decomposition out;
    std::uint64_t mask = all;
    while (mask != 0) {
      const std::uint64_t c = memo_.at(mask).second;
      out.cycles.push_back(order_cycle(c));
      mask &= ~c;
    }
    out.q = static_cast<int>(out.cycles.size());
    out.certified_maximal = true;
    return out;
  }

 private:
  // Best cycle count for the remaining arc set `mask` (always balanced).
  int solve(std::uint64_t mask) {
    if (mask == 0) return 0;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second.first;
    const int lead = std::countr_zero(mask);
    const int ceiling = std::popcount(mask) / min_len_;
    int best = -1;
    std::uint64_t best_cycle = 0;
    cycles_through(lead, mask, [&](std::uint64_t cycle) {
      if (best == ceiling) return;
      const int value = 1 + solve(mask & ~cycle);
      if (value > best) {
        best = value;
        best_cycle = cycle;
      }
    });
    if (best < 0) throw InvariantError("balanced arc set without a cycle through its lead arc");
    memo_.emplace(mask, std::pair{best, best_cycle});
    return best;
  }

  // Enumerates simple cycles through arc `lead` using only arcs in `mask`.
  template <typename Visit>
  void cycles_through(int lead, std::uint64_t mask, Visit&& visit) {
    const auto [start, first] = d_.arcs[lead];
    std::vector<char> on_path(d_.num_vertices, 0);
    on_path[start] = 1;
    on_path[first] = 1;
    auto dfs = [&](auto&& self, int v, std::uint64_t path) -> void {
      for (int id : out_[v]) {
        if (!((mask >> id) & 1ULL)) continue;
        const int w = d_.arcs[id].second;
        if (w == start) {
          visit(path | (1ULL << id));
          continue;
        }
        if (on_path[w]) continue;
        on_path[w] = 1;
        self(self, w, path | (1ULL << id));
        on_path[w] = 0;
      }
    };
    dfs(dfs, first, 1ULL << lead);
  }

  std::vector<int> order_cycle(std::uint64_t cycle) const {
    std::vector<int> seq;
    int id = std::countr_zero(cycle);
    const int start = d_.arcs[id].first;
    while (true) {
      seq.push_back(id);
      const int v = d_.arcs[id].second;
      if (v == start) break;
      for (int nxt : out_[v]) {
        if ((cycle >> nxt) & 1ULL) {
          id = nxt;
          break;
        }
      }
    }
    return seq;
  }

  const Digraph& d_;
  std::vector<std::vector<int>> out_;
  int min_len_ = 2;
  std::unordered_map<std::uint64_t, std::pair<int, std::uint64_t>> memo_;
};

// Repeatedly removes a globally shortest cycle (ties: lowest lead arc id).
inline Decomposition shortest_cycle_decomposition(const Digraph& d) {
  const int k = static_cast<int>(d.arcs.size());
  std::vector<char> alive(k, 1);
  int remaining = k;
  std::vector<std::vector<int>> out(d.num_vertices);
  for (int id = 0; id < k; ++id) out[d.arcs[id].first].push_back(id);

  Decomposition dec;
  std::vector<int> dist(d.num_vertices);
  std::vector<int> via(d.num_vertices);
  while (remaining > 0) {
    std::vector<int> best;
    for (int lead = 0; lead < k; ++lead) {
      if (!alive[lead]) continue;
      // BFS from head(lead) to tail(lead).
      const auto [tail, head] = d.arcs[lead];
      std::fill(dist.begin(), dist.end(), -1);
      dist[head] = 0;
      std::deque<int> queue{head};
      while (!queue.empty() && dist[tail] < 0) {
        const int u = queue.front();
        queue.pop_front();
        for (int id : out[u]) {
          const int w = d.arcs[id].second;
          if (!alive[id] || dist[w] >= 0) continue;
          dist[w] = dist[u] + 1;
          via[w] = id;
          queue.push_back(w);
        }
      }
      if (dist[tail] < 0) continue;
      if (!best.empty() && dist[tail] + 1 >= static_cast<int>(best.size())) continue;
      std::vector<int> cycle;
      for (int v = tail; v != head; v = d.arcs[via[v]].first) cycle.push_back(via[v]);
      cycle.push_back(lead);
      std::reverse(cycle.begin(), cycle.end());
      best = std::move(cycle);
      if (static_cast<int>(best.size()) == 2) break;
    }
    if (best.empty()) throw InvariantError("balanced arc set without a cycle");
    for (int id : best) alive[id] = 0;
    remaining -= static_cast<int>(best.size());
    dec.cycles.push_back(std::move(best));
  }
  dec.q = static_cast<int>(dec.cycles.size());
  return dec;
}

}  // namespace detail

/// Decomposition of a balanced digraph into the maximum number of directed
/// cycles. Up to limits.max_arcs arcs (at most 64) the search is exhaustive:
/// branch on the lowest remaining arc id over every simple cycle through it,
/// memoized on the remaining arc set, and the result is certified maximal.
/// Larger inputs get the shortest-cycle-first heuristic (not certified).
inline Decomposition max_cycle_decomposition(const Digraph& d,
                                             const DecompositionLimits& limits = {}) {
  if (!d.is_balanced())
    throw DomainError("cycle decomposition requires in-degree = out-degree at every vertex");
  const int k = static_cast<int>(d.arcs.size());
  if (k == 0) return {{}, 0, true};
  if (k <= std::min(limits.max_arcs, 64)) return detail::ExactDecomposer(d).run();
  return detail::shortest_cycle_decomposition(d);
}

}  // namespace cyclepack
