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

// Arc-disjoint packings of directed 4-cycles in bipartite orientations.
//
// All packers work on the 4-uniform hypergraph whose vertices are the arcs of
// the host and whose edges are its directed 4-cycles. A packing is a matching
// in that hypergraph. Packers accept any complete orientation; the Eulerian
// property only matters for the bounds reported alongside.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cyclepack/core_model.hpp"
#include "cyclepack/error.hpp"
#include "cyclepack/four_cycles.hpp"
#include "cyclepack/sampling.hpp"

namespace cyclepack {

enum class PackMethod { kGreedy, kLocal, kColor, kExact };

inline std::string_view to_string(PackMethod m) {
  switch (m) {
    case PackMethod::kGreedy: return "greedy";
    case PackMethod::kLocal: return "local";
    case PackMethod::kColor: return "color";
    case PackMethod::kExact: return "exact";
  }
  return "unknown";
}

inline PackMethod parse_pack_method(std::string_view s) {
  if (s == "greedy") return PackMethod::kGreedy;
  if (s == "local") return PackMethod::kLocal;
  if (s == "color") return PackMethod::kColor;
  if (s == "exact") return PackMethod::kExact;
  throw ParseError("unknown packing method '" + std::string(s) + "'");
}

/// Directed 4-cycle as four consecutive arcs: arc[k].head == arc[k+1].tail.
using FourCycle = std::array<ArcRef, 4>;

struct Packing {
  std::vector<FourCycle> cycles;
  PackMethod method = PackMethod::kGreedy;
  bool certified_optimal = false;
  int colors_used = 0;  // color method only
  int max_degree = 0;   // hypergraph max degree D, color method only

  int size() const { return static_cast<int>(cycles.size()); }

  std::vector<std::array<int, 4>> arc_indices() const {
    std::vector<std::array<int, 4>> out;
    out.reserve(cycles.size());
    for (const auto& c : cycles)
      out.push_back({c[0].index, c[1].index, c[2].index, c[3].index});
    return out;
  }
};

/// 4-uniform hypergraph of directed 4-cycles. Edge arc lists are in traversal
/// order (see QuadCycle::arc_indices); edges are in for_each_four_cycle order.
struct C4Hypergraph {
  int num_vertices = 0;
  std::vector<std::array<int, 4>> edges;
  std::vector<std::vector<int>> incidence;  // arc -> ids of edges through it
  int max_degree = 0;
  int max_codegree = 0;
};

inline C4Hypergraph build_c4_hypergraph(const BipartiteTournament& g) {
  C4Hypergraph h;
  h.num_vertices = g.num_arcs();
  h.incidence.resize(h.num_vertices);
  for_each_four_cycle(g, [&](const QuadCycle& q) {
    const int id = static_cast<int>(h.edges.size());
    h.edges.push_back(q.arc_indices(g));
    for (int a : h.edges.back()) h.incidence[a].push_back(id);
  });
  for (const auto& inc : h.incidence)
    h.max_degree = std::max(h.max_degree, static_cast<int>(inc.size()));
  std::unordered_map<std::uint64_t, int> codegree;
  for (const auto& e : h.edges) {
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        const auto lo = static_cast<std::uint64_t>(std::min(e[i], e[j]));
        const auto hi = static_cast<std::uint64_t>(std::max(e[i], e[j]));
        h.max_codegree = std::max(h.max_codegree, ++codegree[(lo << 32) | hi]);
      }
    }
  }
  return h;
}

namespace detail {

inline FourCycle to_four_cycle(const BipartiteTournament& g, const std::array<int, 4>& e) {
  return {g.arc(e[0]), g.arc(e[1]), g.arc(e[2]), g.arc(e[3])};
}

inline Packing make_packing(const BipartiteTournament& g, const C4Hypergraph& h,
                            std::vector<int> chosen, PackMethod method) {
  std::sort(chosen.begin(), chosen.end());
  Packing p;
  p.method = method;
  p.cycles.reserve(chosen.size());
  for (int id : chosen) p.cycles.push_back(to_four_cycle(g, h.edges[id]));
  return p;
}

inline bool edge_free(const std::array<int, 4>& e, const std::vector<char>& used) {
  return !used[e[0]] && !used[e[1]] && !used[e[2]] && !used[e[3]];
}

inline void mark(const std::array<int, 4>& e, std::vector<char>& used, char value) {
  for (int a : e) used[a] = value;
}

inline std::vector<int> shuffled_edge_order(const C4Hypergraph& h, Rng& rng) {
  std::vector<int> order(h.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

// First-fit over `order`: takes every edge whose arcs are still unused.
inline std::vector<int> greedy_matching(const C4Hypergraph& h, const std::vector<int>& order,
                                        std::vector<char>& used) {
  std::vector<int> chosen;
  for (int id : order) {
    if (edge_free(h.edges[id], used)) {
      mark(h.edges[id], used, 1);
      chosen.push_back(id);
    }
  }
  return chosen;
}

}  // namespace detail

/// Maximal packing by first-fit over a seed-driven random permutation of the
/// 4-cycles (which are otherwise in lexicographic arc order).
inline Packing greedy_pack(const BipartiteTournament& g, std::uint64_t seed) {
  const C4Hypergraph h = build_c4_hypergraph(g);
  Rng rng(seed);
  std::vector<char> used(h.num_vertices, 0);
  auto chosen = detail::greedy_matching(h, detail::shuffled_edge_order(h, rng), used);
  return detail::make_packing(g, h, std::move(chosen), PackMethod::kGreedy);
}

/// Starts from greedy_pack(g, seed) and spends `budget` improvement attempts.
/// Each attempt removes a random packed cycle and looks for two disjoint
/// cycles on the freed and unused arcs (a 1-out/2-in swap). When none exists
/// it performs a sideways 1-out/1-in swap if another cycle fits, which keeps
/// the size and moves the search. The size never decreases.
inline Packing local_search_pack(const BipartiteTournament& g, std::uint64_t seed,
                                 std::uint64_t budget) {
  const C4Hypergraph h = build_c4_hypergraph(g);
  Rng rng(seed);
  std::vector<char> used(h.num_vertices, 0);
  std::vector<int> chosen =
      detail::greedy_matching(h, detail::shuffled_edge_order(h, rng), used);

  std::vector<int> candidates;
  std::vector<char> seen(h.edges.size(), 0);
  for (std::uint64_t attempt = 0; attempt < budget && !chosen.empty(); ++attempt) {
    const int slot = detail::uniform_index(rng, static_cast<int>(chosen.size()));
    const int removed = chosen[slot];
    chosen[slot] = chosen.back();
    chosen.pop_back();
    detail::mark(h.edges[removed], used, 0);

    // The packing was maximal, so every cycle that now fits uses a freed arc.
    candidates.clear();
    for (int a : h.edges[removed]) {
      for (int id : h.incidence[a]) {
        if (id != removed && !seen[id] && detail::edge_free(h.edges[id], used)) {
          seen[id] = 1;
          candidates.push_back(id);
        }
      }
    }
    for (int id : candidates) seen[id] = 0;
    std::shuffle(candidates.begin(), candidates.end(), rng);

    int first = -1;
    int second = -1;
    for (std::size_t i = 0; i < candidates.size() && first < 0; ++i) {
      detail::mark(h.edges[candidates[i]], used, 1);
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        if (detail::edge_free(h.edges[candidates[j]], used)) {
          first = candidates[i];
          second = candidates[j];
          break;
        }
      }
      detail::mark(h.edges[candidates[i]], used, 0);
    }

    if (first >= 0) {
      for (int id : {first, second}) {
        detail::mark(h.edges[id], used, 1);
        chosen.push_back(id);
      }
    } else if (!candidates.empty()) {
      detail::mark(h.edges[candidates.front()], used, 1);
      chosen.push_back(candidates.front());
    } else {
      detail::mark(h.edges[removed], used, 1);
      chosen.push_back(removed);
      continue;
    }
    // Restore maximality on the freed arcs.
    for (int id : candidates) {
      if (detail::edge_free(h.edges[id], used)) {
        detail::mark(h.edges[id], used, 1);
        chosen.push_back(id);
      }
    }
    if (detail::edge_free(h.edges[removed], used)) {
      detail::mark(h.edges[removed], used, 1);
      chosen.push_back(removed);
    }
  }
  return detail::make_packing(g, h, std::move(chosen), PackMethod::kLocal);
}

/// Greedy proper edge coloring of the 4-cycle hypergraph (edges sharing an arc
/// get distinct colors) in seed-driven random order, each edge taking the
/// least free color. Each color class is a packing; the largest one (lowest
/// color on ties) is returned with colors_used and the max degree D.
inline Packing color_pack(const BipartiteTournament& g, std::uint64_t seed) {
  const C4Hypergraph h = build_c4_hypergraph(g);
  Rng rng(seed);
  const auto order = detail::shuffled_edge_order(h, rng);
  std::vector<int> color(h.edges.size(), -1);
  std::vector<int> class_size;
  std::vector<char> taken;
  for (int id : order) {
    taken.assign(class_size.size() + 1, 0);
    for (int a : h.edges[id])
      for (int other : h.incidence[a])
        if (color[other] >= 0) taken[color[other]] = 1;
    int c = 0;
    while (taken[c]) ++c;
    color[id] = c;
    if (c == static_cast<int>(class_size.size())) class_size.push_back(0);
    ++class_size[c];
  }
  int best = 0;
  for (int c = 1; c < static_cast<int>(class_size.size()); ++c)
    if (class_size[c] > class_size[best]) best = c;
  std::vector<int> chosen;
  for (int id = 0; id < static_cast<int>(h.edges.size()); ++id)
    if (color[id] == best) chosen.push_back(id);
  Packing p = detail::make_packing(g, h, std::move(chosen), PackMethod::kColor);
  p.colors_used = static_cast<int>(class_size.size());
  p.max_degree = h.max_degree;
  return p;
}

struct ExactLimits {
  int max_edges = 64;                  // hypergraph size cap
  std::uint64_t max_nodes = 50'000'000;  // search-node cap
};

/// Thrown by exact_max_pack when a limit is hit. `partial` holds the best
/// packing found so far, with certified_optimal = false.
class PackingLimitError : public ResourceError {
 public:
  PackingLimitError(const std::string& what, Packing partial)
      : ResourceError(what), partial_(std::move(partial)) {}
  const Packing& partial() const { return partial_; }

 private:
  Packing partial_;
};

/// Maximum packing by branch and bound. Branches on the lowest-index arc that
/// still lies on an available cycle: either one of its available cycles is
/// taken, or the arc is left uncovered. Bound: current size plus
/// floor(live arcs / 4), where a live arc is unused and lies on an available
/// cycle.
inline Packing exact_max_pack(const BipartiteTournament& g, const ExactLimits& limits = {}) {
  const C4Hypergraph h = build_c4_hypergraph(g);
  if (static_cast<int>(h.edges.size()) > limits.max_edges) {
    Rng rng(0);
    std::vector<char> used(h.num_vertices, 0);
    auto partial = detail::make_packing(
        g, h, detail::greedy_matching(h, detail::shuffled_edge_order(h, rng), used),
        PackMethod::kExact);
    throw PackingLimitError("exact packing: " + std::to_string(h.edges.size()) +
                                " four-cycles exceed the limit of " +
                                std::to_string(limits.max_edges),
                            std::move(partial));
  }

  // 0 = free, 1 = used by a chosen cycle, 2 = left uncovered.
  std::vector<char> status(h.num_vertices, 0);
  std::vector<int> current;
  std::vector<int> best;
  std::uint64_t nodes = 0;
  bool aborted = false;

  auto available = [&](int id) {
    for (int a : h.edges[id])
      if (status[a] != 0) return false;
    return true;
  };

  auto rec = [&](auto&& self) -> void {
    if (aborted) return;
    if (++nodes > limits.max_nodes) {
      aborted = true;
      return;
    }
    int live = 0;
    int branch_arc = -1;
    for (int a = 0; a < h.num_vertices; ++a) {
      if (status[a] != 0) continue;
      for (int id : h.incidence[a]) {
        if (available(id)) {
          ++live;
          if (branch_arc < 0) branch_arc = a;
          break;
        }
      }
    }
    if (current.size() > best.size()) best = current;
    if (branch_arc < 0) return;
    if (current.size() + static_cast<std::size_t>(live / 4) <= best.size()) return;

    for (int id : h.incidence[branch_arc]) {
      if (!available(id)) continue;
      detail::mark(h.edges[id], status, 1);
      current.push_back(id);
      self(self);
      current.pop_back();
      detail::mark(h.edges[id], status, 0);
      if (aborted) return;
    }
    status[branch_arc] = 2;
    self(self);
    status[branch_arc] = 0;
  };
  rec(rec);

  Packing p = detail::make_packing(g, h, best, PackMethod::kExact);
  if (aborted)
    throw PackingLimitError("exact packing: search-node limit of " +
                                std::to_string(limits.max_nodes) + " reached",
                            std::move(p));
  p.certified_optimal = true;
  return p;
}

inline Packing pack(const BipartiteTournament& g, PackMethod method, std::uint64_t seed,
                    std::uint64_t budget, const ExactLimits& limits = {}) {
  switch (method) {
    case PackMethod::kGreedy: return greedy_pack(g, seed);
    case PackMethod::kLocal: return local_search_pack(g, seed, budget);
    case PackMethod::kColor: return color_pack(g, seed);
    case PackMethod::kExact: return exact_max_pack(g, limits);
  }
  throw DomainError("unknown packing method");
}

}  // namespace cyclepack
