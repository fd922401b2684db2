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

// Packing 4-cycles in a regular tournament through a random vertex partition.
//
// Every vertex picks one of m ~ sqrt(n) classes uniformly and independently.
// The arcs between two classes form a complete bipartite orientation (the
// pair-graph); pair-graphs are arc-disjoint, so packing each one separately
// and taking the union gives a packing of the tournament. When every
// pair-graph is close to Eulerian the per-pair packings are large, and the
// union approaches n^2/(8 + sqrt 32) cycles.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "cyclepack/core_model.hpp"
#include "cyclepack/error.hpp"
#include "cyclepack/packing.hpp"
#include "cyclepack/parallel.hpp"
#include "cyclepack/sampling.hpp"
#include "cyclepack/verify.hpp"

namespace cyclepack {

/// 1/(8 + sqrt 32): target constant for the number of packed cycles per n^2.
inline const double kTournamentTargetConstant = 1.0 / (8.0 + std::sqrt(32.0));

struct PartitionOutcome {
  int n = 0;
  int m = 0;
  std::vector<int> class_of;               // vertex -> class in [0, m)
  std::vector<std::vector<int>> classes;   // increasing vertex ids
  std::vector<int> class_sizes;
  std::vector<std::vector<int>> d_plus;    // [class][vertex]: out-neighbours in class
  std::vector<std::vector<int>> d_minus;   // [class][vertex]: in-neighbours in class
  double expected = 0.0;                   // (n-1)/(2m)
  double delta_observed = 0.0;             // max relative deviation from `expected`

  /// Fraction of the 2*n*m degree entries whose relative deviation exceeds delta.
  double deviation_fraction(double delta) const {
    if (expected <= 0.0) return 0.0;
    std::size_t over = 0;
    std::size_t total = 0;
    for (int i = 0; i < m; ++i) {
      for (int v = 0; v < n; ++v) {
        for (int d : {d_plus[i][v], d_minus[i][v]}) {
          over += std::abs(d - expected) / expected > delta ? 1 : 0;
          ++total;
        }
      }
    }
    return static_cast<double>(over) / static_cast<double>(total);
  }
};

inline PartitionOutcome partition_vertices(const Tournament& t, int m, std::uint64_t seed) {
  require_regular(t, "partition_vertices");
  if (m < 1) throw DomainError("partition needs at least one class");
  const int n = t.n();
  PartitionOutcome out;
  out.n = n;
  out.m = m;
  out.class_of.resize(n);
  out.classes.assign(m, {});
  Rng rng(seed);
  for (int v = 0; v < n; ++v) {
    out.class_of[v] = detail::uniform_index(rng, m);
    out.classes[out.class_of[v]].push_back(v);
  }
  for (const auto& c : out.classes) out.class_sizes.push_back(static_cast<int>(c.size()));

  out.d_plus.assign(m, std::vector<int>(n, 0));
  out.d_minus.assign(m, std::vector<int>(n, 0));
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      if (v == w) continue;
      if (t.has_arc(v, w)) ++out.d_plus[out.class_of[w]][v];
      else ++out.d_minus[out.class_of[w]][v];
    }
  }
  out.expected = (n - 1) / (2.0 * m);
  for (int i = 0; i < m; ++i) {
    for (int v = 0; v < n; ++v) {
      const double dev = std::max(std::abs(out.d_plus[i][v] - out.expected),
                                  std::abs(out.d_minus[i][v] - out.expected));
      out.delta_observed = std::max(out.delta_observed, dev / out.expected);
    }
  }
  return out;
}

/// Bipartite orientation between classes i (rows) and j (columns), inherited
/// from the tournament, plus the vertex maps back into it.
struct PairGraph {
  int i = 0;
  int j = 0;
  BipartiteTournament graph;
  std::vector<int> row_vertices;
  std::vector<int> col_vertices;
  ValidationReport validation;

  /// Tournament vertex of a pair-graph vertex id.
  int tournament_vertex(int v) const {
    return graph.is_row_vertex(v) ? row_vertices[v] : col_vertices[v - graph.m()];
  }
};

/// Empty when either class is empty.
inline std::optional<PairGraph> pair_graph(const Tournament& t, const PartitionOutcome& p,
                                           int i, int j) {
  if (i == j) throw DomainError("pair_graph needs two distinct classes");
  const auto& rows = p.classes.at(i);
  const auto& cols = p.classes.at(j);
  if (rows.empty() || cols.empty()) return std::nullopt;
  std::vector<std::int8_t> signs;
  signs.reserve(rows.size() * cols.size());
  for (int u : rows)
    for (int v : cols) signs.push_back(t.has_arc(u, v) ? 1 : -1);
  BipartiteTournament g(static_cast<int>(rows.size()), static_cast<int>(cols.size()),
                        std::move(signs));
  ValidationReport rep = validate_bipartite(g);
  return PairGraph{i, j, std::move(g), rows, cols, std::move(rep)};
}

struct ExperimentOptions {
  double delta_target = 0.5;
  /// Local-search attempts per pair-graph arc.
  std::uint64_t budget_per_arc = 1;
  /// Lower class-size threshold (the M of the size check); classes must also
  /// have at most 2m vertices.
  int min_class_size = 1;
  unsigned jobs = 1;
};

struct PairResult {
  int i = 0;
  int j = 0;
  int rows = 0;
  int cols = 0;
  int packed = 0;
  double delta_margin = 0.0;
  bool delta_clean = false;
  bool verified = false;
};

struct ExperimentReport {
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
  double delta_target = 0.0;
  double delta_observed = 0.0;
  double deviation_fraction = 0.0;  // at delta_target
  std::vector<int> class_sizes;
  int min_class = 0;
  int max_class = 0;
  int min_class_size = 1;
  bool size_bounds_ok = false;
  std::vector<PairResult> pairs;
  int skipped_pairs = 0;       // a class was empty
  int delta_clean_pairs = 0;
  bool all_pairs_delta_eulerian = false;
  std::int64_t total_packed = 0;
  double target = 0.0;  // n^2/(8 + sqrt 32)
  double ratio = 0.0;   // total_packed / target
  double chernoff_tail_estimate = 0.0;  // 4 n^2 exp(-delta^2 n / 128)
  std::int64_t sum_squares = 0;         // sum |V_i|^2
  std::int64_t cross_arcs = 0;          // arcs counted over pair-graphs
  std::int64_t within_class_arcs = 0;
  bool cross_identity_ok = false;       // 2 cross = n^2 - sum |V_i|^2
  bool pairs_verified = false;          // each packing passes verify_packing
  bool globally_verified = false;       // union passes verify_tournament_cycles
  bool cap_ok = false;                  // total <= floor(C(n,2)/4)
  std::vector<std::array<int, 4>> cycles;  // tournament vertices, pair order
};

inline double chernoff_tail_estimate(int n, double delta) {
  const double nn = static_cast<double>(n);
  return 4.0 * nn * nn * std::exp(-delta * delta * nn / 128.0);
}

namespace detail {

inline std::uint64_t pair_seed(std::uint64_t seed, int i, int j) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

}  // namespace detail

/// Partition with m = round(sqrt n), local-search pack every pair-graph,
/// aggregate and verify. Pair-graphs that miss delta_target are still packed
/// and reported separately.
inline ExperimentReport run_partition_experiment(const Tournament& t, std::uint64_t seed,
                                                 const ExperimentOptions& opts = {}) {
  require_regular(t, "run_partition_experiment");
  const int n = t.n();
  if (n < 9) throw DomainError("the partition experiment needs n >= 9");
  const int m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  const PartitionOutcome part = partition_vertices(t, m, seed);

  ExperimentReport rep;
  rep.n = n;
  rep.m = m;
  rep.seed = seed;
  rep.delta_target = opts.delta_target;
  rep.delta_observed = part.delta_observed;
  rep.deviation_fraction = part.deviation_fraction(opts.delta_target);
  rep.class_sizes = part.class_sizes;
  rep.min_class = *std::min_element(part.class_sizes.begin(), part.class_sizes.end());
  rep.max_class = *std::max_element(part.class_sizes.begin(), part.class_sizes.end());
  rep.min_class_size = opts.min_class_size;
  rep.size_bounds_ok = rep.min_class >= opts.min_class_size && rep.max_class <= 2 * m;
  for (int s : part.class_sizes) {
    rep.sum_squares += static_cast<std::int64_t>(s) * s;
    rep.within_class_arcs += static_cast<std::int64_t>(s) * (s - 1) / 2;
  }

  std::vector<std::pair<int, int>> index_pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) index_pairs.emplace_back(i, j);

  struct Slot {
    std::optional<PairResult> result;
    std::vector<std::array<int, 4>> cycles;
  };
  std::vector<Slot> slots(index_pairs.size());
  parallel_for(index_pairs.size(), opts.jobs, [&](std::size_t k) {
    const auto [i, j] = index_pairs[k];
    const auto pg = pair_graph(t, part, i, j);
    if (!pg) return;
    const std::uint64_t budget =
        opts.budget_per_arc * static_cast<std::uint64_t>(pg->graph.num_arcs());
    const Packing p = local_search_pack(pg->graph, detail::pair_seed(seed, i, j), budget);
    PairResult r;
    r.i = i;
    r.j = j;
    r.rows = pg->graph.m();
    r.cols = pg->graph.n();
    r.packed = p.size();
    r.delta_margin = pg->validation.delta_margin;
    r.delta_clean = r.delta_margin <= opts.delta_target;
    r.verified = static_cast<bool>(verify_packing(pg->graph, p));
    for (const auto& c : p.cycles)
      slots[k].cycles.push_back({pg->tournament_vertex(c[0].tail), pg->tournament_vertex(c[1].tail),
                                 pg->tournament_vertex(c[2].tail), pg->tournament_vertex(c[3].tail)});
    slots[k].result = r;
  });

  rep.pairs_verified = true;
  for (auto& slot : slots) {
    if (!slot.result) {
      ++rep.skipped_pairs;
      continue;
    }
    const PairResult& r = *slot.result;
    rep.total_packed += r.packed;
    rep.cross_arcs += static_cast<std::int64_t>(r.rows) * r.cols;
    rep.delta_clean_pairs += r.delta_clean ? 1 : 0;
    rep.pairs_verified = rep.pairs_verified && r.verified;
    rep.pairs.push_back(r);
    rep.cycles.insert(rep.cycles.end(), slot.cycles.begin(), slot.cycles.end());
  }
  rep.all_pairs_delta_eulerian =
      rep.skipped_pairs == 0 && rep.delta_clean_pairs == static_cast<int>(rep.pairs.size());

  const std::int64_t nn = static_cast<std::int64_t>(n) * n;
  rep.cross_identity_ok = 2 * rep.cross_arcs == nn - rep.sum_squares &&
                          rep.cross_arcs + rep.within_class_arcs == (nn - n) / 2;
  rep.globally_verified = static_cast<bool>(verify_tournament_cycles(t, rep.cycles));
  rep.cap_ok = rep.total_packed <= static_cast<std::int64_t>(t.num_arcs()) / 4;
  rep.target = kTournamentTargetConstant * static_cast<double>(nn);
  rep.ratio = static_cast<double>(rep.total_packed) / rep.target;
  rep.chernoff_tail_estimate = chernoff_tail_estimate(n, opts.delta_target);
  return rep;
}

}  // namespace cyclepack
