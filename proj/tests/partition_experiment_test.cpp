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

#include "cyclepack/partition_experiment.hpp"

#include <cmath>
#include <numeric>

#include "cyclepack/sampling.hpp"
#include "gtest/gtest.h"

namespace cyclepack {
namespace {

Tournament sampled_tournament(int n, std::uint64_t seed) {
  return randomize_tournament(canonical_regular_tournament(n),
                              {seed, default_tournament_steps(n)});
}

TEST(PartitionVertices, SingleClass) {
  const auto p = partition_vertices(canonical_regular_tournament(3), 1, 4);
  EXPECT_EQ(p.classes.size(), 1u);
  EXPECT_EQ(p.class_sizes, (std::vector<int>{3}));
  EXPECT_DOUBLE_EQ(p.delta_observed, 0.0);
  EXPECT_DOUBLE_EQ(p.expected, 1.0);
}

TEST(PartitionVertices, ClassesPartitionAndDegreesAddUp) {
  const auto t = sampled_tournament(25, 1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = partition_vertices(t, 5, seed);
    EXPECT_EQ(std::accumulate(p.class_sizes.begin(), p.class_sizes.end(), 0), 25);
    std::vector<int> seen(25, 0);
    for (int i = 0; i < 5; ++i)
      for (int v : p.classes[i]) {
        ++seen[v];
        EXPECT_EQ(p.class_of[v], i);
      }
    EXPECT_EQ(std::count(seen.begin(), seen.end(), 1), 25);
    for (int i = 0; i < 5; ++i)
      for (int v = 0; v < 25; ++v)
        EXPECT_EQ(p.d_plus[i][v] + p.d_minus[i][v], p.class_sizes[i] - (p.class_of[v] == i));
    EXPECT_GE(p.delta_observed, 0.0);
  }
  EXPECT_THROW(partition_vertices(t, 0, 1), DomainError);
}

TEST(PairGraph, SingletonClassesGiveSingleArcs) {
  const auto t = canonical_regular_tournament(3);
  PartitionOutcome p;
  p.n = 3;
  p.m = 3;
  p.classes = {{0}, {1}, {2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const auto pg = pair_graph(t, p, i, j);
      ASSERT_TRUE(pg.has_value());
      EXPECT_EQ(pg->graph.num_arcs(), 1);
      EXPECT_DOUBLE_EQ(pg->validation.delta_margin, 1.0);
      EXPECT_EQ(pg->graph.row_to_col(0, 0), t.has_arc(i, j));
    }
  EXPECT_THROW(pair_graph(t, p, 1, 1), DomainError);
  p.classes = {{0, 1, 2}, {}, {}};
  EXPECT_FALSE(pair_graph(t, p, 0, 1).has_value());
}

TEST(PairGraph, ArcsCoverTheTournament) {
  const auto t = sampled_tournament(25, 2);
  const auto p = partition_vertices(t, 5, 9);
  std::int64_t cross = 0;
  std::int64_t within = 0;
  std::vector<char> covered(t.num_arcs(), 0);
  for (int i = 0; i < 5; ++i) {
    within += static_cast<std::int64_t>(p.class_sizes[i]) * (p.class_sizes[i] - 1) / 2;
    for (int j = i + 1; j < 5; ++j) {
      const auto pg = pair_graph(t, p, i, j);
      if (!pg) continue;
      EXPECT_EQ(pg->graph.num_arcs(), p.class_sizes[i] * p.class_sizes[j]);
      cross += pg->graph.num_arcs();
      for (const ArcRef& a : arcs(pg->graph)) {
        const int u = pg->tournament_vertex(a.tail);
        const int v = pg->tournament_vertex(a.head);
        EXPECT_TRUE(t.has_arc(u, v));
        ++covered[t.arc_index(u, v)];
      }
    }
  }
  EXPECT_EQ(cross + within, t.num_arcs());
  EXPECT_EQ(std::count(covered.begin(), covered.end(), 2), 0);
}

TEST(Experiment, Constants) {
  EXPECT_NEAR(kTournamentTargetConstant, 0.0732233047033631, 1e-15);
  EXPECT_NEAR(chernoff_tail_estimate(1024, 0.5), 4194304.0 * std::exp(-2.0), 1e-6);
  EXPECT_GT(chernoff_tail_estimate(1024, 0.5), 1.0);
}

TEST(Experiment, NineVertices) {
  const auto t = sampled_tournament(9, 3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = run_partition_experiment(t, seed);
    EXPECT_EQ(r.m, 3);
    std::int64_t sum = 0;
    for (const auto& p : r.pairs) sum += p.packed;
    EXPECT_EQ(sum, r.total_packed);
    EXPECT_TRUE(r.cross_identity_ok);
    EXPECT_EQ(2 * r.cross_arcs, 81 - r.sum_squares);
    EXPECT_TRUE(r.pairs_verified);
    EXPECT_TRUE(r.globally_verified);
    EXPECT_TRUE(r.cap_ok);
    EXPECT_EQ(static_cast<std::int64_t>(r.cycles.size()), r.total_packed);
    EXPECT_NEAR(r.target, 81 * kTournamentTargetConstant, 1e-12);
    if (r.class_sizes == std::vector<int>{3, 3, 3}) {
      EXPECT_EQ(r.sum_squares, 27);
      EXPECT_EQ(r.cross_arcs, 27);
    }
  }
}

TEST(Experiment, LargerAndDeterministic) {
  const auto t = sampled_tournament(49, 4);
  const auto a = run_partition_experiment(t, 8, {.jobs = 1});
  const auto b = run_partition_experiment(t, 8, {.jobs = 4});
  EXPECT_EQ(a.cycles, b.cycles);
  EXPECT_EQ(a.total_packed, b.total_packed);
  EXPECT_EQ(a.m, 7);
  EXPECT_TRUE(a.globally_verified);
  EXPECT_TRUE(a.cross_identity_ok);
  EXPECT_GT(a.total_packed, 0);
  EXPECT_LT(a.ratio, 1.0);
}

TEST(Experiment, Preconditions) {
  EXPECT_THROW(run_partition_experiment(canonical_regular_tournament(7), 1), DomainError);
  EXPECT_THROW(run_partition_experiment(Tournament(9, std::vector<std::uint8_t>(81, 0)), 1),
               Error);
}

}  // namespace
}  // namespace cyclepack
