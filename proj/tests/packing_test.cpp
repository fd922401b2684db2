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

#include "cyclepack/packing.hpp"

#include <set>

#include "cyclepack/census.hpp"
#include "cyclepack/decomposition.hpp"
#include "cyclepack/sampling.hpp"
#include "cyclepack/verify.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

namespace cyclepack {
namespace {

using testing::from_rows;

constexpr PackMethod kHeuristics[] = {PackMethod::kGreedy, PackMethod::kLocal, PackMethod::kColor};

TEST(PackMethodNames, RoundTrip) {
  for (auto m : {PackMethod::kGreedy, PackMethod::kLocal, PackMethod::kColor, PackMethod::kExact})
    EXPECT_EQ(parse_pack_method(to_string(m)), m);
  EXPECT_THROW(parse_pack_method("best"), ParseError);
}

TEST(C4Hypergraph, EdgesAreFourCycles) {
  const auto g = randomize_bipartite(canonical_bipartite(6, 6), {3, 800});
  const auto h = build_c4_hypergraph(g);
  EXPECT_EQ(static_cast<std::int64_t>(h.edges.size()), four_cycle_census(g).x);
  std::set<std::array<int, 4>> distinct;
  for (const auto& e : h.edges) {
    auto sorted = e;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_TRUE(distinct.insert(sorted).second);
    Packing single;
    single.cycles.push_back(detail::to_four_cycle(g, e));
    EXPECT_TRUE(verify_packing(g, single)) << verify_packing(g, single).reason;
  }
  // Degrees agree with the per-arc counts.
  const auto p = arc_profile(g);
  for (int a = 0; a < h.num_vertices; ++a)
    EXPECT_EQ(static_cast<std::int64_t>(h.incidence[a].size()), p.d[a]);
  EXPECT_EQ(h.max_degree, p.max_d());
  EXPECT_GE(h.max_codegree, 1);
}

TEST(C4Hypergraph, CodegreeAtMostHalfLargerSide) {
  for (const auto& g : enumerate_eulerian_bipartite(4, 4))
    EXPECT_LE(build_c4_hypergraph(g).max_codegree, 2);
  for (auto [m, n] : {std::pair{4, 8}, std::pair{6, 10}, std::pair{8, 8}}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto g = randomize_bipartite(canonical_bipartite(m, n),
                                         {seed, default_bipartite_steps(m, n)});
      EXPECT_LE(2 * build_c4_hypergraph(g).max_codegree, std::max(m, n)) << m << "x" << n;
    }
  }
}

TEST(Packing, K22AllMethods) {
  const auto g = from_rows({"+-", "-+"});
  for (auto m : {PackMethod::kGreedy, PackMethod::kLocal, PackMethod::kColor, PackMethod::kExact}) {
    const Packing p = pack(g, m, 1, 10);
    EXPECT_EQ(p.size(), 1) << to_string(m);
    EXPECT_TRUE(verify_packing(g, p));
  }
  EXPECT_TRUE(exact_max_pack(g).certified_optimal);
}

TEST(Packing, NoCyclesMeansEmpty) {
  const auto g = from_rows({"++", "++"});
  for (auto m : {PackMethod::kGreedy, PackMethod::kLocal, PackMethod::kColor, PackMethod::kExact})
    EXPECT_EQ(pack(g, m, 1, 10).size(), 0);
}

TEST(Packing, ExactOnSmallClassesFrozen) {
  // Optima from tests/oracles/brute_force_oracle.py.
  for (const auto& g : enumerate_eulerian_bipartite(2, 4)) EXPECT_EQ(exact_max_pack(g).size(), 2);
  for (const auto& g : enumerate_eulerian_bipartite(4, 4)) {
    const Packing best = exact_max_pack(g);
    EXPECT_EQ(best.size(), 4);
    EXPECT_TRUE(best.certified_optimal);
    EXPECT_TRUE(verify_packing(g, best));
    for (auto m : kHeuristics) {
      const Packing p = pack(g, m, 7, 50);
      EXPECT_LE(p.size(), best.size());
      EXPECT_TRUE(verify_packing(g, p)) << verify_packing(g, p).reason;
    }
  }
}

TEST(Packing, HeuristicsOnSampledInstances) {
  for (auto [m, n] : {std::pair{8, 8}, std::pair{6, 10}, std::pair{12, 12}}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto g = randomize_bipartite(canonical_bipartite(m, n),
                                         {seed, default_bipartite_steps(m, n)});
      const Packing greedy = greedy_pack(g, seed);
      const Packing local = local_search_pack(g, seed, 4 * g.num_arcs());
      const Packing color = color_pack(g, seed);
      for (const Packing* p : {&greedy, &local, &color}) {
        EXPECT_TRUE(verify_packing(g, *p)) << verify_packing(g, *p).reason;
        EXPECT_LE(4 * p->size(), m * n);
      }
      EXPECT_GE(local.size(), greedy.size());
      EXPECT_GE(12 * local.size(), m * n);
      EXPECT_GE(color.colors_used, 1);
      EXPECT_EQ(color.max_degree, build_c4_hypergraph(g).max_degree);
    }
  }
}

TEST(Packing, SeedsAreDeterministic) {
  const auto g = randomize_bipartite(canonical_bipartite(10, 10), {11, 2000});
  for (auto m : kHeuristics) {
    EXPECT_EQ(pack(g, m, 5, 200).arc_indices(), pack(g, m, 5, 200).arc_indices());
  }
  EXPECT_EQ(local_search_pack(g, 5, 0).arc_indices(), greedy_pack(g, 5).arc_indices());
}

TEST(Packing, ExactLimits) {
  const auto g = canonical_bipartite(8, 8);
  try {
    exact_max_pack(g, {.max_edges = 10});
    FAIL() << "expected PackingLimitError";
  } catch (const PackingLimitError& e) {
    EXPECT_FALSE(e.partial().certified_optimal);
    EXPECT_TRUE(verify_packing(g, e.partial()));
    EXPECT_GT(e.partial().size(), 0);
  }
  const auto k44 = canonical_bipartite(4, 4);
  EXPECT_THROW(exact_max_pack(k44, {.max_edges = 64, .max_nodes = 2}), PackingLimitError);
}

TEST(VerifyPacking, RejectsTamperedCertificates) {
  const auto g = canonical_bipartite(4, 4);
  const Packing good = exact_max_pack(g);
  ASSERT_TRUE(verify_packing(g, good));

  Packing reused = good;
  reused.cycles.push_back(good.cycles[0]);
  EXPECT_FALSE(verify_packing(g, reused));

  Packing reversed = good;
  std::swap(reversed.cycles[0][0].tail, reversed.cycles[0][0].head);
  EXPECT_FALSE(verify_packing(g, reversed));

  Packing wrong_index = good;
  wrong_index.cycles[0][1].index = (wrong_index.cycles[0][1].index + 1) % g.num_arcs();
  EXPECT_FALSE(verify_packing(g, wrong_index));

  Packing shuffled = good;
  std::swap(shuffled.cycles[0][1], shuffled.cycles[0][2]);
  EXPECT_FALSE(verify_packing(g, shuffled));

  Packing out_of_range = good;
  out_of_range.cycles[0][0].index = 99;
  EXPECT_FALSE(verify_packing(g, out_of_range));
}

TEST(VerifyTournamentCycles, Basics) {
  const auto t = canonical_regular_tournament(5);  // i -> i+1, i+2
  EXPECT_TRUE(verify_tournament_cycles(t, {{0, 1, 2, 3}}));
  EXPECT_FALSE(verify_tournament_cycles(t, {{0, 2, 1, 3}}));  // 2 -> 1 absent
  EXPECT_TRUE(verify_tournament_cycles(t, {{0, 1, 3, 4}}));
  EXPECT_FALSE(verify_tournament_cycles(t, {{0, 1, 3, 4}, {0, 1, 2, 4}}));  // 0->1 twice
  EXPECT_FALSE(verify_tournament_cycles(t, {{0, 1, 0, 1}}));
}

TEST(Decomposition, SingleFourCycle) {
  const Digraph d{4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}}};
  const auto dec = max_cycle_decomposition(d);
  EXPECT_EQ(dec.q, 1);
  EXPECT_TRUE(dec.certified_maximal);
  EXPECT_TRUE(verify_decomposition(d, dec));
}

TEST(Decomposition, K24HasTwo) {
  for (const auto& g : enumerate_eulerian_bipartite(2, 4)) {
    const auto d = to_digraph(g);
    const auto dec = max_cycle_decomposition(d);
    EXPECT_EQ(dec.q, 2);
    EXPECT_TRUE(verify_decomposition(d, dec));
  }
}

TEST(Decomposition, ExactMatchesBruteForce) {
  for (const auto& g : enumerate_eulerian_bipartite(4, 4)) {
    const auto d = to_digraph(g);
    const auto dec = max_cycle_decomposition(d);
    ASSERT_TRUE(dec.certified_maximal);
    EXPECT_TRUE(verify_decomposition(d, dec));
    EXPECT_EQ(dec.q, testing::brute_force_max_decomposition(d));
  }
  // Mixed cycle lengths, including 2-cycles.
  const Digraph mixed{4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 1}, {0, 2}, {2, 0}}};
  const auto dec = max_cycle_decomposition(mixed);
  EXPECT_EQ(dec.q, testing::brute_force_max_decomposition(mixed));
  EXPECT_EQ(dec.q, 3);
}

TEST(Decomposition, HeuristicCoversEverything) {
  const auto g = randomize_bipartite(canonical_bipartite(8, 8), {2, 1000});
  const auto d = to_digraph(g);
  const auto dec = max_cycle_decomposition(d);
  EXPECT_FALSE(dec.certified_maximal);
  EXPECT_TRUE(verify_decomposition(d, dec)) << verify_decomposition(d, dec).reason;
  EXPECT_LE(4 * dec.q, 64);
}

TEST(Decomposition, EmptyAndUnbalanced) {
  const auto empty = max_cycle_decomposition(Digraph{3, {}});
  EXPECT_EQ(empty.q, 0);
  EXPECT_TRUE(empty.certified_maximal);
  EXPECT_THROW(max_cycle_decomposition(Digraph{2, {{0, 1}}}), DomainError);
}

TEST(VerifyDecomposition, RejectsTampering) {
  const Digraph d{4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}}};
  Decomposition dec = max_cycle_decomposition(d);
  dec.cycles[0].pop_back();
  EXPECT_FALSE(verify_decomposition(d, dec));
  Decomposition wrong_q = max_cycle_decomposition(d);
  wrong_q.q = 2;
  EXPECT_FALSE(verify_decomposition(d, wrong_q));
}

}  // namespace
}  // namespace cyclepack
