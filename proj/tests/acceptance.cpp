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

// Acceptance suite: one PASS/FAIL line per criterion, each with its measured
// runtime against its limit. Usage: cyclepack_acceptance <path to CLI>.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cyclepack/cyclepack.hpp"
#include "json.hpp"

namespace {

using namespace cyclepack;
namespace fs = std::filesystem;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0: no runtime limit
  std::function<Outcome()> run;
};

std::vector<BipartiteTournament> exhaustive_small() {
  std::vector<BipartiteTournament> all;
  for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 4}, std::pair{4, 4}})
    for (auto& g : enumerate_eulerian_bipartite(m, n)) all.push_back(std::move(g));
  return all;
}

std::vector<BipartiteTournament> sampled(int m, int n, int count, std::uint64_t seed0) {
  std::vector<BipartiteTournament> out;
  const auto base = canonical_bipartite(m, n);
  for (int s = 0; s < count; ++s)
    out.push_back(randomize_bipartite(
        base, {seed0 + static_cast<std::uint64_t>(s), default_bipartite_steps(m, n)}));
  return out;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// 1: exact census identities and 32x >= m^2 n^2 on 2 + 6 + 90 orientations.
Outcome census_identities() {
  const auto all = exhaustive_small();
  int failures = 0;
  for (const auto& g : all) {
    const Census c = four_cycle_census(g);
    const std::int64_t mn = static_cast<std::int64_t>(g.m()) * g.n();
    if (!check_census_identities(c, codegree_table(g)).all() || 32 * c.x < mn * mn) ++failures;
  }
  const bool sizes_ok = all.size() == 98;
  return {failures == 0 && sizes_ok,
          fmt("%zu orientations, %d failures", all.size(), failures)};
}

// 2: second bound, sum of d(e) and the maximum-arc bound.
Outcome second_bound() {
  auto all = exhaustive_small();
  for (auto& g : sampled(8, 8, 200, 1000)) all.push_back(std::move(g));
  for (auto& g : sampled(6, 10, 200, 2000)) all.push_back(std::move(g));
  int failures = 0;
  for (const auto& g : all) {
    const Census c = four_cycle_census(g);
    const ArcProfile p = arc_profile(g);
    const BoundReport b = evaluate_bounds(c, p);
    std::int64_t sum = 0;
    for (auto d : p.d) sum += d;
    const std::int64_t mn = static_cast<std::int64_t>(g.m()) * g.n();
    if (!b.satisfied_l22 || sum != 4 * c.x || 8 * p.max_d() < mn) ++failures;
  }
  return {failures == 0, fmt("%zu instances, %d failures", all.size(), failures)};
}

// 3: Walkup's formula against BFS.
Outcome walkup() {
  int checked = 0;
  int failures = 0;
  auto check = [&](const MarginMatrix& a, const MarginMatrix& b) {
    const DistanceRecord r = walkup_distance(a, b);
    ++checked;
    if (!r.q_certified || r.i_walkup != bfs_distance(a, b)) ++failures;
  };
  for (auto margins : {std::vector<int>{1, 1}, std::vector<int>{1, 1, 1}, std::vector<int>{2, 2}}) {
    const auto cls = enumerate_matrix_class(margins, margins);
    for (const auto& a : cls)
      for (const auto& b : cls) check(a, b);
  }
  const auto big = enumerate_matrix_class({2, 2, 2, 2}, {2, 2, 2, 2});
  Rng rng(20261015);
  for (int s = 0; s < 500; ++s) {
    const auto [i, j] = cyclepack::detail::distinct_pair(rng, static_cast<int>(big.size()));
    check(big[i], big[j]);
  }
  return {failures == 0, fmt("%d pairs (500 sampled from the 90-class), %d failures", checked,
                             failures)};
}

// 4: antipodal pairs.
Outcome antipodal() {
  const auto r4 = antipodal_audit(4, 4, {.with_bfs = true});
  const auto r2 = antipodal_audit(2, 2, {.with_bfs = true});
  const int ceiling = static_cast<int>(std::ceil(std::sqrt(2.0) / 4.0 * 16.0));
  const bool ok4 = r4.exhaustive && r4.all_certified && r4.min_i >= 4 && r4.max_i <= ceiling;
  const bool ok2 = r2.exhaustive && r2.min_i == 1 && r2.max_i == 1;
  return {ok4 && ok2, fmt("4x4: %d pairs, i in [%d, %d], ceiling %d; 2x2: i = %d", r4.pairs,
                          r4.min_i, r4.max_i, ceiling, r2.min_i)};
}

// 5: local search on 100 sampled K_{12,12}.
Outcome packing_floor() {
  const auto all = sampled(12, 12, 100, 5000);
  int failures = 0;
  double sum = 0.0;
  double lo = 1e9;
  double hi = 0.0;
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto& g = all[k];
    const Packing p = local_search_pack(g, k, static_cast<std::uint64_t>(g.num_arcs()));
    if (12 * p.size() < g.num_arcs() || !verify_packing(g, p)) ++failures;
    const double ratio = p.size() * (4.0 + std::sqrt(8.0)) / g.num_arcs();
    sum += ratio;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  return {failures == 0, fmt("%zu instances, %d below mn/12; ratio mean %.4f (min %.4f, max %.4f)",
                             all.size(), failures, sum / all.size(), lo, hi)};
}

// 6: exact optimum against the heuristics on all 90 K_{4,4} orientations.
Outcome exact_consistency() {
  int failures = 0;
  int count = 0;
  for (const auto& g : enumerate_eulerian_bipartite(4, 4)) {
    ++count;
    const Packing best = exact_max_pack(g);
    bool ok = best.certified_optimal && best.size() <= 4 && verify_packing(g, best);
    for (auto m : {PackMethod::kGreedy, PackMethod::kLocal, PackMethod::kColor}) {
      const Packing p = pack(g, m, static_cast<std::uint64_t>(count), 64);
      ok = ok && p.size() <= best.size() && verify_packing(g, p);
    }
    failures += ok ? 0 : 1;
  }
  return {failures == 0 && count == 90, fmt("%d instances, %d failures", count, failures)};
}

// 7: partition experiment. Regular tournaments need odd order, so 100 is
// replaced by 101 (same class count m = 10).
Outcome partition() {
  std::string detail;
  bool ok = true;
  double prev = -1.0;
  for (int n : {49, 101, 225}) {
    double sum = 0.0;
    int bad = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Tournament t = randomize_tournament(canonical_regular_tournament(n),
                                                {seed, default_tournament_steps(n)});
      const ExperimentReport r = run_partition_experiment(t, seed);
      const std::int64_t nn = static_cast<std::int64_t>(n) * n;
      if (!r.globally_verified || 2 * r.cross_arcs != nn - r.sum_squares || !r.cap_ok) ++bad;
      sum += r.ratio;
    }
    const double mean = sum / 10.0;
    ok = ok && bad == 0 && mean >= prev;
    prev = mean;
    detail += fmt("%sn=%d mean ratio %.4f", detail.empty() ? "" : "; ", n, mean);
    if (bad) detail += fmt(" (%d failed checks)", bad);
  }
  return {ok, detail + " (n=100 run as 101)"};
}

// 8: every subcommand twice, payloads compared byte for byte without the
// wall-time field.
std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  status = pclose(pipe);
  return out;
}

Outcome determinism(const std::string& cli) {
  const fs::path dir = fs::temp_directory_path() / fmt("cyclepack_acceptance_%d", getpid());
  fs::create_directories(dir);
  const std::string d = dir.string() + "/";
  write_text_file(d + "a.txt", "3 3\n100\n010\n001\n");
  write_text_file(d + "b.txt", "3 3\n010\n001\n100\n");
  const std::vector<std::string> commands = {
      "gen bipartite --m 6 --n 8 --seed 4 --out " + d + "g.txt --json",
      "gen tournament --n 11 --seed 4 --out " + d + "t.txt --json",
      "census --in " + d + "g.txt --json",
      "pack --in " + d + "g.txt --method greedy --seed 2 --json",
      "pack --in " + d + "g.txt --method local --seed 2 --budget 500 --json",
      "pack --in " + d + "g.txt --method color --seed 2 --json",
      "pack --in " + d + "g.txt --method exact --max-edges 100000 --max-nodes 200000 --json",
      "interchange enumerate --rows 2,2,2,2 --cols 2,2,2,2 --list --json",
      "interchange distance --a " + d + "a.txt --b " + d + "b.txt --bfs --json",
      "interchange diameter --rows 2,2,1 --cols 2,1,1,1 --json",
      "interchange antipodal --m 6 --n 6 --limit 100 --samples 5 --seed 1 --json",
      "experiment partition --n 49 --seed 3 --json",
      "experiment partition --in " + d + "t.txt --seed 3 --json",
      "verify --target lemma21 --sizes 4x4,8x8 --samples 10 --seed 1 --json",
      "verify --target lemma22 --sizes 4x4,6x10 --samples 10 --seed 1 --json",
      "verify --target census_identities --sizes 8x8 --samples 10 --seed 1 --json",
      "verify --target walkup --rows 1,1,1 --cols 1,1,1 --json",
  };
  int mismatches = 0;
  std::string first_bad;
  for (const auto& c : commands) {
    std::string runs[2];
    for (auto& run : runs) {
      int status = 0;
      const std::string text = run_capture(cli + " " + c + " 2>/dev/null", status);
      try {
        auto j = nlohmann::ordered_json::parse(text);
        j.erase("wall_time_s");
        run = j.dump();
      } catch (const std::exception&) {
        run = "unparseable (exit " + std::to_string(status) + ")";
      }
    }
    if (runs[0] != runs[1] || runs[0].rfind("unparseable", 0) == 0) {
      ++mismatches;
      if (first_bad.empty()) first_bad = c;
    }
  }
  fs::remove_all(dir);
  std::string detail = fmt("%zu commands, %d mismatches", commands.size(), mismatches);
  if (!first_bad.empty()) detail += " (first: " + first_bad + ")";
  return {mismatches == 0, detail};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <cyclepack executable>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  const std::vector<Criterion> criteria = {
      {1, "census identities and x >= m^2n^2/32, exhaustive", 5, census_identities},
      {2, "second bound, sum d(e) = 4x, max d(e) >= mn/8", 120, second_bound},
      {3, "interchange distance = d/2 - q against BFS", 300, walkup},
      {4, "antipodal distances in the 4x4 and 2x2 classes", 0, antipodal},
      {5, "local search floor mn/12 on K_{12,12}", 180, packing_floor},
      {6, "exact packing dominates heuristics on K_{4,4}", 600, exact_consistency},
      {7, "partition experiment checks and ratio trend", 600, partition},
      {8, "byte-identical payloads on re-run", 0, [&] { return determinism(cli); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_s <= 0 || secs < c.limit_s;
    const bool pass = o.ok && in_time;
    failed += pass ? 0 : 1;
    std::string timing = c.limit_s > 0 ? fmt("%.2f s of %.0f s", secs, c.limit_s)
                                       : fmt("%.2f s", secs);
    std::printf("criterion %d %s  %s: %s [%s]\n", c.id, pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
