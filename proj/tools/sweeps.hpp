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

// Batch verification sweeps behind `cyclepack verify`.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclepack/cyclepack.hpp"
#include "report.hpp"

namespace cyclepack::cli {

/// Comma-separated margins; zero entries are allowed.
inline std::vector<int> parse_margins(const std::string& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    const std::string tok = s.substr(pos, comma - pos);
    out.push_back(tok == "0" ? 0 : detail::parse_positive(tok, "margin"));
    pos = comma + 1;
  }
  return out;
}

/// "2x2,4x4" -> {(2,2), (4,4)}.
inline std::vector<std::pair<int, int>> parse_sizes(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    const std::string tok = s.substr(pos, comma - pos);
    const std::size_t x = tok.find('x');
    if (x == std::string::npos) throw ParseError("size '" + tok + "' is not of the form MxN");
    out.emplace_back(detail::parse_positive(tok.substr(0, x), "size"),
                     detail::parse_positive(tok.substr(x + 1), "size"));
    pos = comma + 1;
  }
  return out;
}

struct SweepArgs {
  std::string target;
  std::vector<std::pair<int, int>> sizes{{2, 2}, {2, 4}, {4, 4}};
  std::string rows = "2,2,2,2";
  std::string cols = "2,2,2,2";
  int samples = 100;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string counterexample = "counterexample.txt";
};

struct SweepResult {
  Json payload;
  bool failed = false;
  std::string counterexample;    // instance or first matrix, in its file format
  std::string counterexample_b;  // second matrix (walkup only)
};

/// Orientation sizes with at most this many arcs are swept exhaustively.
inline constexpr int kExhaustiveArcs = 16;
/// Matrix classes up to this size get every pair checked.
inline constexpr std::size_t kExhaustiveClass = 90;

namespace detail {

struct Check {
  bool ok = false;
  Json record;
  std::optional<double> ratio;
};

inline Check check_orientation(const std::string& target, const BipartiteTournament& g) {
  const Census c = four_cycle_census(g);
  const std::int64_t mn = static_cast<std::int64_t>(g.m()) * g.n();
  Check out;
  out.record["x"] = c.x;
  if (target == "census_identities" || target == "lemma21") {
    const auto ids = check_census_identities(c, codegree_table(g));
    out.record["h1"] = c.h1;
    out.record["h2"] = c.h2;
    out.record["h3"] = c.h3;
    out.record["t"] = c.t;
    out.record["identities_ok"] = ids.all();
    out.ok = ids.all();
    if (target == "lemma21") {
      const bool bound = 32 * c.x >= mn * mn;
      out.record["bound_ok"] = bound;
      out.ok = out.ok && bound;
      out.ratio = 32.0 * static_cast<double>(c.x) / static_cast<double>(mn * mn);
    }
    return out;
  }
  // lemma22
  const ArcProfile prof = arc_profile(g);
  const BoundReport b = evaluate_bounds(c, prof);
  std::int64_t sum_d = 0;
  for (auto d : prof.d) sum_d += d;
  const bool sum_ok = sum_d == 4 * c.x;
  const bool max_ok = 8 * prof.max_d() >= mn;
  out.record["alpha_G"] = num(prof.alpha_g());
  out.record["bound_l22"] = num(b.bound_l22);
  out.record["bound_ok"] = b.satisfied_l22;
  out.record["sum_d_ok"] = sum_ok;
  out.record["max_d_ok"] = max_ok;
  out.ok = b.satisfied_l22 && sum_ok && max_ok;
  if (b.bound_l22 > 0) out.ratio = static_cast<double>(c.x) / b.bound_l22;
  return out;
}

inline SweepResult orientation_sweep(const SweepArgs& a) {
  SweepResult res;
  Json sizes = Json::array();
  for (auto [m, n] : a.sizes) {
    const bool exhaustive = m * n <= kExhaustiveArcs;
    std::vector<BipartiteTournament> instances;
    std::vector<std::optional<std::uint64_t>> seeds;
    if (exhaustive) {
      instances = enumerate_eulerian_bipartite(m, n);
      seeds.assign(instances.size(), std::nullopt);
    } else {
      const auto base = canonical_bipartite(m, n);
      for (int s = 0; s < a.samples; ++s) {
        const std::uint64_t seed = a.seed + static_cast<std::uint64_t>(s);
        instances.push_back(randomize_bipartite(base, {seed, default_bipartite_steps(m, n)}));
        seeds.push_back(seed);
      }
    }
    std::vector<Check> checks(instances.size());
    parallel_for(instances.size(), a.jobs,
                 [&](std::size_t k) { checks[k] = check_orientation(a.target, instances[k]); });

    Json records = Json::array();
    int passed = 0;
    std::optional<std::int64_t> min_x;
    std::optional<double> min_ratio;
    for (std::size_t k = 0; k < checks.size(); ++k) {
      Json rec = {{"index", k}, {"seed", seeds[k] ? Json(*seeds[k]) : Json(nullptr)},
                  {"ok", checks[k].ok}};
      for (const auto& [key, value] : checks[k].record.items()) rec[key] = value;
      rec["ratio"] = checks[k].ratio ? num(*checks[k].ratio) : Json(nullptr);
      records.push_back(std::move(rec));
      passed += checks[k].ok ? 1 : 0;
      const std::int64_t x = checks[k].record["x"];
      min_x = min_x ? std::min(*min_x, x) : x;
      if (checks[k].ratio) min_ratio = min_ratio ? std::min(*min_ratio, *checks[k].ratio) : *checks[k].ratio;
      if (!checks[k].ok && !res.failed) {
        res.failed = true;
        res.counterexample = format_bipartite(instances[k]);
      }
    }
    sizes.push_back({{"m", m},
                     {"n", n},
                     {"mode", exhaustive ? "exhaustive" : "sampled"},
                     {"instances", instances.size()},
                     {"passed", passed},
                     {"min_x", min_x ? Json(*min_x) : Json(nullptr)},
                     {"min_ratio", min_ratio ? num(*min_ratio) : Json(nullptr)},
                     {"checks", std::move(records)}});
  }
  res.payload = {{"target", a.target}, {"all_passed", !res.failed}, {"sizes", std::move(sizes)}};
  return res;
}

inline SweepResult walkup_sweep(const SweepArgs& a) {
  SweepResult res;
  const auto R = parse_margins(a.rows);
  const auto S = parse_margins(a.cols);
  const auto cls = enumerate_matrix_class(R, S);
  if (cls.empty()) throw DomainError("the matrix class with these margins is empty");
  const bool exhaustive = cls.size() <= kExhaustiveClass;

  std::vector<std::pair<int, int>> pairs;
  if (exhaustive) {
    for (int i = 0; i < static_cast<int>(cls.size()); ++i)
      for (int j = i + 1; j < static_cast<int>(cls.size()); ++j) pairs.emplace_back(i, j);
  } else {
    Rng rng(a.seed);
    for (int s = 0; s < a.samples; ++s)
      pairs.push_back(cyclepack::detail::distinct_pair(rng, static_cast<int>(cls.size())));
  }

  struct PairCheck {
    DistanceRecord rec;
    int bfs = 0;
  };
  std::vector<PairCheck> checks(pairs.size());
  parallel_for(pairs.size(), a.jobs, [&](std::size_t k) {
    const auto& A = cls[pairs[k].first];
    const auto& B = cls[pairs[k].second];
    checks[k].rec = walkup_distance(A, B);
    checks[k].bfs = bfs_distance(A, B);
  });

  Json records = Json::array();
  int passed = 0;
  int certified = 0;
  for (std::size_t k = 0; k < checks.size(); ++k) {
    const auto& c = checks[k];
    const bool ok = c.rec.q_certified && c.rec.i_walkup == c.bfs;
    passed += ok ? 1 : 0;
    certified += c.rec.q_certified ? 1 : 0;
    records.push_back({{"a", pairs[k].first},
                       {"b", pairs[k].second},
                       {"d", c.rec.d_ab},
                       {"q", c.rec.q_ab},
                       {"q_certified", c.rec.q_certified},
                       {"i_walkup", c.rec.i_walkup},
                       {"i_bfs", c.bfs},
                       {"ok", ok}});
    if (!ok && !res.failed) {
      res.failed = true;
      res.counterexample = format_matrix(cls[pairs[k].first]);
      res.counterexample_b = format_matrix(cls[pairs[k].second]);
    }
  }
  res.payload = {{"target", a.target},
                 {"all_passed", !res.failed},
                 {"rows", R},
                 {"cols", S},
                 {"class_size", cls.size()},
                 {"mode", exhaustive ? "exhaustive" : "sampled"},
                 {"pairs", pairs.size()},
                 {"passed", passed},
                 {"certified", certified},
                 {"checks", std::move(records)}};
  return res;
}

}  // namespace detail

inline SweepResult run_sweep(const SweepArgs& a) {
  if (a.target == "walkup") return detail::walkup_sweep(a);
  return detail::orientation_sweep(a);
}

/// Orientation failures are written in the bipartite format. A walkup
/// failure writes matrix A to `path` and matrix B to `path` + ".b".
inline void write_counterexample(const std::string& path, const SweepResult& s) {
  write_text_file(path, s.counterexample);
  if (!s.counterexample_b.empty()) write_text_file(path + ".b", s.counterexample_b);
}

}  // namespace cyclepack::cli
