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

#include <cstdio>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyclepack/cyclepack.hpp"
#include "report.hpp"
#include "sweeps.hpp"

namespace cyclepack::cli {
namespace {

// Exit codes: 0 success, 1 a verification check failed, 2 usage or input
// error, 3 a resource limit was hit.
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResource = 3;

struct Output {
  bool json = false;
};

int emit(const RunReport& r, const Output& out) {
  if (out.json)
    std::cout << r.to_json().dump(2) << '\n';
  else
    print_text(r);
  return 0;
}

// ---- gen -----------------------------------------------------------------

struct GenArgs {
  int m = 0;
  int n = 0;
  std::optional<std::uint64_t> steps;
  std::uint64_t seed = 0;
  std::string out_path;
};

int run_gen_bipartite(const GenArgs& a, const Output& out) {
  RunReport r{"gen bipartite"};
  r.seeds = {a.seed};
  const std::uint64_t steps = a.steps.value_or(default_bipartite_steps(a.m, a.n));
  const auto g = randomize_bipartite(canonical_bipartite(a.m, a.n), {a.seed, steps});
  const std::string text = format_bipartite(g);
  Digest content;
  content.add(text);
  r.payload = {{"kind", "bipartite"}, {"m", a.m},       {"n", a.n},
               {"steps", steps},      {"rng", kRngAlgorithm}, {"output_digest", content.value()},
               {"eulerian", is_eulerian(g)}};
  if (a.out_path.empty()) {
    std::cout << text;
    return 0;
  }
  write_text_file(a.out_path, text);
  return emit(r, out);
}

int run_gen_tournament(const GenArgs& a, const Output& out) {
  RunReport r{"gen tournament"};
  r.seeds = {a.seed};
  const std::uint64_t steps = a.steps.value_or(default_tournament_steps(a.n));
  const auto t = randomize_tournament(canonical_regular_tournament(a.n), {a.seed, steps});
  const std::string text = format_tournament(t);
  Digest content;
  content.add(text);
  r.payload = {{"kind", "tournament"}, {"n", a.n}, {"steps", steps}, {"rng", kRngAlgorithm},
               {"output_digest", content.value()}, {"regular", validate_tournament(t).is_eulerian}};
  if (a.out_path.empty()) {
    std::cout << text;
    return 0;
  }
  write_text_file(a.out_path, text);
  return emit(r, out);
}

// ---- census --------------------------------------------------------------

int run_census(const std::string& in, const Output& out) {
  RunReport r{"census"};
  const auto g = parse_bipartite(r.read_input(in));
  const Census c = four_cycle_census(g);
  const auto ids = check_census_identities(c, codegree_table(g));
  const bool eulerian = is_eulerian(g);
  Json p = {{"m", g.m()}, {"n", g.n()}, {"eulerian", eulerian}, {"x", c.x}, {"h1", c.h1},
            {"h2", c.h2}, {"h3", c.h3}, {"t", c.t}};
  if (eulerian) {
    const ArcProfile prof = arc_profile(g);
    const BoundReport b = evaluate_bounds(c, prof);
    p["alpha_G"] = num(prof.alpha_g());
    p["argmin_arc"] = prof.argmin_arc;
    p["bound_l21"] = num(b.bound_l21);
    p["bound_l22"] = num(b.bound_l22);
    p["bounds_satisfied"] = b.satisfied;
  } else {
    // The per-arc balance measure and the second bound assume Eulerian input.
    p["alpha_G"] = nullptr;
    p["argmin_arc"] = nullptr;
    p["bound_l21"] = num(static_cast<double>(g.m()) * g.m() * g.n() * g.n() / 32.0);
    p["bound_l22"] = nullptr;
    p["bounds_satisfied"] = nullptr;
  }
  p["identities"] = {{"total", ids.total_ok},
                     {"sources", ids.sources_ok},
                     {"difference", ids.difference_ok},
                     {"source_formula", ids.source_formula_ok},
                     {"pair_sum", ids.pair_sum_ok}};
  p["identities_ok"] = ids.all();
  r.payload = std::move(p);
  return emit(r, out);
}

// ---- pack ----------------------------------------------------------------

struct PackArgs {
  std::string in;
  std::string method = "local";
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  std::uint64_t max_nodes = ExactLimits{}.max_nodes;
  int max_edges = ExactLimits{}.max_edges;
};

int run_pack(const PackArgs& a, const Output& out) {
  RunReport r{"pack"};
  r.seeds = {a.seed};
  const auto g = parse_bipartite(r.read_input(a.in));
  const PackMethod method = parse_pack_method(a.method);
  const std::uint64_t budget = a.budget.value_or(static_cast<std::uint64_t>(g.num_arcs()));
  Packing p;
  std::optional<std::string> limit;
  try {
    p = pack(g, method, a.seed, budget, {a.max_edges, a.max_nodes});
  } catch (const PackingLimitError& e) {
    p = e.partial();
    limit = e.what();
  }
  const VerifyResult v = verify_packing(g, p);
  Json cycles = Json::array();
  for (const auto& c : p.arc_indices()) cycles.push_back(c);
  r.payload = {
      {"m", g.m()},
      {"n", g.n()},
      {"method", to_string(method)},
      {"budget", method == PackMethod::kLocal ? Json(budget) : Json(nullptr)},
      {"size", p.size()},
      {"upper_bound_mn4", g.num_arcs() / 4},
      {"ratio_vs_target", num(p.size() / (g.num_arcs() * kBalanceValue))},
      {"colors_used", method == PackMethod::kColor ? Json(p.colors_used) : Json(nullptr)},
      {"max_degree", method == PackMethod::kColor ? Json(p.max_degree) : Json(nullptr)},
      {"certified_optimal", p.certified_optimal},
      {"limit_hit", limit ? Json(*limit) : Json(nullptr)},
      {"verified", v.ok},
      {"cycles", cycles},
  };
  emit(r, out);
  if (!v) {
    std::cerr << "packing failed verification: " << v.reason << '\n';
    return kExitCheckFailed;
  }
  return limit ? kExitResource : 0;
}

// ---- interchange ---------------------------------------------------------

int run_enumerate(const std::string& rows, const std::string& cols, std::size_t limit, bool list,
                  const Output& out) {
  RunReport r{"interchange enumerate"};
  const auto R = parse_margins(rows);
  const auto S = parse_margins(cols);
  const auto cls = enumerate_matrix_class(R, S, {limit});
  Json keys = Json::array();
  if (list)
    for (const auto& a : cls) keys.push_back(a.key());
  r.payload = {{"rows", R}, {"cols", S}, {"class_size", cls.size()},
               {"matrices", list ? keys : Json(nullptr)}};
  return emit(r, out);
}

int run_distance(const std::string& a_path, const std::string& b_path, bool bfs, int max_arcs,
                 std::size_t limit, const Output& out) {
  RunReport r{"interchange distance"};
  const auto a = parse_matrix(r.read_input(a_path));
  const auto b = parse_matrix(r.read_input(b_path));
  require_same_margins(a, b);
  const Digraph diff = difference_digraph(a, b);
  WalkupOptions opts;
  opts.decomposition.max_arcs = max_arcs;
  opts.with_bfs = bfs;
  opts.class_limits.max_class = limit;
  const DistanceRecord d = walkup_distance(a, b, opts);
  Json cycles = Json::array();
  for (const auto& c : d.decomposition.cycles) {
    Json verts = Json::array();
    for (int id : c) verts.push_back(diff.arcs[id].first);
    cycles.push_back(verts);
  }
  r.payload = {{"m", a.m()},
               {"n", a.n()},
               {"d", d.d_ab},
               {"q", d.q_ab},
               {"q_certified", d.q_certified},
               {"i_walkup", d.i_walkup},
               {"i_bfs", d.i_bfs ? Json(*d.i_bfs) : Json(nullptr)},
               {"cycles", cycles}};
  return emit(r, out);
}

int run_diameter(const std::string& rows, const std::string& cols, std::size_t limit,
                 unsigned jobs, const Output& out) {
  RunReport r{"interchange diameter"};
  const auto R = parse_margins(rows);
  const auto S = parse_margins(cols);
  const DiameterReport d = diameter(R, S, {limit}, jobs);
  r.payload = {{"rows", R},
               {"cols", S},
               {"class_size", d.class_size},
               {"diameter", d.diameter},
               {"witness", {{"a", d.a->key()}, {"b", d.b->key()}}},
               {"connected", d.connected},
               {"brualdi_bound", num(d.brualdi_bound)},
               {"five_twelfths_bound", num(d.five_twelfths_bound)},
               {"within_brualdi", d.within_brualdi},
               {"within_five_twelfths", d.within_five_twelfths}};
  return emit(r, out);
}

int run_antipodal(int m, int n, int samples, std::uint64_t seed, bool bfs, std::size_t limit,
                  const Output& out) {
  RunReport r{"interchange antipodal"};
  r.seeds = {seed};
  AntipodalOptions opts;
  opts.class_limits.max_class = limit;
  opts.samples = samples;
  opts.seed = seed;
  opts.with_bfs = bfs;
  const AntipodalReport a = antipodal_audit(m, n, opts);
  r.payload = {{"m", a.m},
               {"n", a.n},
               {"exhaustive", a.exhaustive},
               {"pairs", a.pairs},
               {"min_i", a.min_i},
               {"max_i", a.max_i},
               {"lower_bound", a.lower_bound},
               {"upper_value", num(a.upper_value)},
               {"upper_ceiling", a.upper_ceiling},
               {"lower_ok", a.lower_ok},
               {"upper_ok", a.upper_ok},
               {"all_certified", a.all_certified},
               {"bfs_checked", a.bfs_checked}};
  emit(r, out);
  return a.lower_ok ? 0 : kExitCheckFailed;
}

// ---- experiment partition ------------------------------------------------

struct ExperimentArgs {
  int n = 49;
  std::uint64_t seed = 0;
  double delta = 0.5;
  std::string in;
  std::optional<std::uint64_t> steps;
  std::uint64_t budget_per_arc = 1;
  int min_class_size = 1;
  unsigned jobs = 1;
};

int run_experiment(const ExperimentArgs& a, const Output& out) {
  RunReport r{"experiment partition"};
  r.seeds = {a.seed};
  Tournament t = a.in.empty()
                     ? randomize_tournament(canonical_regular_tournament(a.n),
                                            {a.seed, a.steps.value_or(default_tournament_steps(a.n))})
                     : parse_tournament(r.read_input(a.in));
  ExperimentOptions opts;
  opts.delta_target = a.delta;
  opts.budget_per_arc = a.budget_per_arc;
  opts.min_class_size = a.min_class_size;
  opts.jobs = a.jobs;
  const ExperimentReport e = run_partition_experiment(t, a.seed, opts);
  Json pairs = Json::array();
  for (const auto& p : e.pairs)
    pairs.push_back({{"i", p.i},
                     {"j", p.j},
                     {"rows", p.rows},
                     {"cols", p.cols},
                     {"packed", p.packed},
                     {"delta_margin", num(p.delta_margin)},
                     {"delta_clean", p.delta_clean},
                     {"verified", p.verified}});
  r.payload = {{"n", e.n},
               {"m", e.m},
               {"seed", e.seed},
               {"tournament_source", a.in.empty() ? "generated" : "file"},
               {"delta_target", num(e.delta_target)},
               {"delta_observed", num(e.delta_observed)},
               {"deviation_fraction", num(e.deviation_fraction)},
               {"class_sizes", e.class_sizes},
               {"min_class", e.min_class},
               {"max_class", e.max_class},
               {"min_class_size", e.min_class_size},
               {"size_bounds_ok", e.size_bounds_ok},
               {"skipped_pairs", e.skipped_pairs},
               {"delta_clean_pairs", e.delta_clean_pairs},
               {"all_pairs_delta_eulerian", e.all_pairs_delta_eulerian},
               {"total_packed", e.total_packed},
               {"target", num(e.target)},
               {"ratio", num(e.ratio)},
               {"chernoff_tail_estimate", num(e.chernoff_tail_estimate)},
               {"sum_squares", e.sum_squares},
               {"cross_arcs", e.cross_arcs},
               {"within_class_arcs", e.within_class_arcs},
               {"cross_identity_ok", e.cross_identity_ok},
               {"pairs_verified", e.pairs_verified},
               {"globally_verified", e.globally_verified},
               {"cap_ok", e.cap_ok},
               {"pairs", pairs},
               {"cycles", e.cycles}};
  emit(r, out);
  const bool ok = e.cross_identity_ok && e.pairs_verified && e.globally_verified && e.cap_ok;
  return ok ? 0 : kExitCheckFailed;
}

// ---- verify --------------------------------------------------------------

int run_verify(const SweepArgs& a, const Output& out) {
  RunReport r{"verify"};
  r.seeds = {a.seed};
  const SweepResult s = run_sweep(a);
  r.payload = s.payload;
  emit(r, out);
  if (s.failed) {
    write_counterexample(a.counterexample, s);
    std::cerr << "verification failed; counterexample written to " << a.counterexample << '\n';
    return kExitCheckFailed;
  }
  return 0;
}

}  // namespace
}  // namespace cyclepack::cli

int main(int argc, char** argv) {
  using namespace cyclepack;
  using namespace cyclepack::cli;

  CLI::App app{"Directed 4-cycle packing in Eulerian bipartite tournaments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  Output out;
  int status = 0;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->require_subcommand(1);
  GenArgs gen_args;
  auto* gen_b = gen->add_subcommand("bipartite", "Eulerian orientation of K_{m,n}");
  gen_b->add_option("--m", gen_args.m, "Rows (even)")->required();
  gen_b->add_option("--n", gen_args.n, "Columns (even)")->required();
  gen_b->add_option("--steps", gen_args.steps, "Chain steps (default 20mn)");
  gen_b->add_option("--seed", gen_args.seed, "RNG seed");
  gen_b->add_option("--out", gen_args.out_path, "Output file (stdout when omitted)");
  gen_b->add_flag("--json", out.json, "Print the run report as JSON");
  gen_b->callback([&] { status = run_gen_bipartite(gen_args, out); });
  auto* gen_t = gen->add_subcommand("tournament", "Regular tournament on n vertices");
  gen_t->add_option("--n", gen_args.n, "Vertices (odd)")->required();
  gen_t->add_option("--steps", gen_args.steps, "Chain steps (default 20n^2)");
  gen_t->add_option("--seed", gen_args.seed, "RNG seed");
  gen_t->add_option("--out", gen_args.out_path, "Output file (stdout when omitted)");
  gen_t->add_flag("--json", out.json, "Print the run report as JSON");
  gen_t->callback([&] { status = run_gen_tournament(gen_args, out); });

  // census
  auto* census = app.add_subcommand("census", "Four-vertex census and lower bounds");
  std::string census_in;
  census->add_option("--in", census_in, "Bipartite instance file")->required();
  census->add_flag("--json", out.json, "Print the run report as JSON");
  census->callback([&] { status = run_census(census_in, out); });

  // pack
  auto* packcmd = app.add_subcommand("pack", "Pack arc-disjoint directed 4-cycles");
  PackArgs pack_args;
  packcmd->add_option("--in", pack_args.in, "Bipartite instance file")->required();
  packcmd->add_option("--method", pack_args.method, "greedy|local|color|exact")
      ->check(CLI::IsMember({"greedy", "local", "color", "exact"}));
  packcmd->add_option("--seed", pack_args.seed, "RNG seed");
  packcmd->add_option("--budget", pack_args.budget, "Local-search attempts (default mn)");
  packcmd->add_option("--max-edges", pack_args.max_edges, "Exact: hypergraph size cap");
  packcmd->add_option("--max-nodes", pack_args.max_nodes, "Exact: search-node cap");
  packcmd->add_flag("--json", out.json, "Print the run report as JSON");
  packcmd->callback([&] { status = run_pack(pack_args, out); });

  // interchange
  auto* inter = app.add_subcommand("interchange", "Interchange graphs of 0/1 matrix classes");
  inter->require_subcommand(1);
  std::string rows = "2,2,2,2";
  std::string cols = "2,2,2,2";
  std::size_t class_limit = ClassLimits{}.max_class;
  unsigned jobs = default_jobs();
  auto* en = inter->add_subcommand("enumerate", "List the class A(R,S)");
  bool list = false;
  en->add_option("--rows", rows, "Row sums, comma separated");
  en->add_option("--cols", cols, "Column sums, comma separated");
  en->add_option("--limit", class_limit, "Maximum class size");
  en->add_flag("--list", list, "Include every matrix in the payload");
  en->add_flag("--json", out.json, "Print the run report as JSON");
  en->callback([&] { status = run_enumerate(rows, cols, class_limit, list, out); });

  auto* dist = inter->add_subcommand("distance", "Interchange distance of two matrices");
  std::string a_path;
  std::string b_path;
  bool bfs = false;
  int max_arcs = DecompositionLimits{}.max_arcs;
  dist->add_option("--a", a_path, "First matrix file")->required();
  dist->add_option("--b", b_path, "Second matrix file")->required();
  dist->add_flag("--bfs", bfs, "Cross-check with breadth-first search");
  dist->add_option("--max-arcs", max_arcs, "Exact decomposition arc limit (at most 64)");
  dist->add_option("--limit", class_limit, "BFS visited-matrix cap");
  dist->add_flag("--json", out.json, "Print the run report as JSON");
  dist->callback([&] { status = run_distance(a_path, b_path, bfs, max_arcs, class_limit, out); });

  auto* diam = inter->add_subcommand("diameter", "Diameter of G(R,S) by all-pairs BFS");
  diam->add_option("--rows", rows, "Row sums, comma separated");
  diam->add_option("--cols", cols, "Column sums, comma separated");
  diam->add_option("--limit", class_limit, "Maximum class size");
  diam->add_option("--jobs", jobs, "Worker threads (default CYCLEPACK_JOBS or all cores)");
  diam->add_flag("--json", out.json, "Print the run report as JSON");
  diam->callback([&] { status = run_diameter(rows, cols, class_limit, jobs, out); });

  auto* anti = inter->add_subcommand("antipodal", "Distances between complementary matrices");
  int am = 4;
  int an = 4;
  int samples = 100;
  std::uint64_t anti_seed = 0;
  anti->add_option("--m", am, "Rows (even)");
  anti->add_option("--n", an, "Columns (even)");
  anti->add_option("--samples", samples, "Sampled pairs when the class is too large");
  anti->add_option("--seed", anti_seed, "RNG seed for sampling");
  anti->add_option("--limit", class_limit, "Maximum class size for the exhaustive audit");
  anti->add_flag("--bfs", bfs, "Cross-check with breadth-first search");
  anti->add_flag("--json", out.json, "Print the run report as JSON");
  anti->callback(
      [&] { status = run_antipodal(am, an, samples, anti_seed, bfs, class_limit, out); });

  // experiment
  auto* exp = app.add_subcommand("experiment", "Tournament experiments");
  exp->require_subcommand(1);
  ExperimentArgs exp_args;
  exp_args.jobs = default_jobs();
  auto* part = exp->add_subcommand("partition", "Random partition and pair-graph packing");
  part->add_option("--n", exp_args.n, "Tournament order (odd, >= 9)");
  part->add_option("--seed", exp_args.seed, "Seed for the tournament and the partition");
  part->add_option("--delta", exp_args.delta, "delta-Eulerian threshold");
  part->add_option("--in", exp_args.in, "Tournament file instead of a generated one");
  part->add_option("--steps", exp_args.steps, "Chain steps for the generated tournament");
  part->add_option("--budget-per-arc", exp_args.budget_per_arc, "Local-search attempts per arc");
  part->add_option("--min-class-size", exp_args.min_class_size, "Lower class-size check");
  part->add_option("--jobs", exp_args.jobs, "Worker threads (default CYCLEPACK_JOBS or all cores)");
  part->add_flag("--json", out.json, "Print the run report as JSON");
  part->callback([&] { status = run_experiment(exp_args, out); });

  // verify
  auto* ver = app.add_subcommand("verify", "Batch verification sweeps");
  SweepArgs sweep;
  sweep.jobs = default_jobs();
  std::string sizes = "2x2,2x4,4x4";
  ver->add_option("--target", sweep.target, "lemma21|lemma22|walkup|census_identities")
      ->required()
      ->check(CLI::IsMember({"lemma21", "lemma22", "walkup", "census_identities"}));
  ver->add_option("--sizes", sizes, "Comma-separated MxN sizes (orientation targets)");
  ver->add_option("--rows", sweep.rows, "Row sums (walkup)");
  ver->add_option("--cols", sweep.cols, "Column sums (walkup)");
  ver->add_option("--samples", sweep.samples, "Sampled instances or pairs per size");
  ver->add_option("--seed", sweep.seed, "Base seed");
  ver->add_option("--jobs", sweep.jobs, "Worker threads (default CYCLEPACK_JOBS or all cores)");
  ver->add_option("--counterexample", sweep.counterexample, "Where to write a failing instance");
  ver->add_flag("--json", out.json, "Print the run report as JSON");
  ver->callback([&] {
    sweep.sizes = parse_sizes(sizes);
    status = run_verify(sweep, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const cyclepack::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const cyclepack::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInputError;
  }
  return status;
}
