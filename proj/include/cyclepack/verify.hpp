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

// Certificate checks that only read the raw host graph.

#pragma once

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cyclepack/core_model.hpp"
#include "cyclepack/decomposition.hpp"
#include "cyclepack/packing.hpp"

namespace cyclepack {

struct VerifyResult {
  bool ok = true;
  std::string reason;

  static VerifyResult fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

/// Every cycle is a closed alternating walk of four host arcs, each arc
/// (tail, head, index) matches the host orientation, and no arc index is used
/// twice across the packing. Also checks the trivial mn/4 cap.
inline VerifyResult verify_packing(const BipartiteTournament& g, const Packing& p) {
  std::set<int> used;
  for (std::size_t c = 0; c < p.cycles.size(); ++c) {
    const auto& cyc = p.cycles[c];
    const std::string where = "cycle " + std::to_string(c) + ": ";
    for (int k = 0; k < 4; ++k) {
      const ArcRef& a = cyc[k];
      if (a.index < 0 || a.index >= g.num_arcs())
        return VerifyResult::fail(where + "arc index out of range");
      if (a.tail < 0 || a.tail >= g.num_vertices() || a.head < 0 ||
          a.head >= g.num_vertices())
        return VerifyResult::fail(where + "vertex id out of range");
      if (g.is_row_vertex(a.tail) == g.is_row_vertex(a.head))
        return VerifyResult::fail(where + "arc joins two vertices of one class");
      if (!g.has_arc(a.tail, a.head))
        return VerifyResult::fail(where + "arc " + std::to_string(a.tail) + "->" +
                                  std::to_string(a.head) + " is not in the host");
      if (g.arc_between(a.tail, a.head) != a.index)
        return VerifyResult::fail(where + "arc index does not match its endpoints");
      if (a.head != cyc[(k + 1) % 4].tail)
        return VerifyResult::fail(where + "arcs are not consecutive");
      if (!used.insert(a.index).second)
        return VerifyResult::fail(where + "arc " + std::to_string(a.index) + " reused");
    }
    if (cyc[0].tail == cyc[2].tail || cyc[1].tail == cyc[3].tail)
      return VerifyResult::fail(where + "walk revisits a vertex");
  }
  if (4LL * static_cast<long long>(p.cycles.size()) > g.num_arcs())
    return VerifyResult::fail("packing exceeds mn/4 cycles");
  return {};
}

/// Every arc id of `d` appears in exactly one cycle, and every cycle is a
/// closed walk without repeated vertices.
inline VerifyResult verify_decomposition(const Digraph& d, const Decomposition& dec) {
  std::vector<int> seen(d.arcs.size(), 0);
  if (dec.q != static_cast<int>(dec.cycles.size()))
    return VerifyResult::fail("q does not match the number of cycles");
  for (std::size_t c = 0; c < dec.cycles.size(); ++c) {
    const auto& cyc = dec.cycles[c];
    const std::string where = "cycle " + std::to_string(c) + ": ";
    if (cyc.empty()) return VerifyResult::fail(where + "empty");
    std::set<int> vertices;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const int id = cyc[k];
      if (id < 0 || id >= static_cast<int>(d.arcs.size()))
        return VerifyResult::fail(where + "arc id out of range");
      if (seen[id]++) return VerifyResult::fail(where + "arc " + std::to_string(id) + " reused");
      if (d.arcs[id].second != d.arcs[cyc[(k + 1) % cyc.size()]].first)
        return VerifyResult::fail(where + "arcs are not consecutive");
      if (!vertices.insert(d.arcs[id].first).second)
        return VerifyResult::fail(where + "repeated vertex");
    }
  }
  for (std::size_t id = 0; id < seen.size(); ++id)
    if (seen[id] != 1) return VerifyResult::fail("arc " + std::to_string(id) + " not covered");
  return {};
}

/// 4-cycles of a tournament given as vertex sequences v0 -> v1 -> v2 -> v3 -> v0.
/// Checks each arc exists and no unordered vertex pair is used twice.
inline VerifyResult verify_tournament_cycles(const Tournament& t,
                                             const std::vector<std::array<int, 4>>& cycles) {
  std::set<std::pair<int, int>> used;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const auto& cyc = cycles[c];
    const std::string where = "cycle " + std::to_string(c) + ": ";
    std::set<int> distinct(cyc.begin(), cyc.end());
    if (distinct.size() != 4) return VerifyResult::fail(where + "repeated vertex");
    for (int k = 0; k < 4; ++k) {
      const int u = cyc[k];
      const int v = cyc[(k + 1) % 4];
      if (u < 0 || u >= t.n() || v < 0 || v >= t.n())
        return VerifyResult::fail(where + "vertex id out of range");
      if (!t.has_arc(u, v))
        return VerifyResult::fail(where + "arc " + std::to_string(u) + "->" +
                                  std::to_string(v) + " is not in the tournament");
      if (!used.insert({std::min(u, v), std::max(u, v)}).second)
        return VerifyResult::fail(where + "arc " + std::to_string(u) + "->" +
                                  std::to_string(v) + " reused");
    }
  }
  return {};
}

}  // namespace cyclepack
