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

// Orientations of K_{m,n} and K_n, arc indexing and the validation
// predicates (Eulerian, delta-Eulerian, antisymmetry).
//
// Vertex ids share one dense space: in a bipartite host the row class A is
// 0..m-1 and the column class B is m..m+n-1; in a tournament the vertices are
// 0..n-1.

#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclepack/error.hpp"

namespace cyclepack {

/// One arc of a host graph: (tail, head) in the host's vertex id space plus
/// its dense index into the host's arc universe.
struct ArcRef {
  int tail = 0;
  int head = 0;
  int index = 0;

  friend bool operator==(const ArcRef&, const ArcRef&) = default;
};

/// Orientation of the complete bipartite graph K_{m,n}, stored as an m x n
/// sign matrix: +1 at (i, j) means a_i -> b_j, -1 means b_j -> a_i.
///
/// Construction checks shape and alphabet only; the Eulerian predicate is a
/// property queried through validate_bipartite(). Class sizes need not be even
/// (pair-graphs of a tournament partition are generally not).
class BipartiteTournament {
 public:
  BipartiteTournament(int m, int n, std::vector<std::int8_t> signs)
      : m_(m), n_(n), signs_(std::move(signs)) {
    if (m_ < 1 || n_ < 1)
      throw StructuralError("bipartite orientation needs m >= 1 and n >= 1");
    if (signs_.size() != static_cast<std::size_t>(m_) * static_cast<std::size_t>(n_))
      throw StructuralError("sign matrix has " + std::to_string(signs_.size()) +
                            " entries, expected " + std::to_string(m_) + "x" +
                            std::to_string(n_));
    for (std::int8_t s : signs_)
      if (s != 1 && s != -1)
        throw EncodingError("orientation entry " + std::to_string(int{s}) +
                            " is not +1 or -1");
  }

  int m() const { return m_; }
  int n() const { return n_; }
  int num_vertices() const { return m_ + n_; }
  int num_arcs() const { return m_ * n_; }

  std::int8_t sign(int row, int col) const { return signs_[arc_index(row, col)]; }
  bool row_to_col(int row, int col) const { return sign(row, col) > 0; }
  std::span<const std::int8_t> signs() const { return signs_; }

  int row_vertex(int row) const { return row; }
  int col_vertex(int col) const { return m_ + col; }
  bool is_row_vertex(int v) const { return v < m_; }

  int arc_index(int row, int col) const { return row * n_ + col; }

  /// Arc with the given dense index (row-major position in the sign matrix).
  ArcRef arc(int index) const {
    const int row = index / n_;
    const int col = index % n_;
    if (signs_[index] > 0) return {row_vertex(row), col_vertex(col), index};
    return {col_vertex(col), row_vertex(row), index};
  }

  /// Index of the arc joining u and v (either direction), or -1 when u and v
  /// lie in the same class.
  int arc_between(int u, int v) const {
    if (is_row_vertex(u) == is_row_vertex(v)) return -1;
    if (!is_row_vertex(u)) std::swap(u, v);
    return arc_index(u, v - m_);
  }

  /// True when the host contains the arc u -> v.
  bool has_arc(int u, int v) const {
    const int idx = arc_between(u, v);
    if (idx < 0) return false;
    return is_row_vertex(u) ? signs_[idx] > 0 : signs_[idx] < 0;
  }

  int out_degree(int v) const {
    int out = 0;
    if (is_row_vertex(v)) {
      for (int j = 0; j < n_; ++j) out += row_to_col(v, j) ? 1 : 0;
    } else {
      for (int i = 0; i < m_; ++i) out += row_to_col(i, v - m_) ? 0 : 1;
    }
    return out;
  }
  int in_degree(int v) const {
    return (is_row_vertex(v) ? n_ : m_) - out_degree(v);
  }

  /// Copy with the single entry (row, col) reversed.
  BipartiteTournament flipped(int row, int col) const {
    auto s = signs_;
    s[arc_index(row, col)] = static_cast<std::int8_t>(-s[arc_index(row, col)]);
    return {m_, n_, std::move(s)};
  }

  /// Copy with every arc reversed.
  BipartiteTournament reversed() const {
    auto s = signs_;
    for (auto& v : s) v = static_cast<std::int8_t>(-v);
    return {m_, n_, std::move(s)};
  }

  friend bool operator==(const BipartiteTournament&,
                         const BipartiteTournament&) = default;

 private:
  int m_;
  int n_;
  std::vector<std::int8_t> signs_;
};

/// Orientation of K_n as a 0/1 adjacency matrix; adj[i][j] = 1 means i -> j.
///
/// Construction checks shape and alphabet. Antisymmetry, odd order and
/// regularity are checked by validate_tournament().
class Tournament {
 public:
  Tournament(int n, std::vector<std::uint8_t> adj) : n_(n), adj_(std::move(adj)) {
    if (n_ < 1) throw StructuralError("tournament needs n >= 1");
    if (adj_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_))
      throw StructuralError("adjacency matrix has " + std::to_string(adj_.size()) +
                            " entries, expected " + std::to_string(n_) + "x" +
                            std::to_string(n_));
    for (std::uint8_t a : adj_)
      if (a > 1)
        throw EncodingError("adjacency entry " + std::to_string(int{a}) +
                            " is not 0 or 1");
  }

  int n() const { return n_; }
  int num_arcs() const { return n_ * (n_ - 1) / 2; }
  bool has_arc(int u, int v) const { return adj_[u * n_ + v] != 0; }
  std::span<const std::uint8_t> adjacency() const { return adj_; }

  int out_degree(int v) const {
    int out = 0;
    for (int j = 0; j < n_; ++j) out += adj_[v * n_ + j];
    return out;
  }
  int in_degree(int v) const {
    int in = 0;
    for (int i = 0; i < n_; ++i) in += adj_[i * n_ + v];
    return in;
  }

  /// Dense index of the unordered pair {u, v}, u != v: position of (min, max)
  /// in the lexicographic list of pairs.
  int arc_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    return u * n_ - u * (u + 1) / 2 + (v - u - 1);
  }

  /// Copy with each listed arc u -> v replaced by v -> u. Regularity is kept
  /// only when the list is a union of directed cycles.
  Tournament with_reversed(std::initializer_list<std::pair<int, int>> arcs) const {
    auto adj = adj_;
    for (auto [u, v] : arcs) {
      adj[u * n_ + v] = 0;
      adj[v * n_ + u] = 1;
    }
    return {n_, std::move(adj)};
  }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> adj_;
};

struct DegreeViolation {
  int vertex = 0;
  int out_degree = 0;
  int in_degree = 0;

  friend bool operator==(const DegreeViolation&, const DegreeViolation&) = default;
};

struct ValidationReport {
  bool is_complete = false;
  bool is_eulerian = false;
  /// Smallest delta for which the orientation is delta-Eulerian, capped at 1.
  double delta_margin = 0.0;
  /// Vertices whose in- and out-degree differ from the balanced value.
  std::vector<DegreeViolation> violations;
};

namespace detail {

// Relative deficiency of min(out, in) against half of the total degree.
inline double deficiency(int out, int in, int total) {
  if (total == 0) return 0.0;
  const double half = total / 2.0;
  const double d = 1.0 - std::min(out, in) / half;
  return std::clamp(d, 0.0, 1.0);
}

}  // namespace detail

inline ValidationReport validate_bipartite(const BipartiteTournament& g) {
  ValidationReport report;
  report.is_complete = true;
  const int m = g.m();
  const int n = g.n();
  std::vector<int> col_plus(n, 0);
  double delta = 0.0;
  for (int i = 0; i < m; ++i) {
    int out = 0;
    for (int j = 0; j < n; ++j) {
      if (g.row_to_col(i, j)) {
        ++out;
        ++col_plus[j];
      }
    }
    const int in = n - out;
    if (out != in) report.violations.push_back({g.row_vertex(i), out, in});
    delta = std::max(delta, detail::deficiency(out, in, n));
  }
  for (int j = 0; j < n; ++j) {
    const int in = col_plus[j];
    const int out = m - in;
    if (out != in) report.violations.push_back({g.col_vertex(j), out, in});
    delta = std::max(delta, detail::deficiency(out, in, m));
  }
  report.is_eulerian = report.violations.empty();
  report.delta_margin = report.is_eulerian ? 0.0 : delta;
  return report;
}

inline ValidationReport validate_tournament(const Tournament& t) {
  const int n = t.n();
  if (n % 2 == 0)
    throw DomainError("no regular tournament exists on an even number (" +
                      std::to_string(n) + ") of vertices");
  for (int i = 0; i < n; ++i) {
    if (t.has_arc(i, i))
      throw EncodingError("loop at vertex " + std::to_string(i));
    for (int j = i + 1; j < n; ++j)
      if (t.has_arc(i, j) == t.has_arc(j, i))
        throw EncodingError("pair {" + std::to_string(i) + ", " + std::to_string(j) +
                            "} is not oriented exactly once");
  }
  ValidationReport report;
  report.is_complete = true;
  const int half = (n - 1) / 2;
  double delta = 0.0;
  for (int v = 0; v < n; ++v) {
    const int out = t.out_degree(v);
    const int in = n - 1 - out;
    if (out != half) report.violations.push_back({v, out, in});
    delta = std::max(delta, detail::deficiency(out, in, n - 1));
  }
  report.is_eulerian = report.violations.empty();
  report.delta_margin = report.is_eulerian ? 0.0 : delta;
  return report;
}

inline bool is_eulerian(const BipartiteTournament& g) {
  return validate_bipartite(g).is_eulerian;
}

inline void require_eulerian(const BipartiteTournament& g, const char* what) {
  if (!is_eulerian(g))
    throw DomainError(std::string(what) + " requires an Eulerian orientation");
}

inline void require_regular(const Tournament& t, const char* what) {
  if (!validate_tournament(t).is_eulerian)
    throw DomainError(std::string(what) + " requires a regular tournament");
}

/// All m*n arcs in row-major order of the sign matrix.
inline std::vector<ArcRef> arcs(const BipartiteTournament& g) {
  std::vector<ArcRef> out;
  out.reserve(g.num_arcs());
  for (int idx = 0; idx < g.num_arcs(); ++idx) out.push_back(g.arc(idx));
  return out;
}

/// All n(n-1)/2 arcs, ordered by the lexicographic order of their endpoint
/// pair {min, max}.
inline std::vector<ArcRef> arcs(const Tournament& t) {
  std::vector<ArcRef> out;
  out.reserve(t.num_arcs());
  int idx = 0;
  for (int u = 0; u < t.n(); ++u)
    for (int v = u + 1; v < t.n(); ++v, ++idx)
      out.push_back(t.has_arc(u, v) ? ArcRef{u, v, idx} : ArcRef{v, u, idx});
  return out;
}

}  // namespace cyclepack
