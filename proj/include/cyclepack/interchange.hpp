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

// Classes A(R, S) of {0,1}-matrices with fixed margins, their interchange
// graphs, and distances in them.
//
// The distance between A and B in the interchange graph is
//
//   i(A, B) = d(A, B) / 2 - q(A, B)
//
// with d the number of differing entries and q the maximum number of cycles
// in a cycle decomposition of the balanced digraph encoded by A - B
// (+1 = row -> column, -1 = column -> row). walkup_distance() evaluates the
// right-hand side; bfs_distance() measures the left-hand side directly.

#pragma once

#include <cmath>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cyclepack/core_model.hpp"
#include "cyclepack/decomposition.hpp"
#include "cyclepack/error.hpp"
#include "cyclepack/io.hpp"
#include "cyclepack/parallel.hpp"
#include "cyclepack/sampling.hpp"

namespace cyclepack {

/// An m x n {0,1}-matrix together with its row and column sums.
class MarginMatrix {
 public:
  MarginMatrix(int m, int n, std::vector<std::uint8_t> entries)
      : m_(m), n_(n), entries_(std::move(entries)), row_sums_(m, 0), col_sums_(n, 0) {
    if (m_ < 1 || n_ < 1) throw StructuralError("matrix needs m >= 1 and n >= 1");
    if (entries_.size() != static_cast<std::size_t>(m_) * n_)
      throw StructuralError("matrix has " + std::to_string(entries_.size()) +
                            " entries, expected " + std::to_string(m_) + "x" +
                            std::to_string(n_));
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) {
        const std::uint8_t e = entries_[i * n_ + j];
        if (e > 1) throw EncodingError("matrix entry is not 0 or 1");
        row_sums_[i] += e;
        col_sums_[j] += e;
      }
    }
  }

  int m() const { return m_; }
  int n() const { return n_; }
  std::uint8_t at(int i, int j) const { return entries_[i * n_ + j]; }
  const std::vector<std::uint8_t>& entries() const { return entries_; }
  const std::vector<int>& row_sums() const { return row_sums_; }
  const std::vector<int>& col_sums() const { return col_sums_; }

  bool same_margins(const MarginMatrix& o) const {
    return row_sums_ == o.row_sums_ && col_sums_ == o.col_sums_;
  }

  /// Row-major '0'/'1' string; canonical key for BFS bookkeeping.
  std::string key() const {
    std::string k(entries_.size(), '0');
    for (std::size_t i = 0; i < entries_.size(); ++i) k[i] = entries_[i] ? '1' : '0';
    return k;
  }

  MarginMatrix complement() const {
    auto e = entries_;
    for (auto& v : e) v = static_cast<std::uint8_t>(1 - v);
    return {m_, n_, std::move(e)};
  }

  friend bool operator==(const MarginMatrix& a, const MarginMatrix& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  int m_;
  int n_;
  std::vector<std::uint8_t> entries_;
  std::vector<int> row_sums_;
  std::vector<int> col_sums_;
};

inline MarginMatrix parse_matrix(std::string_view text) {
  const auto lines = detail::split_lines(text);
  const auto [m, n] = detail::parse_dims(lines.front());
  return {m, n, detail::parse_grid<std::uint8_t>(lines, m, n, detail::decode_bit)};
}

inline std::string format_matrix(const MarginMatrix& a) {
  std::string out = std::to_string(a.m()) + " " + std::to_string(a.n()) + "\n";
  for (int i = 0; i < a.m(); ++i) {
    for (int j = 0; j < a.n(); ++j) out += a.at(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

/// The antipodal pair encoded by an Eulerian orientation: A has a 1 exactly
/// where the sign is +1, and B is its complement, so A - B is the sign matrix.
inline MarginMatrix matrix_from_orientation(const BipartiteTournament& g) {
  std::vector<std::uint8_t> e(g.signs().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = g.signs()[i] > 0 ? 1 : 0;
  return {g.m(), g.n(), std::move(e)};
}

struct ClassLimits {
  std::size_t max_class = 20000;
};

/// Every matrix with the given margins, in lexicographic row-major order.
/// Infeasible margins give an empty list.
inline std::vector<MarginMatrix> enumerate_matrix_class(const std::vector<int>& rows,
                                                        const std::vector<int>& cols,
                                                        const ClassLimits& limits = {}) {
  const int m = static_cast<int>(rows.size());
  const int n = static_cast<int>(cols.size());
  std::vector<MarginMatrix> out;
  if (m == 0 || n == 0) return out;
  long long row_total = 0;
  long long col_total = 0;
  for (int r : rows) {
    if (r < 0 || r > n) return out;
    row_total += r;
  }
  for (int c : cols) {
    if (c < 0 || c > m) return out;
    col_total += c;
  }
  if (row_total != col_total) return out;

  std::vector<std::uint8_t> e(static_cast<std::size_t>(m) * n, 0);
  std::vector<int> col_left(cols);
  std::vector<int> row_left(rows);
  // Cell-by-cell DFS, 0 before 1.
  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == m * n) {
      if (out.size() >= limits.max_class)
        throw ResourceError("matrix class exceeds the limit of " +
                            std::to_string(limits.max_class));
      out.emplace_back(m, n, e);
      return;
    }
    const int i = cell / n;
    const int j = cell % n;
    const int cols_after = n - j - 1;
    const int rows_after = m - i - 1;
    // 0: the row and column must still be completable.
    if (row_left[i] <= cols_after && col_left[j] <= rows_after) {
      e[cell] = 0;
      self(self, cell + 1);
    }
    if (row_left[i] > 0 && col_left[j] > 0) {
      e[cell] = 1;
      --row_left[i];
      --col_left[j];
      self(self, cell + 1);
      ++row_left[i];
      ++col_left[j];
      e[cell] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

/// Matrices one interchange away: each 2x2 submatrix equal to [[1,0],[0,1]]
/// or [[0,1],[1,0]] is swapped for the other. Distinct positions change
/// distinct entry sets, so the results are pairwise distinct matrices.
inline std::vector<MarginMatrix> interchange_neighbors(const MarginMatrix& a) {
  const int m = a.m();
  const int n = a.n();
  std::vector<MarginMatrix> out;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
          const int ik = a.at(i, k);
          const int il = a.at(i, l);
          const int jk = a.at(j, k);
          const int jl = a.at(j, l);
          if (ik == jl && il == jk && ik != il) {
            auto e = a.entries();
            e[i * n + k] = static_cast<std::uint8_t>(1 - ik);
            e[i * n + l] = static_cast<std::uint8_t>(1 - il);
            e[j * n + k] = static_cast<std::uint8_t>(1 - jk);
            e[j * n + l] = static_cast<std::uint8_t>(1 - jl);
            out.emplace_back(m, n, std::move(e));
          }
        }
      }
    }
  }
  return out;
}

inline void require_same_margins(const MarginMatrix& a, const MarginMatrix& b) {
  if (a.m() != b.m() || a.n() != b.n() || !a.same_margins(b))
    throw DomainError("matrices do not share row and column sums");
}

/// Interchange distance by breadth-first search from `a`. The number of
/// visited matrices is capped by limits.max_class.
inline int bfs_distance(const MarginMatrix& a, const MarginMatrix& b,
                        const ClassLimits& limits = {}) {
  require_same_margins(a, b);
  const std::string target = b.key();
  if (a.key() == target) return 0;
  std::unordered_map<std::string, int> dist{{a.key(), 0}};
  std::deque<MarginMatrix> queue{a};
  while (!queue.empty()) {
    const MarginMatrix u = std::move(queue.front());
    queue.pop_front();
    const int du = dist.at(u.key());
    for (auto& v : interchange_neighbors(u)) {
      std::string k = v.key();
      if (dist.contains(k)) continue;
      if (k == target) return du + 1;
      if (dist.size() >= limits.max_class)
        throw ResourceError("BFS visited more than " + std::to_string(limits.max_class) +
                            " matrices");
      dist.emplace(std::move(k), du + 1);
      queue.push_back(std::move(v));
    }
  }
  throw InvariantError("interchange graph is disconnected");
}

/// Balanced digraph of A - B: rows are vertices 0..m-1, columns m..m+n-1,
/// arcs in row-major order of the differing entries.
inline Digraph difference_digraph(const MarginMatrix& a, const MarginMatrix& b) {
  require_same_margins(a, b);
  Digraph d;
  d.num_vertices = a.m() + a.n();
  for (int i = 0; i < a.m(); ++i) {
    for (int j = 0; j < a.n(); ++j) {
      const int diff = int{a.at(i, j)} - int{b.at(i, j)};
      if (diff > 0) d.arcs.emplace_back(i, a.m() + j);
      if (diff < 0) d.arcs.emplace_back(a.m() + j, i);
    }
  }
  return d;
}

struct DistanceRecord {
  int d_ab = 0;
  int q_ab = 0;
  int i_walkup = 0;
  bool q_certified = false;
  std::optional<int> i_bfs;
  Decomposition decomposition;
};

struct WalkupOptions {
  DecompositionLimits decomposition{};
  bool with_bfs = false;
  ClassLimits class_limits{};
};

/// d/2 - q with q from max_cycle_decomposition. When BFS is requested and q is
/// certified, a disagreement throws InvariantError.
inline DistanceRecord walkup_distance(const MarginMatrix& a, const MarginMatrix& b,
                                      const WalkupOptions& opts = {}) {
  const Digraph diff = difference_digraph(a, b);
  DistanceRecord r;
  r.d_ab = static_cast<int>(diff.arcs.size());
  r.decomposition = max_cycle_decomposition(diff, opts.decomposition);
  r.q_ab = r.decomposition.q;
  r.q_certified = r.decomposition.certified_maximal;
  r.i_walkup = r.d_ab / 2 - r.q_ab;
  if (opts.with_bfs) {
    r.i_bfs = bfs_distance(a, b, opts.class_limits);
    if (r.q_certified && *r.i_bfs != r.i_walkup)
      throw InvariantError("interchange distance " + std::to_string(*r.i_bfs) +
                           " differs from d/2 - q = " + std::to_string(r.i_walkup));
  }
  return r;
}

/// sqrt(2)/4 = (1 + sqrt 2)/(4 + sqrt 8): asymptotic upper constant for
/// antipodal distances, in units of mn.
inline const double kAntipodalUpperConstant = std::sqrt(2.0) / 4.0;

struct AntipodalOptions {
  ClassLimits class_limits{};
  DecompositionLimits decomposition{};
  bool with_bfs = false;
  int samples = 100;  // used when the class is too large to enumerate
  std::uint64_t seed = 0;
};

struct AntipodalReport {
  int m = 0;
  int n = 0;
  bool exhaustive = false;
  int pairs = 0;
  int min_i = 0;
  int max_i = 0;
  int lower_bound = 0;         // mn/4
  double upper_value = 0.0;    // (sqrt 2 / 4) mn
  int upper_ceiling = 0;       // ceil of upper_value
  bool lower_ok = true;
  bool upper_ok = true;
  bool all_certified = true;
  int bfs_checked = 0;
};

/// Antipodal pairs (A, complement of A) have row sums n/2 and column sums m/2.
/// All pairs are audited when the class enumerates within limits (each
/// unordered pair once); otherwise `samples` pairs are drawn from the
/// interchange chain on Eulerian orientations, which are exactly the sign
/// matrices A - B of antipodal pairs.
inline AntipodalReport antipodal_audit(int m, int n, const AntipodalOptions& opts = {}) {
  if (m < 2 || n < 2 || m % 2 != 0 || n % 2 != 0)
    throw DomainError("antipodal matrices need even m and n");
  AntipodalReport rep;
  rep.m = m;
  rep.n = n;
  rep.lower_bound = m * n / 4;
  rep.upper_value = kAntipodalUpperConstant * m * n;
  rep.upper_ceiling = static_cast<int>(std::ceil(rep.upper_value));

  std::vector<MarginMatrix> firsts;
  try {
    auto cls = enumerate_matrix_class(std::vector<int>(m, n / 2), std::vector<int>(n, m / 2),
                                      opts.class_limits);
    for (auto& a : cls)
      if (a.key() < a.complement().key()) firsts.push_back(std::move(a));
    rep.exhaustive = true;
  } catch (const ResourceError&) {
    const auto base = canonical_bipartite(m, n);
    for (int s = 0; s < opts.samples; ++s) {
      const SamplerConfig cfg{opts.seed + static_cast<std::uint64_t>(s),
                              default_bipartite_steps(m, n)};
      firsts.push_back(matrix_from_orientation(randomize_bipartite(base, cfg)));
    }
  }

  WalkupOptions wopts{opts.decomposition, false, opts.class_limits};
  bool first = true;
  for (const auto& a : firsts) {
    const MarginMatrix b = a.complement();
    wopts.with_bfs = opts.with_bfs && rep.exhaustive;
    const DistanceRecord r = walkup_distance(a, b, wopts);
    if (r.i_bfs) ++rep.bfs_checked;
    const int i = r.i_bfs.value_or(r.i_walkup);
    rep.all_certified = rep.all_certified && r.q_certified;
    rep.min_i = first ? i : std::min(rep.min_i, i);
    rep.max_i = first ? i : std::max(rep.max_i, i);
    first = false;
    rep.lower_ok = rep.lower_ok && i >= rep.lower_bound;
    rep.upper_ok = rep.upper_ok && i <= rep.upper_ceiling;
    ++rep.pairs;
  }
  return rep;
}

struct DiameterReport {
  std::size_t class_size = 0;
  int diameter = 0;
  int witness_a = 0;  // indices into the enumerated class
  int witness_b = 0;
  std::optional<MarginMatrix> a;
  std::optional<MarginMatrix> b;
  bool connected = true;
  double brualdi_bound = 0.0;  // mn/4
  double five_twelfths_bound = 0.0;  // 5mn/12
  bool within_brualdi = true;
  bool within_five_twelfths = true;
};

/// Index-based interchange graph of an enumerated class.
inline std::vector<std::vector<int>> interchange_graph(const std::vector<MarginMatrix>& cls) {
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(cls.size()); ++i) index.emplace(cls[i].key(), i);
  std::vector<std::vector<int>> adj(cls.size());
  for (int i = 0; i < static_cast<int>(cls.size()); ++i)
    for (const auto& nb : interchange_neighbors(cls[i])) adj[i].push_back(index.at(nb.key()));
  return adj;
}

/// All-pairs distances in an index graph, one BFS per source.
inline std::vector<std::vector<int>> all_pairs_distances(
    const std::vector<std::vector<int>>& adj, unsigned jobs = 1) {
  const std::size_t size = adj.size();
  std::vector<std::vector<int>> dist(size);
  parallel_for(size, jobs, [&](std::size_t s) {
    std::vector<int> d(size, -1);
    d[s] = 0;
    std::deque<int> queue{static_cast<int>(s)};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adj[u]) {
        if (d[v] < 0) {
          d[v] = d[u] + 1;
          queue.push_back(v);
        }
      }
    }
    dist[s] = std::move(d);
  });
  return dist;
}

/// Diameter of G(R, S) by BFS from every vertex. The witness is the
/// lexicographically first pair (a < b) at maximum distance.
inline DiameterReport diameter(const std::vector<int>& rows, const std::vector<int>& cols,
                               const ClassLimits& limits = {}, unsigned jobs = 1) {
  const auto cls = enumerate_matrix_class(rows, cols, limits);
  if (cls.empty()) throw DomainError("the matrix class with these margins is empty");
  const auto dist = all_pairs_distances(interchange_graph(cls), jobs);
  DiameterReport rep;
  rep.class_size = cls.size();
  for (int s = 0; s < static_cast<int>(cls.size()); ++s) {
    for (int t = s + 1; t < static_cast<int>(cls.size()); ++t) {
      if (dist[s][t] < 0) {
        rep.connected = false;
        continue;
      }
      if (dist[s][t] > rep.diameter) {
        rep.diameter = dist[s][t];
        rep.witness_a = s;
        rep.witness_b = t;
      }
    }
  }
  rep.a = cls[rep.witness_a];
  rep.b = cls[rep.witness_b];
  const double mn = static_cast<double>(rows.size()) * static_cast<double>(cols.size());
  rep.brualdi_bound = mn / 4.0;
  rep.five_twelfths_bound = 5.0 * mn / 12.0;
  rep.within_brualdi = rep.diameter <= rep.brualdi_bound;
  rep.within_five_twelfths = rep.diameter <= rep.five_twelfths_bound;
  return rep;
}

}  // namespace cyclepack
