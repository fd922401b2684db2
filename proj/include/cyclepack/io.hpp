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

// Text formats.
//
//   bipartite:  "m n\n" then m lines of n chars from {'+','-'} ('+' = row->col)
//   tournament: "n\n"   then n lines of n chars from {'0','1'}
//   matrix:     "m n\n" then m lines of n chars from {'0','1'}
//
// The final newline is optional. Anything else is a ParseError.

#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cyclepack/core_model.hpp"
#include "cyclepack/error.hpp"

namespace cyclepack {

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  std::size_t start = 0;
  while (true) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

inline int parse_positive(std::string_view token, const char* what) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (token.empty() || token.front() == '+' || token.front() == '-')
    throw ParseError(std::string("expected a positive decimal ") + what);
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value < 1)
    throw ParseError(std::string("expected a positive decimal ") + what + ", got '" +
                     std::string(token) + "'");
  return value;
}

// Header "a b" with exactly one space.
inline std::pair<int, int> parse_dims(std::string_view line) {
  const std::size_t sp = line.find(' ');
  if (sp == std::string_view::npos)
    throw ParseError("header must be two decimals separated by a space");
  return {parse_positive(line.substr(0, sp), "row count"),
          parse_positive(line.substr(sp + 1), "column count")};
}

// Grid body of `rows` lines of `cols` chars, each mapped through `decode`
// (which returns false on a foreign character).
template <typename T, typename Decode>
std::vector<T> parse_grid(const std::vector<std::string_view>& lines, int rows,
                          int cols, Decode decode) {
  if (static_cast<int>(lines.size()) != rows + 1)
    throw ParseError("expected " + std::to_string(rows) + " matrix lines, got " +
                     std::to_string(lines.size() - 1));
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i) {
    const std::string_view line = lines[i + 1];
    if (static_cast<int>(line.size()) != cols)
      throw ParseError("line " + std::to_string(i + 2) + " has " +
                       std::to_string(line.size()) + " characters, expected " +
                       std::to_string(cols));
    for (int j = 0; j < cols; ++j) {
      T value{};
      if (!decode(line[j], value))
        throw ParseError("unexpected character at line " + std::to_string(i + 2) +
                         ", column " + std::to_string(j + 1));
      out.push_back(value);
    }
  }
  return out;
}

inline bool decode_bit(char c, std::uint8_t& out) {
  if (c != '0' && c != '1') return false;
  out = static_cast<std::uint8_t>(c - '0');
  return true;
}

}  // namespace detail

inline BipartiteTournament parse_bipartite(std::string_view text) {
  const auto lines = detail::split_lines(text);
  const auto [m, n] = detail::parse_dims(lines.front());
  auto signs = detail::parse_grid<std::int8_t>(lines, m, n, [](char c, std::int8_t& s) {
    if (c == '+') s = 1;
    else if (c == '-') s = -1;
    else return false;
    return true;
  });
  return {m, n, std::move(signs)};
}

inline std::string format_bipartite(const BipartiteTournament& g) {
  std::string out = std::to_string(g.m()) + " " + std::to_string(g.n()) + "\n";
  for (int i = 0; i < g.m(); ++i) {
    for (int j = 0; j < g.n(); ++j) out += g.row_to_col(i, j) ? '+' : '-';
    out += '\n';
  }
  return out;
}

inline Tournament parse_tournament(std::string_view text) {
  const auto lines = detail::split_lines(text);
  const int n = detail::parse_positive(lines.front(), "vertex count");
  auto adj = detail::parse_grid<std::uint8_t>(lines, n, n, detail::decode_bit);
  return {n, std::move(adj)};
}

inline std::string format_tournament(const Tournament& t) {
  std::string out = std::to_string(t.n()) + "\n";
  for (int i = 0; i < t.n(); ++i) {
    for (int j = 0; j < t.n(); ++j) out += t.has_arc(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
}

}  // namespace cyclepack
