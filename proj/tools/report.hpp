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

// RunReport envelope shared by every subcommand. The layout is documented in
// docs/report-schema.json.

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "cyclepack/cyclepack.hpp"
#include "json.hpp"

namespace cyclepack::cli {

using Json = nlohmann::ordered_json;

/// Floats carry 12 significant digits; non-finite values become null.
inline Json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

/// FNV-1a, 64 bit.
class Digest {
 public:
  void add(std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash_ ^= c;
      hash_ *= 0x100000001b3ULL;
    }
    used_ = true;
  }
  Json value() const {
    if (!used_) return nullptr;
    char buf[40];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(hash_));
    return std::string(buf);
  }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
  bool used_ = false;
};

struct RunReport {
  std::string subcommand;
  Digest digest;
  std::vector<std::uint64_t> seeds;
  Json payload = Json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  /// Reads a file and folds its bytes into the input digest.
  std::string read_input(const std::string& path) {
    std::string text = read_text_file(path);
    digest.add(text);
    return text;
  }

  Json to_json() const {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Json j;
    j["tool_version"] = kVersion;
    j["subcommand"] = subcommand;
    j["input_digest"] = digest.value();
    j["seeds"] = seeds;
    j["wall_time_s"] = num(secs);
    j["payload"] = payload;
    return j;
  }
};

/// Plain-text rendering: scalar payload fields one per line, containers
/// summarized by size.
inline void print_text(const RunReport& r) {
  std::printf("%s\n", r.subcommand.c_str());
  for (const auto& [key, value] : r.payload.items()) {
    if (value.is_structured())
      std::printf("  %s: [%zu entries]\n", key.c_str(), value.size());
    else
      std::printf("  %s: %s\n", key.c_str(), value.dump().c_str());
  }
}

}  // namespace cyclepack::cli
