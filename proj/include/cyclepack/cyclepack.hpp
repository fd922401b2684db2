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

#pragma once

#include "cyclepack/census.hpp"
#include "cyclepack/core_model.hpp"
#include "cyclepack/decomposition.hpp"
#include "cyclepack/error.hpp"
#include "cyclepack/four_cycles.hpp"
#include "cyclepack/interchange.hpp"
#include "cyclepack/io.hpp"
#include "cyclepack/packing.hpp"
#include "cyclepack/parallel.hpp"
#include "cyclepack/partition_experiment.hpp"
#include "cyclepack/sampling.hpp"
#include "cyclepack/verify.hpp"

namespace cyclepack {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cyclepack
