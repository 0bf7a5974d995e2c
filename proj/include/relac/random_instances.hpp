// Copyright 2026 The Relac Authors.
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

// Random graphs, conditions and workspaces for differential and fuzz runs.
// Everything is driven by one std::mt19937_64 so a seed reproduces a run.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "relac/graph.hpp"
#include "relac/path_condition.hpp"
#include "relac/workspace.hpp"

namespace relac {

using Rng = std::mt19937_64;

// One type "node", labels a, b, c; c is symmetric. Every triple is permitted.
SystemModel random_model();

// 1..max_nodes nodes named n0, n1, ... and a random edge set.
SystemGraph random_graph(Rng& rng, std::size_t max_nodes = 8);

// Simple conditions of length 1..max_length over `labels`.
PathCondition random_simple_condition(Rng& rng, const std::vector<std::string>& labels,
                                      std::size_t max_length = 6);

// Arbitrary (non-simple) conditions: diamonds, nested reversal, left-nested
// concatenation. No Star.
PathCondition random_condition(Rng& rng, const std::vector<std::string>& labels, std::size_t depth = 4);

struct DifferentialReport {
  std::size_t instances = 0;
  std::size_t clean_instances = 0;  // no disagreement, bound held at every pair
  std::size_t pairs = 0;
  std::size_t agreements = 0;
  std::size_t bound_violations = 0;
  std::vector<std::string> failures;  // first few only

  bool ok() const { return agreements == pairs && bound_violations == 0; }
};

// Matcher against oracle: each instance is one random graph and one random
// simple condition, checked at every node pair.
DifferentialReport run_differential(std::uint64_t seed, std::size_t instances);

// Same comparison over an existing workspace: every rule condition at every
// (subject, object) pair.
DifferentialReport run_differential(const Workspace& ws);

// Well-formed workspace over random_model() with random rules, defaults and
// requests.
Workspace random_workspace(Rng& rng);

}  // namespace relac
