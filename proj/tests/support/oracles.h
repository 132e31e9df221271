// Copyright 2026 The causalq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Test-only reference implementations. Nothing here calls into the code
// paths it is used to check.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "causalq/topology.h"

namespace causalq::oracle {

/// Connected multigraph with 2..5 vertices and 1..max_edges edges, random
/// reference directions, parallel edges allowed, no self-loops.
Topology random_multigraph(std::mt19937_64 &rng, std::size_t max_edges, const std::string &name = "random");

/// Directed-cycle check by three-colour DFS.
bool has_directed_cycle(const Topology &topology, std::uint64_t bits);

/// Every simple cycle of the undirected multigraph, as a sorted edge-id set.
std::set<std::vector<EdgeId>> all_simple_cycles(const Topology &topology);

/// Every simple directed cycle under an orientation, as a sorted edge-id set.
std::set<std::vector<EdgeId>> all_directed_cycles(const Topology &topology, std::uint64_t bits);

/// The three built-ins plus a triangle with an extra edge parallel to e0.
std::vector<Topology> corpus();

Topology triangle_with_parallel();

}  // namespace causalq::oracle
