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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "causalq/topology.h"

namespace causalq {

enum class Polarity { kEq, kNeq };

/// c_ij (kEq: e_i == e_j) or its negation (kNeq: e_i != e_j), with i < j.
struct ComparisonClause {
    EdgeId first = 0;
    EdgeId second = 0;
    Polarity polarity = Polarity::kEq;

    auto operator<=>(const ComparisonClause &) const = default;
};

/// Negated conjunction of comparisons. False exactly when the cycle is
/// uniformly directed.
struct CycleClause {
    Cycle cycle;
    /// Indices into MarkerSpec::comparisons.
    std::vector<std::size_t> comparisons;

    bool operator==(const CycleClause &) const = default;
};

/// Boolean marker f(e) = (AND of all cycle clauses) AND (e_fixed == value).
struct MarkerSpec {
    std::size_t n = 0;
    std::vector<ComparisonClause> comparisons;
    std::vector<CycleClause> cycles;
    std::optional<FixedEdge> fixed;

    bool operator==(const MarkerSpec &) const = default;
};

inline constexpr FixedEdge kDefaultFixedEdge{0, true};

struct MarkerOptions {
    /// When false and the topology carries no constraint, the marker has no
    /// fixed-edge conjunct and every reversal pair is marked twice.
    bool constrain = true;
};

/// Fixed-edge constraint the marker will use for `topology`: the topology's
/// own, else kDefaultFixedEdge when constraining.
std::optional<FixedEdge> effective_fixed(const Topology &topology, const MarkerOptions &options = {});

MarkerSpec synthesize_marker(const Topology &topology, const MarkerOptions &options = {});

bool eval_comparison(const ComparisonClause &clause, const Orientation &orientation);
bool eval_cycle_clause(const MarkerSpec &spec, const CycleClause &clause, const Orientation &orientation);
bool eval_marker(const MarkerSpec &spec, const Orientation &orientation);

/// Copy of `spec` without cycle clause `index`; comparisons no longer
/// referenced are dropped and the remaining indices renumbered.
MarkerSpec drop_cycle_clause(const MarkerSpec &spec, std::size_t index);

/// Human-readable marker, e.g. "a0 = !(c01 & c12) ; f = a0 & e0".
std::string describe(const MarkerSpec &spec);

}  // namespace causalq
