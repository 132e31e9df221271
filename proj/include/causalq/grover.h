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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "causalq/circuit.h"
#include "causalq/marker.h"
#include "causalq/statevector.h"
#include "causalq/topology.h"

namespace causalq {

struct GroverPlan {
    std::uint64_t search_space = 0;  // N = 2^n
    std::uint64_t marked = 0;        // M
    std::size_t iterations = 0;      // r
    double theta = 0;                // asin(sqrt(M/N))
    double p_success = 0;            // sin^2((2r+1) theta)
    std::vector<std::string> warnings;
};

/// sin^2((2r+1) asin(sqrt(M/N))).
double success_probability(std::uint64_t search_space, std::uint64_t marked, std::size_t iterations);

/// argmax over r in [0, ceil(pi / (4 theta))] of the success probability,
/// ties going to the smaller r. Requires 1 <= M < N.
std::size_t optimal_iterations(std::uint64_t search_space, std::uint64_t marked);

/// Plans a query. With no explicit iteration count, uses optimal_iterations,
/// except that M/N >= 1/2 forces r = 0 with a warning.
GroverPlan plan_query(std::uint64_t search_space, std::uint64_t marked,
                      std::optional<std::size_t> iterations = std::nullopt);

struct QueryOptions {
    std::uint64_t shots = 1024;
    std::uint64_t seed = 0;
    std::optional<std::size_t> iterations;  // nullopt = auto
    bool single_precision = false;
    std::size_t qubit_limit = kDefaultQubitLimit;
    MarkerOptions marker;
};

struct QueryReport {
    std::string topology;
    GroverPlan plan;
    QubitLayout layout;
    Histogram histogram;
    /// Shots landing in the classically causal set, over all shots.
    double marked_fraction = 0;
    /// Marked probability mass of the simulated statevector.
    double simulated_success = 0;
    /// Classical enumeration honouring the marker's fixed-edge constraint.
    std::vector<Orientation> causal;
    std::string prng_algorithm;
    std::uint64_t seed = 0;
    double wall_time_ms = 0;
};

QueryReport run_query(const Topology &topology, const QueryOptions &options);

struct VerificationReport {
    std::string topology;
    bool pass = false;
    bool ancillas_restored = false;
    /// Orientations whose phase the oracle flipped.
    std::vector<Orientation> quantum;
    /// Classical causal configurations under the same fixed-edge constraint.
    std::vector<Orientation> classical;
    std::vector<Orientation> missing;   // classical but not flipped
    std::vector<Orientation> spurious;  // flipped but not classical
};

/// Runs the oracle once on the uniform e superposition with out in |->, reads
/// the flipped phases off the exact amplitudes, and compares with the
/// classical enumeration.
VerificationReport verify_marker(const Topology &topology, const MarkerSpec &spec,
                                 std::size_t qubit_limit = kDefaultQubitLimit);

VerificationReport verify(const Topology &topology, const MarkerOptions &options = {},
                          std::size_t qubit_limit = kDefaultQubitLimit);

}  // namespace causalq
