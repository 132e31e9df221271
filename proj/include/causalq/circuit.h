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
#include <string>
#include <vector>

#include "causalq/marker.h"

namespace causalq {

using Qubit = std::size_t;

inline constexpr std::size_t kDefaultQubitLimit = 26;

/// Registers e (edges), c (comparisons), a (cycle clauses), out, laid out
/// contiguously in that order. Qubit i is bit i of a basis-state index.
struct QubitLayout {
    std::size_t n_e = 0;
    std::size_t n_c = 0;
    std::size_t n_a = 0;

    std::size_t total() const { return n_e + n_c + n_a + 1; }
    Qubit e(std::size_t edge) const { return edge; }
    Qubit c(std::size_t comparison) const { return n_e + comparison; }
    Qubit a(std::size_t clause) const { return n_e + n_c + clause; }
    Qubit out() const { return total() - 1; }

    bool operator==(const QubitLayout &) const = default;
};

QubitLayout layout_qubits(const MarkerSpec &spec, std::size_t limit = kDefaultQubitLimit);

enum class GateKind { kH, kX, kCnot, kMcx, kMcz };

const char *gate_name(GateKind kind);

/// Every gate here is self-inverse. For kMcz the target is just one of the
/// involved qubits; the phase is symmetric in controls and target.
struct Gate {
    GateKind kind = GateKind::kH;
    std::vector<Qubit> controls;
    Qubit target = 0;

    static Gate h(Qubit q) { return {GateKind::kH, {}, q}; }
    static Gate x(Qubit q) { return {GateKind::kX, {}, q}; }
    static Gate cnot(Qubit control, Qubit target) { return {GateKind::kCnot, {control}, target}; }
    static Gate mcx(std::vector<Qubit> controls, Qubit target) { return {GateKind::kMcx, std::move(controls), target}; }
    static Gate mcz(std::vector<Qubit> controls, Qubit target) { return {GateKind::kMcz, std::move(controls), target}; }

    bool operator==(const Gate &) const = default;
};

std::string to_string(const Gate &gate);

/// Throws if indices exceed `num_qubits`, controls repeat or include the target.
void check_gate(const Gate &gate, std::size_t num_qubits);

/// Gate list of the phase oracle, split into its three segments.
struct Oracle {
    std::vector<Gate> compute;
    std::vector<Gate> kickback;
    std::vector<Gate> uncompute;

    std::vector<Gate> gates() const;
};

Oracle build_oracle_segments(const MarkerSpec &spec, const QubitLayout &layout);
std::vector<Gate> build_oracle(const MarkerSpec &spec, const QubitLayout &layout);

/// Reflection about the uniform superposition on the e register.
std::vector<Gate> build_diffuser(const QubitLayout &layout);

/// Prepared once, then `iteration` repeated `repetitions` times; the e
/// register is measured at the end.
struct Circuit {
    QubitLayout layout;
    std::vector<Gate> prepare;
    std::vector<Gate> iteration;
    std::size_t repetitions = 0;

    std::size_t gate_count() const { return prepare.size() + repetitions * iteration.size(); }
};

Circuit build_grover(const MarkerSpec &spec, std::size_t repetitions, std::size_t limit = kDefaultQubitLimit);

/// OpenQASM 3.0 text with the iteration unrolled and the e register measured
/// into c_out.
std::string export_qasm(const Circuit &circuit);

}  // namespace causalq
