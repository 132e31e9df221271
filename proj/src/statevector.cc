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

#include "causalq/statevector.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <new>
#include <random>

#include "causalq/error.h"

namespace causalq {

namespace {

// Spreads the bits of `j` around the zero bits at `positions` (ascending).
inline std::uint64_t insert_zero_bits(std::uint64_t j, std::span<const std::size_t> positions) {
    for (auto p : positions) {
        const std::uint64_t low = j & ((std::uint64_t{1} << p) - 1);
        j = ((j >> p) << (p + 1)) | low;
    }
    return j;
}

}  // namespace

template <typename Real>
BasicStatevector<Real>::BasicStatevector(std::size_t num_qubits, std::size_t limit) : num_qubits_(num_qubits) {
    if (num_qubits > limit || num_qubits >= 63) {
        throw Error(ErrorCode::kQubitBudget,
                    "statevector of " + std::to_string(num_qubits) + " qubits exceeds limit " +
                        std::to_string(limit));
    }
    try {
        amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{0, 0});
    } catch (const std::bad_alloc &) {
        throw Error(ErrorCode::kAllocation, "cannot allocate statevector of " + std::to_string(num_qubits) +
                                                " qubits (" + std::to_string(bytes_for(num_qubits)) + " bytes)");
    }
    amplitudes_[0] = Amplitude{1, 0};
}

template <typename Real>
BasicStatevector<Real> BasicStatevector<Real>::from_amplitudes(std::vector<Amplitude> amplitudes) {
    if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
        throw Error(ErrorCode::kDimensionMismatch, "amplitude count must be a power of two");
    }
    BasicStatevector state;
    state.num_qubits_ = static_cast<std::size_t>(std::countr_zero(amplitudes.size()));
    state.amplitudes_ = std::move(amplitudes);
    return state;
}

template <typename Real>
void BasicStatevector<Real>::apply(const Gate &gate) {
    check_gate(gate, num_qubits_);

    std::vector<std::size_t> positions(gate.controls.begin(), gate.controls.end());
    positions.push_back(gate.target);
    std::sort(positions.begin(), positions.end());

    std::uint64_t control_mask = 0;
    for (auto c : gate.controls) {
        control_mask |= std::uint64_t{1} << c;
    }
    const std::uint64_t target_bit = std::uint64_t{1} << gate.target;
    const std::uint64_t iterations = std::uint64_t{1} << (num_qubits_ - positions.size());
    Amplitude *amps = amplitudes_.data();

    switch (gate.kind) {
        case GateKind::kH: {
            const Real s = static_cast<Real>(1.0 / std::sqrt(2.0));
            for (std::uint64_t j = 0; j < iterations; ++j) {
                const auto i0 = insert_zero_bits(j, positions);
                const auto i1 = i0 | target_bit;
                const Amplitude x = amps[i0];
                const Amplitude y = amps[i1];
                amps[i0] = (x + y) * s;
                amps[i1] = (x - y) * s;
            }
            break;
        }
        case GateKind::kX:
        case GateKind::kCnot:
        case GateKind::kMcx:
            for (std::uint64_t j = 0; j < iterations; ++j) {
                const auto i0 = insert_zero_bits(j, positions) | control_mask;
                std::swap(amps[i0], amps[i0 | target_bit]);
            }
            break;
        case GateKind::kMcz:
            for (std::uint64_t j = 0; j < iterations; ++j) {
                const auto i = insert_zero_bits(j, positions) | control_mask | target_bit;
                amps[i] = -amps[i];
            }
            break;
    }
}

template <typename Real>
double BasicStatevector<Real>::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += static_cast<double>(std::norm(a));
    }
    return total;
}

template class BasicStatevector<double>;
template class BasicStatevector<float>;

template <typename Real>
void apply_gates(BasicStatevector<Real> &state, std::span<const Gate> gates) {
    for (const auto &g : gates) {
        state.apply(g);
    }
}

template <typename Real>
void run_circuit(BasicStatevector<Real> &state, const Circuit &circuit) {
    if (state.num_qubits() != circuit.layout.total()) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "state has " + std::to_string(state.num_qubits()) + " qubits, circuit needs " +
                        std::to_string(circuit.layout.total()));
    }
    apply_gates<Real>(state, circuit.prepare);
    for (std::size_t r = 0; r < circuit.repetitions; ++r) {
        apply_gates<Real>(state, circuit.iteration);
    }
}

template <typename Real>
std::vector<double> probabilities_e(const BasicStatevector<Real> &state, const QubitLayout &layout) {
    if (state.num_qubits() < layout.n_e) {
        throw Error(ErrorCode::kDimensionMismatch, "state smaller than the e register");
    }
    const std::uint64_t mask = (std::uint64_t{1} << layout.n_e) - 1;
    std::vector<double> probs(std::size_t{1} << layout.n_e, 0.0);
    const auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        probs[i & mask] += static_cast<double>(std::norm(amps[i]));
    }
    return probs;
}

template void apply_gates<double>(Statevector &, std::span<const Gate>);
template void apply_gates<float>(StatevectorF &, std::span<const Gate>);
template void run_circuit<double>(Statevector &, const Circuit &);
template void run_circuit<float>(StatevectorF &, const Circuit &);
template std::vector<double> probabilities_e<double>(const Statevector &, const QubitLayout &);
template std::vector<double> probabilities_e<float>(const StatevectorF &, const QubitLayout &);

Histogram sample_distribution(std::span<const double> distribution, std::size_t width, std::uint64_t shots,
                              std::uint64_t seed) {
    Histogram h;
    h.width = width;
    h.shots = shots;
    if (distribution.empty()) {
        return h;
    }
    std::vector<double> cdf(distribution.size());
    double running = 0;
    for (std::size_t i = 0; i < distribution.size(); ++i) {
        running += distribution[i];
        cdf[i] = running;
    }
    // Outcomes with zero probability are never selected, even at the top
    // end of a slightly sub-unit CDF.
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < distribution.size(); ++i) {
        if (distribution[i] > 0) {
            last_nonzero = i;
        }
    }

    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * running;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        auto outcome = static_cast<std::size_t>(it - cdf.begin());
        outcome = std::min(outcome, last_nonzero);
        ++h.counts[outcome];
    }
    return h;
}

std::string outcome_string(std::uint64_t outcome, std::size_t width) {
    std::string out(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
        if ((outcome >> i) & 1U) {
            out[i] = '1';
        }
    }
    return out;
}

}  // namespace causalq
