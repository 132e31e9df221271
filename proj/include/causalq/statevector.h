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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "causalq/circuit.h"

namespace causalq {

/// Dense amplitude array over q qubits; qubit i is bit i of the index.
template <typename Real>
class BasicStatevector {
  public:
    using Amplitude = std::complex<Real>;

    /// |0...0> on `num_qubits` qubits. Throws kQubitBudget above `limit` and
    /// kAllocation (with the byte count) if the array cannot be allocated.
    explicit BasicStatevector(std::size_t num_qubits, std::size_t limit = kDefaultQubitLimit);

    /// Takes ownership of an amplitude array whose length is a power of two.
    static BasicStatevector from_amplitudes(std::vector<Amplitude> amplitudes);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t size() const { return amplitudes_.size(); }
    std::span<const Amplitude> amplitudes() const { return amplitudes_; }
    std::span<Amplitude> amplitudes() { return amplitudes_; }
    const Amplitude &operator[](std::uint64_t index) const { return amplitudes_[index]; }

    /// Applies one gate in place, in a single pass over the array.
    void apply(const Gate &gate);

    /// Sum of |amplitude|^2, accumulated in double.
    double norm_squared() const;

    static std::size_t bytes_for(std::size_t num_qubits) { return sizeof(Amplitude) << num_qubits; }

  private:
    BasicStatevector() = default;

    std::size_t num_qubits_ = 0;
    std::vector<Amplitude> amplitudes_;
};

using Statevector = BasicStatevector<double>;
using StatevectorF = BasicStatevector<float>;

extern template class BasicStatevector<double>;
extern template class BasicStatevector<float>;

/// Applies `prepare` once then `iteration` `repetitions` times.
template <typename Real>
void run_circuit(BasicStatevector<Real> &state, const Circuit &circuit);

template <typename Real>
void apply_gates(BasicStatevector<Real> &state, std::span<const Gate> gates);

/// Marginal distribution of the e register, indexed by the e bits (bit i =
/// edge i). Sums to 1 for a normalized state.
template <typename Real>
std::vector<double> probabilities_e(const BasicStatevector<Real> &state, const QubitLayout &layout);

struct Histogram {
    std::size_t width = 0;
    std::uint64_t shots = 0;
    /// Outcome (bit i = e_i) -> count; only observed outcomes present.
    std::map<std::uint64_t, std::uint64_t> counts;

    std::uint64_t count(std::uint64_t outcome) const {
        auto it = counts.find(outcome);
        return it == counts.end() ? 0 : it->second;
    }
};

/// Identifies the sampler so reports can be reproduced.
inline constexpr const char *kSamplerAlgorithm = "mt19937_64/u53-inverse-cdf/v1";

/// Draws `shots` outcomes from `distribution` by inverse CDF, with uniforms
/// taken from the top 53 bits of std::mt19937_64 seeded with `seed`.
Histogram sample_distribution(std::span<const double> distribution, std::size_t width, std::uint64_t shots,
                              std::uint64_t seed);

template <typename Real>
Histogram sample(const BasicStatevector<Real> &state, const QubitLayout &layout, std::uint64_t shots,
                 std::uint64_t seed) {
    const auto probs = probabilities_e(state, layout);
    return sample_distribution(probs, layout.n_e, shots, seed);
}

/// Bitstring with e_0 leftmost.
std::string outcome_string(std::uint64_t outcome, std::size_t width);

}  // namespace causalq
