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

#include "causalq/grover.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iterator>
#include <numbers>

#include "causalq/error.h"

namespace causalq {

namespace {

void require_amplifiable(std::uint64_t search_space, std::uint64_t marked) {
    if (marked == 0) {
        throw Error(ErrorCode::kNothingToAmplify, "no marked states (M = 0): nothing to amplify");
    }
    if (marked >= search_space) {
        throw Error(ErrorCode::kAllMarked, "all states marked (M = N = " + std::to_string(search_space) + ")");
    }
}

double rotation_angle(std::uint64_t search_space, std::uint64_t marked) {
    return std::asin(std::sqrt(static_cast<double>(marked) / static_cast<double>(search_space)));
}

}  // namespace

double success_probability(std::uint64_t search_space, std::uint64_t marked, std::size_t iterations) {
    const double theta = rotation_angle(search_space, marked);
    const double s = std::sin(static_cast<double>(2 * iterations + 1) * theta);
    return s * s;
}

std::size_t optimal_iterations(std::uint64_t search_space, std::uint64_t marked) {
    require_amplifiable(search_space, marked);
    const double theta = rotation_angle(search_space, marked);
    const auto upper = static_cast<std::size_t>(std::ceil(std::numbers::pi / (4 * theta)));
    std::size_t best = 0;
    double best_p = success_probability(search_space, marked, 0);
    for (std::size_t r = 1; r <= upper; ++r) {
        const double p = success_probability(search_space, marked, r);
        if (p > best_p) {
            best = r;
            best_p = p;
        }
    }
    return best;
}

GroverPlan plan_query(std::uint64_t search_space, std::uint64_t marked, std::optional<std::size_t> iterations) {
    require_amplifiable(search_space, marked);
    GroverPlan plan;
    plan.search_space = search_space;
    plan.marked = marked;
    plan.theta = rotation_angle(search_space, marked);
    if (iterations) {
        plan.iterations = *iterations;
    } else if (2 * marked >= search_space) {
        plan.iterations = 0;
        plan.warnings.push_back("M/N >= 1/2: amplification would rotate away from the marked set; using r = 0");
    } else {
        plan.iterations = optimal_iterations(search_space, marked);
    }
    plan.p_success = success_probability(search_space, marked, plan.iterations);
    return plan;
}

namespace {

template <typename Real>
void simulate(const Circuit &circuit, const QueryOptions &options, const std::vector<bool> &is_causal,
              QueryReport &report) {
    BasicStatevector<Real> state(circuit.layout.total(), options.qubit_limit);
    run_circuit(state, circuit);
    const auto probs = probabilities_e(state, circuit.layout);
    double mass = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (is_causal[i]) {
            mass += probs[i];
        }
    }
    report.simulated_success = mass;
    report.histogram = sample_distribution(probs, circuit.layout.n_e, options.shots, options.seed);
}

}  // namespace

QueryReport run_query(const Topology &topology, const QueryOptions &options) {
    const auto start = std::chrono::steady_clock::now();

    const auto spec = synthesize_marker(topology, options.marker);
    // Fail on the qubit budget before the 2^n classical sweep.
    const auto layout = layout_qubits(spec, options.qubit_limit);

    QueryReport report;
    report.topology = topology.name();
    report.layout = layout;
    report.causal = enumerate_causal(topology.with_fixed(spec.fixed));

    const std::uint64_t search_space = std::uint64_t{1} << topology.num_edges();
    report.plan = plan_query(search_space, report.causal.size(), options.iterations);
    if (!spec.fixed) {
        report.plan.warnings.insert(report.plan.warnings.begin(),
                                    "no fixed-edge constraint: both members of every reversal pair are marked");
    }

    std::vector<bool> is_causal(search_space, false);
    for (const auto &o : report.causal) {
        is_causal[o.bits()] = true;
    }

    const auto circuit = build_grover(spec, report.plan.iterations, options.qubit_limit);
    if (options.single_precision) {
        simulate<float>(circuit, options, is_causal, report);
    } else {
        simulate<double>(circuit, options, is_causal, report);
    }

    std::uint64_t hits = 0;
    for (const auto &[outcome, count] : report.histogram.counts) {
        if (is_causal[outcome]) {
            hits += count;
        }
    }
    report.marked_fraction =
        options.shots ? static_cast<double>(hits) / static_cast<double>(options.shots) : 0.0;
    report.prng_algorithm = kSamplerAlgorithm;
    report.seed = options.seed;
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

VerificationReport verify_marker(const Topology &topology, const MarkerSpec &spec, std::size_t qubit_limit) {
    const auto layout = layout_qubits(spec, qubit_limit);

    VerificationReport report;
    report.topology = topology.name();
    report.classical = enumerate_causal(topology.with_fixed(spec.fixed));

    Statevector state(layout.total(), qubit_limit);
    std::vector<Gate> prepare;
    for (std::size_t i = 0; i < layout.n_e; ++i) {
        prepare.push_back(Gate::h(layout.e(i)));
    }
    prepare.push_back(Gate::x(layout.out()));
    prepare.push_back(Gate::h(layout.out()));
    apply_gates<double>(state, prepare);
    apply_gates<double>(state, build_oracle(spec, layout));

    // After the oracle, index e (ancillas 0, out 0) holds (-1)^f(e) / sqrt(2N).
    const std::uint64_t search_space = std::uint64_t{1} << layout.n_e;
    double clean_mass = 0;
    const auto out_bit = std::uint64_t{1} << layout.out();
    for (std::uint64_t e = 0; e < search_space; ++e) {
        clean_mass += std::norm(state[e]) + std::norm(state[e | out_bit]);
        if (state[e].real() < 0) {
            report.quantum.emplace_back(e, layout.n_e);
        }
    }
    report.ancillas_restored = std::abs(clean_mass - 1.0) < 1e-9;

    std::set_difference(report.classical.begin(), report.classical.end(), report.quantum.begin(),
                        report.quantum.end(), std::back_inserter(report.missing));
    std::set_difference(report.quantum.begin(), report.quantum.end(), report.classical.begin(),
                        report.classical.end(), std::back_inserter(report.spurious));
    report.pass = report.ancillas_restored && report.missing.empty() && report.spurious.empty();
    return report;
}

VerificationReport verify(const Topology &topology, const MarkerOptions &options, std::size_t qubit_limit) {
    return verify_marker(topology, synthesize_marker(topology, options), qubit_limit);
}

}  // namespace causalq
