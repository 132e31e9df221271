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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Runs the 25-qubit four-eloop instance end to end.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <sys/resource.h>

#include "causalq/circuit.h"
#include "causalq/grover.h"
#include "causalq/json_io.h"
#include "causalq/marker.h"
#include "causalq/statevector.h"
#include "causalq/topology.h"
#include "support/oracles.h"

using namespace causalq;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void check(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double peak_rss_mib() {
    rusage usage{};
    getrusage(RUSAGE_SELF, &usage);
    return static_cast<double>(usage.ru_maxrss) / 1024.0;  // ru_maxrss is KiB on Linux
}

// 1. Clause structure of the four-eloop marker.
void four_eloop_structure(Outcome &o) {
    const auto start = Clock::now();
    const auto t = builtin::four_eloop();
    const auto cycles = chordless_cycles(t);
    o.check(cycles.size() == 5, "5 chordless cycles");

    const auto spec = synthesize_marker(t);
    using V = std::vector<ComparisonClause>;
    constexpr auto eq = Polarity::kEq;
    constexpr auto neq = Polarity::kNeq;
    const std::vector<V> expected = {
        {{0, 1, eq}, {1, 2, eq}, {2, 3, eq}},
        {{0, 5, neq}, {4, 5, neq}},
        {{1, 6, neq}, {5, 6, neq}},
        {{2, 7, neq}, {6, 7, neq}},
        {{3, 4, neq}, {4, 7, neq}},
    };
    o.check(spec.cycles.size() == expected.size(), "5 cycle clauses");
    for (std::size_t m = 0; m < std::min(spec.cycles.size(), expected.size()); ++m) {
        V got;
        for (auto k : spec.cycles[m].comparisons) got.push_back(spec.comparisons[k]);
        std::sort(got.begin(), got.end());
        o.check(got == expected[m], "clause a" + std::to_string(m));
    }
    o.check(spec.comparisons.size() == 11, "11 distinct comparisons");
    o.check(spec.fixed == FixedEdge{0, true}, "marker conjunct e0");
    o.check(describe(spec) ==
                "a0 = !(c0_1 & c1_2 & c2_3)\na1 = !(nc0_5 & nc4_5)\na2 = !(nc1_6 & nc5_6)\n"
                "a3 = !(nc2_7 & nc6_7)\na4 = !(nc3_4 & nc4_7)\nf = a0 & a1 & a2 & a3 & a4 & e0\n",
            "marker text");
    const double s = seconds_since(start);
    o.check(s < 1.0, "runtime < 1 s");
    o.detail << " cycles=" << cycles.size() << " comparisons=" << spec.comparisons.size() << " t=" << s << "s";
}

// 2. Causal counts.
void causal_counts(Outcome &o) {
    const auto start = Clock::now();
    const auto t = builtin::four_eloop();
    const auto all = enumerate_causal(t).size();
    const auto fixed = enumerate_causal(t.with_fixed(FixedEdge{0, true})).size();
    // Acyclic orientations = |chromatic polynomial at -1|; wheel with 4 spokes.
    const long chi = -1 * ((-3) * (-3) * (-3) * (-3) + (-3));
    o.check(all == 78, "78 unconstrained");
    o.check(static_cast<long>(all) == std::abs(chi), "chromatic cross-check");
    o.check(fixed == 39, "39 with e0 = 1");
    const double s = seconds_since(start);
    o.check(s < 1.0, "runtime < 1 s");
    o.detail << " acyclic=" << all << " causal=" << fixed << " t=" << s << "s";
}

// 3. Marker equals acyclicity plus fixed bit, exhaustively per topology.
void marker_dag_equivalence(Outcome &o) {
    const auto start = Clock::now();
    auto topologies = oracle::corpus();
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 60; ++k) topologies.push_back(oracle::random_multigraph(rng, 6, "random" + std::to_string(k)));
    std::size_t checked = 0;
    for (const auto &t : topologies) {
        const auto spec = synthesize_marker(t);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << t.num_edges()); ++bits) {
            const Orientation orientation(bits, t.num_edges());
            const bool expected = is_acyclic(t, orientation) && (bits & 1U);
            if (eval_marker(spec, orientation) != expected) {
                o.check(false, t.name() + " " + orientation.to_string());
            }
            ++checked;
        }
    }
    const double s = seconds_since(start);
    o.check(s < 30.0, "runtime < 30 s");
    o.detail << " topologies=" << topologies.size() << " orientations=" << checked << " t=" << s << "s";
}

// 4. Oracle at 25 qubits: basis mapping and phase kickback.
void oracle_semantics(Outcome &o) {
    const auto start = Clock::now();
    const auto t = builtin::four_eloop();
    const auto spec = synthesize_marker(t);
    const auto layout = layout_qubits(spec);
    const auto oracle_gates = build_oracle(spec, layout);
    const std::uint64_t big_n = 256;
    const auto out_bit = std::uint64_t{1} << layout.out();

    std::vector<bool> f(big_n);
    std::size_t marked = 0;
    for (std::uint64_t e = 0; e < big_n; ++e) {
        f[e] = eval_marker(spec, Orientation(e, 8));
        marked += f[e];
    }
    o.check(marked == 39, "f marks 39");

    {
        // The oracle only permutes basis states, so loading distinct
        // amplitudes on all 256 inputs tracks every input in one pass.
        Statevector state(layout.total());
        auto amps = state.amplitudes();
        amps[0] = 0;
        double norm = 0;
        for (std::uint64_t e = 0; e < big_n; ++e) norm += double(e + 1) * double(e + 1);
        for (std::uint64_t e = 0; e < big_n; ++e) amps[e] = double(e + 1) / std::sqrt(norm);
        apply_gates<double>(state, oracle_gates);
        std::size_t exact = 0;
        for (std::uint64_t e = 0; e < big_n; ++e) {
            const auto target = e | (f[e] ? out_bit : 0);
            exact += state[target] == std::complex<double>(double(e + 1) / std::sqrt(norm), 0);
        }
        std::size_t nonzero = 0;
        for (const auto &a : state.amplitudes()) nonzero += a != std::complex<double>(0, 0);
        o.check(exact == big_n, "every |e,0,0,0> -> |e,0,0,f(e)>");
        o.check(nonzero == big_n, "no leakage into ancillas");
        o.detail << " basis_exact=" << exact << "/256";
    }
    {
        Statevector state(layout.total());
        std::vector<Gate> prepare;
        for (std::size_t i = 0; i < 8; ++i) prepare.push_back(Gate::h(i));
        prepare.push_back(Gate::x(layout.out()));
        prepare.push_back(Gate::h(layout.out()));
        apply_gates<double>(state, prepare);
        apply_gates<double>(state, oracle_gates);
        const double amp = 1 / std::sqrt(2.0 * big_n);
        double worst = 0;
        std::size_t flipped = 0;
        for (std::uint64_t e = 0; e < big_n; ++e) {
            const double sign = f[e] ? -1 : 1;
            worst = std::max(worst, std::abs(state[e] - std::complex<double>(sign * amp, 0)));
            worst = std::max(worst, std::abs(state[e | out_bit] - std::complex<double>(-sign * amp, 0)));
            flipped += state[e].real() < 0;
        }
        double stray = 0;
        const std::uint64_t ancilla_mask = ((std::uint64_t{1} << layout.total()) - 1) & ~out_bit & ~(big_n - 1);
        for (std::uint64_t i = 0; i < state.size(); ++i) {
            if (i & ancilla_mask) stray = std::max(stray, std::abs(state[i]));
        }
        const auto causal = enumerate_causal(t.with_fixed(FixedEdge{0, true}));
        bool same_set = causal.size() == flipped;
        for (const auto &c : causal) same_set = same_set && state[c.bits()].real() < 0;
        o.check(worst <= 1e-12, "phase amplitudes within 1e-12");
        o.check(stray <= 1e-12, "ancillas stay |0>");
        o.check(same_set, "flipped set == causal set");
        o.detail << " flipped=" << flipped << " max_err=" << worst;
    }
    const double s = seconds_since(start);
    o.check(s < 300, "runtime < 5 min");
    o.detail << " t=" << s << "s";
}

// 5. Marked mass follows sin^2((2r+1) theta).
void amplitude_law(Outcome &o) {
    const auto t = builtin::four_eloop();
    const auto spec = synthesize_marker(t);
    const auto causal = enumerate_causal(t.with_fixed(spec.fixed));
    std::vector<bool> marked(256, false);
    for (const auto &c : causal) marked[c.bits()] = true;

    const auto circuit = build_grover(spec, 0);
    Statevector state(circuit.layout.total());
    apply_gates<double>(state, circuit.prepare);
    for (std::size_t r = 0; r <= 3; ++r) {
        if (r > 0) apply_gates<double>(state, circuit.iteration);
        const auto probs = probabilities_e(state, circuit.layout);
        const double p = success_probability(256, 39, r);
        double mass = 0;
        double worst_uniform = 0;
        for (std::uint64_t e = 0; e < 256; ++e) {
            const double expect = marked[e] ? p / 39 : (1 - p) / 217;
            worst_uniform = std::max(worst_uniform, std::abs(probs[e] - expect));
            if (marked[e]) mass += probs[e];
        }
        o.check(std::abs(mass - p) <= 1e-9, "marked mass r=" + std::to_string(r));
        o.check(worst_uniform <= 1e-9, "uniform per-state r=" + std::to_string(r));
        o.detail << " r" << r << "=" << mass << "(" << p << ")";
    }

    const auto bubble = build_grover(synthesize_marker(builtin::bubble()), 1);
    Statevector b(bubble.layout.total());
    run_circuit(b, bubble);
    const double bubble_p = probabilities_e(b, bubble.layout)[0b11];
    o.check(std::abs(bubble_p - 1.0) <= 1e-12, "bubble r=1 exact");
    o.detail << " bubble=" << bubble_p;
}

// 6 and 8. Full query: statistics, reproducibility, time and memory.
void full_query(Outcome &sampling, Outcome &budget) {
    const auto t = builtin::four_eloop();
    QueryOptions options;
    options.shots = 8192;
    options.seed = 20240917;

    const auto start = Clock::now();
    const auto report = run_query(t, options);
    const double s = seconds_since(start);
    const double rss = peak_rss_mib();

    budget.check(report.layout.total() == 25 && report.plan.iterations == 1, "25 qubits, r = 1");
    budget.check(s <= 300, "<= 5 min");
    budget.check(rss <= 1024, "<= 1 GiB peak RSS");
    budget.detail << " qubits=" << report.layout.total() << " t=" << s << "s peak_rss=" << rss << "MiB";

    const double p = 0.8706579208374023;  // sin^2(3 asin(sqrt(39/256)))
    const double sigma = std::sqrt(p * (1 - p) / 8192);
    sampling.check(std::abs(report.plan.p_success - p) < 1e-12, "plan p_success");
    sampling.check(std::abs(report.marked_fraction - p) <= 4 * sigma, "marked fraction within 4 sigma");

    const auto again = run_query(t, options);
    const auto a = report_to_json(t, report, false).dump();
    const auto b = report_to_json(t, again, false).dump();
    sampling.check(a == b, "same seed byte-identical report");
    sampling.detail << " marked_fraction=" << report.marked_fraction << " expected=" << p
                    << " 4sigma=" << 4 * sigma;
}

// 7. Gate kernels against explicit dense matrices.
void kernel_equivalence(Outcome &o) {
    using Complex = std::complex<double>;
    std::mt19937_64 rng(99);
    std::normal_distribution<double> normal;
    double worst = 0;
    double worst_norm = 0;
    std::size_t trials = 0;
    for (std::size_t q = 1; q <= 6; ++q) {
        const std::size_t dim = std::size_t{1} << q;
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<Complex> v(dim);
            double n2 = 0;
            for (auto &a : v) {
                a = {normal(rng), normal(rng)};
                n2 += std::norm(a);
            }
            for (auto &a : v) a /= std::sqrt(n2);

            std::vector<Qubit> qubits(q);
            std::iota(qubits.begin(), qubits.end(), 0);
            std::shuffle(qubits.begin(), qubits.end(), rng);
            auto kind = static_cast<GateKind>(rng() % 5);
            if (q == 1 && kind == GateKind::kCnot) kind = GateKind::kH;
            std::size_t nc = kind == GateKind::kCnot ? 1 : (kind == GateKind::kMcx || kind == GateKind::kMcz) ? rng() % q : 0;
            const Gate gate{kind, std::vector<Qubit>(qubits.begin() + 1, qubits.begin() + 1 + long(nc)), qubits[0]};

            // Dense matrix from basis-state action.
            std::vector<std::vector<Complex>> m(dim, std::vector<Complex>(dim, 0.0));
            const std::size_t tb = std::size_t{1} << gate.target;
            for (std::size_t col = 0; col < dim; ++col) {
                bool controls_on = true;
                for (auto c : gate.controls) controls_on = controls_on && ((col >> c) & 1U);
                switch (kind) {
                    case GateKind::kH:
                        m[col & ~tb][col] += 1 / std::sqrt(2.0);
                        m[col | tb][col] += (col & tb ? -1 : 1) / std::sqrt(2.0);
                        break;
                    case GateKind::kMcz:
                        m[col][col] = controls_on && (col & tb) ? -1 : 1;
                        break;
                    default:
                        m[controls_on ? col ^ tb : col][col] = 1;
                }
            }
            auto state = Statevector::from_amplitudes(v);
            state.apply(gate);
            for (std::size_t r = 0; r < dim; ++r) {
                Complex expect = 0;
                for (std::size_t c = 0; c < dim; ++c) expect += m[r][c] * v[c];
                worst = std::max(worst, std::abs(state[r] - expect));
            }
            worst_norm = std::max(worst_norm, std::abs(state.norm_squared() - 1.0));
            ++trials;
        }
    }
    o.check(worst <= 1e-12, "dense-matrix agreement");
    o.check(worst_norm <= 1e-12, "norm preserved");
    o.detail << " trials=" << trials << " max_err=" << worst << " max_norm_drift=" << worst_norm;
}

// 9. Dropping a0 admits exactly the orientations whose only directed cycle
// is the outer square.
void negative_control(Outcome &o) {
    const auto t = builtin::four_eloop();
    const auto spec = synthesize_marker(t);
    const auto report = verify_marker(t, drop_cycle_clause(spec, 0));
    o.check(!report.pass, "verify fails");

    const std::vector<EdgeId> square = {0, 1, 2, 3};
    std::vector<Orientation> expected;
    for (std::uint64_t bits = 0; bits < 256; ++bits) {
        if (!(bits & 1U)) continue;
        const auto cycles = oracle::all_directed_cycles(t, bits);
        if (cycles.size() == 1 && *cycles.begin() == square) expected.emplace_back(bits, 8);
    }
    o.check(report.missing.empty(), "no causal state lost");
    o.check(report.spurious == expected, "diff == square-only orientations");
    o.detail << " spurious=[";
    for (std::size_t k = 0; k < report.spurious.size(); ++k) {
        o.detail << (k ? "," : "") << report.spurious[k].to_string();
    }
    o.detail << "] expected=" << expected.size();

    o.check(verify(t).pass, "intact marker passes");
}

}  // namespace

int main() {
    std::map<int, std::pair<std::string, Outcome>> results;
    auto run = [&](int id, const std::string &title, const std::function<void(Outcome &)> &fn) {
        auto &slot = results[id];
        slot.first = title;
        try {
            fn(slot.second);
        } catch (const std::exception &e) {
            slot.second.check(false, std::string("exception: ") + e.what());
        }
    };

    run(1, "four-eloop clause structure", four_eloop_structure);
    run(2, "causal counts 78 / 39", causal_counts);
    run(3, "marker / DAG equivalence", marker_dag_equivalence);
    run(7, "kernel vs dense matrix", kernel_equivalence);
    // Full query first among the 25-qubit runs so peak RSS reflects it.
    results[6].first = "sampling statistics and reproducibility";
    results[8].first = "resource budget (25 qubits)";
    try {
        full_query(results[6].second, results[8].second);
    } catch (const std::exception &e) {
        results[6].second.check(false, e.what());
        results[8].second.check(false, e.what());
    }
    run(4, "oracle ancilla restoration and phase", oracle_semantics);
    run(5, "Grover amplitude law", amplitude_law);
    run(9, "negative control (a0 removed)", negative_control);

    int failures = 0;
    for (auto &[id, entry] : results) {
        const bool ok = entry.second.pass;
        failures += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  AC" << id << "  " << entry.first << " --"
                  << entry.second.detail.str() << '\n';
    }
    std::cout << (failures ? "acceptance: FAILED (" + std::to_string(failures) + ")" : "acceptance: all passed")
              << '\n';
    return failures ? 1 : 0;
}
