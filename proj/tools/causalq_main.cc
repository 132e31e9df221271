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

// causalq: query the causal (acyclic) edge orientations of a multiloop
// topology with a simulated Grover search.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "causalq/circuit.h"
#include "causalq/error.h"
#include "causalq/grover.h"
#include "causalq/json_io.h"
#include "causalq/marker.h"
#include "causalq/topology.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

constexpr const char *kFooter =
    "Bitstrings: character i is edge e_i (leftmost = e_0); '1' means the edge\n"
    "follows its reference tail->head direction, '0' means reversed. This is\n"
    "the little-endian qubit order of the e register.\n"
    "Exit codes: 0 success, 1 verification failure or invalid topology,\n"
    "2 usage or input error.";

std::optional<std::size_t> parse_iterations(const std::string &text) {
    if (text == "auto") {
        return std::nullopt;
    }
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (pos == 0 || pos != text.size() || text.front() == '-') {
        throw CLI::ValidationError("--iterations", "expected a non-negative integer or 'auto'");
    }
    return static_cast<std::size_t>(value);
}

void print(const nlohmann::ordered_json &doc) {
    std::cout << doc.dump() << '\n';
}

void warn(const std::vector<std::string> &warnings) {
    for (const auto &w : warnings) {
        std::cerr << "warning: " << w << '\n';
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Grover query of causal configurations of multiloop topologies"};
    app.footer(kFooter);
    app.require_subcommand(1);

    std::size_t max_qubits = causalq::kDefaultQubitLimit;
    app.add_option("--max-qubits", max_qubits, "Simulator qubit budget")->capture_default_str();

    std::string file;
    bool unconstrained = false;
    std::string iterations_text = "auto";

    auto *validate = app.add_subcommand("validate", "Check a topology file");
    validate->add_option("file", file, "Topology JSON")->required()->check(CLI::ExistingFile);

    auto *cycles = app.add_subcommand("cycles", "List chordless cycles as JSON");
    cycles->add_option("file", file, "Topology JSON")->required()->check(CLI::ExistingFile);

    auto *count = app.add_subcommand("count", "Count acyclic and causal orientations");
    count->add_option("file", file, "Topology JSON")->required()->check(CLI::ExistingFile);
    count->add_flag("--unconstrained", unconstrained, "Drop the default fixed-edge constraint");

    std::string qasm_path;
    auto *synth = app.add_subcommand("synth", "Write the Grover circuit as OpenQASM 3.0");
    synth->add_option("file", file, "Topology JSON")->required()->check(CLI::ExistingFile);
    synth->add_option("--qasm", qasm_path, "Output QASM path")->required();
    synth->add_option("--iterations", iterations_text, "Iteration count or 'auto'")->capture_default_str();
    synth->add_flag("--unconstrained", unconstrained, "Drop the default fixed-edge constraint");

    std::uint64_t shots = 1024;
    std::uint64_t seed = 0;
    bool single_precision = false;
    bool no_timing = false;
    auto *run = app.add_subcommand("run", "Simulate the query and report JSON");
    run->add_option("file", file, "Topology JSON")->required()->check(CLI::ExistingFile);
    run->add_option("--shots", shots, "Measurement shots")->required()->check(CLI::PositiveNumber);
    run->add_option("--seed", seed, "Sampler seed")->required();
    run->add_option("--iterations", iterations_text, "Iteration count or 'auto'")->capture_default_str();
    run->add_flag("--single-precision", single_precision, "Simulate with float amplitudes");
    run->add_flag("--unconstrained", unconstrained, "Drop the default fixed-edge constraint");
    run->add_flag("--no-timing", no_timing, "Omit wall_time_ms so output is byte-reproducible");

    auto *verify = app.add_subcommand("verify", "Cross-check oracle phases against classical enumeration");
    verify->add_option("file", file, "Topology JSON")->required()->check(CLI::ExistingFile);
    verify->add_flag("--unconstrained", unconstrained, "Drop the default fixed-edge constraint");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    const causalq::MarkerOptions marker_options{!unconstrained};

    try {
        if (validate->parsed()) {
            const auto raw = causalq::read_topology_file(file);
            try {
                const auto topology = causalq::Topology::validate(raw);
                std::cout << "ok: '" << topology.name() << "' " << topology.num_vertices() << " vertices, "
                          << topology.num_edges() << " edges\n";
                return kExitOk;
            } catch (const causalq::Error &e) {
                std::cerr << "invalid (" << causalq::error_code_name(e.code()) << "): " << e.what() << '\n';
                return kExitVerifyFailed;
            }
        }

        const auto topology = causalq::load_topology(file);

        if (cycles->parsed()) {
            print(causalq::cycles_to_json(topology, causalq::chordless_cycles(topology)));
            return kExitOk;
        }

        if (count->parsed()) {
            const auto n = topology.num_edges();
            const auto acyclic = causalq::enumerate_causal(topology.with_fixed(std::nullopt)).size();
            const auto fixed = causalq::effective_fixed(topology, marker_options);
            const auto causal = causalq::enumerate_causal(topology.with_fixed(fixed)).size();
            nlohmann::ordered_json doc;
            doc["n"] = n;
            doc["N"] = std::uint64_t{1} << n;
            doc["acyclic_total"] = acyclic;
            doc["causal_M"] = causal;
            print(doc);
            return kExitOk;
        }

        if (synth->parsed()) {
            const auto spec = causalq::synthesize_marker(topology, marker_options);
            causalq::layout_qubits(spec, max_qubits);
            auto iterations = parse_iterations(iterations_text);
            if (!iterations) {
                const auto causal = causalq::enumerate_causal(topology.with_fixed(spec.fixed));
                const auto plan = causalq::plan_query(std::uint64_t{1} << topology.num_edges(), causal.size());
                warn(plan.warnings);
                iterations = plan.iterations;
            }
            const auto circuit = causalq::build_grover(spec, *iterations, max_qubits);
            std::ofstream out(qasm_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write '" << qasm_path << "'\n";
                return kExitUsage;
            }
            out << causalq::export_qasm(circuit);
            auto doc = causalq::layout_to_json(circuit);
            doc["qasm"] = qasm_path;
            print(doc);
            return kExitOk;
        }

        if (run->parsed()) {
            causalq::QueryOptions options;
            options.shots = shots;
            options.seed = seed;
            options.iterations = parse_iterations(iterations_text);
            options.single_precision = single_precision;
            options.qubit_limit = max_qubits;
            options.marker = marker_options;
            const auto report = causalq::run_query(topology, options);
            warn(report.plan.warnings);
            print(causalq::report_to_json(topology, report, !no_timing));
            return kExitOk;
        }

        if (verify->parsed()) {
            const auto report = causalq::verify(topology, marker_options, max_qubits);
            print(causalq::verification_to_json(report));
            return report.pass ? kExitOk : kExitVerifyFailed;
        }
    } catch (const CLI::ValidationError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const causalq::Error &e) {
        std::cerr << "error (" << causalq::error_code_name(e.code()) << "): " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
