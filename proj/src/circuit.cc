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

#include "causalq/circuit.h"

#include <algorithm>
#include <sstream>

#include "causalq/error.h"

namespace causalq {

QubitLayout layout_qubits(const MarkerSpec &spec, std::size_t limit) {
    QubitLayout layout{spec.n, spec.comparisons.size(), spec.cycles.size()};
    if (layout.total() > limit) {
        throw Error(ErrorCode::kQubitBudget,
                    "circuit needs " + std::to_string(layout.total()) + " qubits (e=" + std::to_string(layout.n_e) +
                        ", c=" + std::to_string(layout.n_c) + ", a=" + std::to_string(layout.n_a) +
                        ", out=1); limit is " + std::to_string(limit));
    }
    return layout;
}

const char *gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::kH: return "H";
        case GateKind::kX: return "X";
        case GateKind::kCnot: return "CNOT";
        case GateKind::kMcx: return "MCX";
        case GateKind::kMcz: return "MCZ";
    }
    return "?";
}

std::string to_string(const Gate &gate) {
    std::ostringstream os;
    os << gate_name(gate.kind) << '(';
    if (!gate.controls.empty()) {
        os << '{';
        for (std::size_t k = 0; k < gate.controls.size(); ++k) {
            os << (k ? "," : "") << gate.controls[k];
        }
        os << "}->";
    }
    os << gate.target << ')';
    return os.str();
}

void check_gate(const Gate &gate, std::size_t num_qubits) {
    if (gate.target >= num_qubits) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    to_string(gate) + ": target outside " + std::to_string(num_qubits) + " qubits");
    }
    const bool single = gate.kind == GateKind::kH || gate.kind == GateKind::kX;
    if (single && !gate.controls.empty()) {
        throw Error(ErrorCode::kIndexOutOfRange, to_string(gate) + ": single-qubit gate with controls");
    }
    if (gate.kind == GateKind::kCnot && gate.controls.size() != 1) {
        throw Error(ErrorCode::kIndexOutOfRange, to_string(gate) + ": CNOT needs exactly one control");
    }
    auto sorted = gate.controls;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] >= num_qubits) {
            throw Error(ErrorCode::kIndexOutOfRange,
                        to_string(gate) + ": control outside " + std::to_string(num_qubits) + " qubits");
        }
        if (sorted[k] == gate.target || (k && sorted[k] == sorted[k - 1])) {
            throw Error(ErrorCode::kIndexOutOfRange, to_string(gate) + ": repeated qubit");
        }
    }
}

std::vector<Gate> Oracle::gates() const {
    std::vector<Gate> all;
    all.reserve(compute.size() + kickback.size() + uncompute.size());
    all.insert(all.end(), compute.begin(), compute.end());
    all.insert(all.end(), kickback.begin(), kickback.end());
    all.insert(all.end(), uncompute.begin(), uncompute.end());
    return all;
}

Oracle build_oracle_segments(const MarkerSpec &spec, const QubitLayout &layout) {
    Oracle oracle;
    for (std::size_t k = 0; k < spec.comparisons.size(); ++k) {
        const auto &c = spec.comparisons[k];
        oracle.compute.push_back(Gate::cnot(layout.e(static_cast<std::size_t>(c.first)), layout.c(k)));
        oracle.compute.push_back(Gate::cnot(layout.e(static_cast<std::size_t>(c.second)), layout.c(k)));
        if (c.polarity == Polarity::kEq) {
            oracle.compute.push_back(Gate::x(layout.c(k)));
        }
    }
    for (std::size_t m = 0; m < spec.cycles.size(); ++m) {
        std::vector<Qubit> controls;
        for (auto k : spec.cycles[m].comparisons) {
            controls.push_back(layout.c(k));
        }
        oracle.compute.push_back(Gate::mcx(std::move(controls), layout.a(m)));
        oracle.compute.push_back(Gate::x(layout.a(m)));
    }

    std::vector<Qubit> controls;
    for (std::size_t m = 0; m < spec.cycles.size(); ++m) {
        controls.push_back(layout.a(m));
    }
    std::optional<Qubit> negated;
    if (spec.fixed) {
        controls.push_back(layout.e(static_cast<std::size_t>(spec.fixed->edge)));
        if (!spec.fixed->value) {
            negated = layout.e(static_cast<std::size_t>(spec.fixed->edge));
        }
    }
    if (negated) {
        oracle.kickback.push_back(Gate::x(*negated));
    }
    if (controls.empty()) {
        // Every state is marked: an unconditional flip.
        oracle.kickback.push_back(Gate::x(layout.out()));
    } else {
        oracle.kickback.push_back(Gate::mcx(std::move(controls), layout.out()));
    }
    if (negated) {
        oracle.kickback.push_back(Gate::x(*negated));
    }

    oracle.uncompute.assign(oracle.compute.rbegin(), oracle.compute.rend());
    return oracle;
}

std::vector<Gate> build_oracle(const MarkerSpec &spec, const QubitLayout &layout) {
    return build_oracle_segments(spec, layout).gates();
}

std::vector<Gate> build_diffuser(const QubitLayout &layout) {
    std::vector<Gate> gates;
    const auto n = layout.n_e;
    if (n == 0) {
        return gates;
    }
    for (std::size_t i = 0; i < n; ++i) gates.push_back(Gate::h(layout.e(i)));
    for (std::size_t i = 0; i < n; ++i) gates.push_back(Gate::x(layout.e(i)));
    std::vector<Qubit> controls;
    for (std::size_t i = 0; i + 1 < n; ++i) controls.push_back(layout.e(i));
    gates.push_back(Gate::mcz(std::move(controls), layout.e(n - 1)));
    for (std::size_t i = 0; i < n; ++i) gates.push_back(Gate::x(layout.e(i)));
    for (std::size_t i = 0; i < n; ++i) gates.push_back(Gate::h(layout.e(i)));
    return gates;
}

Circuit build_grover(const MarkerSpec &spec, std::size_t repetitions, std::size_t limit) {
    Circuit circuit;
    circuit.layout = layout_qubits(spec, limit);
    for (std::size_t i = 0; i < circuit.layout.n_e; ++i) {
        circuit.prepare.push_back(Gate::h(circuit.layout.e(i)));
    }
    circuit.prepare.push_back(Gate::x(circuit.layout.out()));
    circuit.prepare.push_back(Gate::h(circuit.layout.out()));

    circuit.iteration = build_oracle(spec, circuit.layout);
    auto diffuser = build_diffuser(circuit.layout);
    circuit.iteration.insert(circuit.iteration.end(), diffuser.begin(), diffuser.end());
    circuit.repetitions = repetitions;
    return circuit;
}

namespace {

void write_operands(std::ostream &os, const Gate &gate) {
    for (auto c : gate.controls) {
        os << "q[" << c << "], ";
    }
    os << "q[" << gate.target << "];\n";
}

void write_gate(std::ostream &os, const Gate &gate) {
    const auto k = gate.controls.size();
    switch (gate.kind) {
        case GateKind::kH: os << "h "; break;
        case GateKind::kX: os << "x "; break;
        case GateKind::kCnot: os << "cx "; break;
        case GateKind::kMcx:
            if (k == 0) {
                os << "x ";
            } else if (k == 1) {
                os << "cx ";
            } else {
                os << "ctrl(" << k << ") @ x ";
            }
            break;
        case GateKind::kMcz:
            if (k == 0) {
                os << "z ";
            } else if (k == 1) {
                os << "cz ";
            } else {
                os << "ctrl(" << k << ") @ z ";
            }
            break;
    }
    write_operands(os, gate);
}

}  // namespace

std::string export_qasm(const Circuit &circuit) {
    const auto &layout = circuit.layout;
    std::ostringstream os;
    os << "OPENQASM 3.0;\n";
    os << "include \"stdgates.inc\";\n";
    os << "\n";
    os << "// e: q[0.." << layout.n_e << ") c: q[" << layout.n_e << ".." << layout.n_e + layout.n_c << ") a: q["
       << layout.n_e + layout.n_c << ".." << layout.out() << ") out: q[" << layout.out() << "]\n";
    os << "qubit[" << layout.total() << "] q;\n";
    os << "bit[" << layout.n_e << "] c_out;\n";
    os << "\n// prepare\n";
    for (const auto &g : circuit.prepare) {
        write_gate(os, g);
    }
    for (std::size_t r = 0; r < circuit.repetitions; ++r) {
        os << "\n// iteration " << r + 1 << "\n";
        for (const auto &g : circuit.iteration) {
            write_gate(os, g);
        }
    }
    os << "\n";
    for (std::size_t i = 0; i < layout.n_e; ++i) {
        os << "c_out[" << i << "] = measure q[" << layout.e(i) << "];\n";
    }
    return os.str();
}

}  // namespace causalq
