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

#include "causalq/json_io.h"

#include <fstream>
#include <set>
#include <sstream>

#include "causalq/error.h"

namespace causalq {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void malformed(const std::string &what) {
    throw Error(ErrorCode::kMalformedInput, "topology file: " + what);
}

void reject_unknown_keys(const json &object, std::initializer_list<const char *> allowed, const std::string &where) {
    const std::set<std::string> known(allowed.begin(), allowed.end());
    for (const auto &[key, value] : object.items()) {
        if (!known.count(key)) {
            malformed("unknown key '" + key + "' in " + where);
        }
    }
}

const json &require(const json &object, const char *key, const std::string &where) {
    auto it = object.find(key);
    if (it == object.end()) {
        malformed("missing key '" + std::string(key) + "' in " + where);
    }
    return *it;
}

std::string require_string(const json &object, const char *key, const std::string &where) {
    const auto &v = require(object, key, where);
    if (!v.is_string()) {
        malformed("'" + std::string(key) + "' in " + where + " must be a string");
    }
    return v.get<std::string>();
}

int require_int(const json &object, const char *key, const std::string &where) {
    const auto &v = require(object, key, where);
    if (!v.is_number_integer()) {
        malformed("'" + std::string(key) + "' in " + where + " must be an integer");
    }
    return v.get<int>();
}

ordered_json orientation_edges(const Topology &topology, const Orientation &o) {
    auto edges = ordered_json::array();
    for (const auto &e : topology.edges()) {
        const bool forward = o[static_cast<std::size_t>(e.id)];
        edges.push_back({{"id", e.id},
                         {"from", topology.label(forward ? e.tail : e.head)},
                         {"to", topology.label(forward ? e.head : e.tail)}});
    }
    return edges;
}

ordered_json bitstrings(const std::vector<Orientation> &list) {
    auto out = ordered_json::array();
    for (const auto &o : list) {
        out.push_back(o.to_string());
    }
    return out;
}

}  // namespace

RawTopology parse_topology_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        malformed("top level must be an object");
    }
    reject_unknown_keys(doc, {"name", "vertices", "edges", "fixed"}, "topology");

    RawTopology raw;
    raw.name = require_string(doc, "name", "topology");

    const auto &vertices = require(doc, "vertices", "topology");
    if (!vertices.is_array()) {
        malformed("'vertices' must be an array");
    }
    for (const auto &v : vertices) {
        if (!v.is_string()) {
            malformed("vertex labels must be strings");
        }
        raw.vertices.push_back(v.get<std::string>());
    }

    const auto &edges = require(doc, "edges", "topology");
    if (!edges.is_array()) {
        malformed("'edges' must be an array");
    }
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const auto &e = edges[k];
        const auto where = "edges[" + std::to_string(k) + "]";
        if (!e.is_object()) {
            malformed(where + " must be an object");
        }
        reject_unknown_keys(e, {"id", "tail", "head"}, where);
        raw.edges.push_back({require_int(e, "id", where), require_string(e, "tail", where),
                             require_string(e, "head", where)});
    }

    if (auto it = doc.find("fixed"); it != doc.end() && !it->is_null()) {
        if (!it->is_object()) {
            malformed("'fixed' must be an object");
        }
        reject_unknown_keys(*it, {"edge", "value"}, "fixed");
        const int edge = require_int(*it, "edge", "fixed");
        const int value = require_int(*it, "value", "fixed");
        if (value != 0 && value != 1) {
            malformed("'fixed.value' must be 0 or 1");
        }
        raw.fixed = FixedEdge{edge, value == 1};
    }
    return raw;
}

RawTopology read_topology_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::kMalformedInput, "cannot open topology file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_topology_json(buffer.str());
}

Topology load_topology(const std::string &path) {
    return Topology::validate(read_topology_file(path));
}

ordered_json topology_to_json(const Topology &topology) {
    ordered_json doc;
    doc["name"] = topology.name();
    doc["vertices"] = topology.vertices();
    auto edges = ordered_json::array();
    for (const auto &e : topology.edges()) {
        edges.push_back({{"id", e.id}, {"tail", topology.label(e.tail)}, {"head", topology.label(e.head)}});
    }
    doc["edges"] = edges;
    if (topology.fixed()) {
        doc["fixed"] = {{"edge", topology.fixed()->edge}, {"value", topology.fixed()->value ? 1 : 0}};
    }
    return doc;
}

ordered_json cycles_to_json(const Topology &topology, const std::vector<Cycle> &cycles) {
    auto out = ordered_json::array();
    for (const auto &c : cycles) {
        std::vector<std::string> labels;
        for (auto v : c.vertices) {
            labels.push_back(topology.label(v));
        }
        out.push_back({{"edges", c.edges}, {"vertices", labels}, {"alignments", c.alignments}});
    }
    return out;
}

ordered_json marker_to_json(const MarkerSpec &spec) {
    ordered_json doc;
    doc["n"] = spec.n;
    auto comparisons = ordered_json::array();
    for (const auto &c : spec.comparisons) {
        comparisons.push_back(
            {{"pair", {c.first, c.second}}, {"polarity", c.polarity == Polarity::kEq ? "eq" : "neq"}});
    }
    doc["comparisons"] = comparisons;
    auto clauses = ordered_json::array();
    for (const auto &c : spec.cycles) {
        clauses.push_back({{"cycle", c.cycle.edges}, {"comparisons", c.comparisons}});
    }
    doc["cycle_clauses"] = clauses;
    if (spec.fixed) {
        doc["fixed"] = {{"edge", spec.fixed->edge}, {"value", spec.fixed->value ? 1 : 0}};
    } else {
        doc["fixed"] = nullptr;
    }
    return doc;
}

ordered_json layout_to_json(const Circuit &circuit) {
    const auto &l = circuit.layout;
    ordered_json doc;
    doc["n_e"] = l.n_e;
    doc["n_c"] = l.n_c;
    doc["n_a"] = l.n_a;
    doc["total"] = l.total();
    doc["registers"] = {
        {"e", {0, l.n_e}},
        {"c", {l.n_e, l.n_e + l.n_c}},
        {"a", {l.n_e + l.n_c, l.n_e + l.n_c + l.n_a}},
        {"out", l.out()},
    };
    doc["iterations"] = circuit.repetitions;
    doc["gates"] = {{"prepare", circuit.prepare.size()},
                    {"iteration", circuit.iteration.size()},
                    {"total", circuit.gate_count()}};
    return doc;
}

ordered_json report_to_json(const Topology &topology, const QueryReport &report, bool include_timing) {
    ordered_json doc;
    doc["topology"] = report.topology;
    doc["N"] = report.plan.search_space;
    doc["M"] = report.plan.marked;
    doc["r"] = report.plan.iterations;
    doc["theta"] = report.plan.theta;
    doc["p_success"] = report.plan.p_success;
    doc["simulated_success"] = report.simulated_success;
    doc["warnings"] = report.plan.warnings;
    doc["prng"] = {{"algorithm", report.prng_algorithm}, {"seed", report.seed}};
    doc["shots"] = report.histogram.shots;
    ordered_json histogram = ordered_json::object();
    for (const auto &[outcome, count] : report.histogram.counts) {
        histogram[outcome_string(outcome, report.histogram.width)] = count;
    }
    doc["histogram"] = histogram;
    doc["marked_fraction"] = report.marked_fraction;
    auto configs = ordered_json::array();
    for (const auto &o : report.causal) {
        configs.push_back({{"bits", o.to_string()}, {"edges", orientation_edges(topology, o)}});
    }
    doc["causal_configurations"] = configs;
    if (include_timing) {
        doc["wall_time_ms"] = report.wall_time_ms;
    }
    return doc;
}

ordered_json verification_to_json(const VerificationReport &report) {
    ordered_json doc;
    doc["topology"] = report.topology;
    doc["pass"] = report.pass;
    doc["ancillas_restored"] = report.ancillas_restored;
    doc["quantum_marked"] = report.quantum.size();
    doc["classical_M"] = report.classical.size();
    doc["marked"] = bitstrings(report.quantum);
    doc["missing"] = bitstrings(report.missing);
    doc["spurious"] = bitstrings(report.spurious);
    return doc;
}

}  // namespace causalq
