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

#include "causalq/topology.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "causalq/error.h"

namespace causalq {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kDuplicateEdgeId: return "duplicate-edge-id";
        case ErrorCode::kMissingEdgeId: return "missing-edge-id";
        case ErrorCode::kUnknownVertex: return "unknown-vertex";
        case ErrorCode::kDuplicateVertex: return "duplicate-vertex";
        case ErrorCode::kSelfLoop: return "self-loop";
        case ErrorCode::kDisconnected: return "disconnected";
        case ErrorCode::kEmptyTopology: return "empty-topology";
        case ErrorCode::kBadFixedEdge: return "bad-fixed-edge";
        case ErrorCode::kLengthMismatch: return "length-mismatch";
        case ErrorCode::kBruteForceBound: return "brute-force-bound";
        case ErrorCode::kQubitBudget: return "qubit-budget";
        case ErrorCode::kAllocation: return "allocation";
        case ErrorCode::kIndexOutOfRange: return "index-out-of-range";
        case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
        case ErrorCode::kNothingToAmplify: return "nothing-to-amplify";
        case ErrorCode::kAllMarked: return "all-marked";
        case ErrorCode::kMalformedInput: return "malformed-input";
    }
    return "unknown";
}

Topology Topology::validate(const RawTopology &raw) {
    if (raw.vertices.empty() || raw.edges.empty()) {
        throw Error(ErrorCode::kEmptyTopology, "topology needs at least one vertex and one edge");
    }
    if (raw.edges.size() > Orientation::kMaxEdges) {
        throw Error(ErrorCode::kMalformedInput,
                    "topology has " + std::to_string(raw.edges.size()) + " edges; at most " +
                        std::to_string(Orientation::kMaxEdges) + " are supported");
    }

    std::map<std::string, VertexIndex> index_of;
    for (std::size_t v = 0; v < raw.vertices.size(); ++v) {
        if (!index_of.emplace(raw.vertices[v], static_cast<VertexIndex>(v)).second) {
            throw Error(ErrorCode::kDuplicateVertex, "duplicate vertex label '" + raw.vertices[v] + "'");
        }
    }

    const auto n = raw.edges.size();
    std::vector<std::optional<Edge>> slots(n);
    for (const auto &e : raw.edges) {
        if (e.id < 0 || static_cast<std::size_t>(e.id) >= n) {
            throw Error(ErrorCode::kMissingEdgeId,
                        "edge id " + std::to_string(e.id) + " outside 0.." + std::to_string(n - 1) +
                            "; ids must be contiguous");
        }
        auto &slot = slots[static_cast<std::size_t>(e.id)];
        if (slot) {
            throw Error(ErrorCode::kDuplicateEdgeId, "duplicate edge id " + std::to_string(e.id));
        }
        auto tail = index_of.find(e.tail);
        auto head = index_of.find(e.head);
        if (tail == index_of.end() || head == index_of.end()) {
            const auto &missing = tail == index_of.end() ? e.tail : e.head;
            throw Error(ErrorCode::kUnknownVertex,
                        "edge " + std::to_string(e.id) + " names unknown vertex '" + missing + "'");
        }
        if (tail->second == head->second) {
            throw Error(ErrorCode::kSelfLoop,
                        "edge " + std::to_string(e.id) + " is a self-loop on '" + e.tail + "'");
        }
        slot = Edge{e.id, tail->second, head->second};
    }

    Topology t;
    t.name_ = raw.name;
    t.vertices_ = raw.vertices;
    t.edges_.reserve(n);
    for (const auto &slot : slots) {
        // Pigeonhole: n edges, ids in range, no duplicates.
        t.edges_.push_back(*slot);
    }

    // Connectivity over the underlying undirected multigraph.
    std::vector<VertexIndex> parent(t.vertices_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](VertexIndex v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    std::size_t components = t.vertices_.size();
    for (const auto &e : t.edges_) {
        auto a = find(e.tail);
        auto b = find(e.head);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    if (components != 1) {
        throw Error(ErrorCode::kDisconnected,
                    "topology '" + raw.name + "' is disconnected (" + std::to_string(components) + " components)");
    }

    t.fixed_ = raw.fixed;
    if (t.fixed_ && (t.fixed_->edge < 0 || static_cast<std::size_t>(t.fixed_->edge) >= n)) {
        throw Error(ErrorCode::kBadFixedEdge, "fixed edge " + std::to_string(t.fixed_->edge) + " does not exist");
    }
    return t;
}

Topology Topology::with_fixed(std::optional<FixedEdge> fixed) const {
    if (fixed && (fixed->edge < 0 || static_cast<std::size_t>(fixed->edge) >= edges_.size())) {
        throw Error(ErrorCode::kBadFixedEdge, "fixed edge " + std::to_string(fixed->edge) + " does not exist");
    }
    Topology copy = *this;
    copy.fixed_ = fixed;
    return copy;
}

RawTopology Topology::to_raw() const {
    RawTopology raw;
    raw.name = name_;
    raw.vertices = vertices_;
    for (const auto &e : edges_) {
        raw.edges.push_back({e.id, label(e.tail), label(e.head)});
    }
    raw.fixed = fixed_;
    return raw;
}

Orientation::Orientation(std::uint64_t bits, std::size_t size) : bits_(bits), size_(size) {
    if (size > kMaxEdges) {
        throw Error(ErrorCode::kLengthMismatch, "orientation longer than 64 edges");
    }
    if (size < kMaxEdges) {
        bits_ &= (std::uint64_t{1} << size) - 1;
    }
}

Orientation Orientation::from_string(std::string_view text) {
    if (text.size() > kMaxEdges) {
        throw Error(ErrorCode::kLengthMismatch, "orientation longer than 64 edges");
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            bits |= std::uint64_t{1} << i;
        } else if (text[i] != '0') {
            throw Error(ErrorCode::kMalformedInput, "orientation must contain only '0' and '1'");
        }
    }
    return Orientation(bits, text.size());
}

std::string Orientation::to_string() const {
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if ((*this)[i]) {
            out[i] = '1';
        }
    }
    return out;
}

Orientation reverse(const Orientation &orientation) {
    return Orientation(~orientation.bits(), orientation.size());
}

bool is_acyclic(const Topology &topology, const Orientation &orientation) {
    if (orientation.size() != topology.num_edges()) {
        throw Error(ErrorCode::kLengthMismatch,
                    "orientation has " + std::to_string(orientation.size()) + " bits, topology has " +
                        std::to_string(topology.num_edges()) + " edges");
    }
    const auto nv = topology.num_vertices();
    std::vector<std::vector<VertexIndex>> out(nv);
    std::vector<int> indegree(nv, 0);
    for (const auto &e : topology.edges()) {
        const bool forward = orientation[static_cast<std::size_t>(e.id)];
        const auto from = forward ? e.tail : e.head;
        const auto to = forward ? e.head : e.tail;
        out[from].push_back(to);
        ++indegree[to];
    }
    std::vector<VertexIndex> ready;
    for (std::size_t v = 0; v < nv; ++v) {
        if (indegree[v] == 0) {
            ready.push_back(static_cast<VertexIndex>(v));
        }
    }
    std::size_t removed = 0;
    while (!ready.empty()) {
        auto v = ready.back();
        ready.pop_back();
        ++removed;
        for (auto w : out[v]) {
            if (--indegree[w] == 0) {
                ready.push_back(w);
            }
        }
    }
    return removed == nv;
}

std::vector<Orientation> enumerate_causal(const Topology &topology, std::size_t bound) {
    const auto n = topology.num_edges();
    if (n > bound) {
        throw Error(ErrorCode::kBruteForceBound,
                    "brute-force enumeration over " + std::to_string(n) + " edges exceeds bound " +
                        std::to_string(bound));
    }
    const auto &fixed = topology.fixed();
    std::vector<Orientation> result;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        Orientation o(bits, n);
        if (fixed && o[static_cast<std::size_t>(fixed->edge)] != fixed->value) {
            continue;
        }
        if (is_acyclic(topology, o)) {
            result.push_back(o);
        }
    }
    return result;
}

std::vector<EdgeId> Cycle::sorted_edges() const {
    auto ids = edges;
    std::sort(ids.begin(), ids.end());
    return ids;
}

namespace {

// Recomputes alignments for a traversal given by vertices/edges.
void align(const Topology &topology, Cycle &cycle) {
    cycle.alignments.resize(cycle.edges.size());
    for (std::size_t k = 0; k < cycle.edges.size(); ++k) {
        cycle.alignments[k] = topology.edge(cycle.edges[k]).tail == cycle.vertices[k] ? 0 : 1;
    }
}

// Induced cycles (length >= 3) of the simple graph underlying the topology,
// as vertex sequences starting at their smallest vertex.
void extend_induced(const std::vector<std::vector<bool>> &adjacent, std::vector<VertexIndex> &path,
                    std::vector<bool> &on_path, std::vector<std::vector<VertexIndex>> &out) {
    const auto start = path.front();
    const auto last = path.back();
    const auto nv = static_cast<VertexIndex>(adjacent.size());
    for (VertexIndex w = start + 1; w < nv; ++w) {
        if (on_path[w] || !adjacent[last][w]) {
            continue;
        }
        // w must not touch any interior path vertex other than `last`.
        bool chord = false;
        for (std::size_t k = 1; k + 1 < path.size(); ++k) {
            if (adjacent[path[k]][w]) {
                chord = true;
                break;
            }
        }
        if (chord) {
            continue;
        }
        if (path.size() >= 2 && adjacent[start][w]) {
            // Closing vertex; report each cycle once via path[1] < w.
            if (path[1] < w) {
                auto cycle = path;
                cycle.push_back(w);
                out.push_back(std::move(cycle));
            }
            continue;
        }
        path.push_back(w);
        on_path[w] = true;
        extend_induced(adjacent, path, on_path, out);
        on_path[w] = false;
        path.pop_back();
    }
}

}  // namespace

Cycle canonical_cycle_order(const Topology &topology, const Cycle &cycle) {
    const auto k = cycle.size();
    const auto lowest = static_cast<std::size_t>(
        std::min_element(cycle.edges.begin(), cycle.edges.end()) - cycle.edges.begin());
    Cycle result;
    result.edges.reserve(k);
    result.vertices.reserve(k);
    if (topology.edge(cycle.edges[lowest]).tail == cycle.vertices[lowest]) {
        for (std::size_t s = 0; s < k; ++s) {
            result.edges.push_back(cycle.edges[(lowest + s) % k]);
            result.vertices.push_back(cycle.vertices[(lowest + s) % k]);
        }
    } else {
        // Walk backwards: start at the far end of the lowest edge.
        for (std::size_t s = 0; s < k; ++s) {
            result.edges.push_back(cycle.edges[(lowest + k - s) % k]);
            result.vertices.push_back(cycle.vertices[(lowest + 1 + k - s) % k]);
        }
    }
    align(topology, result);
    return result;
}

std::vector<Cycle> chordless_cycles(const Topology &topology) {
    const auto nv = topology.num_vertices();
    std::vector<std::vector<bool>> adjacent(nv, std::vector<bool>(nv, false));
    std::map<std::pair<VertexIndex, VertexIndex>, std::vector<EdgeId>> bundles;
    for (const auto &e : topology.edges()) {
        adjacent[e.tail][e.head] = adjacent[e.head][e.tail] = true;
        bundles[std::minmax(e.tail, e.head)].push_back(e.id);
    }

    std::vector<Cycle> cycles;

    // Parallel edges never act as chords; each pair forms a 2-cycle.
    for (const auto &[ends, ids] : bundles) {
        for (std::size_t a = 0; a < ids.size(); ++a) {
            for (std::size_t b = a + 1; b < ids.size(); ++b) {
                Cycle c;
                c.vertices = {ends.first, ends.second};
                c.edges = {ids[a], ids[b]};
                align(topology, c);
                cycles.push_back(canonical_cycle_order(topology, c));
            }
        }
    }

    std::vector<std::vector<VertexIndex>> induced;
    std::vector<VertexIndex> path;
    std::vector<bool> on_path(nv, false);
    for (std::size_t s = 0; s < nv; ++s) {
        path = {static_cast<VertexIndex>(s)};
        on_path[s] = true;
        extend_induced(adjacent, path, on_path, induced);
        on_path[s] = false;
    }

    // Expand each simple cycle over every choice of parallel edge per step.
    for (const auto &ring : induced) {
        const auto k = ring.size();
        std::vector<const std::vector<EdgeId> *> choices(k);
        for (std::size_t s = 0; s < k; ++s) {
            choices[s] = &bundles.at(std::minmax(ring[s], ring[(s + 1) % k]));
        }
        std::vector<std::size_t> pick(k, 0);
        while (true) {
            Cycle c;
            c.vertices = ring;
            for (std::size_t s = 0; s < k; ++s) {
                c.edges.push_back((*choices[s])[pick[s]]);
            }
            align(topology, c);
            cycles.push_back(canonical_cycle_order(topology, c));

            std::size_t s = 0;
            while (s < k && ++pick[s] == choices[s]->size()) {
                pick[s++] = 0;
            }
            if (s == k) {
                break;
            }
        }
    }

    std::sort(cycles.begin(), cycles.end(), [](const Cycle &a, const Cycle &b) {
        return a.sorted_edges() < b.sorted_edges();
    });
    return cycles;
}

bool is_uniformly_directed(const Cycle &cycle, const Orientation &orientation) {
    // Edge k runs with the traversal iff bit XOR alignment == 1.
    std::optional<bool> sense;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        const bool with = orientation[static_cast<std::size_t>(cycle.edges[k])] != (cycle.alignments[k] != 0);
        if (sense && *sense != with) {
            return false;
        }
        sense = with;
    }
    return true;
}

namespace builtin {

Topology bubble() {
    RawTopology raw;
    raw.name = "bubble";
    raw.vertices = {"v0", "v1"};
    raw.edges = {{0, "v0", "v1"}, {1, "v0", "v1"}};
    return Topology::validate(raw);
}

Topology triangle() {
    RawTopology raw;
    raw.name = "triangle";
    raw.vertices = {"v0", "v1", "v2"};
    raw.edges = {{0, "v0", "v1"}, {1, "v1", "v2"}, {2, "v2", "v0"}};
    return Topology::validate(raw);
}

Topology four_eloop() {
    RawTopology raw;
    raw.name = "four-eloop";
    raw.vertices = {"h", "v0", "v1", "v2", "v3"};
    raw.edges = {
        {0, "v0", "v1"}, {1, "v1", "v2"}, {2, "v2", "v3"}, {3, "v3", "v0"},
        {4, "h", "v0"},  {5, "h", "v1"},  {6, "h", "v2"},  {7, "h", "v3"},
    };
    return Topology::validate(raw);
}

}  // namespace builtin

}  // namespace causalq
