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
#include <string_view>
#include <vector>

namespace causalq {

using EdgeId = int;
using VertexIndex = int;

/// Edge with reference direction tail -> head. Parallel edges are allowed.
struct Edge {
    EdgeId id = 0;
    VertexIndex tail = 0;
    VertexIndex head = 0;

    bool operator==(const Edge &) const = default;
};

/// Requires edge `edge` to carry bit `value` in every accepted orientation.
struct FixedEdge {
    EdgeId edge = 0;
    bool value = true;

    bool operator==(const FixedEdge &) const = default;
};

/// Unvalidated topology description, as read from a file or built by hand.
/// Vertices are referenced by label.
struct RawEdge {
    EdgeId id = 0;
    std::string tail;
    std::string head;
};

struct RawTopology {
    std::string name;
    std::vector<std::string> vertices;
    std::vector<RawEdge> edges;
    std::optional<FixedEdge> fixed;
};

/// A validated multiloop topology: connected multigraph, no self-loops,
/// edge ids 0..n-1 stored in id order. Immutable after construction.
class Topology {
  public:
    /// Validates `raw` and builds a topology. Throws causalq::Error with a
    /// distinct code for each invariant violation.
    static Topology validate(const RawTopology &raw);

    const std::string &name() const { return name_; }
    const std::vector<std::string> &vertices() const { return vertices_; }
    const std::vector<Edge> &edges() const { return edges_; }
    const std::optional<FixedEdge> &fixed() const { return fixed_; }

    std::size_t num_edges() const { return edges_.size(); }
    std::size_t num_vertices() const { return vertices_.size(); }
    const Edge &edge(EdgeId id) const { return edges_.at(static_cast<std::size_t>(id)); }
    const std::string &label(VertexIndex v) const { return vertices_.at(static_cast<std::size_t>(v)); }

    /// Copy of this topology with the fixed-edge constraint replaced.
    Topology with_fixed(std::optional<FixedEdge> fixed) const;

    RawTopology to_raw() const;

  private:
    Topology() = default;

    std::string name_;
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::optional<FixedEdge> fixed_;
};

/// Edge direction assignment. Bit i set means edge i follows its reference
/// direction; clear means it is reversed. Text form puts e_0 leftmost.
class Orientation {
  public:
    static constexpr std::size_t kMaxEdges = 64;

    Orientation() = default;
    Orientation(std::uint64_t bits, std::size_t size);

    /// Parses "1011..." with character i governing edge i.
    static Orientation from_string(std::string_view text);

    std::uint64_t bits() const { return bits_; }
    std::size_t size() const { return size_; }
    bool operator[](std::size_t edge) const { return (bits_ >> edge) & 1U; }

    std::string to_string() const;

    auto operator<=>(const Orientation &) const = default;

  private:
    std::uint64_t bits_ = 0;
    std::size_t size_ = 0;
};

/// Flips every edge.
Orientation reverse(const Orientation &orientation);

/// True iff orienting every edge per `orientation` yields no directed cycle.
/// Decided by Kahn's topological sort.
bool is_acyclic(const Topology &topology, const Orientation &orientation);

inline constexpr std::size_t kDefaultBruteForceBound = 20;

/// All acyclic orientations that honour the topology's fixed-edge constraint,
/// ascending by integer value (bit i = edge i).
std::vector<Orientation> enumerate_causal(const Topology &topology,
                                          std::size_t bound = kDefaultBruteForceBound);

/// Simple cycle of the multigraph. vertices[k] and vertices[k+1] (cyclically)
/// are joined by edges[k]. alignments[k] is 0 when edges[k] points along the
/// traversal and 1 when it points against it.
struct Cycle {
    std::vector<EdgeId> edges;
    std::vector<VertexIndex> vertices;
    std::vector<int> alignments;

    std::size_t size() const { return edges.size(); }
    std::vector<EdgeId> sorted_edges() const;

    bool operator==(const Cycle &) const = default;
};

/// Every chordless cycle, including the 2-cycle of each parallel edge pair.
/// Cycles are in canonical order and the list is sorted by sorted edge ids.
std::vector<Cycle> chordless_cycles(const Topology &topology);

/// Rotates/reflects a cycle so the lowest edge id comes first and traversal
/// follows that edge's reference direction.
Cycle canonical_cycle_order(const Topology &topology, const Cycle &cycle);

/// True iff every edge of the cycle points the same way around it under the
/// given orientation.
bool is_uniformly_directed(const Cycle &cycle, const Orientation &orientation);

namespace builtin {

/// Two vertices joined by two parallel edges, both v0 -> v1.
Topology bubble();
/// Directed triangle v0 -> v1 -> v2 -> v0.
Topology triangle();
/// Wheel with hub h and rim v0..v3. Rim edges e0..e3 run cyclically
/// v0->v1->v2->v3->v0, spokes e4..e7 point outward h->v0..v3.
Topology four_eloop();

}  // namespace builtin

}  // namespace causalq
