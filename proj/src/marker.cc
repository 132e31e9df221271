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

#include "causalq/marker.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "causalq/error.h"

namespace causalq {

std::optional<FixedEdge> effective_fixed(const Topology &topology, const MarkerOptions &options) {
    if (topology.fixed()) {
        return topology.fixed();
    }
    if (options.constrain) {
        return kDefaultFixedEdge;
    }
    return std::nullopt;
}

MarkerSpec synthesize_marker(const Topology &topology, const MarkerOptions &options) {
    MarkerSpec spec;
    spec.n = topology.num_edges();
    spec.fixed = effective_fixed(topology, options);

    const auto cycles = chordless_cycles(topology);

    // Chain of consecutive pairs; the closing pair is implied by the rest.
    std::vector<std::vector<ComparisonClause>> per_cycle;
    per_cycle.reserve(cycles.size());
    for (const auto &cycle : cycles) {
        std::vector<ComparisonClause> chain;
        for (std::size_t k = 0; k + 1 < cycle.size(); ++k) {
            auto [i, j] = std::minmax(cycle.edges[k], cycle.edges[k + 1]);
            const auto polarity = cycle.alignments[k] == cycle.alignments[k + 1] ? Polarity::kEq : Polarity::kNeq;
            chain.push_back({i, j, polarity});
        }
        per_cycle.push_back(std::move(chain));
    }

    std::vector<ComparisonClause> table;
    for (const auto &chain : per_cycle) {
        table.insert(table.end(), chain.begin(), chain.end());
    }
    std::sort(table.begin(), table.end());
    table.erase(std::unique(table.begin(), table.end()), table.end());
    spec.comparisons = table;

    for (std::size_t m = 0; m < cycles.size(); ++m) {
        CycleClause clause;
        clause.cycle = cycles[m];
        for (const auto &c : per_cycle[m]) {
            clause.comparisons.push_back(
                static_cast<std::size_t>(std::lower_bound(table.begin(), table.end(), c) - table.begin()));
        }
        spec.cycles.push_back(std::move(clause));
    }
    return spec;
}

bool eval_comparison(const ComparisonClause &clause, const Orientation &orientation) {
    const bool equal = orientation[static_cast<std::size_t>(clause.first)] ==
                       orientation[static_cast<std::size_t>(clause.second)];
    return clause.polarity == Polarity::kEq ? equal : !equal;
}

bool eval_cycle_clause(const MarkerSpec &spec, const CycleClause &clause, const Orientation &orientation) {
    for (auto k : clause.comparisons) {
        if (!eval_comparison(spec.comparisons.at(k), orientation)) {
            return true;
        }
    }
    return false;
}

bool eval_marker(const MarkerSpec &spec, const Orientation &orientation) {
    if (orientation.size() != spec.n) {
        throw Error(ErrorCode::kLengthMismatch,
                    "orientation has " + std::to_string(orientation.size()) + " bits, marker expects " +
                        std::to_string(spec.n));
    }
    if (spec.fixed && orientation[static_cast<std::size_t>(spec.fixed->edge)] != spec.fixed->value) {
        return false;
    }
    return std::all_of(spec.cycles.begin(), spec.cycles.end(),
                       [&](const CycleClause &c) { return eval_cycle_clause(spec, c, orientation); });
}

MarkerSpec drop_cycle_clause(const MarkerSpec &spec, std::size_t index) {
    if (index >= spec.cycles.size()) {
        throw Error(ErrorCode::kIndexOutOfRange, "no cycle clause " + std::to_string(index));
    }
    MarkerSpec out;
    out.n = spec.n;
    out.fixed = spec.fixed;
    std::vector<bool> used(spec.comparisons.size(), false);
    for (std::size_t m = 0; m < spec.cycles.size(); ++m) {
        if (m == index) {
            continue;
        }
        for (auto k : spec.cycles[m].comparisons) {
            used[k] = true;
        }
    }
    std::vector<std::size_t> renumber(spec.comparisons.size(), 0);
    for (std::size_t k = 0; k < spec.comparisons.size(); ++k) {
        if (used[k]) {
            renumber[k] = out.comparisons.size();
            out.comparisons.push_back(spec.comparisons[k]);
        }
    }
    for (std::size_t m = 0; m < spec.cycles.size(); ++m) {
        if (m == index) {
            continue;
        }
        CycleClause clause = spec.cycles[m];
        for (auto &k : clause.comparisons) {
            k = renumber[k];
        }
        out.cycles.push_back(std::move(clause));
    }
    return out;
}

std::string describe(const MarkerSpec &spec) {
    std::ostringstream os;
    for (std::size_t m = 0; m < spec.cycles.size(); ++m) {
        os << 'a' << m << " = !(";
        const auto &refs = spec.cycles[m].comparisons;
        for (std::size_t k = 0; k < refs.size(); ++k) {
            const auto &c = spec.comparisons[refs[k]];
            os << (k ? " & " : "") << (c.polarity == Polarity::kEq ? "c" : "nc") << c.first << '_' << c.second;
        }
        os << ")\n";
    }
    os << "f =";
    for (std::size_t m = 0; m < spec.cycles.size(); ++m) {
        os << (m ? " & a" : " a") << m;
    }
    if (spec.fixed) {
        os << (spec.cycles.empty() ? " " : " & ") << (spec.fixed->value ? "" : "!") << 'e' << spec.fixed->edge;
    }
    os << '\n';
    return os.str();
}

}  // namespace causalq
