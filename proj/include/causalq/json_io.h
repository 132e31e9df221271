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

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "causalq/circuit.h"
#include "causalq/grover.h"
#include "causalq/topology.h"

namespace causalq {

/// Parses a topology document:
///   {"name": str, "vertices": [str], "edges": [{"id", "tail", "head"}],
///    "fixed": {"edge", "value"}?}
/// Unknown keys and wrong types throw kMalformedInput; graph invariants are
/// left to Topology::validate.
RawTopology parse_topology_json(std::string_view text);
RawTopology read_topology_file(const std::string &path);

/// Parse + validate.
Topology load_topology(const std::string &path);

nlohmann::ordered_json topology_to_json(const Topology &topology);
nlohmann::ordered_json cycles_to_json(const Topology &topology, const std::vector<Cycle> &cycles);
nlohmann::ordered_json layout_to_json(const Circuit &circuit);
nlohmann::ordered_json marker_to_json(const MarkerSpec &spec);
nlohmann::ordered_json report_to_json(const Topology &topology, const QueryReport &report,
                                      bool include_timing = true);
nlohmann::ordered_json verification_to_json(const VerificationReport &report);

}  // namespace causalq
