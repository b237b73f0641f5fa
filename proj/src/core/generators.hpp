// Copyright 2026 The gcmi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GCMI_CORE_GENERATORS_HPP_
#define GCMI_CORE_GENERATORS_HPP_

#include <cstdint>
#include <vector>

#include "attributed_graph.hpp"

namespace gcmi {

// Two-block stochastic blockmodel: nodes 0..n1-1 carry +1, the rest -1.
struct SbmConfig {
  std::uint32_t n1 = 30;
  std::uint32_t n2 = 30;
  double p_in = 0.3;
  double p_out = 0.05;
  std::uint64_t seed = 0;
  // Disconnected samples are discarded and redrawn up to this many times.
  std::uint32_t max_retries = 1000;
};

// Simple graph, each pair sampled once. Throws InvalidConfig or
// ConnectivityRetriesExhausted.
AttributedMultigraph GenerateSbm(const SbmConfig& cfg);

bool IsConnected(const AttributedMultigraph& g);

// Condensed directed mixed preferential attachment model.
struct DmpaConfig {
  double p_f = 0.3;          // probability a new node is type f (-1)
  double rho_att = 0.5;      // acceptance for same-type pairs
  double p_event = 0.15;     // event (1): new node, existing node cites it
  double q_event = 0.15;     // event (2): new node cites existing node
  double delta = 10.0;       // attachment offset
  std::uint64_t target_edges = 2000;  // includes the seed edge
  std::uint64_t seed = 0;
  // Event (1) picks the citing node by in-degree and event (2) the cited node
  // by out-degree. When set, those two attachment degrees are swapped.
  bool swap_pa_degrees = false;
  // What a rejected newcomer proposal redraws. kPartner keeps the newcomer
  // and its type, so type f keeps share p_f; kEvent discards the whole step.
  // A rejected event (3) proposal always redraws the whole step.
  enum class Rejection { kPartner, kEvent };
  Rejection rejection = Rejection::kPartner;
};

struct DirectedEdge {
  NodeId from;
  NodeId to;
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

struct DirectedGrowthGraph {
  std::vector<Attribute> types;  // m -> +1, f -> -1
  std::vector<std::uint64_t> in_degree;
  std::vector<std::uint64_t> out_degree;
  std::vector<DirectedEdge> edges;  // in acceptance order
};

void ValidateDmpaConfig(const DmpaConfig& cfg);

DirectedGrowthGraph GenerateDmpa(const DmpaConfig& cfg);

// Drops direction; parallel and antiparallel edges accumulate multiplicity.
AttributedMultigraph ProjectUndirected(const DirectedGrowthGraph& dg);

}  // namespace gcmi

#endif  // GCMI_CORE_GENERATORS_HPP_
