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

#include "generators.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "error.hpp"
#include "rng.hpp"

namespace gcmi {

namespace {

bool InUnitInterval(double p) { return p >= 0.0 && p <= 1.0; }

AttributedMultigraph SampleSbm(const SbmConfig& cfg, Rng& rng) {
  std::vector<Attribute> attrs(cfg.n1 + cfg.n2, Attribute::kMinus);
  for (std::uint32_t i = 0; i < cfg.n1; ++i) attrs[i] = Attribute::kPlus;
  AttributedMultigraph g(std::move(attrs));
  const NodeId n = cfg.n1 + cfg.n2;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const bool same = (u < cfg.n1) == (v < cfg.n1);
      if (rng.Bernoulli(same ? cfg.p_in : cfg.p_out)) g.AddEdge(u, v);
    }
  }
  return g;
}

// Draws an existing node with probability proportional to degree + delta.
// `stubs` lists each node once per unit of the relevant degree.
NodeId DrawPreferential(const std::vector<NodeId>& stubs, std::size_t n,
                        double delta, Rng& rng) {
  const double stub_mass = static_cast<double>(stubs.size());
  const double total = stub_mass + delta * static_cast<double>(n);
  if (rng.Uniform() * total < stub_mass) {
    return stubs[rng.UniformInt(stubs.size())];
  }
  return static_cast<NodeId>(rng.UniformInt(n));
}

}  // namespace

bool IsConnected(const AttributedMultigraph& g) {
  const std::size_t n = g.num_nodes();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (const auto& [v, w] : g.Neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

AttributedMultigraph GenerateSbm(const SbmConfig& cfg) {
  if (cfg.n1 + cfg.n2 < 2 || !InUnitInterval(cfg.p_in) ||
      !InUnitInterval(cfg.p_out)) {
    Fail(ErrorCode::kInvalidConfig,
         "SBM needs n1 + n2 >= 2 and probabilities in [0, 1]");
  }
  for (std::uint32_t attempt = 0; attempt < cfg.max_retries; ++attempt) {
    Rng rng(attempt == 0 ? cfg.seed : DeriveSeed(cfg.seed, attempt));
    auto g = SampleSbm(cfg, rng);
    if (IsConnected(g)) return g;
  }
  Fail(ErrorCode::kConnectivityRetriesExhausted,
       "no connected SBM sample after " + std::to_string(cfg.max_retries) +
           " attempts");
}

void ValidateDmpaConfig(const DmpaConfig& cfg) {
  if (!(cfg.p_f > 0.0 && cfg.p_f <= 0.5)) {
    Fail(ErrorCode::kInvalidConfig, "p_f must lie in (0, 0.5]");
  }
  if (!InUnitInterval(cfg.rho_att)) {
    Fail(ErrorCode::kInvalidConfig, "rho_att must lie in [0, 1]");
  }
  if (!InUnitInterval(cfg.p_event) || !InUnitInterval(cfg.q_event) ||
      cfg.p_event + cfg.q_event > 1.0) {
    Fail(ErrorCode::kInvalidConfig,
         "event probabilities must be in [0, 1] with p + q <= 1");
  }
  if (!(cfg.delta > 0.0) || !std::isfinite(cfg.delta)) {
    Fail(ErrorCode::kInvalidConfig, "delta must be > 0");
  }
  if (cfg.target_edges == 0) {
    Fail(ErrorCode::kInvalidConfig, "target_edges must be positive");
  }
}

DirectedGrowthGraph GenerateDmpa(const DmpaConfig& cfg) {
  ValidateDmpaConfig(cfg);
  Rng rng(cfg.seed);
  DirectedGrowthGraph dg;
  std::vector<NodeId> in_stubs, out_stubs;

  auto add_node = [&](Attribute a) {
    dg.types.push_back(a);
    dg.in_degree.push_back(0);
    dg.out_degree.push_back(0);
    return static_cast<NodeId>(dg.types.size() - 1);
  };
  auto add_edge = [&](NodeId from, NodeId to) {
    dg.edges.push_back({from, to});
    ++dg.out_degree[from];
    ++dg.in_degree[to];
    out_stubs.push_back(from);
    in_stubs.push_back(to);
  };
  auto accept = [&](Attribute a, Attribute b) {
    return rng.Bernoulli(a == b ? cfg.rho_att : 1.0 - cfg.rho_att);
  };

  // Two connected nodes with different labels.
  add_node(Attribute::kPlus);
  add_node(Attribute::kMinus);
  add_edge(0, 1);

  // Event (1) attaches by the citing node's in-degree, event (2) by the cited
  // node's out-degree, unless swapped.
  const auto& event1_stubs = cfg.swap_pa_degrees ? out_stubs : in_stubs;
  const auto& event2_stubs = cfg.swap_pa_degrees ? in_stubs : out_stubs;

  while (dg.edges.size() < cfg.target_edges) {
    const std::size_t n = dg.types.size();
    const double event = rng.Uniform();
    if (event < cfg.p_event + cfg.q_event) {
      const bool cites_new = event < cfg.p_event;
      const Attribute type =
          rng.Bernoulli(cfg.p_f) ? Attribute::kMinus : Attribute::kPlus;
      const auto& stubs = cites_new ? event1_stubs : event2_stubs;
      NodeId existing = DrawPreferential(stubs, n, cfg.delta, rng);
      if (cfg.rejection == DmpaConfig::Rejection::kEvent) {
        if (!accept(dg.types[existing], type)) continue;
      } else {
        while (!accept(dg.types[existing], type)) {
          existing = DrawPreferential(stubs, n, cfg.delta, rng);
        }
      }
      const NodeId fresh = add_node(type);
      if (cites_new) {
        add_edge(existing, fresh);
      } else {
        add_edge(fresh, existing);
      }
    } else {
      const NodeId citing = DrawPreferential(out_stubs, n, cfg.delta, rng);
      const NodeId cited = DrawPreferential(in_stubs, n, cfg.delta, rng);
      // A self-citation cannot be represented in the undirected projection.
      if (citing == cited) continue;
      if (!accept(dg.types[citing], dg.types[cited])) continue;
      add_edge(citing, cited);
    }
  }
  return dg;
}

AttributedMultigraph ProjectUndirected(const DirectedGrowthGraph& dg) {
  AttributedMultigraph g(dg.types);
  for (const auto& e : dg.edges) g.AddEdge(e.from, e.to);
  return g;
}

}  // namespace gcmi
