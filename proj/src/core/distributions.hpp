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

// Degree, remaining-degree and attribute distributions of an attributed
// multigraph, and the joint degree-and-attribute matrix (JDAM).
//
// Conventions:
//  * Every edge-based quantity enumerates ordered half-edge pairs: an
//    undirected edge {u, v} of multiplicity w contributes w to cell (u, v) and
//    w to cell (v, u). Symmetry is therefore structural.
//  * JDAM rows are indexed by remaining degree k = degree - 1, so the
//    attribute marginal of the JDAM is exactly e_kk'.
//  * Isolated nodes never appear in any distribution here.
//  * An optional degree cap clamps degree to min(degree, cap) before binning.
//    Half-edges keep their true weight.

#ifndef GCMI_CORE_DISTRIBUTIONS_HPP_
#define GCMI_CORE_DISTRIBUTIONS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "attributed_graph.hpp"
#include "cell_matrix.hpp"

namespace gcmi {

struct DistributionOptions {
  std::optional<std::uint64_t> degree_cap;
};

// Group index of (remaining degree k, attribute c): 2k for +1, 2k+1 for -1.
inline std::size_t GroupIndex(std::uint64_t k, Attribute c) {
  return static_cast<std::size_t>(2 * k + AttributeIndex(c));
}
inline std::uint64_t GroupDegree(std::size_t group) { return group / 2; }
inline Attribute GroupAttribute(std::size_t group) {
  return group % 2 == 0 ? Attribute::kPlus : Attribute::kMinus;
}
// "k:+1" / "k:-1".
std::string GroupLabel(std::size_t group);

// p[k] for k = 0..k_max; p[0] is always 0 (isolated nodes are excluded).
struct DegreeDistribution {
  std::vector<double> p;
  std::uint64_t k_max = 0;
};

// q[k] for k = 0..k_max-1.
struct RemainingDegreeDistribution {
  std::vector<double> q;
};

// e(k, k') over remaining degrees; dense up to 512 rows.
struct JointRemainingDegreeDistribution {
  CellMatrix<double> e;
};

struct AttributeDistribution {
  std::array<double, 2> marginal{};               // m(+1), m(-1)
  std::array<std::array<double, 2>, 2> joint{};   // m(c, c')
};

struct Jdam {
  CellMatrix<std::uint64_t> counts;  // dimension 2 * (number of k values)
  std::uint64_t total = 0;           // 2M

  std::size_t num_degrees() const { return counts.dim() / 2; }
};

struct NormalizedJdam {
  CellMatrix<double> p4;                  // p(k, k', c, c') by group index
  std::vector<double> group_marginal;     // p(k, c) by group index
  std::vector<double> degree_marginal;    // p(k) == q_k
  CellMatrix<double> degree_joint;        // e_kk'

  std::size_t num_degrees() const { return degree_marginal.size(); }
};

DegreeDistribution ComputeDegreeDistribution(
    const AttributedMultigraph& g, const DistributionOptions& opts = {});

RemainingDegreeDistribution ComputeRemainingDegreeDistribution(
    const DegreeDistribution& d);

JointRemainingDegreeDistribution ComputeJointRemainingDegree(
    const AttributedMultigraph& g, const DistributionOptions& opts = {});

// Row sums of e; equals the remaining-degree distribution of the graph.
RemainingDegreeDistribution MarginalOf(const JointRemainingDegreeDistribution& e);

Jdam BuildJdam(const AttributedMultigraph& g,
               const DistributionOptions& opts = {});

NormalizedJdam NormalizeJdam(const Jdam& j);

AttributeDistribution ComputeAttributeDistributions(
    const AttributedMultigraph& g);

}  // namespace gcmi

#endif  // GCMI_CORE_DISTRIBUTIONS_HPP_
