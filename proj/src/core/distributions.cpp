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

#include "distributions.hpp"

#include <algorithm>

#include "error.hpp"
#include "numeric.hpp"

namespace gcmi {

namespace {

constexpr std::size_t kDenseDegreeLimit = 512;

std::uint64_t EffectiveDegree(const AttributedMultigraph& g, NodeId v,
                              const DistributionOptions& opts) {
  const std::uint64_t d = g.Degree(v);
  return opts.degree_cap ? std::min(d, *opts.degree_cap) : d;
}

void RequireEdges(const AttributedMultigraph& g) {
  if (g.num_edges() == 0) Fail(ErrorCode::kEmptyGraph, "graph has no edges");
}

std::uint64_t MaxEffectiveDegree(const AttributedMultigraph& g,
                                 const DistributionOptions& opts) {
  std::uint64_t k_max = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    k_max = std::max(k_max, EffectiveDegree(g, v, opts));
  }
  return k_max;
}

}  // namespace

std::string GroupLabel(std::size_t group) {
  return std::to_string(GroupDegree(group)) +
         (GroupAttribute(group) == Attribute::kPlus ? ":+1" : ":-1");
}

DegreeDistribution ComputeDegreeDistribution(const AttributedMultigraph& g,
                                             const DistributionOptions& opts) {
  RequireEdges(g);
  DegreeDistribution d;
  d.k_max = MaxEffectiveDegree(g, opts);
  std::vector<std::uint64_t> counts(d.k_max + 1, 0);
  std::uint64_t n = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const auto k = EffectiveDegree(g, v, opts);
    if (k == 0) continue;
    ++counts[k];
    ++n;
  }
  d.p.assign(d.k_max + 1, 0.0);
  for (std::uint64_t k = 1; k <= d.k_max; ++k) {
    d.p[k] = static_cast<double>(counts[k]) / static_cast<double>(n);
  }
  return d;
}

RemainingDegreeDistribution ComputeRemainingDegreeDistribution(
    const DegreeDistribution& d) {
  CompensatedSum mean;
  for (std::size_t j = 1; j < d.p.size(); ++j) {
    mean.Add(static_cast<double>(j) * d.p[j]);
  }
  if (!(mean.value() > 0.0)) {
    Fail(ErrorCode::kDegenerateDistribution, "mean degree is zero");
  }
  RemainingDegreeDistribution r;
  r.q.assign(d.k_max, 0.0);
  for (std::uint64_t k = 0; k < d.k_max; ++k) {
    r.q[k] = static_cast<double>(k + 1) * d.p[k + 1] / mean.value();
  }
  return r;
}

JointRemainingDegreeDistribution ComputeJointRemainingDegree(
    const AttributedMultigraph& g, const DistributionOptions& opts) {
  RequireEdges(g);
  const auto k_max = MaxEffectiveDegree(g, opts);
  CellMatrix<std::uint64_t> counts(k_max, kDenseDegreeLimit);
  g.ForEachEdge([&](NodeId u, NodeId v, std::uint64_t w) {
    const auto ku = EffectiveDegree(g, u, opts) - 1;
    const auto kv = EffectiveDegree(g, v, opts) - 1;
    counts.Add(ku, kv, w);
    counts.Add(kv, ku, w);
  });
  const double total = 2.0 * static_cast<double>(g.num_edges());
  JointRemainingDegreeDistribution out{CellMatrix<double>(k_max, kDenseDegreeLimit)};
  counts.ForEachNonzero([&](std::size_t r, std::size_t c, std::uint64_t n) {
    out.e.Set(r, c, static_cast<double>(n) / total);
  });
  return out;
}

RemainingDegreeDistribution MarginalOf(const JointRemainingDegreeDistribution& e) {
  std::vector<CompensatedSum> rows(e.e.dim());
  e.e.ForEachNonzero([&](std::size_t r, std::size_t, double v) { rows[r].Add(v); });
  RemainingDegreeDistribution out;
  out.q.reserve(rows.size());
  for (const auto& s : rows) out.q.push_back(s.value());
  return out;
}

Jdam BuildJdam(const AttributedMultigraph& g, const DistributionOptions& opts) {
  RequireEdges(g);
  const auto k_max = MaxEffectiveDegree(g, opts);
  Jdam j{CellMatrix<std::uint64_t>(2 * k_max), 2 * g.num_edges()};
  g.ForEachEdge([&](NodeId u, NodeId v, std::uint64_t w) {
    const auto gu = GroupIndex(EffectiveDegree(g, u, opts) - 1, g.attribute(u));
    const auto gv = GroupIndex(EffectiveDegree(g, v, opts) - 1, g.attribute(v));
    j.counts.Add(gu, gv, w);
    j.counts.Add(gv, gu, w);
  });
  return j;
}

NormalizedJdam NormalizeJdam(const Jdam& j) {
  if (j.total == 0) Fail(ErrorCode::kEmptyJdam, "JDAM has zero total count");
  const std::size_t groups = j.counts.dim();
  const std::size_t degrees = groups / 2;
  const double total = static_cast<double>(j.total);

  NormalizedJdam nj{CellMatrix<double>(groups), {}, {},
                    CellMatrix<double>(degrees, kDenseDegreeLimit)};
  std::vector<std::uint64_t> group_rows(groups, 0);
  CellMatrix<std::uint64_t> degree_counts(degrees, kDenseDegreeLimit);
  j.counts.ForEachNonzero([&](std::size_t r, std::size_t c, std::uint64_t n) {
    nj.p4.Set(r, c, static_cast<double>(n) / total);
    group_rows[r] += n;
    degree_counts.Add(r / 2, c / 2, n);
  });
  nj.group_marginal.resize(groups);
  nj.degree_marginal.resize(degrees);
  for (std::size_t g = 0; g < groups; ++g) {
    nj.group_marginal[g] = static_cast<double>(group_rows[g]) / total;
  }
  for (std::size_t k = 0; k < degrees; ++k) {
    nj.degree_marginal[k] =
        static_cast<double>(group_rows[2 * k] + group_rows[2 * k + 1]) / total;
  }
  degree_counts.ForEachNonzero([&](std::size_t r, std::size_t c, std::uint64_t n) {
    nj.degree_joint.Set(r, c, static_cast<double>(n) / total);
  });
  return nj;
}

AttributeDistribution ComputeAttributeDistributions(
    const AttributedMultigraph& g) {
  RequireEdges(g);
  std::array<std::array<std::uint64_t, 2>, 2> joint{};
  g.ForEachEdge([&](NodeId u, NodeId v, std::uint64_t w) {
    const int a = AttributeIndex(g.attribute(u));
    const int b = AttributeIndex(g.attribute(v));
    joint[a][b] += w;
    joint[b][a] += w;
  });
  const double total = 2.0 * static_cast<double>(g.num_edges());
  AttributeDistribution m;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      m.joint[a][b] = static_cast<double>(joint[a][b]) / total;
    }
    m.marginal[a] = static_cast<double>(joint[a][0] + joint[a][1]) / total;
  }
  return m;
}

}  // namespace gcmi
