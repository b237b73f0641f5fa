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

// Edge-addition optimization over degree-attribute groups.
//
// A node with degree d >= 1 and attribute c belongs to group (d - 1, c). An
// edge class is an ordered pair of groups; the conditional-logit sampler puts
// one parameter on each class. SPSA perturbs all parameters at once and
// estimates the gradient of the expected change in I_alpha from two sampled
// objective evaluations per iteration.

#ifndef GCMI_CORE_SPSA_OPTIMIZER_HPP_
#define GCMI_CORE_SPSA_OPTIMIZER_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "attributed_graph.hpp"
#include "distributions.hpp"
#include "info_measures.hpp"
#include "rng.hpp"

namespace gcmi {

// Groups {0..k_max} x {+1, -1}; classes are ordered group pairs, row-major.
struct GroupSpace {
  std::uint64_t k_max = 0;

  std::size_t num_groups() const { return 2 * (k_max + 1); }
  std::size_t num_classes() const { return num_groups() * num_groups(); }

  // k_max = maximum degree of g plus one, so the shifted group (k + 1, c) of
  // every occupied group exists.
  static GroupSpace ForGraph(const AttributedMultigraph& g);
  // Inverse of num_classes(); throws InvalidArgument if not 4 (K + 1)^2.
  static GroupSpace FromClassCount(std::size_t classes);

  friend bool operator==(const GroupSpace&, const GroupSpace&) = default;
};

struct EdgeClass {
  std::size_t from_group = 0;
  std::size_t to_group = 0;

  std::size_t Index(const GroupSpace& s) const {
    return from_group * s.num_groups() + to_group;
  }
  static EdgeClass FromIndex(const GroupSpace& s, std::size_t index) {
    return {index / s.num_groups(), index % s.num_groups()};
  }
  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

struct LogitParams {
  std::vector<double> theta;
};

// Softmax over theta; entries with mask[i] == 0 get probability 0. The mask
// may be empty (no masking). Throws NonFiniteTheta, or ExhaustedClasses when
// every class is masked.
std::vector<double> LogitPmf(std::span<const double> theta,
                             std::span<const char> mask = {});

// Inverse-CDF draw.
std::size_t SampleEdgeClass(std::span<const double> pmf, Rng& rng);

// (C(theta + delta d) - C(theta - delta d)) / (2 delta) * d.
std::vector<double> SpsaGradient(double c_plus, double c_minus, double delta,
                                 std::span<const int> d);

// Node membership of degree-attribute groups, updated as degrees change.
class GroupMembership {
 public:
  explicit GroupMembership(const AttributedMultigraph& g);

  // Empty span for groups with no members, including groups beyond the
  // current maximum.
  std::span<const NodeId> Members(std::size_t group) const;
  std::size_t Size(std::size_t group) const { return Members(group).size(); }

  void Update(NodeId v, std::uint64_t new_degree, Attribute attr);

 private:
  std::optional<std::size_t> GroupFor(std::uint64_t degree, Attribute a) const;

  std::vector<std::vector<NodeId>> members_;
  std::vector<std::optional<std::size_t>> group_of_;
  std::vector<std::size_t> position_;
};

// JDAM counts kept in step with a graph under single edge additions and
// removals. Only the half-edges incident to the two endpoints are touched.
class IncrementalJdam {
 public:
  explicit IncrementalJdam(const AttributedMultigraph& g);

  void AddEdge(AttributedMultigraph& g, NodeId u, NodeId v);
  void RemoveEdge(AttributedMultigraph& g, NodeId u, NodeId v);

  std::uint64_t Cell(std::size_t a, std::size_t b) const;
  Jdam ToJdam() const;

 private:
  void Apply(const AttributedMultigraph& g, NodeId u, NodeId v, bool add);

  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

enum class ObjectiveMode { kGraphExact, kJdamMove };

struct ObjectiveEval {
  double q_value = 0.0;  // change in I_alpha, bits
  ObjectiveMode mode = ObjectiveMode::kGraphExact;
};

// Evaluates Q(x) = I_alpha(E + x) - I_alpha(E) against an owned graph.
//  * kGraphExact adds a real edge between one uniformly drawn member of each
//    group (distinct nodes), updates the JDAM incrementally, measures, and
//    reverts. The graph is bit-identical afterwards.
//  * kJdamMove applies the single-cell move on a copy of the counts: cell
//    [(k+1, c), (k'+1, c')] and its mirror up by one, cell [(k, c), (k', c')]
//    and its mirror down by one.
class ObjectiveEvaluator {
 public:
  ObjectiveEvaluator(AttributedMultigraph g, RenyiOrder alpha);

  const AttributedMultigraph& graph() const { return graph_; }
  const GroupMembership& groups() const { return groups_; }
  double base_measure() const { return base_; }

  // Whether Evaluate(x, mode) can succeed.
  bool Feasible(const EdgeClass& x, ObjectiveMode mode) const;

  // Throws EmptyGroup (graph-exact) or NegativeCell (JDAM move).
  ObjectiveEval Evaluate(const EdgeClass& x, ObjectiveMode mode, Rng& rng);

  // Graph-exact evaluation of a specific node pair.
  double EvaluatePair(NodeId u, NodeId v);

 private:
  double MeasureCounts(const Jdam& j) const;

  AttributedMultigraph graph_;
  RenyiOrder alpha_;
  IncrementalJdam jdam_;
  GroupMembership groups_;
  double base_;
};

// One-shot convenience wrapper over ObjectiveEvaluator.
ObjectiveEval EvaluateQ(const AttributedMultigraph& g, const EdgeClass& x,
                        RenyiOrder alpha, ObjectiveMode mode, Rng& rng);

enum class Direction { kMinimize, kMaximize };
enum class GainSchedule { kConstant, kDecaying };

struct SpsaConfig {
  double delta = 0.1;     // perturbation scale
  double epsilon = 0.01;  // step size
  std::uint64_t iterations = 2000;
  Direction direction = Direction::kMinimize;
  std::uint64_t seed = 0;
  std::uint32_t samples_per_eval = 1;
  ObjectiveMode mode = ObjectiveMode::kGraphExact;
  // Decaying: step epsilon / (k + 1)^0.602, perturbation delta / (k + 1)^0.101.
  GainSchedule schedule = GainSchedule::kConstant;
};

void ValidateSpsaConfig(const SpsaConfig& cfg);

struct OptimizeResult {
  GroupSpace space;
  LogitParams params;          // masked classes hold -infinity
  std::vector<char> mask;      // 1 = class can be sampled
  std::vector<double> initial_theta;

  std::vector<double> Pmf() const;
};

// Per-iteration observer: (iteration, C(theta + delta d), C(theta - delta d)).
using SpsaObserver = std::function<void(std::uint64_t, double, double)>;

OptimizeResult Optimize(const AttributedMultigraph& g, RenyiOrder alpha,
                        const SpsaConfig& cfg,
                        const SpsaObserver& observer = {});

struct TraceRecord {
  std::uint64_t edges_added = 0;
  std::optional<double> gamma_att;
  std::optional<double> gamma_deg;
  double delta_i = 0.0;
};

struct ApplyEdgesResult {
  AttributedMultigraph graph;
  std::vector<TraceRecord> trace;
  GroupSpace space;          // after any extensions
  std::vector<double> pmf;   // over `space`; extension classes hold 0
};

// Powers of ten up to `count`, plus `count` itself.
std::vector<std::uint64_t> DefaultMilestones(std::uint64_t count);

// Adds `count` edges drawn from `pmf` over `space`. Each step draws a class
// among those whose groups can currently supply two distinct endpoints,
// then draws the endpoints uniformly within the groups. Classes with zero
// mass are drawn with the smallest positive probability of `pmf` (the
// minimum theta under softmax). When an added edge lifts a node past
// space.k_max the space grows by one degree; the new classes have zero mass
// and follow the same rule. The trace holds one record for 0 added edges and
// one per milestone.
ApplyEdgesResult ApplyEdges(const AttributedMultigraph& g,
                            std::span<const double> pmf,
                            const GroupSpace& space, std::uint64_t count,
                            Rng& rng, RenyiOrder alpha,
                            std::span<const std::uint64_t> milestones);

// CSV: class,k,c,k_prime,c_prime,theta,prob.
void WriteLogitCsv(const std::filesystem::path& path,
                   const OptimizeResult& result);
// Reads the prob column of a file written by WriteLogitCsv.
std::vector<double> ReadPmfCsv(const std::filesystem::path& path);

}  // namespace gcmi

#endif  // GCMI_CORE_SPSA_OPTIMIZER_HPP_
