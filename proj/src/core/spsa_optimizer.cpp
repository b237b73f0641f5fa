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

#include "spsa_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "csv.hpp"
#include "error.hpp"
#include "numeric.hpp"

namespace gcmi {

namespace {

using CellMap = std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>;

Jdam JdamFromCells(const CellMap& cells, std::uint64_t total) {
  std::size_t max_group = 0;
  for (const auto& [ab, n] : cells) {
    max_group = std::max({max_group, ab.first, ab.second});
  }
  const std::size_t dim = cells.empty() ? 0 : 2 * (max_group / 2 + 1);
  Jdam j{CellMatrix<std::uint64_t>(dim), total};
  for (const auto& [ab, n] : cells) j.counts.Set(ab.first, ab.second, n);
  return j;
}

void Subtract(CellMap& cells, std::size_t a, std::size_t b, std::uint64_t n) {
  auto it = cells.find({a, b});
  if (it == cells.end() || it->second < n) {
    Fail(ErrorCode::kInternal, "JDAM cell underflow");
  }
  if ((it->second -= n) == 0) cells.erase(it);
}

std::size_t NodeGroup(const AttributedMultigraph& g, NodeId v) {
  return GroupIndex(g.Degree(v) - 1, g.attribute(v));
}

}  // namespace

// ---------------------------------------------------------------------------
// Group space and sampler

GroupSpace GroupSpace::ForGraph(const AttributedMultigraph& g) {
  return {g.MaxDegree() + 1};
}

GroupSpace GroupSpace::FromClassCount(std::size_t classes) {
  const auto groups = static_cast<std::size_t>(
      std::llround(std::sqrt(static_cast<double>(classes))));
  if (groups < 2 || groups % 2 != 0 || groups * groups != classes) {
    Fail(ErrorCode::kInvalidArgument,
         std::to_string(classes) + " is not a valid edge-class count");
  }
  return {groups / 2 - 1};
}

std::vector<double> LogitPmf(std::span<const double> theta,
                             std::span<const char> mask) {
  if (!mask.empty() && mask.size() != theta.size()) {
    Fail(ErrorCode::kInvalidArgument, "mask size mismatch");
  }
  auto active = [&](std::size_t i) { return mask.empty() || mask[i] != 0; };
  double max_theta = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (!active(i)) continue;
    if (!std::isfinite(theta[i])) {
      Fail(ErrorCode::kNonFiniteTheta, "theta[" + std::to_string(i) + "]");
    }
    max_theta = std::max(max_theta, theta[i]);
    any = true;
  }
  if (!any) Fail(ErrorCode::kExhaustedClasses, "every edge class is masked");
  std::vector<double> pmf(theta.size(), 0.0);
  CompensatedSum total;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (!active(i)) continue;
    pmf[i] = std::exp(theta[i] - max_theta);
    total.Add(pmf[i]);
  }
  const double z = total.value();
  for (auto& p : pmf) p /= z;
  return pmf;
}

std::size_t SampleEdgeClass(std::span<const double> pmf, Rng& rng) {
  const double u = rng.Uniform();
  double cumulative = 0.0;
  std::size_t last_positive = pmf.size();
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    if (pmf[i] <= 0.0) continue;
    cumulative += pmf[i];
    last_positive = i;
    if (u < cumulative) return i;
  }
  if (last_positive == pmf.size()) {
    Fail(ErrorCode::kExhaustedClasses, "pmf has no positive entry");
  }
  return last_positive;
}

std::vector<double> SpsaGradient(double c_plus, double c_minus, double delta,
                                 std::span<const int> d) {
  const double scale = (c_plus - c_minus) / (2.0 * delta);
  std::vector<double> grad(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) grad[i] = scale * d[i];
  return grad;
}

// ---------------------------------------------------------------------------
// GroupMembership

GroupMembership::GroupMembership(const AttributedMultigraph& g)
    : group_of_(g.num_nodes()),
      position_(g.num_nodes(), 0) {
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    Update(v, g.Degree(v), g.attribute(v));
  }
}

std::optional<std::size_t> GroupMembership::GroupFor(std::uint64_t degree,
                                                     Attribute a) const {
  if (degree == 0) return std::nullopt;
  return GroupIndex(degree - 1, a);
}

std::span<const NodeId> GroupMembership::Members(std::size_t group) const {
  if (group >= members_.size()) return {};
  return members_[group];
}

void GroupMembership::Update(NodeId v, std::uint64_t new_degree,
                             Attribute attr) {
  const auto target = GroupFor(new_degree, attr);
  const auto current = group_of_[v];
  if (current == target) return;
  if (current) {
    auto& list = members_[*current];
    const std::size_t pos = position_[v];
    list[pos] = list.back();
    position_[list[pos]] = pos;
    list.pop_back();
  }
  if (target) {
    if (*target >= members_.size()) members_.resize(*target + 1);
    position_[v] = members_[*target].size();
    members_[*target].push_back(v);
  }
  group_of_[v] = target;
}

// ---------------------------------------------------------------------------
// IncrementalJdam

IncrementalJdam::IncrementalJdam(const AttributedMultigraph& g)
    : total_(2 * g.num_edges()) {
  g.ForEachEdge([&](NodeId u, NodeId v, std::uint64_t w) {
    const auto a = NodeGroup(g, u);
    const auto b = NodeGroup(g, v);
    counts_[{a, b}] += w;
    counts_[{b, a}] += w;
  });
}

void IncrementalJdam::Apply(const AttributedMultigraph& g, NodeId u, NodeId v,
                            bool add) {
  auto touch = [&](NodeId x, NodeId y, std::uint64_t w) {
    const auto a = NodeGroup(g, x);
    const auto b = NodeGroup(g, y);
    if (add) {
      counts_[{a, b}] += w;
      counts_[{b, a}] += w;
    } else {
      Subtract(counts_, a, b, w);
      Subtract(counts_, b, a, w);
    }
  };
  for (const auto& [w, m] : g.Neighbors(u)) touch(u, w, m);
  for (const auto& [w, m] : g.Neighbors(v)) {
    if (w != u) touch(v, w, m);
  }
}

void IncrementalJdam::AddEdge(AttributedMultigraph& g, NodeId u, NodeId v) {
  Apply(g, u, v, false);
  g.AddEdge(u, v);
  Apply(g, u, v, true);
  total_ = 2 * g.num_edges();
}

void IncrementalJdam::RemoveEdge(AttributedMultigraph& g, NodeId u, NodeId v) {
  Apply(g, u, v, false);
  g.RemoveEdge(u, v);
  Apply(g, u, v, true);
  total_ = 2 * g.num_edges();
}

std::uint64_t IncrementalJdam::Cell(std::size_t a, std::size_t b) const {
  auto it = counts_.find({a, b});
  return it == counts_.end() ? 0 : it->second;
}

Jdam IncrementalJdam::ToJdam() const { return JdamFromCells(counts_, total_); }

// ---------------------------------------------------------------------------
// ObjectiveEvaluator

ObjectiveEvaluator::ObjectiveEvaluator(AttributedMultigraph g, RenyiOrder alpha)
    : graph_(std::move(g)),
      alpha_(alpha),
      jdam_(graph_),
      groups_(graph_),
      base_(0.0) {
  if (graph_.num_edges() == 0) Fail(ErrorCode::kEmptyGraph, "graph has no edges");
  base_ = MeasureCounts(jdam_.ToJdam());
}

double ObjectiveEvaluator::MeasureCounts(const Jdam& j) const {
  return AttributeConditionalMi(NormalizeJdam(j), alpha_);
}

bool ObjectiveEvaluator::Feasible(const EdgeClass& x, ObjectiveMode mode) const {
  if (mode == ObjectiveMode::kGraphExact) {
    const std::size_t need_from = x.from_group == x.to_group ? 2 : 1;
    return groups_.Size(x.from_group) >= need_from &&
           groups_.Size(x.to_group) >= 1;
  }
  const std::uint64_t need = x.from_group == x.to_group ? 2 : 1;
  return jdam_.Cell(x.from_group, x.to_group) >= need;
}

double ObjectiveEvaluator::EvaluatePair(NodeId u, NodeId v) {
  jdam_.AddEdge(graph_, u, v);
  double after;
  try {
    after = MeasureCounts(jdam_.ToJdam());
  } catch (...) {
    jdam_.RemoveEdge(graph_, u, v);
    throw;
  }
  jdam_.RemoveEdge(graph_, u, v);
  return after - base_;
}

ObjectiveEval ObjectiveEvaluator::Evaluate(const EdgeClass& x,
                                           ObjectiveMode mode, Rng& rng) {
  if (mode == ObjectiveMode::kGraphExact) {
    if (!Feasible(x, mode)) {
      Fail(ErrorCode::kEmptyGroup,
           "groups " + GroupLabel(x.from_group) + " / " +
               GroupLabel(x.to_group) + " cannot supply two distinct nodes");
    }
    const auto from = groups_.Members(x.from_group);
    const auto to = groups_.Members(x.to_group);
    const NodeId u = from[rng.UniformInt(from.size())];
    NodeId v;
    do {
      v = to[rng.UniformInt(to.size())];
    } while (v == u);
    return {EvaluatePair(u, v), mode};
  }

  const std::size_t a = x.from_group, b = x.to_group;
  if (!Feasible(x, mode)) {
    Fail(ErrorCode::kNegativeCell,
         "cell [" + GroupLabel(a) + ", " + GroupLabel(b) + "] has no mass");
  }
  Jdam moved = jdam_.ToJdam();
  CellMap cells;
  moved.counts.ForEachNonzero([&](std::size_t r, std::size_t c, std::uint64_t n) {
    cells[{r, c}] = n;
  });
  Subtract(cells, a, b, 1);
  Subtract(cells, b, a, 1);
  cells[{a + 2, b + 2}] += 1;
  cells[{b + 2, a + 2}] += 1;
  return {MeasureCounts(JdamFromCells(cells, moved.total)) - base_, mode};
}

ObjectiveEval EvaluateQ(const AttributedMultigraph& g, const EdgeClass& x,
                        RenyiOrder alpha, ObjectiveMode mode, Rng& rng) {
  ObjectiveEvaluator eval(g, alpha);
  return eval.Evaluate(x, mode, rng);
}

// ---------------------------------------------------------------------------
// SPSA

void ValidateSpsaConfig(const SpsaConfig& cfg) {
  if (!(cfg.delta > 0.0) || !std::isfinite(cfg.delta)) {
    Fail(ErrorCode::kInvalidConfig, "delta must be > 0");
  }
  if (!(cfg.epsilon > 0.0) || !std::isfinite(cfg.epsilon)) {
    Fail(ErrorCode::kInvalidConfig, "epsilon must be > 0");
  }
  if (cfg.samples_per_eval == 0) {
    Fail(ErrorCode::kInvalidConfig, "samples_per_eval must be >= 1");
  }
}

std::vector<double> OptimizeResult::Pmf() const {
  return LogitPmf(params.theta, mask);
}

OptimizeResult Optimize(const AttributedMultigraph& g, RenyiOrder alpha,
                        const SpsaConfig& cfg, const SpsaObserver& observer) {
  ValidateSpsaConfig(cfg);
  ObjectiveEvaluator eval(g, alpha);
  OptimizeResult result;
  result.space = GroupSpace::ForGraph(g);
  const std::size_t n = result.space.num_classes();

  result.mask.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    result.mask[i] =
        eval.Feasible(EdgeClass::FromIndex(result.space, i), cfg.mode) ? 1 : 0;
  }

  Rng rng(cfg.seed);
  std::vector<double> theta(n);
  for (auto& t : theta) t = rng.Normal();
  result.initial_theta = theta;

  // C(theta) estimated as the mean of Q over sampled edge classes.
  auto estimate = [&](std::span<const double> th) {
    const auto pmf = LogitPmf(th, result.mask);
    CompensatedSum c;
    for (std::uint32_t s = 0; s < cfg.samples_per_eval; ++s) {
      const auto x = EdgeClass::FromIndex(result.space, SampleEdgeClass(pmf, rng));
      c.Add(eval.Evaluate(x, cfg.mode, rng).q_value);
    }
    return c.value() / cfg.samples_per_eval;
  };

  const double sign = cfg.direction == Direction::kMinimize ? -1.0 : 1.0;
  std::vector<int> d(n);
  std::vector<double> plus(n), minus(n);
  for (std::uint64_t k = 0; k < cfg.iterations; ++k) {
    double step = cfg.epsilon, perturb = cfg.delta;
    if (cfg.schedule == GainSchedule::kDecaying) {
      step = cfg.epsilon / std::pow(static_cast<double>(k + 1), 0.602);
      perturb = cfg.delta / std::pow(static_cast<double>(k + 1), 0.101);
    }
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = rng.Sign();
      plus[i] = theta[i] + perturb * d[i];
      minus[i] = theta[i] - perturb * d[i];
    }
    const double c_plus = estimate(plus);
    const double c_minus = estimate(minus);
    const auto grad = SpsaGradient(c_plus, c_minus, perturb, d);
    for (std::size_t i = 0; i < n; ++i) {
      if (result.mask[i]) theta[i] += sign * step * grad[i];
    }
    if (observer) observer(k, c_plus, c_minus);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!result.mask[i]) theta[i] = -std::numeric_limits<double>::infinity();
  }
  result.params.theta = std::move(theta);
  return result;
}

// ---------------------------------------------------------------------------
// Applying a learned distribution

std::vector<std::uint64_t> DefaultMilestones(std::uint64_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m <= count; m *= 10) {
    out.push_back(m);
    if (m > std::numeric_limits<std::uint64_t>::max() / 10) break;
  }
  if (count > 0 && (out.empty() || out.back() != count)) out.push_back(count);
  return out;
}

namespace {

// Re-indexes `pmf` from `space` into the space one degree larger; the new
// classes get zero mass.
std::vector<double> ExtendPmf(std::span<const double> pmf,
                              const GroupSpace& space) {
  const GroupSpace wider{space.k_max + 1};
  std::vector<double> out(wider.num_classes(), 0.0);
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    out[EdgeClass::FromIndex(space, i).Index(wider)] = pmf[i];
  }
  return out;
}

}  // namespace

ApplyEdgesResult ApplyEdges(const AttributedMultigraph& g,
                            std::span<const double> pmf,
                            const GroupSpace& space, std::uint64_t count,
                            Rng& rng, RenyiOrder alpha,
                            std::span<const std::uint64_t> milestones) {
  if (pmf.size() != space.num_classes()) {
    Fail(ErrorCode::kInvalidArgument, "pmf does not match the group space");
  }
  if (g.num_nodes() > 0 && g.MaxDegree() > space.k_max + 1) {
    Fail(ErrorCode::kInvalidArgument, "graph degrees exceed the group space");
  }
  ApplyEdgesResult result{g, {}, space, {pmf.begin(), pmf.end()}};
  auto record = [&](std::uint64_t added) {
    const auto m = MeasureGraph(result.graph, alpha);
    result.trace.push_back({added, m.gamma_att, m.gamma_deg, m.delta_i});
  };
  if (count == 0) return result;

  const std::set<std::uint64_t> marks(milestones.begin(), milestones.end());
  record(0);
  // Classes without mass (masked in training, or added by an extension)
  // are drawn with the smallest positive probability, i.e. the minimum theta.
  double floor = 0.0;
  for (double p : pmf) {
    if (p > 0.0 && (floor == 0.0 || p < floor)) floor = p;
  }
  if (!(floor > 0.0)) Fail(ErrorCode::kNotNormalized, "pmf has no mass");
  GroupMembership groups(result.graph);
  std::vector<double> weights;
  std::vector<std::size_t> sizes;

  for (std::uint64_t step = 1; step <= count; ++step) {
    const std::size_t num_groups = result.space.num_groups();
    sizes.resize(num_groups);
    for (std::size_t a = 0; a < num_groups; ++a) sizes[a] = groups.Size(a);
    weights.resize(result.pmf.size());
    for (std::size_t i = 0; i < result.pmf.size(); ++i) {
      const std::size_t a = i / num_groups, b = i % num_groups;
      const bool ok = a == b ? sizes[a] >= 2 : (sizes[a] >= 1 && sizes[b] >= 1);
      weights[i] = ok ? std::max(result.pmf[i], floor) : 0.0;
    }
    CompensatedSum total;
    for (double w : weights) total.Add(w);
    if (!(total.value() > 0.0)) {
      Fail(ErrorCode::kExhaustedClasses,
           "no edge class with positive probability has available endpoints");
    }
    for (auto& w : weights) w /= total.value();
    const auto x = EdgeClass::FromIndex(result.space, SampleEdgeClass(weights, rng));

    const auto from = groups.Members(x.from_group);
    const auto to = groups.Members(x.to_group);
    const NodeId u = from[rng.UniformInt(from.size())];
    NodeId v;
    do {
      v = to[rng.UniformInt(to.size())];
    } while (v == u);
    result.graph.AddEdge(u, v);
    groups.Update(u, result.graph.Degree(u), result.graph.attribute(u));
    groups.Update(v, result.graph.Degree(v), result.graph.attribute(v));
    if (std::max(result.graph.Degree(u), result.graph.Degree(v)) >
        result.space.k_max + 1) {
      result.pmf = ExtendPmf(result.pmf, result.space);
      ++result.space.k_max;
    }
    if (marks.count(step)) record(step);
  }
  return result;
}

void WriteLogitCsv(const std::filesystem::path& path,
                   const OptimizeResult& result) {
  const auto pmf = result.Pmf();
  CsvWriter out(path);
  out.Row({"class", "k", "c", "k_prime", "c_prime", "theta", "prob"});
  auto attr = [](std::size_t group) {
    return GroupAttribute(group) == Attribute::kPlus ? "+1" : "-1";
  };
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    const auto x = EdgeClass::FromIndex(result.space, i);
    out.Row({std::to_string(i), std::to_string(GroupDegree(x.from_group)),
             attr(x.from_group), std::to_string(GroupDegree(x.to_group)),
             attr(x.to_group), FormatReal(result.params.theta[i]),
             FormatReal(pmf[i])});
  }
}

std::vector<double> ReadPmfCsv(const std::filesystem::path& path) {
  const auto table = ReadCsv(path);
  const auto col = table.Column("prob");
  std::vector<double> pmf;
  pmf.reserve(table.rows.size());
  CompensatedSum total;
  for (const auto& row : table.rows) {
    const double p = ParseReal(row[col]);
    if (!(p >= 0.0)) Fail(ErrorCode::kNotNormalized, "negative probability");
    pmf.push_back(p);
    total.Add(p);
  }
  GroupSpace::FromClassCount(pmf.size());
  if (std::fabs(total.value() - 1.0) > 1e-9) {
    Fail(ErrorCode::kNotNormalized, path.string() + " probabilities do not sum to 1");
  }
  return pmf;
}

}  // namespace gcmi
