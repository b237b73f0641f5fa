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

#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "assortativity.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using gcmi::EdgeClass;
using gcmi::ErrorCode;
using gcmi::GroupIndex;
using gcmi::RenyiOrder;
using namespace testutil;

namespace {

// Exact mean of Q over one class: every ordered member pair, equally likely.
double ClassMeanQ(gcmi::ObjectiveEvaluator& eval, const EdgeClass& x) {
  const auto from = eval.groups().Members(x.from_group);
  const auto to = eval.groups().Members(x.to_group);
  const std::vector<gcmi::NodeId> a(from.begin(), from.end()), b(to.begin(), to.end());
  double sum = 0.0;
  int n = 0;
  for (auto u : a) {
    for (auto v : b) {
      if (u == v) continue;
      sum += eval.EvaluatePair(u, v);
      ++n;
    }
  }
  return sum / n;
}

double ExpectedQ(gcmi::ObjectiveEvaluator& eval, const gcmi::GroupSpace& space,
                 const std::vector<double>& pmf) {
  double q = 0.0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    if (pmf[i] > 0.0) q += pmf[i] * ClassMeanQ(eval, EdgeClass::FromIndex(space, i));
  }
  return q;
}

gcmi::AttributedMultigraph SmallSbm(std::uint64_t seed) {
  gcmi::SbmConfig cfg;
  cfg.n1 = cfg.n2 = 5;
  cfg.p_in = 0.6;
  cfg.p_out = 0.2;
  cfg.seed = seed;
  return gcmi::GenerateSbm(cfg);
}

}  // namespace

TEST_CASE("group space sizes") {
  const auto s = gcmi::GroupSpace::ForGraph(Star(3));
  CHECK(s.k_max == 4);
  CHECK(s.num_groups() == 10);
  CHECK(s.num_classes() == 100);
  CHECK(gcmi::GroupSpace::FromClassCount(100) == s);
  CHECK(CodeOf([] { gcmi::GroupSpace::FromClassCount(99); }) == ErrorCode::kInvalidArgument);
  for (std::size_t i = 0; i < s.num_classes(); ++i) {
    CHECK(EdgeClass::FromIndex(s, i).Index(s) == i);
  }
}

TEST_CASE("logit pmf examples") {
  const std::vector<double> two{std::log(2.0), 0.0};
  auto p = gcmi::LogitPmf(two);
  CHECK(p[0] == doctest::Approx(2.0 / 3));
  CHECK(p[1] == doctest::Approx(1.0 / 3));
  const std::vector<double> shifted{std::log(2.0) + 50, 50};
  const auto q = gcmi::LogitPmf(shifted);
  CHECK(std::fabs(q[0] - p[0]) < 1e-12);
  const auto u = gcmi::LogitPmf(std::vector<double>(5, 0.3));
  for (double x : u) CHECK(x == doctest::Approx(0.2));

  const std::vector<double> theta{1.0, 2.0, 3.0};
  const std::vector<char> mask{1, 0, 1};
  p = gcmi::LogitPmf(theta, mask);
  CHECK(p[1] == 0.0);
  CHECK(p[0] + p[2] == doctest::Approx(1.0));
  const std::vector<char> none{0, 0, 0};
  CHECK(CodeOf([&] { gcmi::LogitPmf(theta, none); }) == ErrorCode::kExhaustedClasses);
  const std::vector<double> bad{0.0, std::nan("")};
  CHECK(CodeOf([&] { gcmi::LogitPmf(bad); }) == ErrorCode::kNonFiniteTheta);
}

TEST_CASE("class sampling frequencies are within five sigma") {
  const std::vector<double> pmf{0.1, 0.0, 0.25, 0.65};
  gcmi::Rng rng(3);
  const int n = 100000;
  std::vector<int> hits(pmf.size(), 0);
  for (int i = 0; i < n; ++i) ++hits[gcmi::SampleEdgeClass(pmf, rng)];
  CHECK(hits[1] == 0);
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    const double sigma = std::sqrt(n * pmf[i] * (1 - pmf[i]));
    CHECK(std::fabs(hits[i] - n * pmf[i]) <= 5 * sigma + 1e-9);
  }
}

TEST_CASE("sampling a point mass and reproducibility") {
  const std::vector<double> point{0.0, 0.0, 1.0};
  gcmi::Rng rng(1);
  for (int i = 0; i < 100; ++i) CHECK(gcmi::SampleEdgeClass(point, rng) == 2);
  const std::vector<double> pmf{0.3, 0.3, 0.4};
  gcmi::Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) CHECK(gcmi::SampleEdgeClass(pmf, a) == gcmi::SampleEdgeClass(pmf, b));
}

TEST_CASE("SPSA gradient examples") {
  const std::vector<int> d{1, -1, 1};
  CHECK(gcmi::SpsaGradient(3.0, 1.0, 0.5, d) == std::vector<double>{2.0, -2.0, 2.0});
  CHECK(gcmi::SpsaGradient(0.7, 0.7, 0.1, d) == std::vector<double>{0.0, -0.0, 0.0});
  const std::vector<int> ones{1, 1, 1, 1};
  CHECK(gcmi::SpsaGradient(0.2, 0.0, 0.1, ones) == std::vector<double>(4, 1.0));
}

TEST_CASE("SPSA gradient is unbiased on a quadratic") {
  // C(theta) = sum a_i theta_i^2 has gradient 2 a_i theta_i.
  const std::vector<double> a{1.0, -2.0, 0.5, 3.0}, theta{0.3, -0.7, 1.1, 0.2};
  gcmi::Rng rng(8);
  const double delta = 0.1;
  const int draws = 200000;
  std::vector<double> mean(a.size(), 0.0);
  std::vector<int> d(a.size());
  for (int r = 0; r < draws; ++r) {
    double cp = 0, cm = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      d[i] = rng.Sign();
      cp += a[i] * std::pow(theta[i] + delta * d[i], 2);
      cm += a[i] * std::pow(theta[i] - delta * d[i], 2);
    }
    const auto g = gcmi::SpsaGradient(cp, cm, delta, d);
    for (std::size_t i = 0; i < a.size(); ++i) mean[i] += g[i] / draws;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(mean[i] == doctest::Approx(2 * a[i] * theta[i]).epsilon(0.05));
  }
}

TEST_CASE("graph-exact Q matches full recomputation on 1000 pairs") {
  gcmi::Rng rng(21);
  int checked = 0;
  while (checked < 1000) {
    const auto g = oracle::RandomMultigraph(rng, 3 + rng.UniformInt(10),
                                            1 + rng.UniformInt(25));
    gcmi::ObjectiveEvaluator eval(g, RenyiOrder(1.3));
    const auto fp = g.Fingerprint();
    for (int i = 0; i < 10; ++i, ++checked) {
      const auto u = static_cast<gcmi::NodeId>(rng.UniformInt(g.num_nodes()));
      auto v = static_cast<gcmi::NodeId>(rng.UniformInt(g.num_nodes() - 1));
      if (v >= u) ++v;
      const double q = eval.EvaluatePair(u, v);
      CHECK(std::fabs(q - static_cast<double>(oracle::FullRecomputeQ(g, u, v, 1.3))) < 1e-9);
      CHECK(eval.graph().Fingerprint() == fp);
    }
    CHECK(eval.graph() == g);
  }
}

TEST_CASE("class evaluation leaves the graph untouched") {
  const auto g = SmallSbm(2);
  gcmi::ObjectiveEvaluator eval(g, RenyiOrder(1.3));
  const auto space = gcmi::GroupSpace::ForGraph(g);
  gcmi::Rng rng(1);
  int evaluated = 0;
  for (std::size_t i = 0; i < space.num_classes(); ++i) {
    const auto x = EdgeClass::FromIndex(space, i);
    if (!eval.Feasible(x, gcmi::ObjectiveMode::kGraphExact)) {
      CHECK(CodeOf([&] { eval.Evaluate(x, gcmi::ObjectiveMode::kGraphExact, rng); }) ==
            ErrorCode::kEmptyGroup);
      continue;
    }
    eval.Evaluate(x, gcmi::ObjectiveMode::kGraphExact, rng);
    ++evaluated;
  }
  CHECK(evaluated > 0);
  CHECK(eval.graph().Fingerprint() == g.Fingerprint());
  CHECK(eval.graph() == g);
}

TEST_CASE("JDAM move agrees with the graph when the endpoints form a lone edge") {
  gcmi::AttributedMultigraph g({kP, kM});
  g.AddEdge(0, 1);
  const EdgeClass x{GroupIndex(0, kP), GroupIndex(0, kM)};
  gcmi::Rng rng(1);
  for (double a : {0.5, 1.0, 1.3, 2.0}) {
    const auto exact = gcmi::EvaluateQ(g, x, RenyiOrder(a), gcmi::ObjectiveMode::kGraphExact, rng);
    const auto moved = gcmi::EvaluateQ(g, x, RenyiOrder(a), gcmi::ObjectiveMode::kJdamMove, rng);
    CHECK(std::fabs(exact.q_value - moved.q_value) < 1e-12);
  }
  const EdgeClass empty{GroupIndex(0, kP), GroupIndex(0, kP)};
  CHECK(CodeOf([&] {
          gcmi::EvaluateQ(g, empty, RenyiOrder(), gcmi::ObjectiveMode::kJdamMove, rng);
        }) == ErrorCode::kNegativeCell);
}

TEST_CASE("incremental JDAM tracks additions and removals") {
  gcmi::Rng rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = oracle::RandomMultigraph(rng, 8, 12);
    gcmi::IncrementalJdam inc(g);
    for (int step = 0; step < 5; ++step) {
      const auto u = static_cast<gcmi::NodeId>(rng.UniformInt(8));
      auto v = static_cast<gcmi::NodeId>(rng.UniformInt(7));
      if (v >= u) ++v;
      inc.AddEdge(g, u, v);
      CHECK(inc.ToJdam().counts == gcmi::BuildJdam(g).counts);
      if (step % 2 == 1) {
        inc.RemoveEdge(g, u, v);
        CHECK(inc.ToJdam().counts == gcmi::BuildJdam(g).counts);
      }
    }
  }
}

TEST_CASE("zero iterations returns the initial parameters") {
  const auto g = SmallSbm(3);
  gcmi::SpsaConfig cfg;
  cfg.iterations = 0;
  cfg.seed = 12;
  const auto r = gcmi::Optimize(g, RenyiOrder(1.3), cfg);
  REQUIRE(r.params.theta.size() == r.space.num_classes());
  for (std::size_t i = 0; i < r.mask.size(); ++i) {
    if (r.mask[i]) {
      CHECK(r.params.theta[i] == r.initial_theta[i]);
    } else {
      CHECK(r.params.theta[i] == -std::numeric_limits<double>::infinity());
    }
  }
}

TEST_CASE("optimization is deterministic given the seed") {
  const auto g = SmallSbm(4);
  gcmi::SpsaConfig cfg;
  cfg.iterations = 50;
  cfg.seed = 5;
  const auto a = gcmi::Optimize(g, RenyiOrder(1.3), cfg);
  const auto b = gcmi::Optimize(g, RenyiOrder(1.3), cfg);
  CHECK(a.params.theta == b.params.theta);
  cfg.seed = 6;
  CHECK(gcmi::Optimize(g, RenyiOrder(1.3), cfg).params.theta != a.params.theta);
}

TEST_CASE("minimization lowers the expected Q below the uniform sampler") {
  const auto g = SmallSbm(7);
  gcmi::SpsaConfig cfg;
  cfg.iterations = 3000;
  cfg.epsilon = 0.5;
  cfg.samples_per_eval = 4;
  cfg.seed = 2;
  const auto r = gcmi::Optimize(g, RenyiOrder(1.3), cfg);
  gcmi::ObjectiveEvaluator eval(g, RenyiOrder(1.3));
  std::vector<double> uniform(r.mask.size());
  const double active = std::accumulate(r.mask.begin(), r.mask.end(), 0.0);
  for (std::size_t i = 0; i < r.mask.size(); ++i) uniform[i] = r.mask[i] / active;
  const double trained = ExpectedQ(eval, r.space, r.Pmf());
  CHECK(trained <= ExpectedQ(eval, r.space, uniform));
  CHECK(trained <= ExpectedQ(eval, r.space, gcmi::LogitPmf(r.initial_theta, r.mask)));
}

TEST_CASE("SPSA configuration errors") {
  gcmi::SpsaConfig cfg;
  cfg.delta = 0.0;
  CHECK(CodeOf([&] { gcmi::ValidateSpsaConfig(cfg); }) == ErrorCode::kInvalidConfig);
  cfg = {};
  cfg.epsilon = -1.0;
  CHECK(CodeOf([&] { gcmi::ValidateSpsaConfig(cfg); }) == ErrorCode::kInvalidConfig);
  cfg = {};
  cfg.samples_per_eval = 0;
  CHECK(CodeOf([&] { gcmi::ValidateSpsaConfig(cfg); }) == ErrorCode::kInvalidConfig);
  CHECK(CodeOf([] {
          gcmi::Optimize(gcmi::AttributedMultigraph({kP, kP}), RenyiOrder(), gcmi::SpsaConfig{});
        }) == ErrorCode::kEmptyGraph);
}

TEST_CASE("default milestones") {
  CHECK(gcmi::DefaultMilestones(0).empty());
  CHECK(gcmi::DefaultMilestones(1) == std::vector<std::uint64_t>{1});
  CHECK(gcmi::DefaultMilestones(250) == std::vector<std::uint64_t>{1, 10, 100, 250});
  CHECK(gcmi::DefaultMilestones(1000) == std::vector<std::uint64_t>{1, 10, 100, 1000});
}

TEST_CASE("applying zero edges returns the graph and an empty trace") {
  const auto g = SmallSbm(1);
  const auto space = gcmi::GroupSpace::ForGraph(g);
  const std::vector<double> pmf(space.num_classes(), 1.0 / space.num_classes());
  gcmi::Rng rng(1);
  const auto r = gcmi::ApplyEdges(g, pmf, space, 0, rng, RenyiOrder(), {});
  CHECK(r.trace.empty());
  CHECK(r.graph == g);
}

TEST_CASE("applied edges follow the pmf and the trace") {
  const auto g = SmallSbm(5);
  const auto space = gcmi::GroupSpace::ForGraph(g);
  const std::vector<double> pmf(space.num_classes(), 1.0 / space.num_classes());
  gcmi::Rng rng(9);
  const std::vector<std::uint64_t> marks{1, 10, 40};
  const auto r = gcmi::ApplyEdges(g, pmf, space, 40, rng, RenyiOrder(1.3), marks);
  CHECK(r.graph.num_edges() == g.num_edges() + 40);
  REQUIRE(r.trace.size() == 4);
  CHECK(r.trace[0].edges_added == 0);
  CHECK(r.trace[0].delta_i == gcmi::MeasureGraph(g, RenyiOrder(1.3)).delta_i);
  CHECK(r.trace[3].edges_added == 40);
  CHECK(r.trace[3].delta_i == gcmi::MeasureGraph(r.graph, RenyiOrder(1.3)).delta_i);

  gcmi::Rng again(9);
  CHECK(gcmi::ApplyEdges(g, pmf, space, 40, again, RenyiOrder(1.3), marks).graph == r.graph);
}

TEST_CASE("single-attribute graphs only gain same-type edges") {
  const auto g = Triangle(kP);
  const auto space = gcmi::GroupSpace::ForGraph(g);
  const std::vector<double> pmf(space.num_classes(), 1.0 / space.num_classes());
  gcmi::Rng rng(2);
  const auto r = gcmi::ApplyEdges(g, pmf, space, 20, rng, RenyiOrder(), {});
  CHECK_FALSE(gcmi::Assortativity(r.graph).gamma_att.has_value());
  for (gcmi::NodeId v = 0; v < r.graph.num_nodes(); ++v) CHECK(r.graph.attribute(v) == kP);
}

TEST_CASE("the group space grows with the degrees") {
  gcmi::AttributedMultigraph g({kP, kM});
  g.AddEdge(0, 1);
  const auto space = gcmi::GroupSpace::ForGraph(g);
  std::vector<double> pmf(space.num_classes(), 0.0);
  pmf[EdgeClass{GroupIndex(0, kP), GroupIndex(0, kM)}.Index(space)] = 1.0;
  gcmi::Rng rng(3);
  const auto r = gcmi::ApplyEdges(g, pmf, space, 10, rng, RenyiOrder(), {});
  CHECK(r.graph.Multiplicity(0, 1) == 11);
  CHECK(r.space.k_max >= 10);
  CHECK(r.pmf.size() == r.space.num_classes());
  CHECK(std::accumulate(r.pmf.begin(), r.pmf.end(), 0.0) == doctest::Approx(1.0));

  std::vector<double> short_pmf(3, 1.0 / 3);
  CHECK(CodeOf([&] { gcmi::ApplyEdges(g, short_pmf, space, 1, rng, RenyiOrder(), {}); }) ==
        ErrorCode::kInvalidArgument);
  const gcmi::GroupSpace tiny{0};
  const auto big = Star(5);
  std::vector<double> tiny_pmf(tiny.num_classes(), 0.25);
  CHECK(CodeOf([&] { gcmi::ApplyEdges(big, tiny_pmf, tiny, 1, rng, RenyiOrder(), {}); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("logit CSV round trip") {
  TempDir dir;
  const auto g = SmallSbm(6);
  gcmi::SpsaConfig cfg;
  cfg.iterations = 5;
  cfg.seed = 1;
  const auto r = gcmi::Optimize(g, RenyiOrder(), cfg);
  gcmi::WriteLogitCsv(dir / "theta.csv", r);
  CHECK(gcmi::ReadPmfCsv(dir / "theta.csv") == r.Pmf());
  WriteFile(dir / "bad.csv", "class,prob\n0,0.5\n1,0.1\n2,0.1\n3,0.1\n");
  CHECK(CodeOf([&] { gcmi::ReadPmfCsv(dir / "bad.csv"); }) == ErrorCode::kNotNormalized);
}
