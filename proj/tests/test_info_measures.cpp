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


#include "info_measures.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "test_util.hpp"

using gcmi::ErrorCode;
using gcmi::RenyiOrder;
using namespace testutil;

namespace {

gcmi::NormalizedJdam Nj(const gcmi::AttributedMultigraph& g) {
  return gcmi::NormalizeJdam(gcmi::BuildJdam(g));
}

// Normalized JDAM built directly from a joint over groups.
gcmi::NormalizedJdam FromGroupJoint(const std::vector<std::vector<double>>& p) {
  const std::size_t G = p.size();
  gcmi::NormalizedJdam nj{gcmi::CellMatrix<double>(G), std::vector<double>(G, 0.0),
                          std::vector<double>(G / 2, 0.0),
                          gcmi::CellMatrix<double>(G / 2)};
  for (std::size_t a = 0; a < G; ++a) {
    for (std::size_t b = 0; b < G; ++b) {
      nj.p4.Set(a, b, p[a][b]);
      nj.group_marginal[a] += p[a][b];
      nj.degree_marginal[a / 2] += p[a][b];
      nj.degree_joint.Add(a / 2, b / 2, p[a][b]);
    }
  }
  return nj;
}

}  // namespace

TEST_CASE("entropy examples") {
  const std::vector<double> half{0.5, 0.5}, point{1.0, 0.0}, quarter(4, 0.25);
  CHECK(gcmi::ShannonEntropy(half) == doctest::Approx(1.0));
  CHECK(gcmi::ShannonEntropy(point) == 0.0);
  CHECK(gcmi::ShannonEntropy(quarter) == doctest::Approx(2.0));
  for (double a : {0.5, 1.3, 2.0, 3.0}) {
    CHECK(gcmi::RenyiEntropy(quarter, RenyiOrder(a)) == doctest::Approx(2.0));
    CHECK(gcmi::RenyiEntropy(point, RenyiOrder(a)) == doctest::Approx(0.0));
  }
  const std::vector<double> skew{0.75, 0.25};
  CHECK(gcmi::RenyiEntropy(skew, RenyiOrder(2.0)) ==
        doctest::Approx(-std::log2(0.625)));
  CHECK(CodeOf([] { RenyiOrder{0.0}; }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { RenyiOrder{-1.0}; }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { RenyiOrder{INFINITY}; }) == ErrorCode::kInvalidArgument);
  const std::vector<double> bad{0.5, 0.4};
  CHECK(CodeOf([&] { gcmi::ShannonEntropy(bad); }) == ErrorCode::kNotNormalized);
}

TEST_CASE("Renyi entropy is continuous at order one") {
  const std::vector<double> p{0.1, 0.2, 0.3, 0.4};
  const double h = gcmi::ShannonEntropy(p);
  CHECK(std::fabs(gcmi::RenyiEntropy(p, RenyiOrder(1 - 1e-3)) - h) < 1e-2);
  CHECK(std::fabs(gcmi::RenyiEntropy(p, RenyiOrder(1 + 1e-3)) - h) < 1e-2);
}

TEST_CASE("mutual information examples") {
  // Path graph: remaining degrees always differ, one bit of degree MI.
  const auto nj = Nj(Path3(kP, kP));
  CHECK(gcmi::DegreeMutualInformation(nj, RenyiOrder(1.0)) == doctest::Approx(1.0));
  CHECK(gcmi::DegreeMutualInformation(nj, RenyiOrder(2.0)) == doctest::Approx(1.0));
  // Attributes are a function of degree here, so nothing is added.
  CHECK(std::fabs(gcmi::AttributeConditionalMi(Nj(Path3(kM, kP)), RenyiOrder(1.3))) < 1e-12);
  // Triangle: a point mass, no information.
  CHECK(gcmi::DegreeMutualInformation(Nj(Triangle()), RenyiOrder(1.0)) == 0.0);

  // Two disjoint edges with opposite-sign endpoints vs same-sign: all degrees
  // are equal, so the attribute term is the full bit.
  gcmi::AttributedMultigraph g({kP, kM, kP, kM});
  g.AddEdge(0, 1);
  g.AddEdge(2, 3);
  for (double a : {0.5, 1.0, 1.3, 2.0}) {
    CHECK(gcmi::AttributeConditionalMi(Nj(g), RenyiOrder(a)) == doctest::Approx(1.0));
  }
}

TEST_CASE("conditional entropy and MI forms agree on 1000 random graphs") {
  gcmi::Rng rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = oracle::RandomMultigraph(rng, 2 + rng.UniformInt(12),
                                            1 + rng.UniformInt(40));
    const auto e = gcmi::ComputeJointRemainingDegree(g);
    const auto q = gcmi::ComputeRemainingDegreeDistribution(
        gcmi::ComputeDegreeDistribution(g));
    const auto nj = Nj(g);
    for (double a : {0.6, 1.0, 1.3, 2.0}) {
      const RenyiOrder alpha(a);
      const double direct = gcmi::DegreeMutualInformation(e, q, alpha);
      const double diff =
          gcmi::RenyiEntropy(q.q, alpha) - gcmi::ConditionalEntropy(e, q, alpha);
      CHECK(std::fabs(direct - diff) < 1e-9);
      CHECK(std::fabs(direct - gcmi::DegreeMutualInformation(nj, alpha)) < 1e-9);
    }
    const double shannon = gcmi::AttributeConditionalMi(nj, RenyiOrder(1.0));
    CHECK(std::fabs(shannon - gcmi::AttributeConditionalMiShannonDirect(nj)) < 1e-9);
    CHECK(shannon >= -1e-12);
    CHECK(gcmi::DegreeMutualInformation(nj, RenyiOrder(1.0)) >= -1e-12);
  }
}

TEST_CASE("measures match the half-edge oracle") {
  gcmi::Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = oracle::RandomMultigraph(rng, 2 + rng.UniformInt(12),
                                            1 + rng.UniformInt(40));
    const auto d = oracle::Empirical(g);
    for (double a : {0.5, 1.0, 1.3, 2.0}) {
      const auto r = gcmi::MeasureGraph(g, RenyiOrder(a));
      CHECK(std::fabs(r.degree_mi - static_cast<double>(oracle::DegreeMi(d, a))) < 1e-9);
      CHECK(std::fabs(r.joint_mi - static_cast<double>(oracle::JointMi(d, a))) < 1e-9);
      CHECK(std::fabs(r.delta_i - static_cast<double>(oracle::DeltaI(g, a))) < 1e-9);
    }
  }
}

TEST_CASE("product distributions carry no information") {
  const std::vector<double> m{0.1, 0.2, 0.3, 0.4};
  std::vector<std::vector<double>> p(4, std::vector<double>(4));
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) p[a][b] = m[a] * m[b];
  }
  const auto nj = FromGroupJoint(p);
  for (double a : {0.5, 1.3, 2.0}) {
    CHECK(std::fabs(gcmi::JointMutualInformation(nj, RenyiOrder(a))) < 1e-12);
    CHECK(std::fabs(gcmi::DegreeMutualInformation(nj, RenyiOrder(a))) < 1e-12);
  }
}

TEST_CASE("attribute-independent JDAM gives zero conditional MI") {
  // p(k,c,k',c') = e(k,k') a(c) a(c') with attributes independent of degree.
  const std::vector<std::vector<double>> e{{0.1, 0.25}, {0.25, 0.4}};
  const double att[2] = {0.3, 0.7};
  std::vector<std::vector<double>> p(4, std::vector<double>(4));
  for (int g = 0; g < 4; ++g) {
    for (int gp = 0; gp < 4; ++gp) p[g][gp] = e[g / 2][gp / 2] * att[g % 2] * att[gp % 2];
  }
  const auto nj = FromGroupJoint(p);
  for (double a : {0.5, 1.0, 1.3, 2.0}) {
    CHECK(std::fabs(gcmi::AttributeConditionalMi(nj, RenyiOrder(a))) < 1e-12);
  }
}

TEST_CASE("Renyi MI is continuous at order one") {
  gcmi::Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto nj = Nj(oracle::RandomMultigraph(rng, 6, 15));
    const double at1 = gcmi::AttributeConditionalMi(nj, RenyiOrder(1.0));
    CHECK(std::fabs(gcmi::AttributeConditionalMi(nj, RenyiOrder(1 - 1e-3)) - at1) < 1e-2);
    CHECK(std::fabs(gcmi::AttributeConditionalMi(nj, RenyiOrder(1 + 1e-3)) - at1) < 1e-2);
  }
}

TEST_CASE("measures are exactly invariant under relabeling and attribute swap") {
  gcmi::Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::RandomMultigraph(rng, 3 + rng.UniformInt(12),
                                            1 + rng.UniformInt(40));
    const auto perm = rng.Permutation(static_cast<std::uint32_t>(g.num_nodes()));
    for (double a : {0.7, 1.0, 1.3, 2.0}) {
      const auto base = gcmi::MeasureGraph(g, RenyiOrder(a));
      const auto relabeled = gcmi::MeasureGraph(g.Relabeled(perm), RenyiOrder(a));
      const auto swapped = gcmi::MeasureGraph(g.AttributesSwapped(), RenyiOrder(a));
      CHECK(base.delta_i == relabeled.delta_i);
      CHECK(base.joint_mi == relabeled.joint_mi);
      CHECK(base.delta_i == swapped.delta_i);
      CHECK(base.degree_mi == swapped.degree_mi);
    }
  }
}

TEST_CASE("scaling JDAM counts leaves every measure unchanged") {
  gcmi::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = oracle::RandomMultigraph(rng, 8, 20);
    const auto j = gcmi::BuildJdam(g);
    gcmi::Jdam twice{gcmi::CellMatrix<std::uint64_t>(j.counts.dim()), 2 * j.total};
    j.counts.ForEachNonzero([&](std::size_t a, std::size_t b, std::uint64_t w) {
      twice.counts.Set(a, b, 2 * w);
    });
    const auto x = gcmi::NormalizeJdam(j), y = gcmi::NormalizeJdam(twice);
    for (double a : {0.5, 1.3, 2.0}) {
      CHECK(gcmi::AttributeConditionalMi(x, RenyiOrder(a)) ==
            gcmi::AttributeConditionalMi(y, RenyiOrder(a)));
    }
  }
}

TEST_CASE("a disjoint copy of a graph has the same measures") {
  gcmi::Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = oracle::RandomMultigraph(rng, 8, 20);
    gcmi::AttributedMultigraph copy(g.attributes());
    for (gcmi::NodeId v = 0; v < g.num_nodes(); ++v) copy.AddNode(g.attribute(v));
    const auto n = static_cast<gcmi::NodeId>(g.num_nodes());
    g.ForEachEdge([&](gcmi::NodeId u, gcmi::NodeId v, std::uint64_t w) {
      copy.AddEdge(u, v, w);
      copy.AddEdge(u + n, v + n, w);
    });
    for (double a : {0.5, 1.3, 2.0}) {
      const auto x = gcmi::MeasureGraph(g, RenyiOrder(a));
      const auto y = gcmi::MeasureGraph(copy, RenyiOrder(a));
      CHECK(std::fabs(x.delta_i - y.delta_i) < 1e-12);
      CHECK(std::fabs(x.degree_mi - y.degree_mi) < 1e-12);
    }
  }
}

TEST_CASE("measure report fields") {
  const auto r = gcmi::MeasureGraph(Star(4, kP, kM), RenyiOrder(1.3));
  CHECK(r.alpha == 1.3);
  CHECK(r.shannon_entropy == doctest::Approx(1.0));
  REQUIRE(r.gamma_att.has_value());
  CHECK(*r.gamma_att == doctest::Approx(-1.0));
  CHECK((!r.gamma_deg || std::fabs(*r.gamma_deg) <= 1.0 + 1e-12));
  CHECK(CodeOf([] { gcmi::MeasureGraph(gcmi::AttributedMultigraph({kP, kM}), RenyiOrder()); }) ==
        ErrorCode::kEmptyGraph);
}

TEST_CASE("constant attributes add nothing to the degree term") {
  gcmi::Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = oracle::RandomMultigraph(rng, 8, 16);
    gcmi::AttributedMultigraph plus(std::vector<gcmi::Attribute>(g.num_nodes(), kP));
    g.ForEachEdge([&](gcmi::NodeId u, gcmi::NodeId v, std::uint64_t w) { plus.AddEdge(u, v, w); });
    for (double a : {0.5, 1.0, 1.3}) {
      const auto r = gcmi::MeasureGraph(plus, RenyiOrder(a));
      CHECK(std::fabs(r.joint_mi - r.degree_mi) < 1e-12);
    }
  }
  const auto tri = gcmi::MeasureGraph(Triangle(kP), RenyiOrder(1.3));
  CHECK(tri.degree_mi == 0.0);
  CHECK(tri.joint_mi == 0.0);
  CHECK(tri.delta_i == 0.0);
}

TEST_CASE("joint MI and conditional entropy examples") {
  const auto r = gcmi::MeasureGraph(Path3(kM, kP), RenyiOrder(1.0));
  CHECK(r.joint_mi == doctest::Approx(1.0));
  CHECK(r.degree_mi == doctest::Approx(1.0));
  CHECK(std::fabs(r.delta_i - (r.joint_mi - r.degree_mi)) < 1e-12);

  const auto p3 = Path3(kP, kP);
  const auto e = gcmi::ComputeJointRemainingDegree(p3);
  const auto q = gcmi::ComputeRemainingDegreeDistribution(gcmi::ComputeDegreeDistribution(p3));
  CHECK(std::fabs(gcmi::ConditionalEntropy(e, q, RenyiOrder(1.0))) < 1e-12);
  const auto te = gcmi::ComputeJointRemainingDegree(Triangle());
  const auto tq = gcmi::ComputeRemainingDegreeDistribution(gcmi::ComputeDegreeDistribution(Triangle()));
  CHECK(gcmi::ConditionalEntropy(te, tq, RenyiOrder(1.0)) == 0.0);

  // Independent e = q x q: the equivocation is the marginal entropy.
  gcmi::JointRemainingDegreeDistribution ind{gcmi::CellMatrix<double>(2)};
  gcmi::RemainingDegreeDistribution iq{{0.25, 0.75}};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) ind.e.Set(a, b, iq.q[a] * iq.q[b]);
  }
  CHECK(gcmi::ConditionalEntropy(ind, iq, RenyiOrder(1.0)) ==
        doctest::Approx(gcmi::ShannonEntropy(iq.q)));
  CHECK(std::fabs(gcmi::DegreeMutualInformation(ind, iq, RenyiOrder(2.0))) < 1e-12);
  gcmi::RemainingDegreeDistribution wrong{{0.5, 0.5}};
  CHECK(CodeOf([&] { gcmi::DegreeMutualInformation(ind, wrong, RenyiOrder(1.0)); }) ==
        ErrorCode::kSumRuleViolation);
}

TEST_CASE("two attribute-pure stars joined at the hubs match the oracle") {
  gcmi::AttributedMultigraph g({kP, kP, kP, kM, kM, kM});
  g.AddEdge(0, 1);
  g.AddEdge(0, 2);
  g.AddEdge(3, 4);
  g.AddEdge(3, 5);
  g.AddEdge(0, 3);
  for (double a : {0.5, 1.0, 1.3, 2.0}) {
    CHECK(std::fabs(gcmi::MeasureGraph(g, RenyiOrder(a)).delta_i -
                    static_cast<double>(oracle::DeltaI(g, a))) < 1e-9);
  }
}
