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

#include "assortativity.hpp"

#include <cmath>

#include "error.hpp"
#include "numeric.hpp"

namespace gcmi {

Coefficient DegreeAssortativity(const CellMatrix<double>& e,
                                std::span<const double> q) {
  CompensatedSum mean;
  for (std::size_t k = 0; k < q.size(); ++k) {
    mean.Add(static_cast<double>(k) * q[k]);
  }
  const double mu = mean.value();
  CompensatedSum var;
  for (std::size_t k = 0; k < q.size(); ++k) {
    const double d = static_cast<double>(k) - mu;
    var.Add(d * d * q[k]);
  }
  if (!(var.value() > 1e-14)) return std::nullopt;
  // sum_kk' k k' (e - q q') == sum_kk' (k - mu)(k' - mu) e, using the sum rules.
  CompensatedSum cov;
  e.ForEachNonzero([&](std::size_t r, std::size_t c, double v) {
    cov.Add((static_cast<double>(r) - mu) * (static_cast<double>(c) - mu) * v);
  });
  return cov.value() / var.value();
}

Coefficient DegreeAssortativity(const JointRemainingDegreeDistribution& e,
                                const RemainingDegreeDistribution& q) {
  return DegreeAssortativity(e.e, q.q);
}

Coefficient AttributeAssortativity(const AttributeDistribution& m) {
  const double same = m.joint[0][0] + m.joint[1][1];
  const double chance =
      m.marginal[0] * m.marginal[0] + m.marginal[1] * m.marginal[1];
  const double denom = 1.0 - chance;
  if (!(denom > 1e-15)) return std::nullopt;
  return (same - chance) / denom;
}

AttributeDistribution AttributeDistributionOf(const NormalizedJdam& nj) {
  std::array<std::array<OrderFreeSum, 2>, 2> joint;
  nj.p4.ForEachNonzero([&](std::size_t r, std::size_t c, double v) {
    joint[r % 2][c % 2].Add(v);
  });
  AttributeDistribution m;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) m.joint[a][b] = joint[a][b].value();
    m.marginal[a] = m.joint[a][0] + m.joint[a][1];
  }
  return m;
}

AssortativityReport Assortativity(const AttributedMultigraph& g) {
  const auto e = ComputeJointRemainingDegree(g);
  return {DegreeAssortativity(e, MarginalOf(e)),
          AttributeAssortativity(ComputeAttributeDistributions(g))};
}

double PearsonR(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    Fail(ErrorCode::kDegenerateSeries, "need two equal-length series, n >= 2");
  }
  const double n = static_cast<double>(x.size());
  const double mx = Sum(x) / n;
  const double my = Sum(y) / n;
  CompensatedSum sxy, sxx, syy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy.Add(dx * dy);
    sxx.Add(dx * dx);
    syy.Add(dy * dy);
  }
  if (!(sxx.value() > 0.0) || !(syy.value() > 0.0)) {
    Fail(ErrorCode::kDegenerateSeries, "zero variance");
  }
  const double r = sxy.value() / std::sqrt(sxx.value() * syy.value());
  return std::fmax(-1.0, std::fmin(1.0, r));
}

std::optional<double> KendallTau(std::span<const double> x,
                                 std::span<const double> y) {
  if (x.size() != y.size()) {
    Fail(ErrorCode::kDegenerateSeries, "series length mismatch");
  }
  if (x.size() < 2) return std::nullopt;
  long long concordant = 0, discordant = 0, ties_x = 0, ties_y = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double dx = x[j] - x[i];
      const double dy = y[j] - y[i];
      if (dx == 0.0 && dy == 0.0) continue;
      if (dx == 0.0) {
        ++ties_x;
      } else if (dy == 0.0) {
        ++ties_y;
      } else if ((dx > 0) == (dy > 0)) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  const double n1 = static_cast<double>(concordant + discordant + ties_x);
  const double n2 = static_cast<double>(concordant + discordant + ties_y);
  if (n1 == 0.0 || n2 == 0.0) return 0.0;
  return static_cast<double>(concordant - discordant) / std::sqrt(n1 * n2);
}

}  // namespace gcmi
