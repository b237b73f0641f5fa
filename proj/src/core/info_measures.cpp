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
#include <string>

#include "assortativity.hpp"
#include "error.hpp"
#include "numeric.hpp"

namespace gcmi {

namespace {

constexpr double kNormTolerance = 1e-9;

void RequireNormalized(std::span<const double> dist) {
  CompensatedSum s;
  for (double p : dist) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      Fail(ErrorCode::kNotNormalized, "negative or non-finite probability");
    }
    s.Add(p);
  }
  if (std::fabs(s.value() - 1.0) > kNormTolerance) {
    Fail(ErrorCode::kNotNormalized,
         "probabilities sum to " + std::to_string(s.value()));
  }
}

double PowerSum(std::span<const double> dist, double alpha) {
  OrderFreeSum s;
  for (double p : dist) {
    if (p > 0.0) s.Add(std::pow(p, alpha));
  }
  return s.value();
}

double PowerSum(const CellMatrix<double>& m, double alpha) {
  OrderFreeSum s;
  m.ForEachNonzero([&](std::size_t, std::size_t, double p) {
    if (p > 0.0) s.Add(std::pow(p, alpha));
  });
  return s.value();
}

double RenyiScale(double alpha) { return 1.0 / (1.0 - alpha); }

void CheckSumRules(const JointRemainingDegreeDistribution& e,
                   const RemainingDegreeDistribution& q) {
  if (e.e.dim() != q.q.size()) {
    Fail(ErrorCode::kSumRuleViolation, "dimension mismatch between e and q");
  }
  const auto rows = MarginalOf(e);
  CompensatedSum total;
  for (std::size_t k = 0; k < q.q.size(); ++k) {
    if (std::fabs(rows.q[k] - q.q[k]) > kNormTolerance) {
      Fail(ErrorCode::kSumRuleViolation,
           "row " + std::to_string(k) + " of e does not sum to q_k");
    }
    total.Add(rows.q[k]);
  }
  if (std::fabs(total.value() - 1.0) > kNormTolerance) {
    Fail(ErrorCode::kSumRuleViolation, "e does not sum to 1");
  }
}

double DegreeMiUnchecked(const CellMatrix<double>& e, std::span<const double> q,
                         RenyiOrder alpha) {
  if (alpha.is_shannon()) {
    OrderFreeSum s;
    e.ForEachNonzero([&](std::size_t k, std::size_t kp, double p) {
      s.Add(p * std::log2(p / (q[k] * q[kp])));
    });
    return s.value();
  }
  const double a = alpha.value();
  const double sq = PowerSum(q, a);
  return RenyiScale(a) * std::log2(sq * sq / PowerSum(e, a));
}

double ConditionalEntropyUnchecked(const CellMatrix<double>& e,
                                   std::span<const double> q, RenyiOrder alpha) {
  if (alpha.is_shannon()) {
    OrderFreeSum s;
    e.ForEachNonzero([&](std::size_t, std::size_t kp, double p) {
      s.Add(p * std::log2(q[kp] / p));
    });
    return s.value();
  }
  const double a = alpha.value();
  return RenyiScale(a) * std::log2(PowerSum(e, a) / PowerSum(q, a));
}

}  // namespace

RenyiOrder::RenyiOrder(double alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha) || !(alpha > 0.0)) {
    Fail(ErrorCode::kInvalidArgument,
         "Renyi order must be finite and > 0, got " + std::to_string(alpha));
  }
}

double ShannonEntropy(std::span<const double> dist) {
  RequireNormalized(dist);
  OrderFreeSum s;
  for (double p : dist) {
    if (p > 0.0) s.Add(-p * std::log2(p));
  }
  return s.value();
}

double RenyiEntropy(std::span<const double> dist, RenyiOrder alpha) {
  if (alpha.is_shannon()) return ShannonEntropy(dist);
  RequireNormalized(dist);
  return RenyiScale(alpha.value()) * std::log2(PowerSum(dist, alpha.value()));
}

double DegreeMutualInformation(const JointRemainingDegreeDistribution& e,
                               const RemainingDegreeDistribution& q,
                               RenyiOrder alpha) {
  CheckSumRules(e, q);
  return DegreeMiUnchecked(e.e, q.q, alpha);
}

double ConditionalEntropy(const JointRemainingDegreeDistribution& e,
                          const RemainingDegreeDistribution& q,
                          RenyiOrder alpha) {
  CheckSumRules(e, q);
  return ConditionalEntropyUnchecked(e.e, q.q, alpha);
}

double DegreeMutualInformation(const NormalizedJdam& nj, RenyiOrder alpha) {
  return DegreeMiUnchecked(nj.degree_joint, nj.degree_marginal, alpha);
}

double JointMutualInformation(const NormalizedJdam& nj, RenyiOrder alpha) {
  if (nj.group_marginal.empty()) Fail(ErrorCode::kEmptyJdam, "empty JDAM");
  const auto& pg = nj.group_marginal;
  if (alpha.is_shannon()) {
    OrderFreeSum s;
    nj.p4.ForEachNonzero([&](std::size_t g, std::size_t gp, double p) {
      s.Add(p * std::log2(p / (pg[g] * pg[gp])));
    });
    return s.value();
  }
  const double a = alpha.value();
  const double sg = PowerSum(pg, a);
  return RenyiScale(a) * std::log2(sg * sg / PowerSum(nj.p4, a));
}

double AttributeConditionalMi(const NormalizedJdam& nj, RenyiOrder alpha) {
  return JointMutualInformation(nj, alpha) - DegreeMutualInformation(nj, alpha);
}

double AttributeConditionalMiShannonDirect(const NormalizedJdam& nj) {
  if (nj.group_marginal.empty()) Fail(ErrorCode::kEmptyJdam, "empty JDAM");
  const auto& pg = nj.group_marginal;
  const auto& q = nj.degree_marginal;
  OrderFreeSum s;
  nj.p4.ForEachNonzero([&](std::size_t g, std::size_t gp, double p) {
    const std::size_t k = g / 2, kp = gp / 2;
    const double e = nj.degree_joint.at(k, kp);
    s.Add(p * std::log2((q[k] * q[kp] * p) / (e * pg[g] * pg[gp])));
  });
  return s.value();
}

MeasureReport MeasureJdam(const NormalizedJdam& nj, RenyiOrder alpha) {
  MeasureReport r;
  r.alpha = alpha.value();
  OrderFreeSum h;
  for (double p : nj.degree_marginal) {
    if (p > 0.0) h.Add(-p * std::log2(p));
  }
  r.shannon_entropy = h.value();
  // Adding 0.0 turns a negative zero into +0.
  r.degree_mi = DegreeMutualInformation(nj, alpha) + 0.0;
  r.joint_mi = JointMutualInformation(nj, alpha) + 0.0;
  r.delta_i = r.joint_mi - r.degree_mi + 0.0;
  r.gamma_deg = DegreeAssortativity(nj.degree_joint, nj.degree_marginal);
  r.gamma_att = AttributeAssortativity(AttributeDistributionOf(nj));
  return r;
}

MeasureReport MeasureGraph(const AttributedMultigraph& g, RenyiOrder alpha,
                           const DistributionOptions& opts) {
  return MeasureJdam(NormalizeJdam(BuildJdam(g, opts)), alpha);
}

}  // namespace gcmi
