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

// Shannon and Renyi entropies and mutual informations over remaining-degree
// and degree-attribute distributions. All logarithms are base 2. Zero cells
// contribute nothing to any sum. Order 1 dispatches to the Shannon formulas.

#ifndef GCMI_CORE_INFO_MEASURES_HPP_
#define GCMI_CORE_INFO_MEASURES_HPP_

#include <optional>
#include <span>

#include "attributed_graph.hpp"
#include "distributions.hpp"

namespace gcmi {

class RenyiOrder {
 public:
  static constexpr double kDefault = 1.3;

  // Throws InvalidArgument unless alpha is finite and > 0.
  explicit RenyiOrder(double alpha = kDefault);

  double value() const { return alpha_; }
  bool is_shannon() const { return alpha_ == 1.0; }

 private:
  double alpha_;
};

double ShannonEntropy(std::span<const double> dist);
double RenyiEntropy(std::span<const double> dist, RenyiOrder alpha);

// I_alpha(q; q'). Checks the sum rules of e against q (1e-9).
double DegreeMutualInformation(const JointRemainingDegreeDistribution& e,
                               const RemainingDegreeDistribution& q,
                               RenyiOrder alpha);

// H_alpha(q | q').
double ConditionalEntropy(const JointRemainingDegreeDistribution& e,
                          const RemainingDegreeDistribution& q,
                          RenyiOrder alpha);

// I_alpha(q; q') from the degree marginals of a normalized JDAM.
double DegreeMutualInformation(const NormalizedJdam& nj, RenyiOrder alpha);

// I_alpha(q, m; q', m').
double JointMutualInformation(const NormalizedJdam& nj, RenyiOrder alpha);

// I_alpha = I_alpha(q, m; q', m') - I_alpha(q; q').
double AttributeConditionalMi(const NormalizedJdam& nj, RenyiOrder alpha);

// Shannon I as the single sum
//   sum p4 log2( q_k q_k' p4 / (e_kk' p(k,c) p(k',c')) ).
double AttributeConditionalMiShannonDirect(const NormalizedJdam& nj);

struct MeasureReport {
  double alpha = RenyiOrder::kDefault;
  double shannon_entropy = 0.0;  // H(q), bits
  double degree_mi = 0.0;
  double joint_mi = 0.0;
  double delta_i = 0.0;          // attribute conditional MI
  std::optional<double> gamma_deg;
  std::optional<double> gamma_att;
};

// Builds the JDAM once and derives every measure from it.
MeasureReport MeasureGraph(const AttributedMultigraph& g, RenyiOrder alpha,
                           const DistributionOptions& opts = {});
MeasureReport MeasureJdam(const NormalizedJdam& nj, RenyiOrder alpha);

}  // namespace gcmi

#endif  // GCMI_CORE_INFO_MEASURES_HPP_
