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

#ifndef GCMI_CORE_ASSORTATIVITY_HPP_
#define GCMI_CORE_ASSORTATIVITY_HPP_

#include <optional>
#include <span>
#include <vector>

#include "distributions.hpp"

namespace gcmi {

// std::nullopt is the Undefined result (zero variance); never an exception.
using Coefficient = std::optional<double>;

struct AssortativityReport {
  Coefficient gamma_deg;
  Coefficient gamma_att;
};

// Newman degree assortativity over remaining degrees.
Coefficient DegreeAssortativity(const JointRemainingDegreeDistribution& e,
                                const RemainingDegreeDistribution& q);
Coefficient DegreeAssortativity(const CellMatrix<double>& e,
                                std::span<const double> q);

Coefficient AttributeAssortativity(const AttributeDistribution& m);

// Attribute distributions recovered from a normalized JDAM.
AttributeDistribution AttributeDistributionOf(const NormalizedJdam& nj);

AssortativityReport Assortativity(const AttributedMultigraph& g);

// Product-moment correlation. Throws DegenerateSeries on length < 2,
// length mismatch or zero variance.
double PearsonR(std::span<const double> x, std::span<const double> y);

// Kendall tau-b of y against x. nullopt when fewer than two points; 0 when
// either series is constant.
std::optional<double> KendallTau(std::span<const double> x,
                                 std::span<const double> y);

}  // namespace gcmi

#endif  // GCMI_CORE_ASSORTATIVITY_HPP_
