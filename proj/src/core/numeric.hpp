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

#ifndef GCMI_CORE_NUMERIC_HPP_
#define GCMI_CORE_NUMERIC_HPP_

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace gcmi {

// Neumaier compensated summation.
class CompensatedSum {
 public:
  void Add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) {
    Add(x);
    return *this;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

inline double Sum(std::span<const double> xs) {
  CompensatedSum s;
  for (double x : xs) s.Add(x);
  return s.value();
}

// Collects terms and sums them in ascending order. The result depends only on
// the multiset of terms, so reductions are exactly invariant under any
// reordering of the cells they come from.
class OrderFreeSum {
 public:
  void Add(double x) { terms_.push_back(x); }
  double value() {
    std::sort(terms_.begin(), terms_.end());
    CompensatedSum s;
    for (double x : terms_) s.Add(x);
    return s.value();
  }

 private:
  std::vector<double> terms_;
};

}  // namespace gcmi

#endif  // GCMI_CORE_NUMERIC_HPP_
