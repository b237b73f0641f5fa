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

#ifndef GCMI_CORE_RNG_HPP_
#define GCMI_CORE_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace gcmi {

// Portable random stream. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; every distribution below is implemented
// here instead of using <random> distributions, whose algorithms are
// implementation-defined. Same seed => same draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer on [0, n). n must be > 0. Rejection sampling, unbiased.
  std::uint64_t UniformInt(std::uint64_t n);

  bool Bernoulli(double p) { return Uniform() < p; }

  // +1 or -1 with probability 1/2 each.
  int Sign() { return (engine_() >> 63) ? 1 : -1; }

  // Standard normal via the Marsaglia polar method.
  double Normal();

  // Uniformly random permutation of 0..n-1 (Fisher-Yates).
  std::vector<std::uint32_t> Permutation(std::uint32_t n);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// SplitMix64 finalizer; used to derive independent per-item seeds.
std::uint64_t Mix64(std::uint64_t x);

// seed = hash(master_seed, index). Stable across releases.
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t index);

}  // namespace gcmi

#endif  // GCMI_CORE_RNG_HPP_
