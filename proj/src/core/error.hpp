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

#ifndef GCMI_CORE_ERROR_HPP_
#define GCMI_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace gcmi {

// Values are part of the C ABI (see gcmi.h); append only.
enum class ErrorCode : int {
  kOk = 0,
  kInvalidArgument = 1,
  kSelfLoopRejected = 2,
  kUnknownNode = 3,
  kParseError = 4,
  kMissingAttribute = 5,
  kEmptyGraph = 6,
  kDegenerateDistribution = 7,
  kEmptyJdam = 8,
  kNotNormalized = 9,
  kSumRuleViolation = 10,
  kDegenerateSeries = 11,
  kConnectivityRetriesExhausted = 12,
  kInvalidConfig = 13,
  kNonFiniteTheta = 14,
  kEmptyGroup = 15,
  kNegativeCell = 16,
  kExhaustedClasses = 17,
  kTooFewValidReplicates = 18,
  kIoError = 19,
  kInternal = 20,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(ErrorCodeName(code)) + ": " + what);
}

}  // namespace gcmi

#endif  // GCMI_CORE_ERROR_HPP_
