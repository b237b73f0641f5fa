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

#include "error.hpp"

namespace gcmi {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kSelfLoopRejected: return "SelfLoopRejected";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kMissingAttribute: return "MissingAttribute";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kDegenerateDistribution: return "DegenerateDistribution";
    case ErrorCode::kEmptyJdam: return "EmptyJdam";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kSumRuleViolation: return "SumRuleViolation";
    case ErrorCode::kDegenerateSeries: return "DegenerateSeries";
    case ErrorCode::kConnectivityRetriesExhausted:
      return "ConnectivityRetriesExhausted";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kNonFiniteTheta: return "NonFiniteTheta";
    case ErrorCode::kEmptyGroup: return "EmptyGroup";
    case ErrorCode::kNegativeCell: return "NegativeCell";
    case ErrorCode::kExhaustedClasses: return "ExhaustedClasses";
    case ErrorCode::kTooFewValidReplicates: return "TooFewValidReplicates";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace gcmi
