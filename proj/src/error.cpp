/*
Copyright 2026 The Blaschke Toolkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "blaschke/error.hpp"

namespace blaschke {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kPoleProximity: return "PoleProximity";
    case ErrorCode::kSolverFailure: return "SolverFailure";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kNoInteriorFixedPoint: return "NoInteriorFixedPoint";
    case ErrorCode::kCountMismatch: return "CountMismatch";
    case ErrorCode::kVerificationFailure: return "VerificationFailure";
    case ErrorCode::kEigensolverFailure: return "EigensolverFailure";
    case ErrorCode::kDegenerateEnvelope: return "DegenerateEnvelope";
    case ErrorCode::kTrackingFailure: return "TrackingFailure";
    case ErrorCode::kNonBijective: return "NonBijective";
    case ErrorCode::kGeometryFailure: return "GeometryFailure";
  }
  return "Unknown";
}

}  // namespace blaschke
