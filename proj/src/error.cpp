// Copyright 2026 The QRSS Authors
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
#include "qrss/error.h"

namespace qrss {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedMatrix: return "MalformedMatrix";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ControlEqualsTarget: return "ControlEqualsTarget";
    case ErrorCode::DuplicateQubit: return "DuplicateQubit";
    case ErrorCode::NotDualContained: return "NotDualContained";
    case ErrorCode::KNotPowerOfTwo: return "KNotPowerOfTwo";
    case ErrorCode::NotAuthorized: return "NotAuthorized";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotABit: return "NotABit";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::InsufficientShares: return "InsufficientShares";
    case ErrorCode::GammaOutOfRange: return "GammaOutOfRange";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::NoCloningViolation: return "NoCloningViolation";
    case ErrorCode::IncompleteTranscript: return "IncompleteTranscript";
    case ErrorCode::PreferenceViolated: return "PreferenceViolated";
  }
  return "Unknown";
}

}  // namespace qrss
