// Copyright 2026 The ndwu-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ndwu {

enum class ErrorKind {
  InvalidInput,
  NegativeProbability,
  NotNormalized,
  SignalingDetected,
  ZeroWeightCondition,
  DimensionMismatch,
  InvalidDistribution,
  InvalidTransferMatrix,
  InvalidDimension,
  InvalidState,
  InvalidBasis,
  InvalidObservable,
  InvalidFamilyPoint,
  BadWeights,
  InvalidGrid,
  NoSignChange,
  ParseError,
  AssertionFailed,
  MismatchWithPaper,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NegativeProbability: return "NegativeProbability";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::SignalingDetected: return "SignalingDetected";
    case ErrorKind::ZeroWeightCondition: return "ZeroWeightCondition";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidDistribution: return "InvalidDistribution";
    case ErrorKind::InvalidTransferMatrix: return "InvalidTransferMatrix";
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::InvalidBasis: return "InvalidBasis";
    case ErrorKind::InvalidObservable: return "InvalidObservable";
    case ErrorKind::InvalidFamilyPoint: return "InvalidFamilyPoint";
    case ErrorKind::BadWeights: return "BadWeights";
    case ErrorKind::InvalidGrid: return "InvalidGrid";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::AssertionFailed: return "AssertionFailed";
    case ErrorKind::MismatchWithPaper: return "MismatchWithPaper";
  }
  return "Unknown";
}

/// Every failure raised by the library. `what()` is prefixed with the kind
/// name so that CLI output stays greppable.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ndwu
