// rmt - random matrix spectra of signal-capture data
// Copyright (C) 2026 The rmt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "rmt/error.hpp"

namespace rmt {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroVarianceRow: return "ZeroVarianceRow";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::LagOutOfRange: return "LagOutOfRange";
    case ErrorCode::NotStandardized: return "NotStandardized";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::InvalidRatio: return "InvalidRatio";
    case ErrorCode::DegenerateLeadingCoefficient: return "DegenerateLeadingCoefficient";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::BranchAmbiguity: return "BranchAmbiguity";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::EmptySpectrum: return "EmptySpectrum";
    case ErrorCode::BandwidthNonPositive: return "BandwidthNonPositive";
    case ErrorCode::DegenerateSample: return "DegenerateSample";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::AliasingConfig: return "AliasingConfig";
    case ErrorCode::EmptyOccupiedSet: return "EmptyOccupiedSet";
    case ErrorCode::NonPowerOfTwoLength: return "NonPowerOfTwoLength";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::TruncatedPayload: return "TruncatedPayload";
    case ErrorCode::BadCsv: return "BadCsv";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ConvergenceFailure:
    case ErrorCode::NoConvergence:
    case ErrorCode::BranchAmbiguity:
    case ErrorCode::NotPSD:
      return true;
    default:
      return false;
  }
}

}  // namespace rmt
