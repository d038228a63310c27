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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rmt {

enum class ErrorCode {
  // linalg-core
  ZeroVarianceRow,
  NotPSD,
  DimensionMismatch,
  LagOutOfRange,
  NotStandardized,
  NotSymmetric,
  ConvergenceFailure,
  NonFiniteEntry,
  // rmt-theory
  InvalidRatio,
  DegenerateLeadingCoefficient,
  NoConvergence,
  BranchAmbiguity,
  NotNormalized,
  InvalidConfig,
  // spectral-estimation
  EmptySpectrum,
  BandwidthNonPositive,
  DegenerateSample,
  EmptyInput,
  // signal-synthesis
  AliasingConfig,
  EmptyOccupiedSet,
  NonPowerOfTwoLength,
  InsufficientSamples,
  // io-cli
  IoError,
  BadMagic,
  UnsupportedVersion,
  TruncatedPayload,
  BadCsv,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for failures of the numerics themselves (as opposed to bad input).
/// The CLI maps these to exit code 2.
bool is_numerical(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rmt
