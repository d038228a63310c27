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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rmt {

enum class Command { None, Generate, AnalyzeCov, AnalyzeLagged, TheoryMp, TheoryLagged, Compare };

enum class SignalKind { Wgn, Narrowband, NcOfdm };

/// Parsed command line. Fields that a subcommand does not use stay at their
/// defaults; validate_config rejects combinations that make no sense.
struct RunConfig {
  Command command = Command::None;

  std::string input;
  std::string output;
  std::string projections;  // analyze lagged; empty: "<output stem>_proj.csv"

  // generate
  SignalKind signal = SignalKind::Wgn;
  std::uint64_t seed = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::optional<double> snr_db;
  bool freq_domain = false;
  double variance = 1.0;
  std::optional<double> carrier;
  std::optional<double> band;
  std::optional<double> symbol_rate;

  // analyze
  bool standardize = true;
  std::optional<std::size_t> bins;
  std::optional<double> bandwidth;
  std::optional<double> c_override;
  long long tau = 1;

  // theory
  double c = 0.0;
  double q = 0.0;
  double epsilon = 1e-3;

  // compare
  std::string empirical;
  std::string theory;
  std::string empirical_column;  // empty: "kde" when present, else the first column
  std::string theory_column;     // empty: first column
};

/// Throws rmt::Error(InvalidConfig) describing the first inconsistency.
void validate_config(const RunConfig& cfg);

/// Runs a validated configuration. Human-readable summaries go to `out`.
void execute(const RunConfig& cfg, std::ostream& out);

/// Full front end: parse, validate, execute. Returns 0 on success, 1 for
/// usage / validation / I/O errors, 2 for numerical failures. Diagnostics are
/// a single "rmt: ..." line on `err` (followed by usage text for parse errors).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rmt
