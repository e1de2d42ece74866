// Copyright 2026 The aqec Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "aqec/serialize.hpp"
#include "aqec/worst_fidelity.hpp"

namespace aqec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericalFailure = 3;

/// Closed grid start, start + step, ..., up to stop.
std::vector<double> gamma_grid(double start, double stop, double step);

struct SweepConfig {
  std::string curves = "ad+identity,leung41+leung,leung41+transpose,leung41+fletcher,five513+rperf";
  double gamma_start = 0.0;
  double gamma_stop = 0.5;
  double gamma_step = 0.01;
  std::uint64_t seed = 0;
  std::size_t samples = 100000;
  Index example5_dim = 3;
  Index example5_ambient = 4;
  std::string code_file;  // for custom+<recovery> curves
  std::string out;

  std::vector<std::string> curve_list() const;
  void validate() const;
  Json to_json() const;
};

struct SweepRow {
  double gamma = 0;
  std::string curve;
  double f2_worst = 0;
  double eta = 0;
  std::string method;
  std::size_t samples = 0;  // 0 means exact
  std::uint64_t seed = 0;
};

/// Curve names are "<model>+<recovery>" with models ad, leung41, five513,
/// example5, custom and recoveries transpose, rperf, identity, leung,
/// fletcher. Rows come back sorted by (curve, gamma).
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// One worst-case evaluation, as used by run_sweep.
SweepRow evaluate_curve(const SweepConfig& config, const std::string& curve, double gamma);

void write_sweep_csv(std::ostream& out, const SweepConfig& config,
                     const std::vector<SweepRow>& rows);

struct SearchConfig {
  int qubits = 4;
  Index code_dim = 2;
  std::size_t codes = 500;
  double gamma_start = 0.0;
  double gamma_stop = 0.5;
  double gamma_step = 0.01;
  std::uint64_t seed = 0;
  std::string metric = "min";  // "min" over the grid or "at-gamma"
  double metric_gamma = 0.4;
  std::size_t samples = 20000;
  std::string out;
  std::string best_out;

  void validate() const;
  Json to_json() const;
};

struct SearchRow {
  std::size_t code_index = 0;
  std::uint64_t code_seed = 0;
  double gamma = 0;
  double f2_worst = 0;
  double eta = 0;
  std::string method;
};

struct SearchResult {
  std::vector<SearchRow> rows;  // sorted by (code_index, gamma)
  std::vector<double> metrics;  // one per code
  std::size_t best_index = 0;
  std::uint64_t best_seed = 0;
  Json best;  // best code, its seed and its transpose/identity curves
};

SearchResult run_search(const SearchConfig& config);

void write_search_csv(std::ostream& out, const SearchConfig& config, const SearchResult& result);

struct CheckConfig {
  std::string channel_file;
  std::string code_file;
  double epsilon = 0.01;
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  std::string out;

  Json to_json() const;
};

Json run_check(const CheckConfig& config);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aqec::cli
