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

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <exception>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "aqec/model_zoo.hpp"
#include "aqec/qec_conditions.hpp"
#include "aqec/random.hpp"
#include "aqec/transpose.hpp"

namespace aqec::cli {

namespace {

std::string fmt17(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// Grid points are rounded to 1e-12, so twelve significant digits print them exactly.
std::string gamma_text(double g) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", g);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_header(std::ostream& out, const Json& config) {
  out << "# generated: " << timestamp() << "\n";
  out << "# config: " << config.dump() << "\n";
}

// Runs fn(i) for i in [0, n); the work split never affects the results.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const unsigned threads = std::min<unsigned>(thread_count(), static_cast<unsigned>(n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex guard;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += threads) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(guard);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

void validate_grid(double start, double stop, double step) {
  if (!(step > 0)) throw Error(ErrorCode::ParamOutOfRange, "gamma step must be > 0");
  if (!(start >= 0 && stop <= 1 && start <= stop)) {
    throw Error(ErrorCode::ParamOutOfRange, "gamma grid must satisfy 0 <= start <= stop <= 1");
  }
}

const std::vector<std::string> kModels = {"ad", "leung41", "five513", "example5", "custom"};
const std::vector<std::string> kRecoveries = {"transpose", "rperf", "identity", "leung", "fletcher"};

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::pair<std::string, std::string> split_curve(const std::string& curve) {
  const auto plus = curve.find('+');
  if (plus == std::string::npos) {
    throw Error(ErrorCode::ParseError, "curve '" + curve + "' is not of the form model+recovery");
  }
  return {curve.substr(0, plus), curve.substr(plus + 1)};
}

int qubit_count(Index dim) {
  int n = 0;
  while ((Index{1} << n) < dim) ++n;
  if ((Index{1} << n) != dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "custom code ambient dimension " + std::to_string(dim) + " is not a power of two");
  }
  return n;
}

SweepRow to_row(const std::string& curve, double gamma, const WorstCaseResult& r,
                std::uint64_t seed) {
  SweepRow row;
  row.gamma = gamma;
  row.curve = curve;
  row.f2_worst = r.f2_min;
  row.eta = r.eta;
  row.method = std::string(to_string(r.method));
  row.samples = r.method == WorstCaseMethod::Sampled ? r.samples : 0;
  row.seed = seed;
  return row;
}

}  // namespace

std::vector<double> gamma_grid(double start, double stop, double step) {
  validate_grid(start, stop, step);
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double g = start + static_cast<double>(k) * step;
    grid.push_back(std::round(g * 1e12) / 1e12);
  }
  return grid;
}

std::vector<std::string> SweepConfig::curve_list() const { return split(curves, ','); }

void SweepConfig::validate() const {
  validate_grid(gamma_start, gamma_stop, gamma_step);
  const auto list = curve_list();
  if (list.empty()) throw Error(ErrorCode::ParseError, "no curves requested");
  for (const auto& c : list) {
    const auto [model, recovery] = split_curve(c);
    if (!contains(kModels, model)) throw Error(ErrorCode::ParseError, "unknown model '" + model + "'");
    if (!contains(kRecoveries, recovery)) {
      throw Error(ErrorCode::ParseError, "unknown recovery '" + recovery + "'");
    }
    if (recovery == "leung" && model != "leung41") {
      throw Error(ErrorCode::ParseError, "the leung recovery only exists for leung41");
    }
    if (recovery == "rperf" && model != "five513") {
      throw Error(ErrorCode::ParseError, "rperf curves are available for five513 only");
    }
    if (model == "custom" && code_file.empty()) {
      throw Error(ErrorCode::ParseError, "custom curves need --code-file");
    }
  }
  if (samples < 1) throw Error(ErrorCode::ParamOutOfRange, "samples must be >= 1");
}

Json SweepConfig::to_json() const {
  return Json{{"command", "sweep"},        {"curves", curves},
              {"gamma_start", gamma_start}, {"gamma_stop", gamma_stop},
              {"gamma_step", gamma_step},   {"seed", seed},
              {"samples", samples},         {"example5_dim", example5_dim},
              {"example5_ambient", example5_ambient}, {"code_file", code_file},
              {"leung_completion", kLeungCompletion}};
}

SweepRow evaluate_curve(const SweepConfig& config, const std::string& curve, double gamma) {
  const auto [model, recovery] = split_curve(curve);
  const SamplingOptions sampling{config.samples, config.seed};

  if (recovery == "fletcher") {
    SweepRow row;
    row.gamma = gamma;
    row.curve = curve;
    row.f2_worst = std::numeric_limits<double>::quiet_NaN();
    row.eta = std::numeric_limits<double>::quiet_NaN();
    row.method = "unavailable";
    row.seed = config.seed;
    return row;
  }

  std::optional<CodeSpace> code;
  std::optional<QuantumChannel> noise;
  if (model == "ad") {
    code.emplace(CMatrix::Identity(2, 2));
    noise.emplace(amplitude_damping(gamma));
  } else if (model == "leung41") {
    code.emplace(leung_code());
    noise.emplace(amplitude_damping_power(gamma, 4));
  } else if (model == "five513") {
    code.emplace(five_qubit_codespace());
    noise.emplace(amplitude_damping_power(gamma, 5));
  } else if (model == "example5") {
    auto m = example5_channel(config.example5_dim, gamma, config.example5_ambient);
    code.emplace(std::move(m.code));
    noise.emplace(std::move(m.channel));
  } else {
    code.emplace(code_from_json(read_json_file(config.code_file)));
    noise.emplace(amplitude_damping_power(gamma, qubit_count(code->ambient_dim())));
  }

  WorstCaseResult r;
  if (recovery == "transpose") {
    r = worst_fidelity_logical(recovered_logical_channel(*noise, *code), sampling);
  } else if (recovery == "identity") {
    r = recovery_worst_fidelity(identity_channel(code->ambient_dim()), *noise, *code, sampling);
  } else if (recovery == "leung") {
    r = recovery_worst_fidelity(leung_recovery(gamma), *noise, *code, sampling);
  } else {
    const auto truncated = five_qubit_code(gamma).truncated_noise;
    const auto check = check_perfect_qec(truncated, *code, 1e-9);
    if (!check.certificate) {
      throw Error(ErrorCode::CertificateInvalid,
                  "[[5,1,3]] certificate failed, residual " + std::to_string(check.residual));
    }
    const auto r_perf = build_r_perf(*check.certificate, truncated, *code, 1e-9);
    r = recovery_worst_fidelity(r_perf, *noise, *code, sampling);
  }
  return to_row(curve, gamma, r, config.seed);
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  const auto grid = gamma_grid(config.gamma_start, config.gamma_stop, config.gamma_step);
  auto curves = config.curve_list();
  std::sort(curves.begin(), curves.end());
  curves.erase(std::unique(curves.begin(), curves.end()), curves.end());
  std::vector<SweepRow> rows(curves.size() * grid.size());
  parallel_for(rows.size(), [&](std::size_t k) {
    rows[k] = evaluate_curve(config, curves[k / grid.size()], grid[k % grid.size()]);
  });
  return rows;
}

void write_sweep_csv(std::ostream& out, const SweepConfig& config,
                     const std::vector<SweepRow>& rows) {
  write_header(out, config.to_json());
  out << "gamma,curve,f2_worst,f_worst,eta,method,samples_or_exact,seed\n";
  for (const auto& r : rows) {
    out << gamma_text(r.gamma) << ',' << r.curve << ',' << fmt17(r.f2_worst) << ','
        << fmt17(std::sqrt(std::max(r.f2_worst, 0.0))) << ',' << fmt17(r.eta) << ',' << r.method
        << ',' << (r.method == "unavailable" ? std::string("unavailable")
                   : r.samples == 0             ? std::string("exact")
                                                : std::to_string(r.samples))
        << ',' << r.seed << '\n';
  }
}

void SearchConfig::validate() const {
  if (qubits < 2 || qubits > 5) throw Error(ErrorCode::ParamOutOfRange, "qubits must be in {2,3,4,5}");
  if (codes < 1) throw Error(ErrorCode::ParamOutOfRange, "codes must be >= 1");
  if (code_dim < 1 || code_dim > (Index{1} << qubits)) {
    throw Error(ErrorCode::ParamOutOfRange, "code dimension must be between 1 and 2^qubits");
  }
  validate_grid(gamma_start, gamma_stop, gamma_step);
  if (metric != "min" && metric != "at-gamma") {
    throw Error(ErrorCode::ParseError, "metric must be 'min' or 'at-gamma'");
  }
  if (metric == "at-gamma" && !(metric_gamma >= 0 && metric_gamma <= 1)) {
    throw Error(ErrorCode::ParamOutOfRange, "metric gamma must lie in [0, 1]");
  }
}

Json SearchConfig::to_json() const {
  return Json{{"command", "search"},       {"qubits", qubits},
              {"code_dim", code_dim},       {"codes", codes},
              {"gamma_start", gamma_start}, {"gamma_stop", gamma_stop},
              {"gamma_step", gamma_step},   {"seed", seed},
              {"metric", metric},           {"metric_gamma", metric_gamma},
              {"samples", samples}};
}

SearchResult run_search(const SearchConfig& config) {
  config.validate();
  const auto grid = gamma_grid(config.gamma_start, config.gamma_stop, config.gamma_step);
  std::vector<double> gammas = grid;
  const bool at_gamma = config.metric == "at-gamma";
  if (at_gamma) gammas.push_back(config.metric_gamma);
  std::vector<QuantumChannel> noise;
  noise.reserve(gammas.size());
  for (double g : gammas) noise.push_back(amplitude_damping_power(g, config.qubits));
  const Index dim = Index{1} << config.qubits;

  SearchResult result;
  result.metrics.assign(config.codes, 0.0);
  std::vector<std::vector<SearchRow>> per_code(config.codes);
  parallel_for(config.codes, [&](std::size_t i) {
    const std::uint64_t code_seed = derive_seed(config.seed, i);
    const CodeSpace code = random_code(dim, config.code_dim, code_seed);
    const SamplingOptions sampling{config.samples, code_seed};
    double metric = std::numeric_limits<double>::infinity();
    for (std::size_t g = 0; g < gammas.size(); ++g) {
      const auto r = worst_fidelity_logical(recovered_logical_channel(noise[g], code), sampling);
      if (g < grid.size()) {
        per_code[i].push_back({i, code_seed, gammas[g], r.f2_min, r.eta, std::string(to_string(r.method))});
        if (!at_gamma) metric = std::min(metric, r.f2_min);
      } else {
        metric = r.f2_min;
      }
    }
    result.metrics[i] = metric;
  });
  for (auto& rows : per_code) {
    for (auto& r : rows) result.rows.push_back(std::move(r));
  }
  for (std::size_t i = 1; i < config.codes; ++i) {
    if (result.metrics[i] > result.metrics[result.best_index]) result.best_index = i;
  }
  result.best_seed = derive_seed(config.seed, result.best_index);

  const CodeSpace best = random_code(dim, config.code_dim, result.best_seed);
  Json transpose_curve = Json::array();
  Json identity_curve = Json::array();
  const SamplingOptions sampling{config.samples, result.best_seed};
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const auto& row = result.rows[result.best_index * grid.size() + g];
    transpose_curve.push_back({{"gamma", row.gamma}, {"f2_worst", row.f2_worst}});
    const auto id = recovery_worst_fidelity(identity_channel(dim), noise[g], best, sampling);
    identity_curve.push_back({{"gamma", grid[g]}, {"f2_worst", id.f2_min}});
  }
  result.best = Json{{"config", config.to_json()},
                     {"seed", config.seed},
                     {"code_index", result.best_index},
                     {"code_seed", result.best_seed},
                     {"metric", config.metric},
                     {"metric_value", result.metrics[result.best_index]},
                     {"code", to_json(best)},
                     {"transpose_curve", transpose_curve},
                     {"identity_curve", identity_curve}};
  return result;
}

void write_search_csv(std::ostream& out, const SearchConfig& config, const SearchResult& result) {
  write_header(out, config.to_json());
  out << "code_index,code_seed,gamma,f2_worst,f_worst,eta,method,metric\n";
  for (const auto& r : result.rows) {
    out << r.code_index << ',' << r.code_seed << ',' << gamma_text(r.gamma) << ',' << fmt17(r.f2_worst)
        << ',' << fmt17(std::sqrt(std::max(r.f2_worst, 0.0))) << ',' << fmt17(r.eta) << ','
        << r.method << ',' << fmt17(result.metrics[r.code_index]) << '\n';
  }
}

Json CheckConfig::to_json() const {
  return Json{{"command", "check"},  {"channel_file", channel_file}, {"code_file", code_file},
              {"epsilon", epsilon},  {"samples", samples},           {"seed", seed}};
}

Json run_check(const CheckConfig& config) {
  if (!(config.epsilon >= 0 && config.epsilon <= 1)) {
    throw Error(ErrorCode::ParamOutOfRange, "epsilon must lie in [0, 1]");
  }
  QuantumChannel channel = [&] {
    try {
      return channel_from_json(read_json_file(config.channel_file));
    } catch (const Error& e) {
      throw Error(e.code() == ErrorCode::ParseError ? ErrorCode::ParseError : e.code(),
                  config.channel_file + ": " + e.what());
    }
  }();
  CodeSpace code = [&] {
    try {
      return code_from_json(read_json_file(config.code_file));
    } catch (const Error& e) {
      throw Error(e.code(), config.code_file + ": " + e.what());
    }
  }();
  const auto diag = aqec_diagnostics(channel, code, config.epsilon,
                                     SamplingOptions{config.samples, config.seed});
  Json j = to_json(diag);
  j["config"] = config.to_json();
  return j;
}

namespace {

bool is_config_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::ParamOutOfRange:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::InvalidCode:
    case ErrorCode::InvalidChannel:
    case ErrorCode::NotQubitCode:
    case ErrorCode::InvalidBloch:
      return true;
    default:
      return false;
  }
}

// Turns a --config JSON object into "--key value" tokens placed ahead of the
// user's own arguments, so explicit flags win.
std::vector<std::string> config_tokens(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  std::vector<std::string> tokens;
  if (path.empty()) return tokens;
  const Json j = read_json_file(path);
  if (!j.is_object()) throw Error(ErrorCode::ParseError, path + ": config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "command") continue;
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    tokens.push_back(flag);
    tokens.push_back(value.is_string() ? value.get<std::string>() : value.dump());
  }
  return tokens;
}

std::ostream& open_or(std::ofstream& file, const std::string& path, std::ostream& fallback) {
  if (path.empty() || path == "-") return fallback;
  file.open(path);
  if (!file) throw Error(ErrorCode::ParseError, path + ": cannot open for writing");
  return file;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  SweepConfig sweep;
  SearchConfig search;
  CheckConfig check;
  std::string config_path;

  CLI::App app{"Transpose-channel recovery and approximate QEC diagnostics"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  auto* sweep_cmd = app.add_subcommand("sweep", "worst-case fidelity along a gamma grid (CSV)");
  sweep_cmd->add_option("--curves", sweep.curves, "comma-separated model+recovery list");
  sweep_cmd->add_option("--gamma-start", sweep.gamma_start);
  sweep_cmd->add_option("--gamma-stop", sweep.gamma_stop);
  sweep_cmd->add_option("--gamma-step", sweep.gamma_step);
  sweep_cmd->add_option("--seed", sweep.seed);
  sweep_cmd->add_option("--samples", sweep.samples, "Haar samples for codes with d > 2");
  sweep_cmd->add_option("--example5-dim", sweep.example5_dim);
  sweep_cmd->add_option("--example5-ambient", sweep.example5_ambient);
  sweep_cmd->add_option("--code-file", sweep.code_file, "code JSON for custom+<recovery> curves");
  sweep_cmd->add_option("--out", sweep.out, "CSV path (default stdout)");
  sweep_cmd->add_option("--config", config_path, "JSON object of option values");

  auto* search_cmd = app.add_subcommand("search", "random code search under transpose recovery");
  search_cmd->add_option("--qubits", search.qubits);
  search_cmd->add_option("--code-dim", search.code_dim);
  search_cmd->add_option("--codes", search.codes);
  search_cmd->add_option("--gamma-start", search.gamma_start);
  search_cmd->add_option("--gamma-stop", search.gamma_stop);
  search_cmd->add_option("--gamma-step", search.gamma_step);
  search_cmd->add_option("--seed", search.seed);
  search_cmd->add_option("--metric", search.metric, "min | at-gamma");
  search_cmd->add_option("--metric-gamma", search.metric_gamma);
  search_cmd->add_option("--samples", search.samples);
  search_cmd->add_option("--out", search.out, "per-code CSV path (default stdout)");
  search_cmd->add_option("--best-out", search.best_out, "best-code JSON path");
  search_cmd->add_option("--config", config_path, "JSON object of option values");

  auto* check_cmd = app.add_subcommand("check", "AQEC diagnostics for a channel/code pair (JSON)");
  check_cmd->add_option("--channel", check.channel_file)->required();
  check_cmd->add_option("--code", check.code_file)->required();
  check_cmd->add_option("--epsilon", check.epsilon);
  check_cmd->add_option("--samples", check.samples);
  check_cmd->add_option("--seed", check.seed);
  check_cmd->add_option("--out", check.out, "JSON path (default stdout)");
  check_cmd->add_option("--config", config_path, "JSON object of option values");

  app.add_subcommand("models", "list named models");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::vector<std::string> tokens;
    if (!args.empty()) {
      tokens.push_back(args.front());
      const auto extra = config_tokens(args);
      tokens.insert(tokens.end(), extra.begin(), extra.end());
      tokens.insert(tokens.end(), args.begin() + 1, args.end());
    }
    std::reverse(tokens.begin(), tokens.end());
    app.parse(tokens);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    for (auto* sub : app.get_subcommands()) out << sub->help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    if (*sweep_cmd) {
      const auto rows = run_sweep(sweep);
      std::ofstream file;
      write_sweep_csv(open_or(file, sweep.out, out), sweep, rows);
    } else if (*search_cmd) {
      const auto result = run_search(search);
      std::ofstream file;
      write_search_csv(open_or(file, search.out, out), search, result);
      if (!search.best_out.empty()) {
        std::ofstream best(search.best_out);
        if (!best) throw Error(ErrorCode::ParseError, search.best_out + ": cannot open for writing");
        best << result.best.dump(2) << "\n";
      }
    } else if (*check_cmd) {
      const Json j = run_check(check);
      std::ofstream file;
      open_or(file, check.out, out) << j.dump(2) << "\n";
    } else {
      for (const auto& m : model_registry()) out << m.name << "\t" << m.description << "\n";
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_config_error(e.code()) ? kExitConfigError : kExitNumericalFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumericalFailure;
  }
  return kExitOk;
}

}  // namespace aqec::cli
