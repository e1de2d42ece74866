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

#include "aqec/serialize.hpp"

#include <fstream>
#include <sstream>

namespace aqec {

namespace {

Json complex_entry(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex parse_complex(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::ParseError, where + ": expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Index positive_int(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer() || j[field].get<long long>() < 1) {
    throw Error(ErrorCode::ParseError, std::string("field '") + field + "' must be a positive integer");
  }
  return static_cast<Index>(j[field].get<long long>());
}

}  // namespace

Json to_json(const QuantumChannel& channel) {
  Json kraus = Json::array();
  for (const auto& k : channel.kraus()) {
    Json flat = Json::array();
    for (Index r = 0; r < k.rows(); ++r) {
      for (Index c = 0; c < k.cols(); ++c) flat.push_back(complex_entry(k(r, c)));
    }
    kraus.push_back(std::move(flat));
  }
  return Json{{"dims_in", channel.dim_in()}, {"dims_out", channel.dim_out()}, {"kraus", kraus}};
}

QuantumChannel channel_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "channel: expected a JSON object");
  const Index din = positive_int(j, "dims_in");
  const Index dout = positive_int(j, "dims_out");
  if (!j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty()) {
    throw Error(ErrorCode::ParseError, "field 'kraus' must be a nonempty array");
  }
  std::vector<CMatrix> ops;
  for (std::size_t k = 0; k < j["kraus"].size(); ++k) {
    const Json& flat = j["kraus"][k];
    const std::string where = "kraus[" + std::to_string(k) + "]";
    if (!flat.is_array() || flat.size() != static_cast<std::size_t>(din * dout)) {
      throw Error(ErrorCode::ParseError, where + ": expected " + std::to_string(din * dout) +
                                             " entries (dims_out x dims_in, row-major)");
    }
    CMatrix m(dout, din);
    for (Index r = 0; r < dout; ++r) {
      for (Index c = 0; c < din; ++c) {
        const auto idx = static_cast<std::size_t>(r * din + c);
        m(r, c) = parse_complex(flat[idx], where + "[" + std::to_string(idx) + "]");
      }
    }
    ops.push_back(std::move(m));
  }
  return QuantumChannel(std::move(ops));
}

Json to_json(const CodeSpace& code) {
  Json basis = Json::array();
  for (Index k = 0; k < code.code_dim(); ++k) {
    Json v = Json::array();
    for (Index i = 0; i < code.ambient_dim(); ++i) v.push_back(complex_entry(code.basis()(i, k)));
    basis.push_back(std::move(v));
  }
  return Json{{"ambient_dim", code.ambient_dim()}, {"code_dim", code.code_dim()}, {"basis", basis}};
}

CodeSpace code_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "code: expected a JSON object");
  const Index dim = positive_int(j, "ambient_dim");
  const Index d = positive_int(j, "code_dim");
  if (!j.contains("basis") || !j["basis"].is_array() ||
      j["basis"].size() != static_cast<std::size_t>(d)) {
    throw Error(ErrorCode::ParseError, "field 'basis' must hold code_dim vectors");
  }
  CMatrix basis(dim, d);
  for (Index k = 0; k < d; ++k) {
    const Json& v = j["basis"][static_cast<std::size_t>(k)];
    const std::string where = "basis[" + std::to_string(k) + "]";
    if (!v.is_array() || v.size() != static_cast<std::size_t>(dim)) {
      throw Error(ErrorCode::ParseError, where + ": expected ambient_dim entries");
    }
    for (Index i = 0; i < dim; ++i) {
      basis(i, k) = parse_complex(v[static_cast<std::size_t>(i)], where + "[" + std::to_string(i) + "]");
    }
  }
  return CodeSpace(std::move(basis), 1e-10);
}

Json to_json(const AqecDiagnostics& diag) {
  Json beta = Json::array();
  for (Index i = 0; i < diag.beta.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < diag.beta.cols(); ++j) row.push_back(complex_entry(diag.beta(i, j)));
    beta.push_back(std::move(row));
  }
  const bool sampled = diag.eta_method == WorstCaseMethod::Sampled;
  return Json{{"beta", beta},
              {"eta", diag.eta},
              {"eta_method", sampled ? "sampled" : "exact_qubit"},
              {"samples", diag.samples},
              {"seed", diag.seed},
              {"delta_sum_norm", diag.delta_sum_norm},
              {"tp_factor", diag.tp_factor},
              {"verdict", std::string(to_string(diag.verdict))},
              {"epsilon", diag.epsilon},
              {"f_epsilon_d", diag.f_epsilon_d},
              {"upper_threshold", diag.upper_threshold}};
}

Json to_json(const WorstCaseResult& result) {
  Json j{{"f2_min", result.f2_min},
         {"eta", result.eta},
         {"method", std::string(to_string(result.method))},
         {"samples", result.samples},
         {"seed", result.seed}};
  if (result.bloch) j["bloch"] = {(*result.bloch)(0), (*result.bloch)(1), (*result.bloch)(2)};
  Json state = Json::array();
  const CVector& v = result.state.size() ? result.state : result.logical_state;
  for (Index i = 0; i < v.size(); ++i) state.push_back(complex_entry(v(i)));
  j["worst_state"] = std::move(state);
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

}  // namespace aqec
