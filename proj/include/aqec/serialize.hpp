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

#include <string>

#include <json.hpp>

#include "aqec/channels.hpp"
#include "aqec/codes.hpp"
#include "aqec/qec_conditions.hpp"
#include "aqec/worst_fidelity.hpp"

namespace aqec {

using Json = nlohmann::json;

/// {"dims_in", "dims_out", "kraus": [[[re, im], ... row-major ...], ...]}
Json to_json(const QuantumChannel& channel);
QuantumChannel channel_from_json(const Json& j);

/// {"ambient_dim", "code_dim", "basis": [[[re, im], ...], ...]}, one inner
/// list per basis vector.
Json to_json(const CodeSpace& code);
CodeSpace code_from_json(const Json& j);

Json to_json(const AqecDiagnostics& diag);
Json to_json(const WorstCaseResult& result);

/// Reads a whole file as JSON; ParseError carries the path.
Json read_json_file(const std::string& path);

}  // namespace aqec
