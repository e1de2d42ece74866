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
#include <string_view>
#include <utility>
#include <vector>

#include "aqec/channels.hpp"
#include "aqec/codes.hpp"

namespace aqec {

/// Single-qubit amplitude damping: E0 = diag(1, sqrt(1-gamma)),
/// E1 = sqrt(gamma) |0><1|.
QuantumChannel amplitude_damping(double gamma);

/// Amplitude damping on each of n qubits.
QuantumChannel amplitude_damping_power(double gamma, int n_qubits);

/// Terms of amplitude_damping_power with at most `max_decays` E1 factors.
QuantumChannel truncated_amplitude_damping(double gamma, int n_qubits, int max_decays);

/// Four-qubit code spanned by (|0000> + |1111>)/sqrt2 and (|0011> + |1100>)/sqrt2.
CodeSpace leung_code();

/// Completion used by leung_recovery for the part of the space the
/// single-decay recovery does not reach.
inline constexpr std::string_view kLeungCompletion = "complement_to_logical_zero";

/// Recovery for leung_code: R_perf of the no-decay plus single-decay terms of
/// the four-qubit damping channel, made trace preserving by sending the
/// orthogonal complement of its domain to |0_L><0_L|.
QuantumChannel leung_recovery(double gamma);

struct FiveQubitModel {
  CodeSpace code;
  QuantumChannel truncated_noise;
};

/// The [[5,1,3]] code (stabilizers XZZXI and cyclic shifts, |0_L> from the
/// stabilizer projector applied to |00000>, |1_L> = XXXXX |0_L>) with the
/// weight <= 1 Pauli expansion of the five-qubit damping channel.
FiveQubitModel five_qubit_code(double gamma);

/// Only the codespace of five_qubit_code.
CodeSpace five_qubit_codespace();

/// Weight <= 1 Pauli expansion of amplitude_damping(gamma) on n qubits:
/// K_0 = a^n I + a^{n-1} b sum_q Z_q, K_q = a^{n-1} sqrt(gamma)/2 (X_q + i Y_q),
/// with a = (1 + sqrt(1-gamma))/2, b = (1 - sqrt(1-gamma))/2.
QuantumChannel single_pauli_damping(double gamma, int n_qubits);

struct Example5Model {
  QuantumChannel channel;
  CodeSpace code;
};

/// Channel acting on span{|0>, ..., |d-1>} in C^D as
/// {sqrt(1-p) P, sqrt(p) |0><0|, ..., sqrt(p) |0><d-1|}, plus I - P on the
/// complement so the whole map is trace preserving.
Example5Model example5_channel(Index d, double p, Index ambient_dim);

struct ModelInfo {
  std::string name;
  std::string description;
};

/// Names accepted by the command-line tool.
const std::vector<ModelInfo>& model_registry();

}  // namespace aqec
