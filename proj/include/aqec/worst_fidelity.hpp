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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "aqec/channels.hpp"
#include "aqec/codes.hpp"

namespace aqec {

/// Real matrix M(a, b) = tr(O_a Phi(O_b)) / d of a map on the code in a
/// Hermitian operator basis. Row 0 encodes trace preservation, column 0
/// unitality.
struct ProcessMatrix {
  RMatrix m;
  OperatorBasis basis;
  bool is_tp = false;
  bool is_unital = false;
  Index code_dim = 0;
};

enum class WorstCaseMethod { ExactUnitalQubit, LagrangeQubit, Sampled };

std::string_view to_string(WorstCaseMethod method) noexcept;

/// Minimum squared fidelity over pure code states. For exact methods the
/// minimum is certified; for Sampled it is the best value found, i.e. an upper
/// bound on the true minimum (and eta a lower bound on the loss).
struct WorstCaseResult {
  double f2_min = 1.0;
  double eta = 0.0;
  WorstCaseMethod method = WorstCaseMethod::ExactUnitalQubit;
  std::optional<Eigen::Vector3d> bloch;  // qubit codes only
  CVector logical_state;                 // coefficients in the code basis
  CVector state;                         // ambient vector, when a code is known
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

struct SamplingOptions {
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  int refine_iterations = 200;
  std::size_t block_size = 4096;
};

inline constexpr double kStructureTolerance = 1e-9;

/// Kraus operators of P Phi(.) P written in the code basis (W^dagger K W).
/// Squared fidelities of code states only see this compression.
QuantumChannel compress_to_code(const QuantumChannel& phi, const CodeSpace& code);

/// Process matrix of a map whose outputs stay in the code. Throws
/// OutputLeavesCode if tr((I - P) Phi(P)) exceeds `leak_tol`.
ProcessMatrix process_matrix(const QuantumChannel& phi, const CodeSpace& code,
                             double leak_tol = 1e-9);

/// Process matrix of the compression P Phi P, without the leak check.
ProcessMatrix compressed_process_matrix(const QuantumChannel& phi, const CodeSpace& code);

/// Process matrix of a map given directly on C^d.
ProcessMatrix logical_process_matrix(const QuantumChannel& logical_phi);

/// <psi| Phi(|psi><psi|) |psi> for a (normalized) state of the channel's input space.
double fidelity_squared(const QuantumChannel& phi, const CVector& psi);

/// Smallest eigenvalue of the symmetrized 3x3 block; needs a TP unital qubit map.
WorstCaseResult worst_fidelity_unital_qubit(const ProcessMatrix& pm);

/// Minimizes s^T M_sym s / 2 over s = (1, n), |n| = 1, by solving the
/// secular equation of the sphere-constrained quadratic. Needs d = 2 only.
WorstCaseResult worst_fidelity_qubit_lagrange(const ProcessMatrix& pm);

/// Haar sampling of pure code states plus projected-gradient refinement of
/// the best sample. Deterministic for a given seed and block size.
WorstCaseResult worst_fidelity_sampled(const QuantumChannel& phi, const CodeSpace& code,
                                       const SamplingOptions& options);

WorstCaseResult worst_fidelity_sampled_logical(const QuantumChannel& logical_phi,
                                               const SamplingOptions& options);

/// Worst case of Phi over code states: exact for d = 2 (eigen solution when
/// the compressed map is TP and unital, Lagrange otherwise), sampled for d > 2.
WorstCaseResult worst_fidelity(const QuantumChannel& phi, const CodeSpace& code,
                               const SamplingOptions& options = {});

WorstCaseResult worst_fidelity_logical(const QuantumChannel& logical_phi,
                                       const SamplingOptions& options = {});

/// Worst case of recovery o noise over code states, computed from the
/// compressed Kraus set {W^dagger R_j E_i W}.
WorstCaseResult recovery_worst_fidelity(const QuantumChannel& recovery, const QuantumChannel& noise,
                                        const CodeSpace& code, const SamplingOptions& options = {});

/// Logical qubit state with the given Bloch vector.
CVector bloch_to_state(const Eigen::Vector3d& s);

/// Worker threads for sampling (AQEC_THREADS, default 1).
unsigned thread_count();

}  // namespace aqec
