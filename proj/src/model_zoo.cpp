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

#include "aqec/model_zoo.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "aqec/qec_conditions.hpp"

namespace aqec {

namespace {

void require_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorCode::ParamOutOfRange,
                std::string(name) + " must lie in [0, 1], got " + std::to_string(x));
  }
}

CMatrix pauli(char c) {
  const Complex i{0, 1};
  CMatrix m(2, 2);
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m = CMatrix::Identity(2, 2); break;
  }
  return m;
}

CMatrix pauli_string(std::string_view s) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (char c : s) out = kron(out, pauli(c));
  return out;
}

// Operator acting as `single` on qubit q (0 = most significant) of n.
CMatrix on_qubit(const CMatrix& single, int q, int n) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (int k = 0; k < n; ++k) out = kron(out, k == q ? single : CMatrix(CMatrix::Identity(2, 2)));
  return out;
}

CVector basis_ket(std::string_view bits) {
  Index index = 0;
  for (char c : bits) index = 2 * index + (c == '1' ? 1 : 0);
  return CVector::Unit(Index{1} << bits.size(), index);
}

}  // namespace

QuantumChannel amplitude_damping(double gamma) {
  require_unit_interval(gamma, "gamma");
  CMatrix e0 = CMatrix::Zero(2, 2);
  e0(0, 0) = 1;
  e0(1, 1) = std::sqrt(1 - gamma);
  CMatrix e1 = CMatrix::Zero(2, 2);
  e1(0, 1) = std::sqrt(gamma);
  return QuantumChannel({e0, e1});
}

QuantumChannel amplitude_damping_power(double gamma, int n_qubits) {
  return tensor_power(amplitude_damping(gamma), n_qubits, Pruning::None);
}

QuantumChannel truncated_amplitude_damping(double gamma, int n_qubits, int max_decays) {
  const QuantumChannel single = amplitude_damping(gamma);
  std::vector<CMatrix> ops;
  const unsigned total = 1u << n_qubits;
  for (unsigned pattern = 0; pattern < total; ++pattern) {
    // bit (n-1-q) of pattern selects E1 on qubit q; lexicographic like tensor_power
    int decays = 0;
    for (int q = 0; q < n_qubits; ++q) decays += (pattern >> q) & 1u;
    if (decays > max_decays) continue;
    CMatrix k = CMatrix::Identity(1, 1);
    for (int q = 0; q < n_qubits; ++q) {
      const unsigned bit = (pattern >> (n_qubits - 1 - q)) & 1u;
      k = kron(k, single[bit]);
    }
    ops.push_back(std::move(k));
  }
  return QuantumChannel(std::move(ops));
}

CodeSpace leung_code() {
  CMatrix basis(16, 2);
  basis.col(0) = (basis_ket("0000") + basis_ket("1111")) / std::sqrt(2.0);
  basis.col(1) = (basis_ket("0011") + basis_ket("1100")) / std::sqrt(2.0);
  return CodeSpace(std::move(basis));
}

QuantumChannel leung_recovery(double gamma) {
  require_unit_interval(gamma, "gamma");
  const CodeSpace code = leung_code();
  const QuantumChannel truncated = truncated_amplitude_damping(gamma, 4, 1);
  // The single-decay channel only satisfies the conditions up to O(gamma^2),
  // so the certificate is accepted regardless of its residual.
  constexpr double kAnyResidual = std::numeric_limits<double>::infinity();
  const auto check = check_perfect_qec(truncated, code, kAnyResidual);
  const QuantumChannel r_perf = build_r_perf(*check.certificate, truncated, code, kAnyResidual);

  const CMatrix covered = kraus_sum(r_perf);
  const CMatrix rest = CMatrix::Identity(16, 16) - covered;
  const auto eig = hermitian_eig(rest, 1e-9);
  std::vector<CMatrix> ops = r_perf.kraus();
  const CVector zero_l = code.basis_vector(0);
  for (Index k = 0; k < eig.eigenvalues.size(); ++k) {
    const double weight = eig.eigenvalues(k);
    if (weight <= 1e-12) continue;
    ops.push_back(std::sqrt(weight) * zero_l * eig.eigenvectors.col(k).adjoint());
  }
  return QuantumChannel(std::move(ops));
}

CodeSpace five_qubit_codespace() {
  const char* generators[] = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
  CMatrix stab = CMatrix::Identity(32, 32);
  for (const char* g : generators) {
    stab = stab * (CMatrix::Identity(32, 32) + pauli_string(g)) / 2.0;
  }
  CMatrix basis(32, 2);
  CVector zero = stab * basis_ket("00000");
  zero /= zero.norm();
  basis.col(0) = zero;
  basis.col(1) = pauli_string("XXXXX") * zero;
  return CodeSpace(std::move(basis), 1e-10);
}

QuantumChannel single_pauli_damping(double gamma, int n_qubits) {
  require_unit_interval(gamma, "gamma");
  const double root = std::sqrt(1 - gamma);
  const double a = (1 + root) / 2;
  const double b = (1 - root) / 2;
  const Index dim = Index{1} << n_qubits;
  const Complex i{0, 1};
  std::vector<CMatrix> ops;
  CMatrix k0 = std::pow(a, n_qubits) * CMatrix::Identity(dim, dim);
  for (int q = 0; q < n_qubits; ++q) k0 += std::pow(a, n_qubits - 1) * b * on_qubit(pauli('Z'), q, n_qubits);
  ops.push_back(std::move(k0));
  const CMatrix lowering = (pauli('X') + i * pauli('Y')) / 2.0;
  for (int q = 0; q < n_qubits; ++q) {
    ops.push_back(std::pow(a, n_qubits - 1) * std::sqrt(gamma) * on_qubit(lowering, q, n_qubits));
  }
  return QuantumChannel(std::move(ops));
}

FiveQubitModel five_qubit_code(double gamma) {
  return {five_qubit_codespace(), single_pauli_damping(gamma, 5)};
}

Example5Model example5_channel(Index d, double p, Index ambient_dim) {
  if (d < 2) throw Error(ErrorCode::ParamOutOfRange, "example5 needs d >= 2");
  if (ambient_dim < d + 1) {
    throw Error(ErrorCode::ParamOutOfRange, "example5 needs D >= d + 1");
  }
  require_unit_interval(p, "p");
  CMatrix basis = CMatrix::Identity(ambient_dim, d);
  CodeSpace code(basis);
  const CMatrix proj = projector(code);
  std::vector<CMatrix> ops;
  ops.push_back(std::sqrt(1 - p) * proj);
  for (Index k = 0; k < d; ++k) {
    CMatrix m = CMatrix::Zero(ambient_dim, ambient_dim);
    m(0, k) = std::sqrt(p);
    ops.push_back(std::move(m));
  }
  ops.push_back(CMatrix::Identity(ambient_dim, ambient_dim) - proj);
  return {QuantumChannel(std::move(ops)), std::move(code)};
}

const std::vector<ModelInfo>& model_registry() {
  static const std::vector<ModelInfo> registry = {
      {"ad", "single-qubit amplitude damping, no encoding (parameter gamma)"},
      {"leung41", "four-qubit [4,1] code under four-qubit amplitude damping (parameter gamma)"},
      {"five513", "[[5,1,3]] code under five-qubit amplitude damping (parameter gamma)"},
      {"example5", "identity-plus-decay channel on a d-dimensional code (parameters d, p, D)"},
  };
  return registry;
}

}  // namespace aqec
