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

#include "aqec/codes.hpp"

#include <cmath>
#include <string>

#include "aqec/random.hpp"

namespace aqec {

CodeSpace::CodeSpace(CMatrix basis, double tol) : basis_(std::move(basis)) {
  if (basis_.cols() < 1 || basis_.rows() < basis_.cols()) {
    throw Error(ErrorCode::InvalidCode, "code basis must be D x d with 1 <= d <= D, got " +
                                            std::to_string(basis_.rows()) + "x" +
                                            std::to_string(basis_.cols()));
  }
  const CMatrix gram = basis_.adjoint() * basis_;
  const double defect = max_abs(gram - CMatrix::Identity(basis_.cols(), basis_.cols()));
  if (defect > tol) {
    throw Error(ErrorCode::InvalidCode,
                "code basis is not orthonormal (max defect " + std::to_string(defect) + ")");
  }
}

CVector CodeSpace::encode(const CVector& coefficients) const {
  if (coefficients.size() != code_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "encode: expected " + std::to_string(code_dim()) +
                                                  " coefficients");
  }
  return basis_ * coefficients;
}

CMatrix CodeSpace::embed(const CMatrix& logical) const {
  if (logical.rows() != code_dim() || logical.cols() != code_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "embed: operator is not d x d");
  }
  return basis_ * logical * basis_.adjoint();
}

CMatrix CodeSpace::compress(const CMatrix& ambient) const {
  if (ambient.rows() != ambient_dim() || ambient.cols() != ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "compress: operator is not D x D");
  }
  return basis_.adjoint() * ambient * basis_;
}

CMatrix projector(const CodeSpace& code) { return code.basis() * code.basis().adjoint(); }

CodeSpace random_code(Index ambient_dim, Index code_dim, std::uint64_t seed) {
  if (code_dim < 1 || code_dim > ambient_dim) {
    throw Error(ErrorCode::DimensionMismatch, "random_code: need 1 <= d <= D, got d=" +
                                                  std::to_string(code_dim) +
                                                  " D=" + std::to_string(ambient_dim));
  }
  Rng rng(seed);
  return CodeSpace(haar_isometry(ambient_dim, code_dim, rng), 1e-10);
}

namespace {

OperatorBasis lift(const CodeSpace& code, std::vector<CMatrix> logical) {
  OperatorBasis out;
  out.elements.reserve(logical.size());
  for (const auto& g : logical) out.elements.push_back(code.embed(g));
  out.logical = std::move(logical);
  return out;
}

}  // namespace

OperatorBasis pauli_basis(const CodeSpace& code) {
  if (code.code_dim() != 2) {
    throw Error(ErrorCode::NotQubitCode,
                "pauli_basis needs d = 2, got d = " + std::to_string(code.code_dim()));
  }
  const Complex i{0, 1};
  CMatrix id = CMatrix::Identity(2, 2);
  CMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, -i, i, 0;
  z << 1, 0, 0, -1;
  return lift(code, {id, x, y, z});
}

OperatorBasis hermitian_basis(const CodeSpace& code) {
  const Index d = code.code_dim();
  if (d == 2) return pauli_basis(code);
  const double scale = std::sqrt(static_cast<double>(d) / 2.0);
  const Complex i{0, 1};
  std::vector<CMatrix> logical;
  logical.reserve(static_cast<std::size_t>(d * d));
  logical.push_back(CMatrix::Identity(d, d));
  for (Index j = 0; j < d; ++j) {
    for (Index k = j + 1; k < d; ++k) {
      CMatrix g = CMatrix::Zero(d, d);
      g(j, k) = g(k, j) = scale;
      logical.push_back(std::move(g));
    }
  }
  for (Index j = 0; j < d; ++j) {
    for (Index k = j + 1; k < d; ++k) {
      CMatrix g = CMatrix::Zero(d, d);
      g(j, k) = -i * scale;
      g(k, j) = i * scale;
      logical.push_back(std::move(g));
    }
  }
  for (Index l = 1; l < d; ++l) {
    // diag(1, ..., 1, -l, 0, ...) normalized to tr(g^2) = 2, then rescaled
    CMatrix g = CMatrix::Zero(d, d);
    const double norm = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
    for (Index m = 0; m < l; ++m) g(m, m) = norm * scale;
    g(l, l) = -static_cast<double>(l) * norm * scale;
    logical.push_back(std::move(g));
  }
  return lift(code, std::move(logical));
}

CMatrix bloch_state(const CodeSpace& code, const Eigen::Vector3d& s) {
  if (code.code_dim() != 2) {
    throw Error(ErrorCode::NotQubitCode, "bloch_state needs d = 2");
  }
  if (s.norm() > 1.0 + 1e-12) {
    throw Error(ErrorCode::InvalidBloch, "Bloch vector norm " + std::to_string(s.norm()) + " > 1");
  }
  const Complex i{0, 1};
  CMatrix rho(2, 2);
  rho << 1.0 + s(2), Complex(s(0)) - i * s(1), Complex(s(0)) + i * s(1), 1.0 - s(2);
  return code.embed(rho / 2.0);
}

}  // namespace aqec
