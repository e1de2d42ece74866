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
#include <vector>

#include "aqec/linalg.hpp"

namespace aqec {

/// A d-dimensional subspace of C^D, held as the D x d isometry whose columns
/// are an orthonormal basis. The projector is derived on demand.
class CodeSpace {
 public:
  /// Throws InvalidCode unless the columns are orthonormal within `tol`.
  explicit CodeSpace(CMatrix basis, double tol = 1e-12);

  Index ambient_dim() const noexcept { return basis_.rows(); }
  Index code_dim() const noexcept { return basis_.cols(); }
  const CMatrix& basis() const noexcept { return basis_; }
  CVector basis_vector(Index k) const { return basis_.col(k); }

  /// Ambient vector for logical coefficients c (W c).
  CVector encode(const CVector& coefficients) const;

  /// W X W^dagger: an operator on C^d lifted to the ambient space.
  CMatrix embed(const CMatrix& logical) const;

  /// W^dagger X W: compression of an ambient operator onto the code.
  CMatrix compress(const CMatrix& ambient) const;

 private:
  CMatrix basis_;
};

/// Hermitian basis {O_0 = P, O_1, ...} of operators on the code with
/// tr(O_a O_b) = d delta_ab, stored as ambient D x D matrices.
struct OperatorBasis {
  std::vector<CMatrix> elements;
  std::vector<CMatrix> logical;  // same elements in the code basis (d x d)
};

CMatrix projector(const CodeSpace& code);

/// Code spanned by the first d columns of a Haar-random D x D unitary.
CodeSpace random_code(Index ambient_dim, Index code_dim, std::uint64_t seed);

/// {P, sigma_x, sigma_y, sigma_z} built from the two basis vectors.
OperatorBasis pauli_basis(const CodeSpace& code);

/// Generalized Gell-Mann matrices scaled to tr(O_a O_b) = d delta_ab, in the
/// order identity, symmetric (j<k), antisymmetric (j<k), diagonal. For d = 2
/// this coincides with pauli_basis.
OperatorBasis hermitian_basis(const CodeSpace& code);

/// (P + s . sigma) / 2 for a Bloch vector with |s| <= 1.
CMatrix bloch_state(const CodeSpace& code, const Eigen::Vector3d& s);

}  // namespace aqec
