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

#include "aqec/random.hpp"

#include <cmath>
#include <numbers>

namespace aqec {

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2, im * std::numbers::sqrt2 / 2};
}

CMatrix Rng::ginibre(Index rows, Index cols) {
  CMatrix g(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) g(i, j) = complex_normal();
  }
  return g;
}

CMatrix haar_isometry(Index rows, Index cols, Rng& rng) {
  if (cols > rows || cols < 1) {
    throw Error(ErrorCode::DimensionMismatch, "haar_isometry needs 1 <= cols <= rows, got " +
                                                  std::to_string(cols) + " > " +
                                                  std::to_string(rows));
  }
  const CMatrix g = rng.ginibre(rows, cols);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(rows, cols);
  const CMatrix& r = qr.matrixQR();
  for (Index j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= mag > 0 ? d / mag : Complex(1);
  }
  return q;
}

CVector haar_state(Index dim, Rng& rng) {
  CVector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = rng.complex_normal();
  return v / v.norm();
}

}  // namespace aqec
