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
#include <optional>
#include <vector>

#include "aqec/linalg.hpp"

namespace aqec {

/// Kraus operators are dropped below this Frobenius norm after products.
inline constexpr double kKrausPruneTolerance = 1e-12;

/// Cap on the number of complex entries held by one channel (2^26).
inline constexpr std::size_t kDefaultKrausBudget = std::size_t{1} << 26;

enum class Pruning { None, DropNegligible };

/// A completely positive map rho -> sum_i K_i rho K_i^dagger from
/// dim_in x dim_in to dim_out x dim_out matrices. Trace preservation is not
/// assumed; query it with tp_defect.
class QuantumChannel {
 public:
  explicit QuantumChannel(std::vector<CMatrix> kraus);

  const std::vector<CMatrix>& kraus() const noexcept { return kraus_; }
  const CMatrix& operator[](std::size_t i) const { return kraus_[i]; }
  std::size_t size() const noexcept { return kraus_.size(); }
  Index dim_in() const noexcept { return kraus_.front().cols(); }
  Index dim_out() const noexcept { return kraus_.front().rows(); }

 private:
  std::vector<CMatrix> kraus_;
};

struct ChoiMatrix {
  CMatrix matrix;  // index (i_in * dim_out + a_out), input factor first
  Index dim_in;
  Index dim_out;
};

QuantumChannel identity_channel(Index dim);
QuantumChannel unitary_channel(const CMatrix& u);

CMatrix apply(const QuantumChannel& channel, const CMatrix& rho);

/// Kraus set {R_j E_i}, j-major. Pruning removes products with negligible norm.
QuantumChannel compose(const QuantumChannel& outer, const QuantumChannel& inner,
                       Pruning pruning = Pruning::DropNegligible);

QuantumChannel adjoint(const QuantumChannel& channel);

/// Kraus set {A_i (x) B_j}, i-major.
QuantumChannel tensor_product(const QuantumChannel& a, const QuantumChannel& b,
                              Pruning pruning = Pruning::DropNegligible,
                              std::size_t budget = kDefaultKrausBudget);

/// n-fold tensor power; Kraus operators in lexicographic order of the factor
/// indices (first tensor factor most significant).
QuantumChannel tensor_power(const QuantumChannel& channel, int n,
                            Pruning pruning = Pruning::DropNegligible,
                            std::size_t budget = kDefaultKrausBudget);

/// F_k = sum_i u(i, k) E_i. u must have one row per Kraus operator.
QuantumChannel remix_kraus(const QuantumChannel& channel, const CMatrix& u);

QuantumChannel prune(const QuantumChannel& channel, double tol = kKrausPruneTolerance);

/// Kraus set read off the Choi eigendecomposition; one operator per
/// eigenvalue above `tol`.
QuantumChannel minimal_kraus(const QuantumChannel& channel, double tol = 1e-12);

CMatrix kraus_sum(const QuantumChannel& channel);  // sum_i E_i^dagger E_i

/// Operator norm of sum_i E_i^dagger E_i - I.
double tp_defect(const QuantumChannel& channel);

/// a with P (sum_i E_i^dagger E_i) P = a P, if that holds within tol.
std::optional<double> restricted_tp_factor(const QuantumChannel& channel, const CMatrix& projector,
                                           double tol = 1e-9);

ChoiMatrix choi(const QuantumChannel& channel);

bool channels_equal(const QuantumChannel& a, const QuantumChannel& b, double tol = 1e-9);

/// Max-entry distance between Choi matrices.
double choi_distance(const QuantumChannel& a, const QuantumChannel& b);

}  // namespace aqec
