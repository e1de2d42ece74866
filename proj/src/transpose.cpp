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

#include "aqec/transpose.hpp"

#include <string>

namespace aqec {

NoiseOnCode noise_on_code(const QuantumChannel& noise, const CodeSpace& code,
                          RankTolerance rank_tol) {
  if (noise.dim_in() != code.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "channel input dimension " + std::to_string(noise.dim_in()) +
                    " does not match code ambient dimension " + std::to_string(code.ambient_dim()));
  }
  NoiseOnCode out;
  out.encoded_kraus.reserve(noise.size());
  out.noisy_projector = CMatrix::Zero(noise.dim_out(), noise.dim_out());
  for (const auto& e : noise.kraus()) {
    CMatrix a = e * code.basis();
    out.noisy_projector.noalias() += a * a.adjoint();
    out.encoded_kraus.push_back(std::move(a));
  }
  auto inv = inv_sqrt_on_support(out.noisy_projector, rank_tol);
  out.inverse_sqrt = std::move(inv.inverse_sqrt);
  out.support = std::move(inv.support);
  return out;
}

TransposeRecovery transpose_channel(const QuantumChannel& noise, const CodeSpace& code,
                                    RankTolerance rank_tol) {
  const NoiseOnCode pieces = noise_on_code(noise, code, rank_tol);
  const CMatrix p = projector(code);
  std::vector<CMatrix> ops;
  ops.reserve(noise.size());
  for (const auto& e : noise.kraus()) ops.push_back(p * e.adjoint() * pieces.inverse_sqrt);
  return {QuantumChannel(std::move(ops)), pieces.support, code};
}

std::vector<CMatrix> recovered_logical_kraus(const NoiseOnCode& pieces) {
  const std::size_t n = pieces.encoded_kraus.size();
  std::vector<CMatrix> normalized;
  normalized.reserve(n);
  for (const auto& a : pieces.encoded_kraus) normalized.push_back(pieces.inverse_sqrt * a);
  std::vector<CMatrix> ops;
  ops.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ops.push_back(pieces.encoded_kraus[i].adjoint() * normalized[j]);
    }
  }
  return ops;
}

QuantumChannel recovered_logical_channel(const QuantumChannel& noise, const CodeSpace& code,
                                         RankTolerance rank_tol) {
  return QuantumChannel(recovered_logical_kraus(noise_on_code(noise, code, rank_tol)));
}

QuantumChannel recovered_channel(const QuantumChannel& noise, const CodeSpace& code,
                                 RankTolerance rank_tol) {
  auto logical = recovered_logical_kraus(noise_on_code(noise, code, rank_tol));
  std::vector<CMatrix> ops;
  ops.reserve(logical.size());
  for (const auto& k : logical) ops.push_back(code.embed(k));
  return QuantumChannel(std::move(ops));
}

}  // namespace aqec
