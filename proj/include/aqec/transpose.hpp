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

#include <vector>

#include "aqec/channels.hpp"
#include "aqec/codes.hpp"

namespace aqec {

/// Transpose (Petz) recovery for a code under a noise channel:
///   R(.) = sum_i P E_i^dagger E(P)^{-1/2} (.) E(P)^{-1/2} E_i P.
/// The map is trace preserving on operators supported on `support_projector`
/// (the support of E(P)) and annihilates everything orthogonal to it.
struct TransposeRecovery {
  QuantumChannel recovery;
  CMatrix support_projector;
  CodeSpace source_code;
};

/// Pieces shared by the transpose recovery and the condition checks: the
/// noise restricted to the code and the normalization E(P)^{-1/2}.
struct NoiseOnCode {
  std::vector<CMatrix> encoded_kraus;  // E_i W, dim_out x d
  CMatrix noisy_projector;             // E(P)
  CMatrix inverse_sqrt;                // E(P)^{-1/2} on its support
  CMatrix support;                     // projector onto supp E(P)
};

NoiseOnCode noise_on_code(const QuantumChannel& noise, const CodeSpace& code,
                          RankTolerance rank_tol = kDefaultRankTolerance);

TransposeRecovery transpose_channel(const QuantumChannel& noise, const CodeSpace& code,
                                    RankTolerance rank_tol = kDefaultRankTolerance);

/// R o E o P as an ambient channel with Kraus {P E_i^dagger E(P)^{-1/2} E_j P},
/// i-major. The Kraus set is closed under adjoints (K_ij^dagger = K_ji).
QuantumChannel recovered_channel(const QuantumChannel& noise, const CodeSpace& code,
                                 RankTolerance rank_tol = kDefaultRankTolerance);

/// The same map expressed in the code basis: d x d Kraus operators
/// W^dagger E_i^dagger E(P)^{-1/2} E_j W.
QuantumChannel recovered_logical_channel(const QuantumChannel& noise, const CodeSpace& code,
                                         RankTolerance rank_tol = kDefaultRankTolerance);

std::vector<CMatrix> recovered_logical_kraus(const NoiseOnCode& pieces);

}  // namespace aqec
