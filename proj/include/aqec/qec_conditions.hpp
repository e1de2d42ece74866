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
#include <optional>
#include <string_view>
#include <vector>

#include "aqec/channels.hpp"
#include "aqec/codes.hpp"
#include "aqec/worst_fidelity.hpp"

namespace aqec {

/// Near-optimality factor f(eta; d) = ((d+1) - eta) / (1 + (d-1) eta).
double near_optimality_factor(double eta, Index d);

/// Data of P E_i^dagger E_j P = alpha_ij P together with the rotation u that
/// diagonalizes alpha, alpha = u diag(d_kk) u^dagger.
struct PerfectQecCertificate {
  CMatrix alpha;
  RVector diag_values;  // ascending, clipped at zero
  CMatrix rotation;
  double residual = 0;
};

struct PerfectQecCheck {
  CMatrix alpha;  // tr(P E_i^dagger E_j P) / d
  double residual = 0;
  std::optional<PerfectQecCertificate> certificate;  // present iff residual <= tol

  bool satisfied() const noexcept { return certificate.has_value(); }
};

/// residual = max_ij || P E_i^dagger E_j P - alpha_ij P || (operator norm).
PerfectQecCheck check_perfect_qec(const QuantumChannel& noise, const CodeSpace& code,
                                  double tol = 1e-10);

/// Kraus {P U_k^dagger} from the polar decompositions F_k P = sqrt(d_kk) U_k P,
/// F_k = sum_i u_ik E_i, keeping k with d_kk above the rank threshold.
/// Throws CertificateInvalid if cert.residual > tol.
QuantumChannel build_r_perf(const PerfectQecCertificate& cert, const QuantumChannel& noise,
                            const CodeSpace& code, double tol = 1e-10,
                            RankTolerance rank_tol = kDefaultRankTolerance);

enum class Verdict { Correctable, NotCorrectable, Indeterminate };

std::string_view to_string(Verdict verdict) noexcept;

/// Decomposition P E_i^dagger E(P)^{-1/2} E_j P = beta_ij P + Delta_ij with
/// traceless Delta_ij, the transpose-recovery loss eta and the verdict at
/// tolerance epsilon.
struct AqecDiagnostics {
  CMatrix beta;
  std::vector<CMatrix> deltas;  // i-major, in the code basis (d x d)
  Index n_kraus = 0;
  Index code_dim = 0;
  double eta = 0;
  WorstCaseMethod eta_method = WorstCaseMethod::ExactUnitalQubit;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  CVector worst_state;  // ambient
  double delta_sum_norm = 0;
  double tp_factor = 1;
  double epsilon = 0;
  double f_epsilon_d = 0;      // f(epsilon; d)
  double upper_threshold = 0;  // epsilon f(epsilon; d)
  Verdict verdict = Verdict::Indeterminate;

  const CMatrix& delta(Index i, Index j) const {
    return deltas[static_cast<std::size_t>(i * n_kraus + j)];
  }
};

/// eta is exact for qubit codes. For d > 2 it is a sampled lower bound; in
/// that case Correctable is only reported when ||Delta_sum|| <= epsilon.
/// Throws NotTP unless the channel is TP, or TP on the code up to a factor.
AqecDiagnostics aqec_diagnostics(const QuantumChannel& noise, const CodeSpace& code,
                                 double epsilon, const SamplingOptions& sampling = {},
                                 RankTolerance rank_tol = kDefaultRankTolerance);

struct AlternateConditionCheck {
  double residual = 0;  // max_ij ||Delta_ij||
  CMatrix beta;
};

AlternateConditionCheck alternate_condition_residual(
    const QuantumChannel& noise, const CodeSpace& code,
    RankTolerance rank_tol = kDefaultRankTolerance);

struct NearOptimalityReport {
  std::vector<double> candidate_losses;
  double eta_transpose = 0;
  double eta_best_candidate = 0;  // min over candidates
  double bound = 0;               // eta_best f(eta_best; d)
  bool bound_holds = false;       // eta_transpose <= bound
  double f_at_zero = 0;           // d + 1
};

/// Compares the transpose-recovery loss against the best of the supplied
/// recoveries. Since that best loss upper-bounds the optimal one and
/// eta f(eta; d) is increasing, eta_transpose <= bound must hold.
NearOptimalityReport near_optimality_bound_check(const QuantumChannel& noise,
                                                 const CodeSpace& code,
                                                 const std::vector<QuantumChannel>& candidates,
                                                 const SamplingOptions& sampling = {});

}  // namespace aqec
