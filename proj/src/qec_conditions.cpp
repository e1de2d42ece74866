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

#include "aqec/qec_conditions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "aqec/transpose.hpp"

namespace aqec {

double near_optimality_factor(double eta, Index d) {
  const auto dd = static_cast<double>(d);
  return ((dd + 1) - eta) / (1 + (dd - 1) * eta);
}

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::Correctable: return "correctable";
    case Verdict::NotCorrectable: return "not_correctable";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

PerfectQecCheck check_perfect_qec(const QuantumChannel& noise, const CodeSpace& code, double tol) {
  if (noise.dim_in() != code.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "check_perfect_qec: channel and code dimensions differ");
  }
  const auto n = static_cast<Index>(noise.size());
  const Index d = code.code_dim();
  std::vector<CMatrix> encoded;
  encoded.reserve(noise.size());
  for (const auto& e : noise.kraus()) encoded.push_back(e * code.basis());

  PerfectQecCheck out;
  out.alpha = CMatrix::Zero(n, n);
  const CMatrix id = CMatrix::Identity(d, d);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      // W^dagger E_i^dagger E_j W has the same norm as P E_i^dagger E_j P
      const CMatrix g = encoded[static_cast<std::size_t>(i)].adjoint() *
                        encoded[static_cast<std::size_t>(j)];
      const Complex a = g.trace() / static_cast<double>(d);
      out.alpha(i, j) = a;
      out.alpha(j, i) = std::conj(a);
      out.residual = std::max(out.residual, operator_norm(g - a * id));
    }
  }
  if (out.residual <= tol) {
    const auto eig = hermitian_eig(out.alpha, 1e-9);
    PerfectQecCertificate cert;
    cert.alpha = out.alpha;
    cert.diag_values = eig.eigenvalues.cwiseMax(0.0);
    cert.rotation = eig.eigenvectors;
    cert.residual = out.residual;
    out.certificate = std::move(cert);
  }
  return out;
}

QuantumChannel build_r_perf(const PerfectQecCertificate& cert, const QuantumChannel& noise,
                            const CodeSpace& code, double tol, RankTolerance rank_tol) {
  if (cert.residual > tol) {
    throw Error(ErrorCode::CertificateInvalid, "certificate residual " +
                                                   std::to_string(cert.residual) + " exceeds " +
                                                   std::to_string(tol));
  }
  if (cert.rotation.rows() != static_cast<Index>(noise.size())) {
    throw Error(ErrorCode::DimensionMismatch, "certificate does not match the channel's Kraus count");
  }
  const CMatrix p = projector(code);
  const double largest = cert.diag_values.size() ? cert.diag_values.maxCoeff() : 0.0;
  const double thr = rank_tol.threshold(largest);
  const QuantumChannel rotated = remix_kraus(noise, cert.rotation);
  std::vector<CMatrix> ops;
  for (Index k = cert.diag_values.size() - 1; k >= 0; --k) {
    if (cert.diag_values(k) <= thr) continue;
    const CMatrix u = polar_unitary_on_support(CMatrix(rotated[static_cast<std::size_t>(k)] * p),
                                               rank_tol);
    ops.push_back(p * u.adjoint());
  }
  if (ops.empty()) throw Error(ErrorCode::CertificateInvalid, "no nonzero d_kk in certificate");
  return QuantumChannel(std::move(ops));
}

namespace {

struct Decomposition {
  CMatrix beta;
  std::vector<CMatrix> deltas;
  std::vector<CMatrix> kraus;  // logical K_ij
  NoiseOnCode pieces;
};

Decomposition decompose(const QuantumChannel& noise, const CodeSpace& code,
                        RankTolerance rank_tol) {
  Decomposition out;
  out.pieces = noise_on_code(noise, code, rank_tol);
  out.kraus = recovered_logical_kraus(out.pieces);
  const auto n = static_cast<Index>(noise.size());
  const Index d = code.code_dim();
  out.beta = CMatrix::Zero(n, n);
  out.deltas.reserve(out.kraus.size());
  const CMatrix id = CMatrix::Identity(d, d);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const CMatrix& k = out.kraus[static_cast<std::size_t>(i * n + j)];
      const Complex b = k.trace() / static_cast<double>(d);
      out.beta(i, j) = b;
      out.deltas.push_back(k - b * id);
    }
  }
  return out;
}

}  // namespace

AqecDiagnostics aqec_diagnostics(const QuantumChannel& noise, const CodeSpace& code,
                                 double epsilon, const SamplingOptions& sampling,
                                 RankTolerance rank_tol) {
  double factor = 1;
  if (tp_defect(noise) > 1e-9) {
    const auto a = restricted_tp_factor(noise, projector(code), 1e-9);
    if (!a) throw Error(ErrorCode::NotTP, "channel is neither TP nor proportionally TP on the code");
    factor = *a;
  }
  const Decomposition dec = decompose(noise, code, rank_tol);
  const Index d = code.code_dim();

  AqecDiagnostics out;
  out.n_kraus = static_cast<Index>(noise.size());
  out.code_dim = d;
  out.beta = dec.beta;
  out.deltas = dec.deltas;
  out.tp_factor = factor;

  CMatrix delta_sum = CMatrix::Zero(d, d);
  for (const auto& delta : dec.deltas) delta_sum.noalias() += delta.adjoint() * delta;
  out.delta_sum_norm = std::max(0.0, hermitian_eig(delta_sum, 1e-9).eigenvalues(d - 1));

  const QuantumChannel phi{std::vector<CMatrix>(dec.kraus)};
  const WorstCaseResult worst = worst_fidelity_logical(phi, sampling);
  // sum_ij <Delta^dagger Delta> - |<Delta>|^2 = <sum K^dagger K> - F^2 = a - F^2
  out.eta = std::clamp(factor - worst.f2_min, 0.0, 1.0);
  out.eta_method = worst.method;
  out.samples = worst.samples;
  out.seed = sampling.seed;
  out.worst_state = code.encode(worst.logical_state);

  out.epsilon = epsilon;
  out.f_epsilon_d = near_optimality_factor(epsilon, d);
  out.upper_threshold = epsilon * out.f_epsilon_d;
  const bool exact = worst.method != WorstCaseMethod::Sampled;
  if ((exact && out.eta <= epsilon) || out.delta_sum_norm <= epsilon) {
    out.verdict = Verdict::Correctable;
  } else if (out.eta > out.upper_threshold) {
    out.verdict = Verdict::NotCorrectable;
  } else {
    out.verdict = Verdict::Indeterminate;
  }
  return out;
}

AlternateConditionCheck alternate_condition_residual(const QuantumChannel& noise,
                                                     const CodeSpace& code,
                                                     RankTolerance rank_tol) {
  const Decomposition dec = decompose(noise, code, rank_tol);
  AlternateConditionCheck out;
  out.beta = dec.beta;
  for (const auto& delta : dec.deltas) out.residual = std::max(out.residual, operator_norm(delta));
  return out;
}

NearOptimalityReport near_optimality_bound_check(const QuantumChannel& noise,
                                                 const CodeSpace& code,
                                                 const std::vector<QuantumChannel>& candidates,
                                                 const SamplingOptions& sampling) {
  NearOptimalityReport out;
  const Index d = code.code_dim();
  out.f_at_zero = near_optimality_factor(0.0, d);
  out.eta_transpose = worst_fidelity_logical(recovered_logical_channel(noise, code), sampling).eta;
  out.eta_best_candidate = std::numeric_limits<double>::infinity();
  for (const auto& r : candidates) {
    const double loss = recovery_worst_fidelity(r, noise, code, sampling).eta;
    out.candidate_losses.push_back(loss);
    out.eta_best_candidate = std::min(out.eta_best_candidate, loss);
  }
  if (candidates.empty()) out.eta_best_candidate = out.eta_transpose;
  out.bound = out.eta_best_candidate * near_optimality_factor(out.eta_best_candidate, d);
  out.bound_holds = out.eta_transpose <= out.bound + 1e-12;
  return out;
}

}  // namespace aqec
