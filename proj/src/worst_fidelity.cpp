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

#include "aqec/worst_fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "aqec/random.hpp"

namespace aqec {

std::string_view to_string(WorstCaseMethod method) noexcept {
  switch (method) {
    case WorstCaseMethod::ExactUnitalQubit: return "exact_unital_qubit";
    case WorstCaseMethod::LagrangeQubit: return "lagrange_qubit";
    case WorstCaseMethod::Sampled: return "sampled";
  }
  return "unknown";
}

unsigned thread_count() {
  if (const char* env = std::getenv("AQEC_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  return 1;
}

namespace {

ProcessMatrix build_process_matrix(const std::vector<CMatrix>& logical_kraus, OperatorBasis basis) {
  const Index d = logical_kraus.front().rows();
  const auto n = static_cast<Index>(basis.logical.size());
  ProcessMatrix pm;
  pm.code_dim = d;
  pm.m = RMatrix::Zero(n, n);
  double imag = 0;
  for (Index b = 0; b < n; ++b) {
    CMatrix out = CMatrix::Zero(d, d);
    for (const auto& k : logical_kraus) out.noalias() += k * basis.logical[b] * k.adjoint();
    for (Index a = 0; a < n; ++a) {
      const Complex v = (basis.logical[a] * out).trace() / static_cast<double>(d);
      pm.m(a, b) = v.real();
      imag = std::max(imag, std::abs(v.imag()));
    }
  }
  if (imag > 1e-10) {
    throw Error(ErrorCode::PreconditionViolated,
                "process matrix has imaginary part " + std::to_string(imag));
  }
  pm.is_tp = std::abs(pm.m(0, 0) - 1.0) <= kStructureTolerance &&
             (n == 1 || pm.m.row(0).tail(n - 1).cwiseAbs().maxCoeff() <= kStructureTolerance);
  pm.is_unital = std::abs(pm.m(0, 0) - 1.0) <= kStructureTolerance &&
                 (n == 1 || pm.m.col(0).tail(n - 1).cwiseAbs().maxCoeff() <= kStructureTolerance);
  pm.basis = std::move(basis);
  return pm;
}

std::vector<CMatrix> compress_kraus(const QuantumChannel& phi, const CodeSpace& code) {
  if (phi.dim_in() != code.ambient_dim() || phi.dim_out() != code.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "map is " + std::to_string(phi.dim_out()) + "x" +
                                                  std::to_string(phi.dim_in()) +
                                                  " but code ambient dimension is " +
                                                  std::to_string(code.ambient_dim()));
  }
  std::vector<CMatrix> out;
  out.reserve(phi.size());
  for (const auto& k : phi.kraus()) out.push_back(code.basis().adjoint() * k * code.basis());
  return out;
}

double logical_f2(const std::vector<CMatrix>& kraus, const CVector& c) {
  double f = 0;
  for (const auto& k : kraus) f += std::norm(c.dot(k * c));
  return f;
}

// Projected gradient descent of F^2 on the unit sphere of C^d.
CVector refine(const std::vector<CMatrix>& kraus, CVector c, int iterations) {
  double f = logical_f2(kraus, c);
  double step = 0.5;
  for (int it = 0; it < iterations && step > 1e-16; ++it) {
    CVector g = CVector::Zero(c.size());
    for (const auto& k : kraus) {
      const CVector kc = k * c;
      const Complex z = c.dot(kc);
      g += z * (k.adjoint() * c) + std::conj(z) * kc;
    }
    g -= c * c.dot(g);
    if (g.norm() < 1e-15) break;
    while (step > 1e-16) {
      CVector trial = c - step * g;
      trial /= trial.norm();
      const double ft = logical_f2(kraus, trial);
      if (ft < f) {
        c = std::move(trial);
        f = ft;
        step *= 1.5;
        break;
      }
      step *= 0.5;
    }
  }
  return c;
}

struct BlockBest {
  double f2 = std::numeric_limits<double>::infinity();
  CVector state;
};

BlockBest sample_block(const std::vector<CMatrix>& kraus, Index d, std::uint64_t seed,
                       std::size_t count) {
  Rng rng(seed);
  BlockBest best;
  for (std::size_t s = 0; s < count; ++s) {
    CVector c = haar_state(d, rng);
    const double f = logical_f2(kraus, c);
    if (f < best.f2) {
      best.f2 = f;
      best.state = std::move(c);
    }
  }
  return best;
}

Eigen::Vector3d state_to_bloch(const CVector& c) {
  const Complex x = std::conj(c(0)) * c(1);
  return {2 * x.real(), 2 * x.imag(), std::norm(c(0)) - std::norm(c(1))};
}

void require_qubit(const ProcessMatrix& pm) {
  if (pm.m.rows() != 4 || pm.m.cols() != 4) {
    throw Error(ErrorCode::PreconditionViolated, "qubit solvers need a 4x4 process matrix");
  }
}

}  // namespace

QuantumChannel compress_to_code(const QuantumChannel& phi, const CodeSpace& code) {
  return QuantumChannel(compress_kraus(phi, code));
}

ProcessMatrix process_matrix(const QuantumChannel& phi, const CodeSpace& code, double leak_tol) {
  const auto kraus = compress_kraus(phi, code);
  const CMatrix p = projector(code);
  const CMatrix q = CMatrix::Identity(p.rows(), p.cols()) - p;
  double leak = 0;
  for (const auto& k : phi.kraus()) leak += (q * k * code.basis()).squaredNorm();
  if (leak > leak_tol) {
    throw Error(ErrorCode::OutputLeavesCode,
                "tr((I-P) Phi(P)) = " + std::to_string(leak) + " exceeds " + std::to_string(leak_tol));
  }
  return build_process_matrix(kraus, hermitian_basis(code));
}

ProcessMatrix compressed_process_matrix(const QuantumChannel& phi, const CodeSpace& code) {
  return build_process_matrix(compress_kraus(phi, code), hermitian_basis(code));
}

ProcessMatrix logical_process_matrix(const QuantumChannel& logical_phi) {
  if (logical_phi.dim_in() != logical_phi.dim_out()) {
    throw Error(ErrorCode::DimensionMismatch, "logical map must be square");
  }
  const CodeSpace trivial(CMatrix::Identity(logical_phi.dim_in(), logical_phi.dim_in()));
  return build_process_matrix(logical_phi.kraus(), hermitian_basis(trivial));
}

double fidelity_squared(const QuantumChannel& phi, const CVector& psi) {
  if (psi.size() != phi.dim_in() || phi.dim_in() != phi.dim_out()) {
    throw Error(ErrorCode::DimensionMismatch, "fidelity_squared: state/map dimension mismatch");
  }
  return logical_f2(phi.kraus(), psi);
}

CVector bloch_to_state(const Eigen::Vector3d& s) {
  const Eigen::Vector3d n = s / s.norm();
  const double theta = std::acos(std::clamp(n(2), -1.0, 1.0));
  const double phi = std::atan2(n(1), n(0));
  CVector c(2);
  c(0) = std::cos(theta / 2);
  c(1) = std::polar(std::sin(theta / 2), phi);
  return c;
}

WorstCaseResult worst_fidelity_unital_qubit(const ProcessMatrix& pm) {
  require_qubit(pm);
  if (!pm.is_tp || !pm.is_unital) {
    throw Error(ErrorCode::PreconditionViolated,
                "exact unital solver needs a trace-preserving unital map");
  }
  const Eigen::Matrix3d t = pm.m.bottomRightCorner(3, 3);
  const Eigen::Matrix3d n_sym = (t + t.transpose()) / 2;
  const auto eig = hermitian_eig(n_sym);
  const double t_min = eig.eigenvalues(0);
  WorstCaseResult r;
  r.method = WorstCaseMethod::ExactUnitalQubit;
  r.f2_min = (1 + t_min) / 2;
  r.eta = (1 - t_min) / 2;
  r.bloch = Eigen::Vector3d(eig.eigenvectors.col(0));
  r.logical_state = bloch_to_state(*r.bloch);
  return r;
}

WorstCaseResult worst_fidelity_qubit_lagrange(const ProcessMatrix& pm) {
  require_qubit(pm);
  const Eigen::Matrix4d ms = (pm.m + pm.m.transpose()) / 2;
  const double m00 = ms(0, 0);
  const Eigen::Vector3d b = ms.block<3, 1>(1, 0);
  const Eigen::Matrix3d n = ms.block<3, 3>(1, 1);
  const auto eig = hermitian_eig(n);
  const Eigen::Vector3d mu = eig.eigenvalues;
  const Eigen::Matrix3d q = eig.eigenvectors;
  const Eigen::Vector3d c = q.transpose() * b;

  auto objective = [&](const Eigen::Vector3d& s) { return m00 + 2 * b.dot(s) + s.dot(n * s); };

  std::vector<Eigen::Vector3d> candidates;
  for (int i = 0; i < 3; ++i) {
    candidates.push_back(q.col(i));
    candidates.push_back(-q.col(i));
  }

  const double scale = std::max(1.0, mu.cwiseAbs().maxCoeff());
  const double bnorm = b.norm();
  if (bnorm > 0) {
    // Interior branch: lambda < mu_0 with sum c_i^2 / (mu_i - lambda)^2 = 1.
    auto secular = [&](double lambda) {
      double phi = 0;
      for (int i = 0; i < 3; ++i) {
        const double gap = mu(i) - lambda;
        if (gap <= 0) return std::numeric_limits<double>::infinity();
        phi += c(i) * c(i) / (gap * gap);
      }
      return phi - 1;
    };
    double lo = mu(0) - bnorm - 1e-12 * scale;
    double hi = mu(0);
    for (int it = 0; it < 300 && hi - lo > 0; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (secular(mid) > 0) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    for (double lambda : {lo, hi}) {
      Eigen::Vector3d s = Eigen::Vector3d::Zero();
      bool finite = true;
      for (int i = 0; i < 3; ++i) {
        const double gap = mu(i) - lambda;
        if (gap <= 0) {
          finite = false;
          break;
        }
        s -= c(i) / gap * q.col(i);
      }
      if (finite && s.norm() > 0) candidates.push_back(s / s.norm());
    }

    // Boundary (hard-case) branch: lambda = mu_0 with b orthogonal to the
    // lowest eigenspace.
    const double cluster = 1e-9 * scale;
    Eigen::Vector3d base = Eigen::Vector3d::Zero();
    double phi_rest = 0;
    int lowest = 0;
    for (int i = 0; i < 3; ++i) {
      const double gap = mu(i) - mu(0);
      if (gap <= cluster) {
        ++lowest;
        continue;
      }
      base -= c(i) / gap * q.col(i);
      phi_rest += c(i) * c(i) / (gap * gap);
    }
    if (phi_rest <= 1) {
      const double tau = std::sqrt(1 - phi_rest);
      for (int i = 0; i < lowest; ++i) {
        candidates.push_back(base + tau * q.col(i));
        candidates.push_back(base - tau * q.col(i));
      }
    }
  }

  Eigen::Vector3d best = candidates.front();
  double best_value = objective(best);
  for (auto s : candidates) {
    s /= s.norm();
    const double v = objective(s);
    if (v < best_value) {
      best_value = v;
      best = s;
    }
  }
  WorstCaseResult r;
  r.method = WorstCaseMethod::LagrangeQubit;
  r.f2_min = best_value / 2;
  r.eta = 1 - r.f2_min;
  r.bloch = best;
  r.logical_state = bloch_to_state(best);
  return r;
}

WorstCaseResult worst_fidelity_sampled_logical(const QuantumChannel& logical_phi,
                                               const SamplingOptions& options) {
  if (logical_phi.dim_in() != logical_phi.dim_out()) {
    throw Error(ErrorCode::DimensionMismatch, "logical map must be square");
  }
  const Index d = logical_phi.dim_in();
  const std::size_t n = std::max<std::size_t>(options.samples, 1);
  const std::size_t block = std::max<std::size_t>(options.block_size, 1);
  const std::size_t blocks = (n + block - 1) / block;
  std::vector<BlockBest> results(blocks);
  auto run = [&](std::size_t first, std::size_t stride) {
    for (std::size_t b = first; b < blocks; b += stride) {
      const std::size_t count = std::min(block, n - b * block);
      results[b] = sample_block(logical_phi.kraus(), d, derive_seed(options.seed, b), count);
    }
  };
  const unsigned threads = std::min<unsigned>(thread_count(), static_cast<unsigned>(blocks));
  if (threads <= 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t, threads);
    for (auto& th : pool) th.join();
  }
  std::size_t winner = 0;
  for (std::size_t b = 1; b < blocks; ++b) {
    if (results[b].f2 < results[winner].f2) winner = b;
  }
  CVector c = refine(logical_phi.kraus(), results[winner].state, options.refine_iterations);
  WorstCaseResult r;
  r.method = WorstCaseMethod::Sampled;
  r.f2_min = std::min(results[winner].f2, logical_f2(logical_phi.kraus(), c));
  r.eta = 1 - r.f2_min;
  r.logical_state = std::move(c);
  if (d == 2) r.bloch = state_to_bloch(r.logical_state);
  r.samples = n;
  r.seed = options.seed;
  return r;
}

WorstCaseResult worst_fidelity_sampled(const QuantumChannel& phi, const CodeSpace& code,
                                       const SamplingOptions& options) {
  auto r = worst_fidelity_sampled_logical(compress_to_code(phi, code), options);
  r.state = code.encode(r.logical_state);
  return r;
}

WorstCaseResult worst_fidelity_logical(const QuantumChannel& logical_phi,
                                       const SamplingOptions& options) {
  if (logical_phi.dim_in() == 2 && logical_phi.dim_out() == 2) {
    const ProcessMatrix pm = logical_process_matrix(logical_phi);
    if (pm.is_tp && pm.is_unital) return worst_fidelity_unital_qubit(pm);
    return worst_fidelity_qubit_lagrange(pm);
  }
  return worst_fidelity_sampled_logical(logical_phi, options);
}

WorstCaseResult worst_fidelity(const QuantumChannel& phi, const CodeSpace& code,
                               const SamplingOptions& options) {
  auto r = worst_fidelity_logical(compress_to_code(phi, code), options);
  r.state = code.encode(r.logical_state);
  return r;
}

WorstCaseResult recovery_worst_fidelity(const QuantumChannel& recovery, const QuantumChannel& noise,
                                        const CodeSpace& code, const SamplingOptions& options) {
  if (noise.dim_in() != code.ambient_dim() || recovery.dim_in() != noise.dim_out() ||
      recovery.dim_out() != code.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "recovery, noise and code dimensions do not chain");
  }
  std::vector<CMatrix> encoded;
  encoded.reserve(noise.size());
  for (const auto& e : noise.kraus()) encoded.push_back(e * code.basis());
  std::vector<CMatrix> ops;
  ops.reserve(recovery.size() * noise.size());
  for (const auto& r : recovery.kraus()) {
    const CMatrix left = code.basis().adjoint() * r;
    for (const auto& a : encoded) {
      CMatrix k = left * a;
      if (k.norm() >= kKrausPruneTolerance) ops.push_back(std::move(k));
    }
  }
  if (ops.empty()) ops.push_back(CMatrix::Zero(code.code_dim(), code.code_dim()));
  auto result = worst_fidelity_logical(QuantumChannel(std::move(ops)), options);
  result.state = code.encode(result.logical_state);
  return result;
}

}  // namespace aqec
