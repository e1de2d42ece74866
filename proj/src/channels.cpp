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

#include "aqec/channels.hpp"

#include <string>

namespace aqec {

namespace {

std::string shape(const CMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_square(const CMatrix& m, Index dim, const char* what) {
  if (m.rows() != dim || m.cols() != dim) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": expected " + std::to_string(dim) + "x" +
                    std::to_string(dim) + ", got " + shape(m));
  }
}

std::vector<CMatrix> maybe_prune(std::vector<CMatrix> ops, Pruning pruning) {
  if (pruning == Pruning::None) return ops;
  std::vector<CMatrix> kept;
  kept.reserve(ops.size());
  for (auto& k : ops) {
    if (k.norm() >= kKrausPruneTolerance) kept.push_back(std::move(k));
  }
  if (kept.empty()) kept.push_back(CMatrix::Zero(ops.front().rows(), ops.front().cols()));
  return kept;
}

}  // namespace

QuantumChannel::QuantumChannel(std::vector<CMatrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw Error(ErrorCode::InvalidChannel, "channel needs at least one Kraus operator");
  const Index rows = kraus_.front().rows();
  const Index cols = kraus_.front().cols();
  if (rows < 1 || cols < 1) throw Error(ErrorCode::InvalidChannel, "empty Kraus operator");
  for (std::size_t i = 1; i < kraus_.size(); ++i) {
    if (kraus_[i].rows() != rows || kraus_[i].cols() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "Kraus operator " + std::to_string(i) + " is " +
                                                    shape(kraus_[i]) + ", expected " +
                                                    shape(kraus_.front()));
    }
  }
}

QuantumChannel identity_channel(Index dim) { return QuantumChannel({CMatrix::Identity(dim, dim)}); }

QuantumChannel unitary_channel(const CMatrix& u) { return QuantumChannel({u}); }

CMatrix apply(const QuantumChannel& channel, const CMatrix& rho) {
  require_square(rho, channel.dim_in(), "apply");
  CMatrix out = CMatrix::Zero(channel.dim_out(), channel.dim_out());
  for (const auto& k : channel.kraus()) out.noalias() += k * rho * k.adjoint();
  return out;
}

QuantumChannel compose(const QuantumChannel& outer, const QuantumChannel& inner, Pruning pruning) {
  if (inner.dim_out() != outer.dim_in()) {
    throw Error(ErrorCode::DimensionMismatch,
                "compose: inner output " + std::to_string(inner.dim_out()) +
                    " != outer input " + std::to_string(outer.dim_in()));
  }
  std::vector<CMatrix> ops;
  ops.reserve(outer.size() * inner.size());
  for (const auto& r : outer.kraus()) {
    for (const auto& e : inner.kraus()) ops.push_back(r * e);
  }
  return QuantumChannel(maybe_prune(std::move(ops), pruning));
}

QuantumChannel adjoint(const QuantumChannel& channel) {
  std::vector<CMatrix> ops;
  ops.reserve(channel.size());
  for (const auto& k : channel.kraus()) ops.push_back(k.adjoint());
  return QuantumChannel(std::move(ops));
}

QuantumChannel tensor_product(const QuantumChannel& a, const QuantumChannel& b, Pruning pruning,
                              std::size_t budget) {
  const auto entries = a.size() * b.size() * static_cast<std::size_t>(a.dim_out() * b.dim_out()) *
                       static_cast<std::size_t>(a.dim_in() * b.dim_in());
  if (entries > budget) {
    throw Error(ErrorCode::BudgetExceeded, "tensor product needs " + std::to_string(entries) +
                                               " complex entries, budget " +
                                               std::to_string(budget));
  }
  std::vector<CMatrix> ops;
  ops.reserve(a.size() * b.size());
  for (const auto& x : a.kraus()) {
    for (const auto& y : b.kraus()) ops.push_back(kron(x, y));
  }
  return QuantumChannel(maybe_prune(std::move(ops), pruning));
}

QuantumChannel tensor_power(const QuantumChannel& channel, int n, Pruning pruning,
                            std::size_t budget) {
  if (n < 1) throw Error(ErrorCode::ParamOutOfRange, "tensor_power needs n >= 1");
  double entries = 1;
  const double per_factor = static_cast<double>(channel.size()) *
                            static_cast<double>(channel.dim_in() * channel.dim_out());
  for (int i = 0; i < n; ++i) entries *= per_factor;
  if (entries > static_cast<double>(budget)) {
    throw Error(ErrorCode::BudgetExceeded, "tensor power " + std::to_string(n) + " needs " +
                                               std::to_string(entries) +
                                               " complex entries, budget " +
                                               std::to_string(budget));
  }
  QuantumChannel out = channel;
  for (int i = 1; i < n; ++i) out = tensor_product(out, channel, Pruning::None, budget);
  return QuantumChannel(maybe_prune(out.kraus(), pruning));
}

QuantumChannel remix_kraus(const QuantumChannel& channel, const CMatrix& u) {
  if (u.rows() != static_cast<Index>(channel.size())) {
    throw Error(ErrorCode::DimensionMismatch, "remix_kraus: mixing matrix has " +
                                                  std::to_string(u.rows()) + " rows for " +
                                                  std::to_string(channel.size()) + " operators");
  }
  std::vector<CMatrix> ops;
  ops.reserve(static_cast<std::size_t>(u.cols()));
  for (Index k = 0; k < u.cols(); ++k) {
    CMatrix f = CMatrix::Zero(channel.dim_out(), channel.dim_in());
    for (std::size_t i = 0; i < channel.size(); ++i) f += u(static_cast<Index>(i), k) * channel[i];
    ops.push_back(std::move(f));
  }
  return QuantumChannel(std::move(ops));
}

QuantumChannel prune(const QuantumChannel& channel, double tol) {
  std::vector<CMatrix> kept;
  for (const auto& k : channel.kraus()) {
    if (k.norm() >= tol) kept.push_back(k);
  }
  if (kept.empty()) kept.push_back(CMatrix::Zero(channel.dim_out(), channel.dim_in()));
  return QuantumChannel(std::move(kept));
}

QuantumChannel minimal_kraus(const QuantumChannel& channel, double tol) {
  const ChoiMatrix j = choi(channel);
  const auto eig = hermitian_eig(j.matrix, 1e-9);
  std::vector<CMatrix> ops;
  for (Index k = eig.eigenvalues.size() - 1; k >= 0; --k) {
    const double lambda = eig.eigenvalues(k);
    if (lambda <= tol) break;
    CMatrix op(j.dim_out, j.dim_in);
    for (Index i = 0; i < j.dim_in; ++i) {
      for (Index a = 0; a < j.dim_out; ++a) op(a, i) = eig.eigenvectors(i * j.dim_out + a, k);
    }
    ops.push_back(std::sqrt(lambda) * op);
  }
  if (ops.empty()) ops.push_back(CMatrix::Zero(j.dim_out, j.dim_in));
  return QuantumChannel(std::move(ops));
}

CMatrix kraus_sum(const QuantumChannel& channel) {
  CMatrix s = CMatrix::Zero(channel.dim_in(), channel.dim_in());
  for (const auto& k : channel.kraus()) s.noalias() += k.adjoint() * k;
  return s;
}

double tp_defect(const QuantumChannel& channel) {
  const CMatrix s = kraus_sum(channel) - CMatrix::Identity(channel.dim_in(), channel.dim_in());
  return operator_norm(s);
}

std::optional<double> restricted_tp_factor(const QuantumChannel& channel, const CMatrix& projector,
                                           double tol) {
  require_square(projector, channel.dim_in(), "restricted_tp_factor");
  const CMatrix x = projector * kraus_sum(channel) * projector;
  const double rank = projector.trace().real();
  if (rank <= 0.5) return std::nullopt;
  const double a = x.trace().real() / rank;
  if (max_abs(x - a * projector) > tol) return std::nullopt;
  return a;
}

ChoiMatrix choi(const QuantumChannel& channel) {
  const Index din = channel.dim_in();
  const Index dout = channel.dim_out();
  CMatrix j = CMatrix::Zero(din * dout, din * dout);
  CVector v(din * dout);
  for (const auto& k : channel.kraus()) {
    for (Index i = 0; i < din; ++i) v.segment(i * dout, dout) = k.col(i);
    j.noalias() += v * v.adjoint();
  }
  return {std::move(j), din, dout};
}

double choi_distance(const QuantumChannel& a, const QuantumChannel& b) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) {
    throw Error(ErrorCode::DimensionMismatch, "channels_equal: channel shapes differ");
  }
  return max_abs(choi(a).matrix - choi(b).matrix);
}

bool channels_equal(const QuantumChannel& a, const QuantumChannel& b, double tol) {
  return choi_distance(a, b) <= tol;
}

}  // namespace aqec
