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

// Dense linear algebra on Eigen matrices. Everything here is templated on the
// matrix expression so the same routines serve complex operators on the
// Hilbert space and the real symmetric blocks of process matrices.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "aqec/error.hpp"

namespace aqec {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using RealOf = typename Eigen::NumTraits<Scalar>::Real;

/// Threshold below which an eigenvalue (or squared singular value) counts as
/// zero. Relative thresholds scale with the largest magnitude in the spectrum.
struct RankTolerance {
  double value = 1e-10;
  bool relative = true;

  static constexpr RankTolerance relative_to_max(double v) { return {v, true}; }
  static constexpr RankTolerance absolute(double v) { return {v, false}; }

  double threshold(double largest_magnitude) const {
    return relative ? value * largest_magnitude : value;
  }
};

inline constexpr RankTolerance kDefaultRankTolerance{};

template <typename Scalar>
struct EigenDecomposition {
  Eigen::Matrix<RealOf<Scalar>, Eigen::Dynamic, 1> eigenvalues;  // ascending
  DenseMatrix<Scalar> eigenvectors;                              // columns
};

template <typename Scalar>
struct SupportInverseSqrt {
  DenseMatrix<Scalar> inverse_sqrt;
  DenseMatrix<Scalar> support;  // projector onto the retained eigenvectors
};

template <typename Derived>
RealOf<typename Derived::Scalar> max_abs(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return 0;
  return a.cwiseAbs().maxCoeff();
}

template <typename Derived>
RealOf<typename Derived::Scalar> hermiticity_defect(const Eigen::MatrixBase<Derived>& a) {
  return max_abs(a - a.adjoint());
}

/// Largest singular value.
template <typename Derived>
RealOf<typename Derived::Scalar> operator_norm(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<DenseMatrix<Scalar>> svd(a.eval());
  return svd.singularValues()(0);
}

template <typename A, typename B>
auto kron(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  using Scalar = typename A::Scalar;
  DenseMatrix<Scalar> out = Eigen::kroneckerProduct(a.eval(), b.eval());
  return out;
}

namespace detail {

template <typename Scalar>
Scalar phase_of(Scalar x) {
  if constexpr (Eigen::NumTraits<Scalar>::IsComplex) {
    const auto r = std::abs(x);
    return r > 0 ? x / r : Scalar(1);
  } else {
    return x < 0 ? Scalar(-1) : Scalar(1);
  }
}

template <typename Scalar>
Index dominant_index(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& v) {
  Index best = 0;
  RealOf<Scalar> best_mag = -1;
  for (Index i = 0; i < v.size(); ++i) {
    const auto mag = std::abs(v(i));
    if (mag > best_mag * (1 + 1e-12) + 1e-15) {
      best = i;
      best_mag = mag;
    }
  }
  return best;
}

}  // namespace detail

/// Eigendecomposition of a Hermitian (real symmetric) matrix. Eigenvalues come
/// back ascending. Inside a cluster of degenerate eigenvalues the vectors are
/// ordered by the index of their largest-magnitude entry, and every vector is
/// rephased so that entry is real and positive.
template <typename Derived>
EigenDecomposition<typename Derived::Scalar> hermitian_eig(const Eigen::MatrixBase<Derived>& a,
                                                           double tol = 1e-10) {
  using Scalar = typename Derived::Scalar;
  using Real = RealOf<Scalar>;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "hermitian_eig needs a square matrix, got " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()));
  }
  const Real defect = hermiticity_defect(a);
  if (defect > tol) {
    throw Error(ErrorCode::NotHermitian,
                "max |A - A^dagger| = " + std::to_string(defect) + " exceeds " + std::to_string(tol));
  }
  const DenseMatrix<Scalar> sym = (a + a.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> solver(sym);
  EigenDecomposition<Scalar> out{solver.eigenvalues(), solver.eigenvectors()};

  const Index n = out.eigenvalues.size();
  if (n == 0) return out;
  const Real scale = std::max<Real>(Real(1), out.eigenvalues.cwiseAbs().maxCoeff());
  const Real cluster_tol = Real(1e-10) * scale;

  for (Index k = 0; k < n; ++k) {
    Vec v = out.eigenvectors.col(k);
    const Index i = detail::dominant_index<Scalar>(v);
    out.eigenvectors.col(k) = v * Eigen::numext::conj(detail::phase_of(v(i)));
  }

  Index start = 0;
  while (start < n) {
    Index stop = start + 1;
    while (stop < n && out.eigenvalues(stop) - out.eigenvalues(stop - 1) <= cluster_tol) ++stop;
    if (stop - start > 1) {
      std::vector<Index> order(static_cast<std::size_t>(stop - start));
      std::iota(order.begin(), order.end(), start);
      std::vector<Index> key(order.size());
      for (std::size_t j = 0; j < order.size(); ++j) {
        key[j] = detail::dominant_index<Scalar>(Vec(out.eigenvectors.col(order[j])));
      }
      std::vector<std::size_t> perm(order.size());
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::stable_sort(perm.begin(), perm.end(),
                       [&](std::size_t x, std::size_t y) { return key[x] < key[y]; });
      DenseMatrix<Scalar> block = out.eigenvectors.middleCols(start, stop - start);
      for (std::size_t j = 0; j < perm.size(); ++j) {
        out.eigenvectors.col(start + static_cast<Index>(j)) = block.col(static_cast<Index>(perm[j]));
      }
    }
    start = stop;
  }
  return out;
}

/// Applies f to every eigenvalue above the rank threshold and maps the rest to
/// zero. Eigenvalues more negative than minus the threshold raise NotPSD.
template <typename Derived, typename Fn>
SupportInverseSqrt<typename Derived::Scalar> function_on_support(
    const Eigen::MatrixBase<Derived>& a, Fn&& f, RankTolerance rank_tol = kDefaultRankTolerance,
    double herm_tol = 1e-10) {
  using Scalar = typename Derived::Scalar;
  using Real = RealOf<Scalar>;
  const auto eig = hermitian_eig(a, herm_tol);
  const Index n = eig.eigenvalues.size();
  const Real largest = n == 0 ? Real(0) : eig.eigenvalues.cwiseAbs().maxCoeff();
  const Real thr = rank_tol.threshold(largest);
  SupportInverseSqrt<Scalar> out{DenseMatrix<Scalar>::Zero(n, n), DenseMatrix<Scalar>::Zero(n, n)};
  for (Index k = 0; k < n; ++k) {
    const Real lambda = eig.eigenvalues(k);
    if (lambda < -thr) {
      throw Error(ErrorCode::NotPSD, "eigenvalue " + std::to_string(lambda) +
                                         " below -" + std::to_string(thr));
    }
    if (lambda <= thr) continue;
    const auto v = eig.eigenvectors.col(k);
    out.inverse_sqrt.noalias() += Scalar(f(lambda)) * (v * v.adjoint());
    out.support.noalias() += v * v.adjoint();
  }
  return out;
}

/// A^{-1/2} on the support of a positive semidefinite A, together with the
/// projector onto that support.
template <typename Derived>
SupportInverseSqrt<typename Derived::Scalar> inv_sqrt_on_support(
    const Eigen::MatrixBase<Derived>& a, RankTolerance rank_tol = kDefaultRankTolerance) {
  using Real = RealOf<typename Derived::Scalar>;
  return function_on_support(a, [](Real x) { return Real(1) / std::sqrt(x); }, rank_tol);
}

/// Principal square root of a positive semidefinite matrix.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> sqrt_psd(const Eigen::MatrixBase<Derived>& a,
                                               RankTolerance rank_tol = kDefaultRankTolerance) {
  using Real = RealOf<typename Derived::Scalar>;
  return function_on_support(a, [](Real x) { return std::sqrt(x); }, rank_tol).inverse_sqrt;
}

/// Orthonormal vectors spanning part of the orthogonal complement of the
/// columns of `basis`, obtained by Gram-Schmidt on e_0, e_1, ... in order.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> complete_orthonormal(const Eigen::MatrixBase<Derived>& basis,
                                                           Index count) {
  using Scalar = typename Derived::Scalar;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const Index m = basis.rows();
  DenseMatrix<Scalar> span(m, basis.cols() + count);
  span.leftCols(basis.cols()) = basis;
  Index filled = basis.cols();
  for (Index e = 0; e < m && filled < basis.cols() + count; ++e) {
    Vec v = Vec::Unit(m, e);
    for (int pass = 0; pass < 2; ++pass) {
      for (Index j = 0; j < filled; ++j) {
        v -= span.col(j) * span.col(j).dot(v);
      }
    }
    const auto norm = v.norm();
    if (norm > 1e-7) span.col(filled++) = v / norm;
  }
  if (filled != basis.cols() + count) {
    throw Error(ErrorCode::DimensionMismatch, "cannot complete orthonormal basis");
  }
  return span.rightCols(count);
}

/// Unitary factor W of the polar decomposition A = W (A^dagger A)^{1/2}.
/// On the kernel of A the partial isometry is extended to a full isometry by
/// pairing Gram-Schmidt completions of the row and column spaces, so the
/// result only depends on A itself. Requires rows >= cols.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> polar_unitary_on_support(
    const Eigen::MatrixBase<Derived>& a, RankTolerance rank_tol = kDefaultRankTolerance) {
  using Scalar = typename Derived::Scalar;
  using Real = RealOf<Scalar>;
  const Index m = a.rows();
  const Index n = a.cols();
  if (m < n) {
    throw Error(ErrorCode::DimensionMismatch,
                "polar_unitary_on_support needs rows >= cols, got " + std::to_string(m) + "x" +
                    std::to_string(n));
  }
  Eigen::JacobiSVD<DenseMatrix<Scalar>> svd(a.eval(), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const Real largest = sv.size() == 0 ? Real(0) : sv(0) * sv(0);
  const Real thr = rank_tol.threshold(largest);
  Index rank = 0;
  while (rank < sv.size() && sv(rank) * sv(rank) > thr) ++rank;

  const DenseMatrix<Scalar> u = svd.matrixU().leftCols(rank);
  const DenseMatrix<Scalar> v = svd.matrixV().leftCols(rank);
  DenseMatrix<Scalar> w = u * v.adjoint();
  if (rank < n) {
    const DenseMatrix<Scalar> kernel = complete_orthonormal(v, n - rank);
    const DenseMatrix<Scalar> co_range = complete_orthonormal(u, n - rank);
    w.noalias() += co_range * kernel.adjoint();
  }
  return w;
}

}  // namespace aqec
