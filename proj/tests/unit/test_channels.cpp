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

#include <doctest.h>

#include "aqec/channels.hpp"
#include "aqec/model_zoo.hpp"
#include "aqec/transpose.hpp"
#include "test_support.hpp"

using namespace aqec;
using namespace aqec::testing;

namespace {

CMatrix ket_bra(Index dim, Index i, Index j) {
  CMatrix m = CMatrix::Zero(dim, dim);
  m(i, j) = 1;
  return m;
}

}  // namespace

TEST_CASE("QuantumChannel validates its Kraus list") {
  CHECK_THROWS_AS(QuantumChannel(std::vector<CMatrix>{}), Error);
  CHECK_THROWS_AS(QuantumChannel({CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)}), Error);
  const QuantumChannel e({CMatrix::Zero(3, 2)});
  CHECK(e.dim_in() == 2);
  CHECK(e.dim_out() == 3);
}

TEST_CASE("apply examples") {
  Rng rng(10);
  const CMatrix rho = random_density(3, rng);
  CHECK(max_abs(aqec::apply(identity_channel(3), rho) - rho) < 1e-15);

  const CMatrix out1 = aqec::apply(amplitude_damping(1.0), ket_bra(2, 1, 1));
  CHECK(max_abs(out1 - ket_bra(2, 0, 0)) < 1e-15);

  const CMatrix out2 = aqec::apply(amplitude_damping(0.3), ket_bra(2, 1, 1));
  CHECK(out2(0, 0).real() == doctest::Approx(0.3));
  CHECK(out2(1, 1).real() == doctest::Approx(0.7));
  CHECK(std::abs(out2(0, 1)) < 1e-15);

  CHECK_THROWS_AS(aqec::apply(identity_channel(2), rho), Error);
}

TEST_CASE("compose examples") {
  Rng rng(11);
  const auto e = random_channel(3, 3, 2, rng);
  CHECK(channels_equal(compose(identity_channel(3), e), e));

  const auto r = random_channel(3, 3, 3, rng);
  CHECK(compose(r, e, Pruning::None).size() == 6);
  const CMatrix rho = random_density(3, rng);
  CHECK(max_abs(aqec::apply(compose(r, e), rho) - aqec::apply(r, aqec::apply(e, rho))) < 1e-12);

  CHECK_THROWS_AS(compose(identity_channel(2), e), Error);
}

TEST_CASE("compose of transpose recovery and a correctable channel projects onto the code") {
  const auto inst = bit_flip_instance({0.7, 0.1, 0.1, 0.1});
  const CMatrix p = projector(inst.code);
  const auto rp = transpose_channel(inst.noise, inst.code).recovery;
  const QuantumChannel proj({p});
  const auto on_code = compose(compose(rp, inst.noise), proj);
  CHECK(channels_equal(on_code, proj, 1e-10));
}

TEST_CASE("adjoint examples") {
  Rng rng(12);
  const CMatrix u = haar_unitary(3, rng);
  const auto adj = adjoint(unitary_channel(u));
  CHECK(adj.size() == 1);
  CHECK(max_abs(adj[0] - u.adjoint()) < 1e-15);

  const auto e = random_channel(2, 3, 2, rng);
  CHECK(channels_equal(adjoint(adjoint(e)), e));

  const auto ad = tensor_power(amplitude_damping(0.2), 2);
  const CMatrix a = rng.ginibre(4, 4);
  const CMatrix b = rng.ginibre(4, 4);
  const Complex lhs = (a * aqec::apply(ad, b)).trace();
  const Complex rhs = (aqec::apply(adjoint(ad), a) * b).trace();
  CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("tensor_power examples") {
  const auto ad = amplitude_damping(0.3);
  CHECK(channels_equal(tensor_power(ad, 1), ad));
  const auto ad2 = tensor_power(ad, 2);
  CHECK(ad2.size() == 4);
  CHECK(ad2.dim_in() == 4);
  CHECK(ad2.dim_out() == 4);
  // lexicographic order: index 1 is E0 (x) E1
  CHECK(max_abs(ad2[1] - kron(ad[0], ad[1])) < 1e-15);
  CHECK(max_abs(ad2[2] - kron(ad[1], ad[0])) < 1e-15);

  const auto ad4 = tensor_power(amplitude_damping(0.1), 4);
  const CMatrix ground = ket_bra(16, 0, 0);
  CHECK(max_abs(aqec::apply(ad4, ground) - ground) < 1e-15);
  CHECK(tp_defect(ad4) < 1e-12);
}

TEST_CASE("tensor_power respects the budget") {
  try {
    tensor_power(amplitude_damping(0.1), 12, Pruning::None, 1 << 20);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("tp_defect examples") {
  CHECK(tp_defect(amplitude_damping(0.37)) < 1e-12);
  const QuantumChannel half({0.5 * CMatrix::Identity(2, 2)});
  CHECK(tp_defect(half) == doctest::Approx(0.75));
  CHECK(tp_defect(truncated_amplitude_damping(0.1, 4, 1)) > 1e-4);
}

TEST_CASE("restricted_tp_factor examples") {
  Rng rng(13);
  const auto e = random_channel(4, 4, 3, rng);
  const CMatrix p = projector(random_code(4, 2, 5));
  REQUIRE(restricted_tp_factor(e, p));
  CHECK(*restricted_tp_factor(e, p) == doctest::Approx(1.0));

  const QuantumChannel half({0.5 * CMatrix::Identity(4, 4)});
  REQUIRE(restricted_tp_factor(half, p));
  CHECK(*restricted_tp_factor(half, p) == doctest::Approx(0.25));

  // Leung code under single-decay truncation: P (sum E^dag E) P = a P with a = 1 - O(gamma^2)
  const double g = 0.1;
  const auto tr = truncated_amplitude_damping(g, 4, 1);
  const CMatrix pl = projector(leung_code());
  const CMatrix s = pl * kraus_sum(tr) * pl;
  const double a = s.trace().real() / 2.0;
  CHECK(1 - a > 0);
  CHECK(1 - a < 10 * g * g);
  CHECK(max_abs(s - a * pl) < 10 * g * g);
  CHECK(restricted_tp_factor(tr, pl, 10 * g * g));
}

TEST_CASE("choi and channels_equal") {
  Rng rng(14);
  const auto e = random_channel(3, 2, 4, rng);
  const CMatrix u = haar_unitary(4, rng);
  CHECK(channels_equal(e, remix_kraus(e, u), 1e-12));

  const auto ch = choi(e);
  CHECK(ch.matrix.rows() == 6);
  CHECK(hermitian_eig(ch.matrix).eigenvalues(0) > -1e-12);

  CMatrix x = CMatrix::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1;
  const QuantumChannel flip({std::sqrt(0.5) * CMatrix(CMatrix::Identity(2, 2)), std::sqrt(0.5) * x});
  CHECK_FALSE(channels_equal(identity_channel(2), flip));
  CHECK_THROWS_AS(channels_equal(identity_channel(2), identity_channel(3)), Error);
}

TEST_CASE("prune and minimal_kraus keep the channel") {
  Rng rng(15);
  const auto e = random_channel(2, 2, 2, rng);
  auto ops = e.kraus();
  ops.push_back(CMatrix::Zero(2, 2));
  ops.push_back(ops[0]);
  const QuantumChannel padded(ops);
  CHECK(prune(padded).size() == 3);
  const auto minimal = minimal_kraus(padded);
  CHECK(minimal.size() == 2);
  CHECK(channels_equal(minimal, padded, 1e-12));
}
