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

// Randomized invariant checks. Every case draws from a generator seeded by
// derive_seed(kMasterSeed, stream, case), so failures replay exactly.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "aqec/model_zoo.hpp"
#include "aqec/qec_conditions.hpp"
#include "aqec/serialize.hpp"
#include "aqec/transpose.hpp"
#include "aqec/worst_fidelity.hpp"
#include "commands.hpp"
#include "test_support.hpp"

using namespace aqec;
using namespace aqec::testing;

namespace {

constexpr int kCases = 100;

Rng case_rng(std::uint64_t stream, int k) {
  return Rng(derive_seed(derive_seed(kMasterSeed, stream), static_cast<std::uint64_t>(k)));
}

Index uniform_int(Rng& rng, Index lo, Index hi) {
  return lo + static_cast<Index>(rng.uniform() * static_cast<double>(hi - lo + 1));
}

CMatrix random_psd(Index dim, Index rank, Rng& rng) {
  const CMatrix g = rng.ginibre(dim, rank);
  return g * g.adjoint();
}

// A qubit code and a TP channel on a small ambient space.
struct Pair {
  QuantumChannel noise;
  CodeSpace code;
};

Pair random_pair(Rng& rng, Index d = 2) {
  const Index dim = uniform_int(rng, d + 1, 6);
  const Index n = uniform_int(rng, 1, 4);
  return {random_channel(dim, dim, n, rng), random_code(dim, d, rng.next_u64())};
}

BitFlipInstance random_perfect_instance(Rng& rng) {
  std::vector<double> w(4);
  double total = 0;
  for (auto& x : w) total += (x = 0.05 + rng.uniform());
  for (auto& x : w) x /= total;
  const auto base = rotate_instance(bit_flip_instance(w), haar_unitary(8, rng));
  return {base.code, remix_kraus(base.noise, haar_unitary(4, rng))};
}

BitFlipInstance perturb(const BitFlipInstance& inst, Rng& rng) {
  const double delta = 1e-3 * (1 + rng.uniform());
  std::vector<CMatrix> ops;
  for (const auto& k : inst.noise.kraus()) ops.push_back(std::sqrt(1 - delta) * k);
  ops.push_back(std::sqrt(delta) * haar_unitary(8, rng));
  return {inst.code, QuantumChannel(ops)};
}

RMatrix n_sym(const ProcessMatrix& pm) {
  const RMatrix t = pm.m.bottomRightCorner(3, 3);
  return (t + t.transpose()) / 2;
}

}  // namespace

// ---------------------------------------------------------------- linalg-core

TEST_CASE("linalg: inverse square root on support commutes with A") {
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(1, k);
    const Index dim = uniform_int(rng, 1, 8);
    const CMatrix a = random_psd(dim, uniform_int(rng, 1, dim), rng);
    const auto r = inv_sqrt_on_support(a);
    CHECK(max_abs(r.inverse_sqrt * a - a * r.inverse_sqrt) < 1e-8 * std::max(1.0, max_abs(a)));
    CHECK(max_abs(r.inverse_sqrt * a * r.inverse_sqrt - r.support) < 1e-8);
  }
}

TEST_CASE("linalg: polar factor is unitary") {
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(2, k);
    const Index m = uniform_int(rng, 1, 8);
    const Index n = uniform_int(rng, 1, m);
    // rank-deficient half of the time
    CMatrix a = rng.ginibre(m, n);
    if (k % 2 && n > 1) a.col(n - 1) = a.col(0) * Complex(0.3, -0.2);
    const CMatrix w = polar_unitary_on_support(a);
    CHECK(max_abs(w.adjoint() * w - CMatrix::Identity(n, n)) < 1e-10);
    CHECK(max_abs(w * sqrt_psd(CMatrix(a.adjoint() * a)) - a) < 1e-9);
  }
}

TEST_CASE("linalg: eigenvalue sum equals the trace and eigenpairs hold") {
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(3, k);
    const Index dim = uniform_int(rng, 1, 10);
    const CMatrix a = random_hermitian(dim, rng);
    const auto e = hermitian_eig(a);
    CHECK(std::abs(e.eigenvalues.sum() - a.trace().real()) < 1e-10 * dim);
    CHECK(max_abs(a * e.eigenvectors - e.eigenvectors * e.eigenvalues.cast<Complex>().asDiagonal()) <
          1e-10 * std::max(1.0, operator_norm(a)));
    CHECK(max_abs(e.eigenvectors.adjoint() * e.eigenvectors - CMatrix::Identity(dim, dim)) < 1e-12);
  }
}

// ------------------------------------------------------------------- channels

TEST_CASE("channels: apply is linear") {
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(4, k);
    const Index din = uniform_int(rng, 1, 5);
    const auto e = random_cp_map(din, uniform_int(rng, 1, 5), uniform_int(rng, 1, 4), rng);
    const CMatrix a = rng.ginibre(din, din);
    const CMatrix b = rng.ginibre(din, din);
    const Complex x = rng.complex_normal(), y = rng.complex_normal();
    const CMatrix lhs = aqec::apply(e, x * a + y * b);
    const CMatrix rhs = x * aqec::apply(e, a) + y * aqec::apply(e, b);
    CHECK(max_abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("channels: Choi matrices are PSD and TP channels preserve trace") {
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(5, k);
    const Index din = uniform_int(rng, 1, 4), dout = uniform_int(rng, 1, 4);
    const auto e = random_channel(din, dout, uniform_int(rng, 1, 4), rng);
    const auto f = random_cp_map(dout, din, uniform_int(rng, 1, 3), rng);
    for (const auto& c : {e, f, compose(f, e), tensor_product(e, f)}) {
      CHECK(hermitian_eig(choi(c).matrix).eigenvalues(0) >= -1e-10);
    }
    CHECK(tp_defect(e) < 1e-12);
    const CMatrix rho = random_density(din, rng);
    CHECK(std::abs(aqec::apply(e, rho).trace() - 1.0) < 1e-10);
    // partial trace of the Choi matrix over the output is the identity
    const auto ch = choi(e);
    for (Index i = 0; i < din; ++i)
      for (Index j = 0; j < din; ++j) {
        Complex s = 0;
        for (Index a = 0; a < dout; ++a) s += ch.matrix(i * dout + a, j * dout + a);
        CHECK(std::abs(s - (i == j ? 1.0 : 0.0)) < 1e-10);
      }
  }
}

TEST_CASE("channels: composition is associative") {
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(6, k);
    const Index d0 = uniform_int(rng, 1, 3), d1 = uniform_int(rng, 1, 3);
    const Index d2 = uniform_int(rng, 1, 3), d3 = uniform_int(rng, 1, 3);
    const auto a = random_channel(d0, d1, 2, rng);
    const auto b = random_channel(d1, d2, 2, rng);
    const auto c = random_channel(d2, d3, 2, rng);
    CHECK(channels_equal(compose(c, compose(b, a)), compose(compose(c, b), a), 1e-12));
  }
}

// ---------------------------------------------------------------------- codes

TEST_CASE("codes: Bloch state purity") {
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(7, k);
    const CodeSpace code = random_code(uniform_int(rng, 2, 6), 2, rng.next_u64());
    const Eigen::Vector3d s = random_bloch(rng);
    const CMatrix rho = bloch_state(code, s);
    CHECK(std::abs((rho * rho).trace().real() - (1 + s.squaredNorm()) / 2) < 1e-12);
    CHECK(std::abs(rho.trace().real() - 1) < 1e-12);
  }
}

TEST_CASE("codes: random codes are orthonormal with idempotent projectors") {
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(8, k);
    const Index dim = uniform_int(rng, 1, 16);
    const Index d = uniform_int(rng, 1, dim);
    const CodeSpace code = random_code(dim, d, rng.next_u64());
    CHECK(max_abs(code.basis().adjoint() * code.basis() - CMatrix::Identity(d, d)) < 1e-12);
    const CMatrix p = projector(code);
    CHECK(max_abs(p * p - p) < 1e-12);
    CHECK(max_abs(p - p.adjoint()) < 1e-12);
    CHECK(std::abs(p.trace().real() - static_cast<double>(d)) < 1e-12);
  }
}

TEST_CASE("codes: operator bases are supported on the code and orthonormal") {
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(9, k);
    const Index d = k % 2 ? 2 : uniform_int(rng, 2, 4);
    const Index dim = uniform_int(rng, d, 7);
    const CodeSpace code = random_code(dim, d, rng.next_u64());
    const auto basis = d == 2 ? pauli_basis(code) : hermitian_basis(code);
    const CMatrix q = CMatrix::Identity(dim, dim) - projector(code);
    REQUIRE(basis.elements.size() == static_cast<std::size_t>(d * d));
    for (std::size_t a = 0; a < basis.elements.size(); ++a) {
      const CMatrix& o = basis.elements[a];
      CHECK(max_abs(q * o * q) < 1e-12);
      CHECK(max_abs(q * o) < 1e-12);
      CHECK(max_abs(o - o.adjoint()) < 1e-12);
      if (a > 0) CHECK(std::abs(o.trace()) < 1e-12);
      for (std::size_t b = 0; b < basis.elements.size(); ++b)
        CHECK(std::abs((o * basis.elements[b]).trace() - (a == b ? Complex(d) : 0.0)) < 1e-12);
    }
  }
}

// ------------------------------------------------------------------ transpose

TEST_CASE("transpose: recovered Kraus set is Hermitian-closed and T symmetric") {
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(10, k);
    const auto [noise, code] = random_pair(rng);
    const auto kraus = recovered_logical_kraus(noise_on_code(noise, code));
    const std::size_t n = noise.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(max_abs(kraus[i * n + j].adjoint() - kraus[j * n + i]) < 1e-10);
    const auto pm = process_matrix(recovered_channel(noise, code), code);
    const RMatrix t = pm.m.bottomRightCorner(3, 3);
    CHECK(max_abs(t - t.transpose()) < 1e-10);
  }
}

TEST_CASE("transpose: recovered channel is unital on the code") {
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(11, k);
    const auto [noise, code] = random_pair(rng, uniform_int(rng, 1, 3));
    const CMatrix p = projector(code);
    CHECK(max_abs(aqec::apply(recovered_channel(noise, code), p) - p) < 1e-10);
  }
}

TEST_CASE("transpose: recovery is Kraus-gauge invariant, TP on its support, lands in the code") {
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(12, k);
    const auto [noise, code] = random_pair(rng);
    const auto rp = transpose_channel(noise, code);
    const auto remixed = remix_kraus(noise, haar_unitary(static_cast<Index>(noise.size()), rng));
    CHECK(choi_distance(rp.recovery, transpose_channel(remixed, code).recovery) < 1e-10);
    const CMatrix& pe = rp.support_projector;
    CHECK(max_abs(pe * kraus_sum(rp.recovery) * pe - pe) < 1e-10);
    const CMatrix q = CMatrix::Identity(code.ambient_dim(), code.ambient_dim()) - projector(code);
    const CMatrix out = aqec::apply(rp.recovery, random_density(code.ambient_dim(), rng));
    CHECK(max_abs(q * out * q) < 1e-10);
  }
}

// ------------------------------------------------------------- qec-conditions

TEST_CASE("qec: perfect and alternate conditions agree on generated instances") {
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(13, k);
    auto inst = random_perfect_instance(rng);
    if (k % 2) inst = perturb(inst, rng);
    const auto perfect = check_perfect_qec(inst.noise, inst.code);
    const auto alt = alternate_condition_residual(inst.noise, inst.code);
    CHECK((perfect.residual <= 1e-10) == (alt.residual <= 1e-10));
    CHECK((k % 2 == 0) == (perfect.residual <= 1e-10));
    if (perfect.certificate) {
      const auto& c = *perfect.certificate;
      CHECK(max_abs(c.alpha - c.alpha.adjoint()) < 1e-12);
      CHECK(c.diag_values.minCoeff() >= 0);
      CHECK(std::abs(c.diag_values.sum() - *restricted_tp_factor(inst.noise, projector(inst.code))) <
            1e-10);
      CHECK(max_abs(alt.beta - sqrt_psd(c.alpha)) < 1e-9);
    }
  }
}

TEST_CASE("qec: eta matches the worst-case loss of the recovered channel") {
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(14, k);
    const bool qudit = k % 10 == 9;
    const auto [noise, code] = random_pair(rng, qudit ? 3 : 2);
    const SamplingOptions opts{2000, rng.next_u64()};
    const auto diag = aqec_diagnostics(noise, code, 0.05, opts);
    const auto direct = worst_fidelity(recovered_channel(noise, code), code, opts);
    if (qudit) {
      // both are sample minima; an independent run with a different seed
      // stays within the sampling gap
      CHECK(std::abs(diag.eta - direct.eta) < 1e-9);
      const auto other = worst_fidelity(recovered_channel(noise, code), code,
                                        SamplingOptions{2000, rng.next_u64()});
      CHECK(std::abs(other.eta - diag.eta) < 1e-3);
    } else {
      CHECK(std::abs(diag.eta - direct.eta) < 1e-9);
    }
  }
}

TEST_CASE("qec: delta_sum_norm bounds eta; Deltas are traceless and reconstruct") {
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(15, k);
    const auto [noise, code] = random_pair(rng);
    const auto diag = aqec_diagnostics(noise, code, 0.05);
    CHECK(diag.eta <= diag.delta_sum_norm + 1e-10);
    CHECK(diag.eta >= 0);
    CHECK(diag.eta <= 1);
    const auto kraus = recovered_logical_kraus(noise_on_code(noise, code));
    for (std::size_t i = 0; i < diag.deltas.size(); ++i) {
      CHECK(std::abs(diag.deltas[i].trace()) < 1e-10);
      const Complex b = diag.beta(static_cast<Index>(i) / diag.n_kraus, static_cast<Index>(i) % diag.n_kraus);
      CHECK(max_abs(b * CMatrix::Identity(2, 2) + diag.deltas[i] - kraus[i]) < 1e-10);
    }
  }
}

TEST_CASE("qec: NotCorrectable verdicts are sound against candidate recoveries") {
  int not_correctable = 0;
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(16, k);
    const auto [noise, code] = random_pair(rng);
    const double eta = aqec_diagnostics(noise, code, 0.0).eta;
    const double eps = eta * (0.05 + 0.5 * rng.uniform());
    const auto diag = aqec_diagnostics(noise, code, eps);
    if (diag.verdict != Verdict::NotCorrectable) continue;
    ++not_correctable;
    const Index dim = code.ambient_dim();
    // candidates: identity, transpose recovery, and a random recovery into the code
    std::vector<QuantumChannel> candidates{identity_channel(dim),
                                           transpose_channel(noise, code).recovery};
    const auto r = random_channel(dim, 2, 3, rng);
    std::vector<CMatrix> into;
    for (const auto& op : r.kraus()) into.push_back(code.basis() * op);
    candidates.emplace_back(into);
    for (const auto& c : candidates) CHECK(recovery_worst_fidelity(c, noise, code).eta > eps);
  }
  CHECK(not_correctable > 10);
}

// -------------------------------------------------------------- worst-fidelity

TEST_CASE("worst-fidelity: F^2 = s^T M s / d = s^T M_sym s / d") {
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(17, k);
    const auto logical = k % 2 ? random_channel(2, 2, uniform_int(rng, 1, 4), rng)
                               : random_cp_map(2, 2, uniform_int(rng, 1, 4), rng);
    const auto pm = logical_process_matrix(logical);
    CHECK(max_abs(pm.m.imag()) == 0);
    const RMatrix sym = (pm.m + pm.m.transpose()) / 2;
    const Eigen::Vector3d n = random_bloch(rng).normalized();
    const Eigen::Vector4d s(1, n.x(), n.y(), n.z());
    const double f2 = direct_f2(logical, qubit_state(n));
    CHECK(std::abs(f2 - s.dot(pm.m * s) / 2) < 1e-10);
    CHECK(std::abs(s.dot(sym * s) - s.dot(pm.m * s)) < 1e-12);
    if (k % 2) CHECK(std::abs(pm.m(0, 0) - 1) < 1e-12);
  }
}

TEST_CASE("worst-fidelity: process matrix structure flags") {
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(18, k);
    const auto u = random_unital_qubit_map(rng);
    const auto pm = logical_process_matrix(u);
    CHECK(pm.is_tp);
    CHECK(pm.is_unital);
    for (int a = 1; a < 4; ++a) {
      CHECK(std::abs(pm.m(0, a)) < 1e-12);
      CHECK(std::abs(pm.m(a, 0)) < 1e-12);
    }
    const auto ad = logical_process_matrix(amplitude_damping(0.05 + 0.9 * rng.uniform()));
    CHECK(ad.is_tp);
    CHECK_FALSE(ad.is_unital);
  }
}

TEST_CASE("worst-fidelity: sampled minimum never beats the exact minimum") {
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(19, k);
    const auto u = random_unital_qubit_map(rng);
    const double exact = worst_fidelity_unital_qubit(logical_process_matrix(u)).f2_min;
    const auto sampled = worst_fidelity_sampled_logical(u, SamplingOptions{200, rng.next_u64()});
    CHECK(sampled.f2_min >= exact - 1e-12);
  }
}

TEST_CASE("worst-fidelity: exact minima lower-bound random code states") {
  for (int k = 0; k < kCases / 10; ++k) {
    Rng rng = case_rng(20, k);
    const auto [noise, code] = random_pair(rng);
    const auto phi = recovered_channel(noise, code);
    const auto r = worst_fidelity(phi, code);
    CHECK(r.method != WorstCaseMethod::Sampled);
    for (int t = 0; t < 1000; ++t) {
      const CVector psi = code.encode(haar_state(2, rng));
      CHECK(r.f2_min <= direct_f2(phi, psi) + 1e-9);
    }
    CHECK(std::abs(direct_f2(phi, r.state) - r.f2_min) < 1e-9);
  }
}

TEST_CASE("worst-fidelity: rotating N_sym leaves eta unchanged") {
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(21, k);
    const auto pm = logical_process_matrix(random_unital_qubit_map(rng));
    const Eigen::Matrix3d q = random_rotation(rng);
    ProcessMatrix rotated = pm;
    rotated.m.bottomRightCorner(3, 3) = q * pm.m.bottomRightCorner(3, 3) * q.transpose();
    CHECK(max_abs(n_sym(rotated) - q * n_sym(pm) * q.transpose()) < 1e-14);
    CHECK(std::abs(worst_fidelity_unital_qubit(rotated).eta - worst_fidelity_unital_qubit(pm).eta) <
          1e-12);
  }
}

// ------------------------------------------------------------------ model-zoo

TEST_CASE("model-zoo: amplitude damping composes multiplicatively") {
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(22, k);
    const double g1 = rng.uniform(), g2 = rng.uniform();
    CHECK(channels_equal(compose(amplitude_damping(g1), amplitude_damping(g2)),
                         amplitude_damping(1 - (1 - g1) * (1 - g2)), 1e-12));
  }
}

TEST_CASE("model-zoo: Leung code words are stabilized by XXXX and ZZII") {
  const CodeSpace code = leung_code();
  CMatrix x = CMatrix::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1;
  CMatrix z = CMatrix::Identity(2, 2);
  z(1, 1) = -1;
  const CMatrix id = CMatrix::Identity(2, 2);
  const CMatrix xxxx = kron(kron(x, x), kron(x, x));
  const CMatrix zzii = kron(kron(z, z), kron(id, id));
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(23, k);
    const CVector psi = code.encode(haar_state(2, rng));
    CHECK((xxxx * psi - psi).norm() < 1e-12);
    CHECK((zzii * psi - psi).norm() < 1e-12);
  }
}

TEST_CASE("model-zoo: example-5 loss ratio") {
  int k = 0;
  for (Index d : {3, 4, 5}) {
    for (double p : {0.01, 0.05}) {
      const auto m = example5_channel(d, p, d + 1);
      const SamplingOptions opts{20000, derive_seed(kMasterSeed, 24 + k++)};
      const double eta_p = recovery_worst_fidelity(transpose_channel(m.channel, m.code).recovery,
                                                   m.channel, m.code, opts).eta;
      const double eta_0 = recovery_worst_fidelity(identity_channel(d + 1), m.channel, m.code, opts).eta;
      const double expected = (d - 1) / (1 + (d - 1) * p);
      CHECK(eta_p / eta_0 == doctest::Approx(expected).epsilon(1e-4));
    }
  }
}

// ------------------------------------------------------------------------ cli

namespace {

std::string run_cli_text(std::vector<std::string> args, int* code) {
  args.insert(args.begin(), "aqec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  *code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

std::string drop_first_line(const std::string& s) { return s.substr(s.find('\n') + 1); }

}  // namespace

TEST_CASE("cli: sweeps are sorted, reproducible and carry their config") {
  const std::vector<std::string> pool{"ad+identity", "leung41+transpose", "leung41+leung",
                                      "example5+identity", "example5+transpose", "leung41+fletcher"};
  for (int k = 0; k < kCases; ++k) {
    Rng rng = case_rng(25, k);
    std::string curves;
    for (const auto& c : pool)
      if (rng.uniform() < 0.4) curves += (curves.empty() ? "" : ",") + c;
    if (curves.empty()) curves = pool[static_cast<std::size_t>(k) % pool.size()];
    const double step = 0.05 * static_cast<double>(uniform_int(rng, 1, 3));
    const std::uint64_t seed = rng.next_u64() % 1000;
    const std::vector<std::string> args{"sweep", "--curves", curves, "--gamma-stop",
                                        std::to_string(2 * step), "--gamma-step", std::to_string(step),
                                        "--samples", "64", "--seed", std::to_string(seed)};
    int c1 = 0, c2 = 0;
    const std::string a = run_cli_text(args, &c1);
    const std::string b = run_cli_text(args, &c2);
    REQUIRE(c1 == 0);
    CHECK(drop_first_line(a) == drop_first_line(b));
    std::istringstream in(drop_first_line(a));
    std::string config_line, header, row;
    std::getline(in, config_line);
    std::getline(in, header);
    const Json cfg = Json::parse(config_line.substr(std::string("# config: ").size()));
    CHECK(cfg.at("seed") == seed);
    CHECK(cfg.at("curves") == curves);
    std::vector<std::pair<std::string, double>> keys;
    while (std::getline(in, row)) {
      const auto comma = row.find(',');
      const auto comma2 = row.find(',', comma + 1);
      keys.emplace_back(row.substr(comma + 1, comma2 - comma - 1), std::stod(row.substr(0, comma)));
    }
    CHECK(std::is_sorted(keys.begin(), keys.end()));
  }
}

TEST_CASE("cli: search and check outputs embed config and seed") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "aqec_property_tests";
  fs::create_directories(dir);
  for (int k = 0; k < kCases / 10; ++k) {
    Rng rng = case_rng(26, k);
    const std::uint64_t seed = rng.next_u64() % 100000;
    const fs::path best = dir / "best.json";
    int code = 0;
    const std::string csv = run_cli_text({"search", "--codes", "2", "--qubits", "2", "--gamma-stop",
                                          "0.1", "--gamma-step", "0.1", "--seed", std::to_string(seed),
                                          "--best-out", best.string()},
                                         &code);
    REQUIRE(code == 0);
    CHECK(csv.find("\"seed\":" + std::to_string(seed)) != std::string::npos);
    std::ifstream in(best);
    const Json j = Json::parse(in);
    CHECK(j.at("seed") == seed);
    CHECK(j.at("config").at("seed") == seed);

    const auto [noise, c] = random_pair(rng);
    std::ofstream(dir / "ch.json") << to_json(noise).dump();
    std::ofstream(dir / "co.json") << to_json(c).dump();
    const Json out = Json::parse(run_cli_text({"check", "--channel", (dir / "ch.json").string(), "--code",
                                               (dir / "co.json").string(), "--seed", std::to_string(seed)},
                                              &code));
    REQUIRE(code == 0);
    CHECK(out.at("config").at("seed") == seed);
    CHECK(out.at("seed") == seed);
  }
}
