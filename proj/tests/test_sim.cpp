// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "drvqa/simulator.hpp"
#include "support/reference_oracles.hpp"

using namespace drvqa;
namespace oracle = drvqa::testing;

namespace {

DensityMatrix make_state(int n, const CMatrix& data) {
  return DensityMatrix::from_matrix(n, data);
}

} // namespace

TEST_CASE("damping channel: zero probabilities give the identity map") {
  const KrausChannel ch = damping_channel(0.0, 0.0);
  CHECK(ch.operators().size() == 3);
  CHECK((ch.operators()[0] - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(ch.operators()[1].cwiseAbs().maxCoeff() == 0.0);
  CHECK(ch.operators()[2].cwiseAbs().maxCoeff() == 0.0);

  std::mt19937_64 rng(7);
  const CMatrix rho = oracle::random_density(1, rng);
  const DensityMatrix out = apply_channel(make_state(1, rho), ch, 0);
  CHECK((out.matrix() - rho).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("damping channel: full amplitude damping collapses to |0><0|") {
  for (double p_pd : {0.0, 0.3, 1.0}) {
    const KrausChannel ch = damping_channel(1.0, p_pd);
    CHECK((ch.operators()[0] - (CMatrix(2, 2) << 1, 0, 0, 0).finished()).cwiseAbs().maxCoeff() ==
          0.0);
    CHECK((ch.operators()[1] - (CMatrix(2, 2) << 0, 1, 0, 0).finished()).cwiseAbs().maxCoeff() ==
          0.0);
    CHECK(ch.operators()[2].cwiseAbs().maxCoeff() == 0.0);

    std::mt19937_64 rng(11);
    const CMatrix rho = oracle::random_density(1, rng);
    const DensityMatrix out = apply_channel(make_state(1, rho), ch, 0);
    CMatrix expected = CMatrix::Zero(2, 2);
    expected(0, 0) = 1.0;
    CHECK((out.matrix() - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("damping channel: completeness holds by direct multiplication") {
  const KrausChannel ch = damping_channel(0.3, 0.5);
  CMatrix sum = CMatrix::Zero(2, 2);
  for (const CMatrix& e : ch.operators()) sum += e.adjoint() * e;
  CHECK((sum - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("damping channel: rejects probabilities outside [0, 1]") {
  CHECK_THROWS_AS(damping_channel(-0.1, 0.5), domain_error);
  CHECK_THROWS_AS(damping_channel(0.5, 1.1), domain_error);
  CHECK_THROWS_AS(damping_channel(std::nan(""), 0.5), domain_error);
}

TEST_CASE("apply_gate: basis flips and superpositions") {
  const DensityMatrix zero1 = DensityMatrix::zero_state(1);

  // X as RX(pi); the global phase cancels in conjugation.
  const DensityMatrix flipped = apply_gate(zero1, Gate::rx(0, std::numbers::pi));
  CHECK(std::abs(flipped.matrix()(1, 1).real() - 1.0) < 1e-14);
  CHECK(std::abs(flipped.matrix()(0, 0)) < 1e-14);

  const DensityMatrix plus = apply_gate(zero1, Gate::h(0));
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      CHECK(std::abs(plus.matrix()(r, c) - Complex(0.5, 0.0)) < 1e-14);
    }
  }

  // |10> (qubit 0 set) -> CNOT(0,1) -> |11>
  CMatrix basis = CMatrix::Zero(4, 4);
  basis(1, 1) = 1.0;
  const DensityMatrix out = apply_gate(make_state(2, basis), Gate::cnot(0, 1));
  CHECK(std::abs(out.matrix()(3, 3).real() - 1.0) < 1e-14);

  CHECK_THROWS_AS(apply_gate(zero1, Gate::h(1)), domain_error);
}

TEST_CASE("apply_gate agrees with full-matrix conjugation on random gates") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const CMatrix rho = oracle::random_density(n, rng);
    const Circuit c = oracle::random_circuit(n, 1, rng);
    const Gate& g = c.gates.front();
    const DensityMatrix fast = apply_gate(make_state(n, rho), g);
    const oracle::CMat u = oracle::full_gate_matrix(g, n);
    const oracle::CMat slow = u * rho * u.adjoint();
    CHECK((fast.matrix() - slow).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("apply_channel: phase damping scales off-diagonals only") {
  const double q = 0.36;
  const KrausChannel ch = damping_channel(0.0, q);
  CMatrix plus(2, 2);
  plus.setConstant(Complex(0.5, 0.0));
  const DensityMatrix out = apply_channel(make_state(1, plus), ch, 0);
  CHECK(std::abs(out.matrix()(0, 0).real() - 0.5) < 1e-14);
  CHECK(std::abs(out.matrix()(1, 1).real() - 0.5) < 1e-14);
  CHECK(std::abs(out.matrix()(0, 1).real() - 0.5 * std::sqrt(1.0 - q)) < 1e-14);
}

TEST_CASE("apply_channel: amplitude damping transfers excited population") {
  CMatrix one = CMatrix::Zero(2, 2);
  one(1, 1) = 1.0;
  const DensityMatrix out = apply_channel(make_state(1, one), damping_channel(0.2, 0.2), 0);
  CHECK(std::abs(out.matrix()(0, 0).real() - 0.2) < 1e-14);
  CHECK(std::abs(out.matrix()(1, 1).real() - 0.8) < 1e-14);
}

TEST_CASE("apply_channel: rejects non-single-qubit channels") {
  std::vector<CMatrix> ops = {CMatrix::Identity(4, 4)};
  const KrausChannel big = KrausChannel::from_operators(std::move(ops));
  CHECK_THROWS_AS(apply_channel(DensityMatrix::zero_state(2), big, 0), domain_error);
  CHECK_THROWS_AS(apply_channel(DensityMatrix::zero_state(2), damping_channel(0.1, 0.1), 5),
                  domain_error);
}

TEST_CASE("apply_channel matches the full-matrix Kraus oracle on random states") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int q = static_cast<int>(rng() % n);
    const CMatrix rho = oracle::random_density(n, rng);
    const KrausChannel ch = damping_channel(unit(rng), unit(rng));
    const DensityMatrix fast = apply_channel(make_state(n, rho), ch, q);
    const oracle::CMat slow = oracle::kraus_apply_full(rho, ch.operators(), q, n);
    CHECK((fast.matrix() - slow).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(std::abs(fast.trace() - Complex(1.0, 0.0)) < 1e-12);
  }
}

TEST_CASE("channel application preserves trace, Hermiticity and positivity") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 2);
    const CMatrix rho = oracle::random_density(n, rng);
    const DensityMatrix out =
        apply_channel(make_state(n, rho), damping_channel(unit(rng), unit(rng)),
                      static_cast<int>(rng() % n));
    CHECK(std::abs(out.trace() - Complex(1.0, 0.0)) < 1e-12);
    CHECK(out.max_hermiticity_violation() < 1e-10);
    CHECK(out.min_eigenvalue() > -1e-9);
  }
}

TEST_CASE("channels on distinct qubits commute") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix rho = oracle::random_density(3, rng);
    const KrausChannel a = damping_channel(unit(rng), unit(rng));
    const KrausChannel b = damping_channel(unit(rng), unit(rng));
    const DensityMatrix ab = apply_channel(apply_channel(make_state(3, rho), a, 0), b, 2);
    const DensityMatrix ba = apply_channel(apply_channel(make_state(3, rho), b, 2), a, 0);
    CHECK((ab.matrix() - ba.matrix()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("run_noisy_circuit: zero noise equals the statevector oracle") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Circuit c = oracle::random_circuit(n, 12, rng);
    const DensityMatrix rho = run_noisy_circuit(c, 0.0);
    const oracle::CVec psi = oracle::statevector_run(c);
    const oracle::CMat pure = psi * psi.adjoint();
    CHECK((rho.matrix() - pure).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("run_noisy_circuit: full damping after touching every qubit gives |0...0>") {
  Circuit c(3);
  c.append(Gate::h(0));
  c.append(Gate::cnot(0, 1));
  c.append(Gate::ry(2, 1.2));
  const DensityMatrix rho = run_noisy_circuit(c, 1.0);
  CHECK(std::abs(rho.matrix()(0, 0).real() - 1.0) < 1e-12);
  CHECK(rho.matrix().cwiseAbs().sum() - std::abs(rho.matrix()(0, 0)) < 1e-12);
}

TEST_CASE("run_noisy_circuit matches the sequential Kraus oracle at p = 0.05") {
  Circuit c(2);
  c.append(Gate::h(0));
  c.append(Gate::cnot(0, 1));
  const double p = 0.05;
  const DensityMatrix fast = run_noisy_circuit(c, p);
  const oracle::CMat slow = oracle::noisy_run_full(c, damping_channel(p, p).operators());
  CHECK((fast.matrix() - slow).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("run_noisy_circuit matches the sequential Kraus oracle on random circuits") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> unit(0.0, 0.3);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const Circuit c = oracle::random_circuit(n, 10, rng);
    const double p = unit(rng);
    const DensityMatrix fast = run_noisy_circuit(c, p);
    const oracle::CMat slow = oracle::noisy_run_full(c, damping_channel(p, p).operators());
    CHECK((fast.matrix() - slow).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(fast.min_eigenvalue() > -1e-9);
  }
}

TEST_CASE("run_noisy_circuit: caps and domain checks") {
  Circuit big(11);
  big.append(Gate::h(0));
  CHECK_THROWS_AS(run_noisy_circuit(big, 0.0), resource_error);
  Circuit ok(1);
  ok.append(Gate::h(0));
  CHECK_THROWS_AS(run_noisy_circuit(ok, -0.1), domain_error);
  CHECK_THROWS_AS(run_noisy_circuit(ok, 1.5), domain_error);
  SimulatorOptions cap;
  cap.max_qubits = 12;
  CHECK_NOTHROW(run_noisy_circuit(big, 0.0, cap));
}

TEST_CASE("expectation: basis states, mixed states and Pauli sums") {
  const PauliHamiltonian z(1, {{1.0, "Z"}});
  CHECK(expectation(DensityMatrix::zero_state(1), z) == doctest::Approx(1.0).epsilon(1e-12));

  // Maximally mixed state against a traceless sum.
  const PauliHamiltonian traceless(2, {{0.7, "XZ"}, {-1.3, "YY"}, {0.4, "ZI"}});
  const CMatrix mixed = CMatrix::Identity(4, 4) / 4.0;
  CHECK(std::abs(expectation(make_state(2, mixed), traceless)) < 1e-12);

  // |++> against 1/2 (I - Z0 Z1): the uniform state cuts half the edge.
  Circuit c(2);
  c.append(Gate::h(0));
  c.append(Gate::h(1));
  const PauliHamiltonian cut(2, {{0.5, "II"}, {-0.5, "ZZ"}});
  CHECK(expectation(run_noisy_circuit(c, 0.0), cut) == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(expectation(DensityMatrix::zero_state(2), z), domain_error);
}

TEST_CASE("expectation agrees with dense-matrix traces on random inputs") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const CMatrix rho = oracle::random_density(n, rng);
    std::vector<PauliTerm> terms;
    const char symbols[] = {'I', 'X', 'Y', 'Z'};
    for (int t = 0; t < 4; ++t) {
      std::string ops(n, 'I');
      for (int q = 0; q < n; ++q) ops[q] = symbols[rng() % 4];
      terms.push_back({std::uniform_real_distribution<double>(-2, 2)(rng), ops});
    }
    const PauliHamiltonian h(n, terms);
    const Complex dense = (CMatrix(rho * h.to_matrix())).trace();
    CHECK(expectation(make_state(n, rho), h) == doctest::Approx(dense.real()).epsilon(1e-10));
  }
}

TEST_CASE("density matrix validation catches broken invariants") {
  CMatrix bad_trace = CMatrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix::from_matrix(1, bad_trace), domain_error);

  CMatrix not_hermitian = CMatrix::Zero(2, 2);
  not_hermitian(0, 0) = 1.0;
  not_hermitian(0, 1) = Complex(0.0, 0.5);
  CHECK_THROWS_AS(DensityMatrix::from_matrix(1, not_hermitian), domain_error);

  CMatrix negative(2, 2);
  negative << 1.5, 0.0, 0.0, -0.5;
  const DensityMatrix rho = DensityMatrix::from_matrix(1, negative);
  CHECK_THROWS_AS(rho.validate(), domain_error);
}
