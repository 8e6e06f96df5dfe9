// SPDX-License-Identifier: Apache-2.0
#include "drvqa/simulator.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <string>

namespace drvqa {

namespace detail {

struct DensityMatrixAccess {
  static DensityMatrix make(int n_qubits, CMatrix data) {
    return DensityMatrix::from_matrix(n_qubits, std::move(data));
  }
  static DensityMatrix make_unchecked(int n_qubits, CMatrix data);
  static CMatrix& mutate(DensityMatrix& rho) { return rho.data_; }
};

DensityMatrix DensityMatrixAccess::make_unchecked(int n_qubits, CMatrix data) {
  DensityMatrix rho = DensityMatrix::zero_state(n_qubits);
  rho.data_ = std::move(data);
  return rho;
}

} // namespace detail

namespace {

using detail::DensityMatrixAccess;

// data <- (A on qubit q) * data, acting on the row index.
void left_apply_1q(CMatrix& data, int q, const CMatrix& a) {
  const Eigen::Index dim = data.rows();
  const Eigen::Index mask = Eigen::Index{1} << q;
  const Complex a00 = a(0, 0), a01 = a(0, 1), a10 = a(1, 0), a11 = a(1, 1);
  for (Eigen::Index c = 0; c < dim; ++c) {
    Complex* col = data.col(c).data();
    for (Eigen::Index hi = 0; hi < dim; hi += 2 * mask) {
      for (Eigen::Index lo = hi; lo < hi + mask; ++lo) {
        const Complex x0 = col[lo];
        const Complex x1 = col[lo + mask];
        col[lo] = a00 * x0 + a01 * x1;
        col[lo + mask] = a10 * x0 + a11 * x1;
      }
    }
  }
}

// data <- data * (B on qubit q), acting on the column index.
void right_apply_1q(CMatrix& data, int q, const CMatrix& b) {
  const Eigen::Index dim = data.cols();
  const Eigen::Index mask = Eigen::Index{1} << q;
  const Complex b00 = b(0, 0), b01 = b(0, 1), b10 = b(1, 0), b11 = b(1, 1);
  for (Eigen::Index hi = 0; hi < dim; hi += 2 * mask) {
    for (Eigen::Index lo = hi; lo < hi + mask; ++lo) {
      auto c0 = data.col(lo);
      auto c1 = data.col(lo + mask);
      const CVector t0 = c0 * b00 + c1 * b10;
      c1 = c0 * b01 + c1 * b11;
      c0 = t0;
    }
  }
}

// data <- (A on qubits (qa, qb)) * data with basis index 2*bit(qa) + bit(qb).
void left_apply_2q(CMatrix& data, int qa, int qb, const CMatrix& a) {
  const Eigen::Index dim = data.rows();
  const Eigen::Index ma = Eigen::Index{1} << qa;
  const Eigen::Index mb = Eigen::Index{1} << qb;
  for (Eigen::Index c = 0; c < dim; ++c) {
    Complex* col = data.col(c).data();
    for (Eigen::Index i = 0; i < dim; ++i) {
      if ((i & ma) || (i & mb)) continue;
      const std::array<Eigen::Index, 4> idx = {i, i | mb, i | ma, i | ma | mb};
      std::array<Complex, 4> v;
      for (int k = 0; k < 4; ++k) v[k] = col[idx[k]];
      for (int r = 0; r < 4; ++r) {
        col[idx[r]] = a(r, 0) * v[0] + a(r, 1) * v[1] + a(r, 2) * v[2] + a(r, 3) * v[3];
      }
    }
  }
}

void right_apply_2q(CMatrix& data, int qa, int qb, const CMatrix& b) {
  const Eigen::Index dim = data.cols();
  const Eigen::Index ma = Eigen::Index{1} << qa;
  const Eigen::Index mb = Eigen::Index{1} << qb;
  for (Eigen::Index j = 0; j < dim; ++j) {
    if ((j & ma) || (j & mb)) continue;
    const std::array<Eigen::Index, 4> idx = {j, j | mb, j | ma, j | ma | mb};
    CMatrix block(dim, 4);
    for (int k = 0; k < 4; ++k) block.col(k) = data.col(idx[k]);
    for (int k = 0; k < 4; ++k) {
      data.col(idx[k]) = block.col(0) * b(0, k) + block.col(1) * b(1, k) +
                         block.col(2) * b(2, k) + block.col(3) * b(3, k);
    }
  }
}

void conjugate_by_gate(CMatrix& data, const Gate& gate) {
  const CMatrix u = gate_unitary(gate);
  const CMatrix u_dag = u.adjoint();
  if (gate_arity(gate.kind) == 1) {
    left_apply_1q(data, gate.targets[0], u);
    right_apply_1q(data, gate.targets[0], u_dag);
  } else {
    left_apply_2q(data, gate.targets[0], gate.targets[1], u);
    right_apply_2q(data, gate.targets[0], gate.targets[1], u_dag);
  }
}

// In-place combined amplitude/phase damping on qubit q:
//   rho_00 += p_ad * rho_11,  rho_11 *= 1 - p_ad,
//   off-diagonal blocks *= sqrt(1-p_ad) sqrt(1-p_pd).
void apply_damping_inplace(CMatrix& data, int q, double p_ad, double p_pd) {
  const Eigen::Index dim = data.rows();
  const Eigen::Index mask = Eigen::Index{1} << q;
  const double keep = std::sqrt(1.0 - p_ad) * std::sqrt(1.0 - p_pd);
  const double pop = 1.0 - p_ad;
  for (Eigen::Index chi = 0; chi < dim; chi += 2 * mask) {
    for (Eigen::Index clo = chi; clo < chi + mask; ++clo) {
      Complex* col0 = data.col(clo).data();
      Complex* col1 = data.col(clo + mask).data();
      for (Eigen::Index rhi = 0; rhi < dim; rhi += 2 * mask) {
        for (Eigen::Index rlo = rhi; rlo < rhi + mask; ++rlo) {
          const Complex r11 = col1[rlo + mask];
          col0[rlo] += p_ad * r11;
          col1[rlo + mask] = pop * r11;
          col0[rlo + mask] *= keep;
          col1[rlo] *= keep;
        }
      }
    }
  }
}

void check_qubit(const DensityMatrix& rho, int q, const char* where) {
  if (q < 0 || q >= rho.n_qubits()) {
    throw domain_error(std::string(where) + ": qubit index out of range");
  }
}

} // namespace

DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& gate) {
  for (int q : gate.targets) check_qubit(rho, q, "apply_gate");
  if (gate_arity(gate.kind) == 2 && gate.targets[0] == gate.targets[1]) {
    throw domain_error("apply_gate: two-qubit gate targets must be distinct");
  }
  if (gate_is_rotation(gate.kind) && !std::isfinite(gate.angle)) {
    throw domain_error("apply_gate: rotation angle must be finite");
  }
  CMatrix data = rho.matrix();
  conjugate_by_gate(data, gate);
  return DensityMatrixAccess::make_unchecked(rho.n_qubits(), std::move(data));
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& channel, int qubit) {
  check_qubit(rho, qubit, "apply_channel");
  if (channel.dim() != 2) {
    throw domain_error("apply_channel: only single-qubit channels are supported");
  }
  CMatrix out = CMatrix::Zero(rho.dim(), rho.dim());
  for (const CMatrix& op : channel.operators()) {
    CMatrix term = rho.matrix();
    left_apply_1q(term, qubit, op);
    right_apply_1q(term, qubit, op.adjoint());
    out += term;
  }
  return DensityMatrixAccess::make_unchecked(rho.n_qubits(), std::move(out));
}

DensityMatrix run_noisy_circuit(const Circuit& circuit, double noise_level,
                                const SimulatorOptions& options) {
  if (!(noise_level >= 0.0 && noise_level <= 1.0)) {
    throw domain_error("run_noisy_circuit: noise level must lie in [0, 1]");
  }
  if (circuit.n_qubits > options.max_qubits) {
    throw resource_error("run_noisy_circuit: qubit count exceeds the simulator cap");
  }
  DensityMatrix rho = DensityMatrix::zero_state(circuit.n_qubits);
  CMatrix& data = DensityMatrixAccess::mutate(rho);
  for (const Gate& gate : circuit.gates) {
    for (int q : gate.targets) {
      if (q < 0 || q >= circuit.n_qubits) {
        throw domain_error("run_noisy_circuit: gate targets an invalid qubit");
      }
    }
    conjugate_by_gate(data, gate);
    if (noise_level > 0.0) {
      for (int q : gate.targets) {
        apply_damping_inplace(data, q, noise_level, noise_level);
      }
    }
  }
  return rho;
}

double expectation(const DensityMatrix& rho, const PauliHamiltonian& observable) {
  if (observable.n_qubits() != rho.n_qubits()) {
    throw domain_error("expectation: observable qubit count differs from state");
  }
  const CMatrix& data = rho.matrix();
  const Eigen::Index dim = data.rows();
  Complex total(0.0, 0.0);
  static const Complex i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const PauliHamiltonian::TermMasks& term : observable.masks()) {
    Complex acc(0.0, 0.0);
    const auto flip = static_cast<Eigen::Index>(term.x_or_y);
    for (Eigen::Index col = 0; col < dim; ++col) {
      double sign =
          (std::popcount(static_cast<std::uint64_t>(col) & term.y_or_z) & 1) ? -1.0 : 1.0;
      acc += sign * data(col, col ^ flip);
    }
    total += term.coefficient * i_pow[term.n_y & 3] * acc;
  }
  if (std::abs(total.imag()) > 1e-6) {
    throw numerical_error("expectation: imaginary residue exceeds tolerance");
  }
  return total.real();
}

} // namespace drvqa
