#pragma once

// Two-qubit reduced state of a symmetric N-qubit state.
//
// Basis order of a TwoQubitState is {|uu>, |ud>, |du>, |dd>} with the first
// factor being qubit A. In product-basis bit strings a 0 bit is "up" and the
// most significant bit is qubit 1.

#include <kicked_top/errors.hpp>
#include <kicked_top/spin.hpp>
#include <kicked_top/types.hpp>

#include <Eigen/Eigenvalues>

#include <string>

namespace kicked_top {

// A 4x4 density matrix that passed the physicality checks: Hermitian and
// unit trace to 1e-12, smallest eigenvalue >= -1e-10.
class TwoQubitState {
 public:
  explicit TwoQubitState(const Matrix4& rho) : rho_(rho) {
    const double asym = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
    if (asym > tolerance::hermitian) {
      throw InvalidState("two-qubit matrix not Hermitian (deviation " +
                         std::to_string(asym) + ")");
    }
    // Symmetrize away the sub-tolerance antihermitian part.
    rho_ = 0.5 * (rho_ + rho_.adjoint()).eval();
    const double tr_err = std::abs(rho_.trace() - 1.0);
    if (tr_err > tolerance::trace) {
      throw InvalidState("two-qubit matrix trace differs from 1 by " +
                         std::to_string(tr_err));
    }
    Eigen::SelfAdjointEigenSolver<Matrix4> es(rho_, Eigen::EigenvaluesOnly);
    eigenvalues_ = es.eigenvalues();
    if (eigenvalues_(0) < tolerance::negative_eigenvalue) {
      throw InvalidState("two-qubit matrix has eigenvalue " +
                         std::to_string(eigenvalues_(0)));
    }
  }

  const Matrix4& matrix() const { return rho_; }
  // Ascending, unclamped.
  const Eigen::Vector4d& eigenvalues() const { return eigenvalues_; }
  cplx operator()(int r, int c) const { return rho_(r, c); }

 private:
  Matrix4 rho_;
  Eigen::Vector4d eigenvalues_;
};

inline Matrix4 swap_gate() {
  Matrix4 s = Matrix4::Zero();
  s(0, 0) = s(3, 3) = 1.0;
  s(1, 2) = s(2, 1) = 1.0;
  return s;
}

inline TwoQubitState swap_parties(const TwoQubitState& rho) {
  const Matrix4 s = swap_gate();
  return TwoQubitState(s * rho.matrix() * s);
}

inline double swap_asymmetry(const TwoQubitState& rho) {
  const Matrix4 s = swap_gate();
  return (s * rho.matrix() * s - rho.matrix()).cwiseAbs().maxCoeff();
}

// <s|rho|s> for the singlet (|ud> - |du>)/sqrt(2).
inline double singlet_population(const TwoQubitState& rho) {
  return 0.5 * (rho(1, 1) + rho(2, 2) - rho(1, 2) - rho(2, 1)).real();
}

// Reduced state of any two of the N = 2j qubits, built from collective
// expectation values. With n_up = j + Jz, n_down = j - Jz, D = N(N - 1):
//   rho_11 = <n_up(n_up - 1)>/D      rho_44 = <n_down(n_down - 1)>/D
//   rho_22 = rho_33 = <n_up n_down>/D
//   rho_23 = (<J+ J-> - <n_up>)/D   rho_14 = <J-^2>/D
//   rho_12 = rho_13 = <n_up J->/D    rho_24 = rho_34 = <J- n_down>/D
inline TwoQubitState two_qubit_rdm(const DickeState& state,
                                   const CollectiveOperators& ops) {
  const int n = ops.spin.qubits();
  if (n < 2) {
    throw InvalidParameter("two-qubit reduction needs N >= 2 qubits, got " +
                           std::to_string(n));
  }
  if (state.dimension() != ops.spin.dimension()) {
    throw ContractViolation("state and operators have different dimensions");
  }
  if (n == 2) {
    const Vector& psi = state.amplitudes();
    // Dicke basis of j = 1 in the product basis: |uu>, |t>, |dd>.
    const double r = 1.0 / std::sqrt(2.0);
    Eigen::Vector4cd v(psi(0), r * psi(1), r * psi(1), psi(2));
    return TwoQubitState(v * v.adjoint());
  }
  const auto e = collective_expectations(state, ops);
  Matrix4 rho = Matrix4::Zero();
  const double j = ops.spin.j();
  const double d = static_cast<double>(n) * (n - 1);
  const double nup = j + e.jz;
  const double ndown = j - e.jz;
  const double nup2 = j * j + 2.0 * j * e.jz + e.jz2;
  const double ndown2 = j * j - 2.0 * j * e.jz + e.jz2;
  const double nup_ndown = j * j - e.jz2;

  rho(0, 0) = (nup2 - nup) / d;
  rho(3, 3) = (ndown2 - ndown) / d;
  rho(1, 1) = rho(2, 2) = nup_ndown / d;
  rho(1, 2) = (e.jplus_jminus - nup) / d;
  rho(0, 3) = std::conj(e.jplus2) / d;
  rho(0, 1) = rho(0, 2) = e.nup_jminus / d;
  rho(1, 3) = rho(2, 3) = e.jminus_ndown / d;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < r; ++c) rho(r, c) = std::conj(rho(c, r));
  }
  return TwoQubitState(rho);
}

inline TwoQubitState two_qubit_rdm(const DickeState& state) {
  return two_qubit_rdm(state, build_collective_operators(state.spin()));
}

}  // namespace kicked_top
