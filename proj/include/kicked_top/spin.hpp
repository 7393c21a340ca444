#pragma once

// Collective spin of N = 2j qubits in the Dicke basis.
//
// Index convention used everywhere in this library: amplitude k of a
// DickeState belongs to |j, m> with m = j - k, so k = 0 is the fully
// polarized state |j, j> and k = 2j is |j, -j>.

#include <kicked_top/errors.hpp>
#include <kicked_top/types.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <iostream>
#include <string>
#include <vector>

namespace kicked_top {

class SpinQuantumNumber {
 public:
  explicit SpinQuantumNumber(int twice_j) : twice_j_(twice_j) {
    if (twice_j < 1) {
      throw InvalidParameter("2j must be a positive integer, got " +
                             std::to_string(twice_j));
    }
  }

  int twice_j() const { return twice_j_; }
  int qubits() const { return twice_j_; }
  double j() const { return 0.5 * twice_j_; }
  int dimension() const { return twice_j_ + 1; }
  // Magnetic quantum number of Dicke index k.
  double m(int k) const { return j() - k; }

  friend bool operator==(SpinQuantumNumber, SpinQuantumNumber) = default;

 private:
  int twice_j_;
};

class SphericalPoint {
 public:
  // phi is wrapped into [-pi, pi]; theta must already lie in [0, pi].
  SphericalPoint(double theta, double phi) : theta_(theta), phi_(wrap(phi)) {
    if (!(theta >= 0.0 && theta <= pi)) {
      throw InvalidParameter("theta must lie in [0, pi], got " +
                             std::to_string(theta));
    }
  }

  double theta() const { return theta_; }
  double phi() const { return phi_; }

 private:
  static double wrap(double phi) {
    if (!std::isfinite(phi)) throw InvalidParameter("phi must be finite");
    if (phi >= -pi && phi <= pi) return phi;
    return std::remainder(phi, 2.0 * pi);
  }

  double theta_;
  double phi_;
};

struct KickedTopParams {
  SpinQuantumNumber spin;
  double kappa = 3.0;
  double p = pi / 2.0;
  double tau = 1.0;

  KickedTopParams(SpinQuantumNumber s, double kappa_, double p_,
                  double tau_ = 1.0)
      : spin(s), kappa(kappa_), p(p_), tau(tau_) {
    if (!(kappa >= 0.0)) throw InvalidParameter("kappa must be >= 0");
    if (!(tau > 0.0)) throw InvalidParameter("tau must be > 0");
    if (kappa > 6.0) {
      std::clog << "kicked_top: kappa = " << kappa
                << " lies outside the studied range [0, 6]\n";
    }
  }
};

class DickeState {
 public:
  explicit DickeState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 2) {
      throw InvalidParameter("a Dicke state needs at least two amplitudes");
    }
    double drift = std::abs(amplitudes_.norm() - 1.0);
    if (drift > tolerance::state_norm) {
      throw ContractViolation("Dicke state not normalized (|norm - 1| = " +
                              std::to_string(drift) + ")");
    }
  }

  static DickeState normalized(Vector amplitudes) {
    double n = amplitudes.norm();
    if (!(n > 0.0)) throw InvalidParameter("cannot normalize a zero vector");
    amplitudes /= n;
    return DickeState(std::move(amplitudes));
  }

  // |j, m> with m = j - k.
  static DickeState basis(SpinQuantumNumber spin, int k) {
    if (k < 0 || k >= spin.dimension()) {
      throw InvalidParameter("Dicke index out of range");
    }
    Vector v = Vector::Zero(spin.dimension());
    v(k) = 1.0;
    return DickeState(std::move(v));
  }

  const Vector& amplitudes() const { return amplitudes_; }
  SpinQuantumNumber spin() const {
    return SpinQuantumNumber(static_cast<int>(amplitudes_.size()) - 1);
  }
  Eigen::Index dimension() const { return amplitudes_.size(); }

 private:
  Vector amplitudes_;
};

struct CollectiveOperators {
  SpinQuantumNumber spin;
  Matrix jx, jy, jz, jplus, jminus;
};

inline CollectiveOperators build_collective_operators(SpinQuantumNumber spin) {
  const int d = spin.dimension();
  const double j = spin.j();
  Matrix jz = Matrix::Zero(d, d);
  Matrix jplus = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const double m = spin.m(k);
    jz(k, k) = m;
    // J+ |j,m> = sqrt((j - m)(j + m + 1)) |j,m+1>, and m+1 sits at index k-1.
    if (k > 0) jplus(k - 1, k) = std::sqrt((j - m) * (j + m + 1.0));
  }
  Matrix jminus = jplus.adjoint();
  Matrix jx = 0.5 * (jplus + jminus);
  Matrix jy = cplx(0.0, -0.5) * (jplus - jminus);
  return {spin, std::move(jx), std::move(jy), std::move(jz), std::move(jplus),
          std::move(jminus)};
}

// exp(i t H) for Hermitian H via its eigendecomposition.
inline Matrix exp_i_hermitian(const Matrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) {
    throw ContractViolation("eigendecomposition of Hermitian generator failed");
  }
  const Matrix& v = es.eigenvectors();
  Vector phases = (cplx(0.0, t) * es.eigenvalues().cast<cplx>()).array().exp();
  return v * phases.asDiagonal() * v.adjoint();
}

// R(theta, phi) = exp(i theta (Jx sin phi - Jy cos phi)).
inline Matrix rotation_operator(const CollectiveOperators& ops,
                                SphericalPoint point) {
  Matrix generator = std::sin(point.phi()) * ops.jx -
                     std::cos(point.phi()) * ops.jy;
  return exp_i_hermitian(generator, point.theta());
}

inline Matrix rotation_operator(SpinQuantumNumber spin, SphericalPoint point) {
  return rotation_operator(build_collective_operators(spin), point);
}

// |theta, phi> = R(theta, phi) |j, j>. Its first column is all we need.
inline DickeState spin_coherent_state(const CollectiveOperators& ops,
                                      SphericalPoint point) {
  Matrix r = rotation_operator(ops, point);
  return DickeState::normalized(r.col(0));
}

inline DickeState spin_coherent_state(SpinQuantumNumber spin,
                                      SphericalPoint point) {
  return spin_coherent_state(build_collective_operators(spin), point);
}

// U = exp(-i kappa/(2 j tau) Jz^2) exp(-i p Jy).
inline Matrix floquet_operator(const KickedTopParams& params) {
  const auto ops = build_collective_operators(params.spin);
  const int d = params.spin.dimension();
  const double coeff = params.kappa / (2.0 * params.spin.j() * params.tau);
  Vector twist(d);
  for (int k = 0; k < d; ++k) {
    const double m = params.spin.m(k);
    twist(k) = std::polar(1.0, -coeff * m * m);
  }
  return twist.asDiagonal() * exp_i_hermitian(ops.jy, -params.p);
}

// [psi, U psi, ..., U^n psi]. Each step is renormalized after checking that
// the norm drifted by less than tolerance::kick_norm_drift.
inline std::vector<DickeState> evolve(const DickeState& initial,
                                      const Matrix& floquet, int n_kicks) {
  if (floquet.rows() != initial.dimension() ||
      floquet.cols() != initial.dimension()) {
    throw ContractViolation("Floquet operator is " +
                            std::to_string(floquet.rows()) + "x" +
                            std::to_string(floquet.cols()) +
                            " but the state has dimension " +
                            std::to_string(initial.dimension()));
  }
  if (n_kicks < 0) throw InvalidParameter("n_kicks must be non-negative");
  std::vector<DickeState> out;
  out.reserve(static_cast<std::size_t>(n_kicks) + 1);
  out.push_back(initial);
  Vector psi = initial.amplitudes();
  for (int kick = 1; kick <= n_kicks; ++kick) {
    psi = floquet * psi;
    const double n = psi.norm();
    if (std::abs(n - 1.0) > tolerance::kick_norm_drift) {
      throw ContractViolation("norm drift " + std::to_string(n - 1.0) +
                              " at kick " + std::to_string(kick));
    }
    psi /= n;
    out.emplace_back(psi);
  }
  return out;
}

struct CollectiveExpectations {
  double jx = 0, jy = 0, jz = 0;
  double jz2 = 0;
  cplx jplus{}, jplus2{};
  double jplus_jminus = 0;
  // <n_up J->, <J- n_down> with n_up = j + Jz and n_down = j - Jz.
  cplx nup_jminus{}, jminus_ndown{};
};

namespace detail {
inline cplx expect(const Vector& psi, const Matrix& op) {
  return psi.dot(op * psi);
}
}  // namespace detail

inline CollectiveExpectations collective_expectations(
    const DickeState& state, const CollectiveOperators& ops) {
  if (state.dimension() != ops.spin.dimension()) {
    throw ContractViolation("state and operators have different dimensions");
  }
  const Vector& psi = state.amplitudes();
  const Matrix identity = Matrix::Identity(ops.jz.rows(), ops.jz.cols());
  const Matrix nup = ops.spin.j() * identity + ops.jz;
  const Matrix ndown = ops.spin.j() * identity - ops.jz;
  using detail::expect;
  CollectiveExpectations e;
  e.jx = expect(psi, ops.jx).real();
  e.jy = expect(psi, ops.jy).real();
  e.jz = expect(psi, ops.jz).real();
  e.jz2 = expect(psi, ops.jz * ops.jz).real();
  e.jplus = expect(psi, ops.jplus);
  e.jplus2 = expect(psi, ops.jplus * ops.jplus);
  e.jplus_jminus = expect(psi, ops.jplus * ops.jminus).real();
  e.nup_jminus = expect(psi, nup * ops.jminus);
  e.jminus_ndown = expect(psi, ops.jminus * ndown);
  return e;
}

inline CollectiveExpectations collective_expectations(const DickeState& state) {
  return collective_expectations(state,
                                 build_collective_operators(state.spin()));
}

}  // namespace kicked_top
