#pragma once

// Correlation measures of two-qubit states: von Neumann entropy, Wootters
// concurrence, quantum mutual information and quantum discord with the
// measurement performed on qubit B (the second tensor factor).

#include <kicked_top/errors.hpp>
#include <kicked_top/nelder_mead.hpp>
#include <kicked_top/reduction.hpp>
#include <kicked_top/types.hpp>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace kicked_top {

namespace detail {

inline double clamp_eigenvalue(double lambda) {
  if (lambda < tolerance::negative_eigenvalue) {
    throw InvalidState("density matrix has eigenvalue " + std::to_string(lambda));
  }
  return lambda < 0.0 ? 0.0 : lambda;
}

inline double xlogx(double x, LogBase base) {
  return x > 0.0 ? x * log_in(x, base) : 0.0;
}

template <typename Vec>
double entropy_of_spectrum(const Vec& eigenvalues, LogBase base) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    h -= xlogx(clamp_eigenvalue(eigenvalues(i)), base);
  }
  return h;
}

// Entropy of the normalized 2x2 Hermitian [[a, b], [b*, d]] / (a + d).
inline double entropy_2x2(double a, double d, cplx b, LogBase base) {
  const double t = a + d;
  const double r = std::sqrt((a - d) * (a - d) + 4.0 * std::norm(b));
  const double lo = 0.5 * (t - r) / t;
  const double hi = 0.5 * (t + r) / t;
  return -(xlogx(clamp_eigenvalue(lo), base) + xlogx(clamp_eigenvalue(hi), base));
}

}  // namespace detail

// -Tr(rho log rho) over the eigenvalues of a Hermitian matrix, 0 log 0 = 0.
template <typename Derived>
double von_neumann_entropy(const Eigen::MatrixBase<Derived>& rho,
                           LogBase base = LogBase::two) {
  using PlainMatrix = typename Derived::PlainObject;
  Eigen::SelfAdjointEigenSolver<PlainMatrix> es(rho.eval(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw ContractViolation("eigendecomposition failed in entropy evaluation");
  }
  return detail::entropy_of_spectrum(es.eigenvalues(), base);
}

inline double von_neumann_entropy(const TwoQubitState& rho,
                                  LogBase base = LogBase::two) {
  return detail::entropy_of_spectrum(rho.eigenvalues(), base);
}

// State of qubit A (trace over B).
inline Matrix2 reduce_to_a(const Matrix4& rho) {
  Matrix2 out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      out(a, b) = rho(2 * a, 2 * b) + rho(2 * a + 1, 2 * b + 1);
    }
  }
  return out;
}

// State of qubit B (trace over A).
inline Matrix2 reduce_to_b(const Matrix4& rho) {
  Matrix2 out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) out(a, b) = rho(a, b) + rho(2 + a, 2 + b);
  }
  return out;
}

// sigma_y (x) sigma_y is real with anti-diagonal (-1, 1, 1, -1).
inline Matrix4 sigma_yy() {
  Matrix4 yy = Matrix4::Zero();
  yy(0, 3) = yy(3, 0) = -1.0;
  yy(1, 2) = yy(2, 1) = 1.0;
  return yy;
}

inline Matrix4 spin_flip(const Matrix4& rho) {
  const Matrix4 yy = sigma_yy();
  return yy * rho.conjugate() * yy;
}

// Wootters concurrence max(0, l1 - l2 - l3 - l4), where l_i are the square
// roots of the eigenvalues of rho (Y (x) Y) rho* (Y (x) Y) in decreasing order.
// With rho = A A^dagger, the l_i are the singular values of
// A^dagger (Y (x) Y) A*. Eigenvalues of rho at the solver noise floor are
// taken as exactly zero; their square roots (~1e-8) would otherwise leak into
// the l_i of rank-deficient states.
inline double concurrence(const TwoQubitState& state) {
  constexpr double noise_floor = 64.0 * std::numeric_limits<double>::epsilon();
  Eigen::SelfAdjointEigenSolver<Matrix4> es(state.matrix());
  Eigen::Vector4d root;
  for (int i = 0; i < 4; ++i) {
    const double lambda = detail::clamp_eigenvalue(es.eigenvalues()(i));
    root(i) = lambda > noise_floor ? std::sqrt(lambda) : 0.0;
  }
  const Matrix4 a = es.eigenvectors() * root.cast<cplx>().asDiagonal();
  const Matrix4 m = a.adjoint() * sigma_yy() * a.conjugate();
  const Eigen::Vector4d sv = Eigen::JacobiSVD<Matrix4>(m).singularValues();
  return std::max(0.0, sv(0) - sv(1) - sv(2) - sv(3));
}

inline double mutual_information(const TwoQubitState& rho,
                                 LogBase base = LogBase::two) {
  const double h_a = von_neumann_entropy(reduce_to_a(rho.matrix()), base);
  const double h_b = von_neumann_entropy(reduce_to_b(rho.matrix()), base);
  const double mi = h_a + h_b - von_neumann_entropy(rho, base);
  if (mi < -1e-9) {
    throw ContractViolation("negative mutual information " + std::to_string(mi));
  }
  return mi;
}

// Rank-1 projective measurement on qubit B: Pi_0 = |n><n| with
// |n> = cos(theta/2)|u> + e^{i phi} sin(theta/2)|d>, Pi_1 = I - Pi_0.
class MeasurementBasis {
 public:
  MeasurementBasis(double theta, double phi) : theta_(theta), phi_(phi) {
    if (!(theta >= 0.0 && theta <= pi)) {
      throw InvalidParameter("measurement theta must lie in [0, pi]");
    }
    if (!(phi >= 0.0 && phi < 2.0 * pi)) {
      throw InvalidParameter("measurement phi must lie in [0, 2 pi)");
    }
  }

  // Any real angle pair describes a valid projector; map it back onto the
  // chart through its Bloch vector. Poles get phi = 0.
  static MeasurementBasis from_any_angles(double theta, double phi) {
    const double x = std::sin(theta) * std::cos(phi);
    const double y = std::sin(theta) * std::sin(phi);
    const double z = std::clamp(std::cos(theta), -1.0, 1.0);
    const double t = std::acos(z);
    double f = (x == 0.0 && y == 0.0) ? 0.0 : std::atan2(y, x);
    if (f < 0.0) f += 2.0 * pi;
    if (f >= 2.0 * pi) f = 0.0;
    return MeasurementBasis(t, f);
  }

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  // Measurement vector for outcome 0 or 1.
  Eigen::Vector2cd vector(int outcome) const { return vector_for(theta_, phi_, outcome); }

  Matrix2 projector(int outcome) const {
    const Eigen::Vector2cd v = vector(outcome);
    return v * v.adjoint();
  }

  static Eigen::Vector2cd vector_for(double theta, double phi, int outcome) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    if (outcome == 0) return {cplx(c, 0.0), std::polar(s, phi)};
    return {-std::polar(s, -phi), cplx(c, 0.0)};
  }

 private:
  double theta_;
  double phi_;
};

struct ConditionalState {
  Matrix2 state;  // rho_{A|i}
  double probability = 0.0;
};

namespace detail {
// Unnormalized Tr_B((I (x) |v><v|) rho (I (x) |v><v|)), i.e. <a v|rho|b v>.
inline Matrix2 project_b(const Matrix4& rho, const Eigen::Vector2cd& v) {
  Matrix2 out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      cplx acc = 0.0;
      for (int c = 0; c < 2; ++c) {
        for (int d = 0; d < 2; ++d) {
          acc += std::conj(v(c)) * rho(2 * a + c, 2 * b + d) * v(d);
        }
      }
      out(a, b) = acc;
    }
  }
  return out;
}
}  // namespace detail

inline ConditionalState conditional_state(const TwoQubitState& rho,
                                          const MeasurementBasis& basis,
                                          int outcome) {
  if (outcome != 0 && outcome != 1) {
    throw InvalidParameter("measurement outcome must be 0 or 1");
  }
  Matrix2 sigma = detail::project_b(rho.matrix(), basis.vector(outcome));
  const double p = sigma.trace().real();
  if (p < tolerance::zero_probability) {
    return {Matrix2::Identity() * 0.5, p};
  }
  return {sigma / p, p};
}

namespace detail {
// sum_i p_i H(rho_{A|i}) for the measurement vectors v0, v1.
inline double weighted_conditional_entropy(const Matrix4& rho,
                                           const Eigen::Vector2cd& v0,
                                           const Eigen::Vector2cd& v1,
                                           LogBase base) {
  double total = 0.0;
  for (const auto* v : {&v0, &v1}) {
    const Matrix2 s = project_b(rho, *v);
    const double a = s(0, 0).real();
    const double d = s(1, 1).real();
    const double p = a + d;
    if (p < tolerance::zero_probability) continue;
    total += p * entropy_2x2(a, d, s(0, 1), base);
  }
  return total;
}
}  // namespace detail

inline double measured_conditional_entropy(const TwoQubitState& rho,
                                           const MeasurementBasis& basis,
                                           LogBase base = LogBase::two) {
  return detail::weighted_conditional_entropy(rho.matrix(), basis.vector(0),
                                              basis.vector(1), base);
}

struct OptimizerParams {
  int grid_theta = 64;
  int grid_phi = 128;
  NelderMeadOptions simplex{};
};

struct ConditionalEntropyMinimum {
  double value = 0.0;
  MeasurementBasis basis{0.0, 0.0};
  int evaluations = 0;
};

// Two-stage deterministic search over the measurement direction. Stage one
// scans a grid_theta x grid_phi lattice (theta at bin midpoints of [0, pi],
// phi at 2 pi b / grid_phi). Stage two runs Nelder-Mead from a simplex made
// of the best grid point and its two best non-collinear grid neighbours.
inline ConditionalEntropyMinimum minimize_conditional_entropy(
    const TwoQubitState& state, const OptimizerParams& params = {},
    LogBase base = LogBase::two) {
  if (params.grid_theta < 2 || params.grid_phi < 2) {
    throw InvalidParameter("optimizer grid needs at least 2 x 2 points");
  }
  const Matrix4& rho = state.matrix();
  const int gt = params.grid_theta;
  const int gp = params.grid_phi;
  const double dtheta = pi / gt;
  const double dphi = 2.0 * pi / gp;

  std::vector<double> cos_half(gt), sin_half(gt);
  for (int a = 0; a < gt; ++a) {
    cos_half[a] = std::cos(0.5 * (a + 0.5) * dtheta);
    sin_half[a] = std::sin(0.5 * (a + 0.5) * dtheta);
  }
  std::vector<cplx> phase(gp);
  for (int b = 0; b < gp; ++b) phase[b] = std::polar(1.0, b * dphi);

  std::vector<double> values(static_cast<std::size_t>(gt) * gp);
  int best_a = 0, best_b = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (int a = 0; a < gt; ++a) {
    for (int b = 0; b < gp; ++b) {
      const Eigen::Vector2cd v0(cos_half[a], sin_half[a] * phase[b]);
      const Eigen::Vector2cd v1(-sin_half[a] * std::conj(phase[b]), cos_half[a]);
      const double h = detail::weighted_conditional_entropy(rho, v0, v1, base);
      values[static_cast<std::size_t>(a) * gp + b] = h;
      if (h < best_value) {
        best_value = h;
        best_a = a;
        best_b = b;
      }
    }
  }
  int evaluations = gt * gp;

  auto angles = [&](int a, int b) {
    return std::array<double, 2>{(a + 0.5) * dtheta, b * dphi};
  };
  // Neighbours in theta are not wrapped (the lattice stays inside [0, pi]);
  // neighbours in phi wrap around.
  struct Candidate {
    int da, db;
    double value;
  };
  std::vector<Candidate> neighbours;
  for (int da = -1; da <= 1; ++da) {
    for (int db = -1; db <= 1; ++db) {
      if (da == 0 && db == 0) continue;
      const int a = best_a + da;
      if (a < 0 || a >= gt) continue;
      const int b = ((best_b + db) % gp + gp) % gp;
      neighbours.push_back({da, db, values[static_cast<std::size_t>(a) * gp + b]});
    }
  }
  std::stable_sort(neighbours.begin(), neighbours.end(),
                   [](const Candidate& x, const Candidate& y) { return x.value < y.value; });
  const Candidate first = neighbours[0];
  Candidate second = neighbours[1];
  for (std::size_t i = 1; i < neighbours.size(); ++i) {
    if (first.da * neighbours[i].db - first.db * neighbours[i].da != 0) {
      second = neighbours[i];
      break;
    }
  }
  const auto origin = angles(best_a, best_b);
  std::array<std::array<double, 2>, 3> simplex{
      origin,
      std::array<double, 2>{origin[0] + first.da * dtheta, origin[1] + first.db * dphi},
      std::array<double, 2>{origin[0] + second.da * dtheta, origin[1] + second.db * dphi}};

  auto objective = [&](const std::array<double, 2>& x) {
    return detail::weighted_conditional_entropy(
        rho, MeasurementBasis::vector_for(x[0], x[1], 0),
        MeasurementBasis::vector_for(x[0], x[1], 1), base);
  };
  const auto refined = nelder_mead<2>(objective, simplex, params.simplex);
  evaluations += refined.evaluations;

  if (refined.value < best_value) {
    return {refined.value,
            MeasurementBasis::from_any_angles(refined.argmin[0], refined.argmin[1]),
            evaluations};
  }
  return {best_value, MeasurementBasis::from_any_angles(origin[0], origin[1]),
          evaluations};
}

struct DiscordResult {
  double discord = 0.0;
  double mutual_information = 0.0;
  double classical_correlation = 0.0;
  MeasurementBasis optimal_basis{0.0, 0.0};
  int optimizer_evaluations = 0;
};

// D(A:B) = I(A:B) - J(A:B), J(A:B) = H(A) - min over measurements on B of
// sum_i p_i H(rho_{A|i}). Values in [-1e-6, 0) are reported as 0.
inline DiscordResult quantum_discord(const TwoQubitState& rho,
                                     const OptimizerParams& params = {},
                                     LogBase base = LogBase::two) {
  const double h_a = von_neumann_entropy(reduce_to_a(rho.matrix()), base);
  const double mi = mutual_information(rho, base);
  const auto minimum = minimize_conditional_entropy(rho, params, base);
  DiscordResult result;
  result.mutual_information = mi;
  result.classical_correlation = h_a - minimum.value;
  result.discord = mi - result.classical_correlation;
  result.optimal_basis = minimum.basis;
  result.optimizer_evaluations = minimum.evaluations;
  if (result.discord < tolerance::negative_discord) {
    throw ContractViolation("negative discord " + std::to_string(result.discord));
  }
  if (result.discord < 0.0) {
    result.discord = 0.0;
    result.classical_correlation = mi;
  }
  return result;
}

}  // namespace kicked_top
