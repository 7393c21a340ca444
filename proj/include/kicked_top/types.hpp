#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>

namespace kicked_top {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

inline constexpr double pi = std::numbers::pi;

namespace tolerance {
// Normalization of a freshly constructed state.
inline constexpr double state_norm = 1e-12;
// Allowed norm drift over a single kick before renormalization.
inline constexpr double kick_norm_drift = 1e-10;
// Hermiticity and unit trace of two-qubit states.
inline constexpr double hermitian = 1e-12;
inline constexpr double trace = 1e-12;
// Eigenvalues in [negative_eigenvalue, 0) are clamped to zero; anything lower
// is rejected.
inline constexpr double negative_eigenvalue = -1e-10;
// Discord in [negative_discord, 0) is clamped to zero.
inline constexpr double negative_discord = -1e-6;
// Measurement outcomes with smaller probability contribute nothing.
inline constexpr double zero_probability = 1e-14;
}  // namespace tolerance

enum class LogBase { two, e };

inline double log_in(double x, LogBase base) {
  return base == LogBase::two ? std::log2(x) : std::log(x);
}

}  // namespace kicked_top
