#pragma once

// Brute-force reference path for the two-qubit reduction: expand the Dicke
// state into the full 2^N product basis and trace out the environment by
// explicit index summation. Exponential in N; meant for tests.

#include <kicked_top/reduction.hpp>

#include <bit>
#include <cstdint>
#include <utility>

namespace kicked_top {

inline constexpr int max_product_expansion_qubits = 14;

namespace detail {
inline double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

inline void check_expansion_size(int n) {
  if (n > max_product_expansion_qubits) {
    throw SizeLimitError("product-basis expansion limited to " +
                         std::to_string(max_product_expansion_qubits) +
                         " qubits, got " + std::to_string(n));
  }
}
}  // namespace detail

// |j,m> -> binom(N, j+m)^(-1/2) * sum of all bit strings with j+m up spins.
// A bit string with popcount k (k down spins) carries Dicke amplitude k.
inline Vector dicke_to_product(const DickeState& state) {
  const int n = state.spin().qubits();
  detail::check_expansion_size(n);
  const std::uint32_t size = 1u << n;
  Vector full(size);
  Eigen::VectorXd scale(n + 1);
  for (int k = 0; k <= n; ++k) scale(k) = 1.0 / std::sqrt(detail::binomial(n, k));
  for (std::uint32_t s = 0; s < size; ++s) {
    const int k = std::popcount(s);
    full(s) = state.amplitudes()(k) * scale(k);
  }
  return full;
}

// Reduced state of qubits (first, second), 0-based with qubit 0 the most
// significant bit.
inline TwoQubitState brute_force_rdm(const DickeState& state, int first = 0,
                                     int second = 1) {
  const int n = state.spin().qubits();
  detail::check_expansion_size(n);
  if (n < 2) throw InvalidParameter("two-qubit reduction needs N >= 2 qubits");
  if (first == second || first < 0 || second < 0 || first >= n || second >= n) {
    throw InvalidParameter("invalid qubit pair");
  }
  const Vector full = dicke_to_product(state);
  const int shift_a = n - 1 - first;
  const int shift_b = n - 1 - second;
  const std::uint32_t mask = (1u << shift_a) | (1u << shift_b);
  auto index = [&](std::uint32_t env, int a, int b) {
    return env | (static_cast<std::uint32_t>(a) << shift_a) |
           (static_cast<std::uint32_t>(b) << shift_b);
  };
  Matrix4 rho = Matrix4::Zero();
  const std::uint32_t size = 1u << n;
  for (std::uint32_t env = 0; env < size; ++env) {
    if (env & mask) continue;
    for (int r = 0; r < 4; ++r) {
      const cplx amp_r = full(index(env, r >> 1, r & 1));
      for (int c = 0; c < 4; ++c) {
        rho(r, c) += amp_r * std::conj(full(index(env, c >> 1, c & 1)));
      }
    }
  }
  return TwoQubitState(rho);
}

}  // namespace kicked_top
