#include "test_support.hpp"

#include <kicked_top/reduction_oracle.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace kicked_top;
using kicked_top::testing::random_dicke_state;

namespace {

double max_diff(const TwoQubitState& a, const TwoQubitState& b) {
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

void expect_physical(const TwoQubitState& rho) {
  EXPECT_LT((rho.matrix() - rho.matrix().adjoint()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
  EXPECT_GE(rho.eigenvalues()(0), -1e-10);
  EXPECT_LT(swap_asymmetry(rho), 1e-12);
  EXPECT_LT(std::abs(singlet_population(rho)), 1e-10);
}

}  // namespace

TEST(TwoQubitState, RejectsUnphysicalMatrices) {
  Matrix4 m = Matrix4::Identity() * 0.25;
  m(0, 1) = 0.1;  // not Hermitian
  EXPECT_THROW(TwoQubitState{m}, InvalidState);
  EXPECT_THROW(TwoQubitState{Matrix4(Matrix4::Identity() * 0.3)}, InvalidState);
  Matrix4 neg = Matrix4::Zero();
  neg(0, 0) = 1.1;
  neg(1, 1) = -0.1;
  EXPECT_THROW(TwoQubitState{neg}, InvalidState);
}

TEST(TwoQubitRdm, AllUpIsUpUp) {
  for (int n : {2, 3, 4, 9, 80}) {
    const auto rho = two_qubit_rdm(DickeState::basis(SpinQuantumNumber(n), 0));
    Matrix4 expected = Matrix4::Zero();
    expected(0, 0) = 1.0;
    EXPECT_LT((rho.matrix() - expected).cwiseAbs().maxCoeff(), 1e-14) << "N = " << n;
  }
}

TEST(TwoQubitRdm, SpinOneMiddleStateIsTriplet) {
  const auto rho = two_qubit_rdm(DickeState::basis(SpinQuantumNumber(2), 1));
  Eigen::Vector4cd t(0.0, 1.0, 1.0, 0.0);
  t /= std::sqrt(2.0);
  EXPECT_LT((rho.matrix() - t * t.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(TwoQubitRdm, NeedsTwoQubits) {
  EXPECT_THROW(two_qubit_rdm(DickeState::basis(SpinQuantumNumber(1), 0)), InvalidParameter);
}

TEST(DickeToProduct, SmallCases) {
  {
    const Vector v = dicke_to_product(DickeState::basis(SpinQuantumNumber(2), 0));
    EXPECT_NEAR(std::abs(v(0)), 1.0, 1e-15);  // |uu>
    EXPECT_LT(v.tail(3).norm(), 1e-15);
  }
  {
    const Vector v = dicke_to_product(DickeState::basis(SpinQuantumNumber(2), 1));
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(v(1).real(), r, 1e-15);  // |ud>
    EXPECT_NEAR(v(2).real(), r, 1e-15);  // |du>
    EXPECT_EQ(v(0), cplx(0.0));
    EXPECT_EQ(v(3), cplx(0.0));
  }
  {
    // |3/2, 1/2>: one down spin, (|uud> + |udu> + |duu>)/sqrt(3).
    const Vector v = dicke_to_product(DickeState::basis(SpinQuantumNumber(3), 1));
    const double r = 1.0 / std::sqrt(3.0);
    for (int s : {1, 2, 4}) EXPECT_NEAR(v(s).real(), r, 1e-15);
    for (int s : {0, 3, 5, 6, 7}) EXPECT_EQ(v(s), cplx(0.0));
  }
}

TEST(DickeToProduct, Normalized) {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 12; ++n) {
    const Vector v = dicke_to_product(random_dicke_state(rng, SpinQuantumNumber(n)));
    EXPECT_NEAR(v.norm(), 1.0, 1e-12);
  }
}

TEST(DickeToProduct, SizeGuard) {
  EXPECT_THROW(dicke_to_product(DickeState::basis(SpinQuantumNumber(15), 0)), SizeLimitError);
  EXPECT_THROW(brute_force_rdm(DickeState::basis(SpinQuantumNumber(15), 0)), SizeLimitError);
}

TEST(BruteForceRdm, FourQubitWState) {
  // |2,1> = (|duuu> + |uduu> + |uudu> + |uuud>)/2, worked out by hand.
  const auto rho = brute_force_rdm(DickeState::basis(SpinQuantumNumber(4), 1));
  Matrix4 expected = Matrix4::Zero();
  expected(0, 0) = 0.5;
  expected(1, 1) = expected(2, 2) = 0.25;
  expected(1, 2) = expected(2, 1) = 0.25;
  EXPECT_LT((rho.matrix() - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(BruteForceRdm, MatchesIdentitiesOnBasisStates) {
  for (int n : {4, 6, 8}) {
    const SpinQuantumNumber spin(n);
    for (int k = 0; k <= n; ++k) {
      const auto s = DickeState::basis(spin, k);
      EXPECT_LT(max_diff(two_qubit_rdm(s), brute_force_rdm(s)), 1e-12)
          << "N = " << n << ", k = " << k;
    }
  }
}

TEST(BruteForceRdm, MatchesIdentitiesOnRandomStates) {
  std::mt19937_64 rng(2024);
  for (int n : {2, 3, 4, 5, 6, 7, 8}) {
    const SpinQuantumNumber spin(n);
    const auto ops = build_collective_operators(spin);
    for (int trial = 0; trial < 50; ++trial) {
      const auto s = random_dicke_state(rng, spin);
      const auto fast = two_qubit_rdm(s, ops);
      ASSERT_LT(max_diff(fast, brute_force_rdm(s)), 1e-10) << "N = " << n;
      expect_physical(fast);
    }
  }
}

TEST(BruteForceRdm, IndependentOfQubitPair) {
  std::mt19937_64 rng(99);
  const SpinQuantumNumber spin(6);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = random_dicke_state(rng, spin);
    const auto ref = brute_force_rdm(s, 0, 1);
    EXPECT_LT(max_diff(ref, brute_force_rdm(s, 2, 5)), 1e-12);
    EXPECT_LT(max_diff(ref, brute_force_rdm(s, 4, 1)), 1e-12);
    EXPECT_LT(max_diff(ref, brute_force_rdm(s, 3, 4)), 1e-12);
  }
  EXPECT_THROW(brute_force_rdm(DickeState::basis(spin, 0), 1, 1), InvalidParameter);
}

TEST(TwoQubitRdm, SymmetricSubspaceConsistencyAtLargeJ) {
  std::mt19937_64 rng(7);
  for (int n : {20, 40, 80}) {
    const SpinQuantumNumber spin(n);
    const auto ops = build_collective_operators(spin);
    for (int trial = 0; trial < 10; ++trial) {
      const auto rho = two_qubit_rdm(random_dicke_state(rng, spin), ops);
      expect_physical(rho);
      EXPECT_NEAR(rho(1, 1).real(), rho(1, 2).real(), 1e-10);
    }
  }
}
