#include "test_support.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <random>

using namespace kicked_top;
using kicked_top::testing::max_abs_diff;

namespace {

std::array<double, 3> mean_direction(const DickeState& s, const CollectiveOperators& ops) {
  const auto e = collective_expectations(s, ops);
  const double j = ops.spin.j();
  return {e.jx / j, e.jy / j, e.jz / j};
}

}  // namespace

TEST(SpinQuantumNumber, RejectsNonPositive) {
  EXPECT_THROW(SpinQuantumNumber(0), InvalidParameter);
  EXPECT_THROW(SpinQuantumNumber(-3), InvalidParameter);
  SpinQuantumNumber s(8);
  EXPECT_EQ(s.qubits(), 8);
  EXPECT_DOUBLE_EQ(s.j(), 4.0);
  EXPECT_EQ(s.dimension(), 9);
  EXPECT_DOUBLE_EQ(s.m(0), 4.0);
  EXPECT_DOUBLE_EQ(s.m(8), -4.0);
}

TEST(SphericalPoint, WrapsPhiAndChecksTheta) {
  EXPECT_THROW(SphericalPoint(-0.1, 0.0), InvalidParameter);
  EXPECT_THROW(SphericalPoint(pi + 1e-9, 0.0), InvalidParameter);
  EXPECT_NEAR(SphericalPoint(1.0, 2.0 * pi + 0.5).phi(), 0.5, 1e-14);
  EXPECT_NEAR(SphericalPoint(1.0, -pi - 0.5).phi(), pi - 0.5, 1e-14);
  EXPECT_DOUBLE_EQ(SphericalPoint(1.0, -pi).phi(), -pi);
}

TEST(CollectiveOperators, SpinHalf) {
  const auto ops = build_collective_operators(SpinQuantumNumber(1));
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = 0.5;
  expected(1, 1) = -0.5;
  EXPECT_LT(max_abs_diff(ops.jz, expected), 1e-15);
}

TEST(CollectiveOperators, SpinOne) {
  const auto ops = build_collective_operators(SpinQuantumNumber(2));
  EXPECT_DOUBLE_EQ(ops.jz(0, 0).real(), 1.0);
  EXPECT_DOUBLE_EQ(ops.jz(1, 1).real(), 0.0);
  EXPECT_DOUBLE_EQ(ops.jz(2, 2).real(), -1.0);
  EXPECT_NEAR(ops.jplus(0, 1).real(), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(ops.jplus(1, 2).real(), std::sqrt(2.0), 1e-15);
  EXPECT_EQ(ops.jplus(1, 0), cplx(0.0));
  EXPECT_EQ(max_abs_diff(ops.jminus, ops.jplus.adjoint()), 0.0);
}

// Entries of the products grow like j^2, so the residual is bounded relative
// to that scale: a few ulps of j(j+1).
TEST(CollectiveOperators, Su2AlgebraUpToJ100) {
  const cplx i(0.0, 1.0);
  for (int twice_j = 1; twice_j <= 200; ++twice_j) {
    const auto ops = build_collective_operators(SpinQuantumNumber(twice_j));
    const double j = ops.spin.j();
    const double tol = 8.0 * std::numeric_limits<double>::epsilon() * j * (j + 1.0);
    const Matrix xy = ops.jx * ops.jy - ops.jy * ops.jx;
    const Matrix yz = ops.jy * ops.jz - ops.jz * ops.jy;
    const Matrix zx = ops.jz * ops.jx - ops.jx * ops.jz;
    ASSERT_LT(max_abs_diff(xy, i * ops.jz), tol) << "2j = " << twice_j;
    ASSERT_LT(max_abs_diff(yz, i * ops.jx), tol) << "2j = " << twice_j;
    ASSERT_LT(max_abs_diff(zx, i * ops.jy), tol) << "2j = " << twice_j;
    ASSERT_LT(max_abs_diff(ops.jx, ops.jx.adjoint()), 1e-15);
    ASSERT_LT(max_abs_diff(ops.jy, ops.jy.adjoint()), 1e-15);
  }
}

TEST(CollectiveOperators, Su2AlgebraAbsoluteAtDeskScale) {
  const cplx i(0.0, 1.0);
  for (int twice_j = 1; twice_j <= 80; ++twice_j) {
    const auto ops = build_collective_operators(SpinQuantumNumber(twice_j));
    ASSERT_LT(max_abs_diff(ops.jx * ops.jy - ops.jy * ops.jx, i * ops.jz), 1e-12)
        << "2j = " << twice_j;
  }
}

TEST(RotationOperator, ZeroAngleIsIdentity) {
  const SpinQuantumNumber spin(9);
  const Matrix r = rotation_operator(spin, SphericalPoint(0.0, 1.3));
  EXPECT_LT(max_abs_diff(r, Matrix::Identity(10, 10)), 1e-14);
}

TEST(RotationOperator, Unitary) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> th(0.0, pi), ph(-pi, pi);
  for (int twice_j : {1, 2, 7, 8, 80, 200}) {
    const auto ops = build_collective_operators(SpinQuantumNumber(twice_j));
    for (int trial = 0; trial < 3; ++trial) {
      const Matrix r = rotation_operator(ops, SphericalPoint(th(rng), ph(rng)));
      const Matrix id = Matrix::Identity(r.rows(), r.cols());
      EXPECT_LT(max_abs_diff(r.adjoint() * r, id), 1e-12) << "2j = " << twice_j;
    }
  }
}

TEST(RotationOperator, HalfTurnFlipsTopState) {
  for (int twice_j : {1, 4, 8, 15}) {
    const SpinQuantumNumber spin(twice_j);
    const Matrix r = rotation_operator(spin, SphericalPoint(pi, 0.0));
    // |<j,-j| R |j,j>| = 1.
    EXPECT_NEAR(std::abs(r(twice_j, 0)), 1.0, 1e-12) << "2j = " << twice_j;
  }
}

TEST(SpinCoherentState, NorthPoleIsTopState) {
  const auto s = spin_coherent_state(SpinQuantumNumber(6), SphericalPoint(0.0, 2.0));
  EXPECT_NEAR(std::abs(s.amplitudes()(0)), 1.0, 1e-14);
  for (int k = 1; k < 7; ++k) EXPECT_LT(std::abs(s.amplitudes()(k)), 1e-14);
}

TEST(SpinCoherentState, MeanDirectionAtJ4) {
  const auto ops = build_collective_operators(SpinQuantumNumber(8));
  const double theta = 2.25, phi = 0.63;
  const auto dir = mean_direction(spin_coherent_state(ops, SphericalPoint(theta, phi)), ops);
  EXPECT_NEAR(dir[0], std::sin(theta) * std::cos(phi), 1e-10);
  EXPECT_NEAR(dir[1], std::sin(theta) * std::sin(phi), 1e-10);
  EXPECT_NEAR(dir[2], std::cos(theta), 1e-10);
}

TEST(SpinCoherentState, MinimumRelativeVariance) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> th(0.0, pi), ph(-pi, pi);
  for (int twice_j : {1, 3, 8, 20, 80}) {
    const auto ops = build_collective_operators(SpinQuantumNumber(twice_j));
    const double j = ops.spin.j();
    for (int trial = 0; trial < 20; ++trial) {
      const auto s = spin_coherent_state(ops, SphericalPoint(th(rng), ph(rng)));
      const auto e = collective_expectations(s, ops);
      const Vector& psi = s.amplitudes();
      const double j2 = psi.dot((ops.jx * ops.jx + ops.jy * ops.jy + ops.jz * ops.jz) * psi).real();
      const double mean2 = e.jx * e.jx + e.jy * e.jy + e.jz * e.jz;
      EXPECT_NEAR((j2 - mean2) / (j * j), 1.0 / j, 1e-10);
    }
  }
}

TEST(FloquetOperator, TrivialParametersGiveIdentity) {
  const Matrix u = floquet_operator(KickedTopParams(SpinQuantumNumber(8), 0.0, 0.0));
  EXPECT_LT(max_abs_diff(u, Matrix::Identity(9, 9)), 1e-14);
}

TEST(FloquetOperator, UnitaryAtFigureParameters) {
  const Matrix u = floquet_operator(KickedTopParams(SpinQuantumNumber(8), 3.0, pi / 2));
  EXPECT_LT(max_abs_diff(u.adjoint() * u, Matrix::Identity(9, 9)), 1e-12);
}

TEST(FloquetOperator, RejectsNegativeKappa) {
  EXPECT_THROW(KickedTopParams(SpinQuantumNumber(8), -1.0, pi / 2), InvalidParameter);
}

TEST(FloquetOperator, FullTurnIsPlusMinusIdentity) {
  for (int twice_j : {1, 2, 5, 8, 40}) {
    const SpinQuantumNumber spin(twice_j);
    const Matrix u = floquet_operator(KickedTopParams(spin, 0.0, 2.0 * pi));
    const double sign = twice_j % 2 == 0 ? 1.0 : -1.0;
    const Matrix id = Matrix::Identity(spin.dimension(), spin.dimension());
    EXPECT_LT(max_abs_diff(u, sign * id), 1e-10) << "2j = " << twice_j;
  }
}

// With kappa = 0 a kick is an exact rotation of <J> about y by p; the 3x3
// rotation below is the reference (it also fixes the sense of rotation).
TEST(FloquetOperator, PureRotationMatchesRotationMatrix) {
  const SpinQuantumNumber spin(80);
  const auto ops = build_collective_operators(spin);
  const double p = pi / 2;
  const Matrix u = floquet_operator(KickedTopParams(spin, 0.0, p));
  for (auto [theta, phi] : {std::pair{pi / 2, pi / 2}, std::pair{2.25, 0.63},
                            std::pair{0.4, -2.0}, std::pair{1.1, 3.0}}) {
    const auto s0 = spin_coherent_state(ops, SphericalPoint(theta, phi));
    const auto d0 = mean_direction(s0, ops);
    const auto d1 = mean_direction(DickeState::normalized(u * s0.amplitudes()), ops);
    const double ex = std::cos(p) * d0[0] + std::sin(p) * d0[2];
    const double ey = d0[1];
    const double ez = -std::sin(p) * d0[0] + std::cos(p) * d0[2];
    EXPECT_NEAR(d1[0], ex, 1e-10);
    EXPECT_NEAR(d1[1], ey, 1e-10);
    EXPECT_NEAR(d1[2], ez, 1e-10);
  }
}

TEST(Evolve, ZeroKicks) {
  const auto s = spin_coherent_state(SpinQuantumNumber(8), SphericalPoint(1.0, 1.0));
  const auto out = evolve(s, Matrix::Identity(9, 9), 0);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].amplitudes(), s.amplitudes());
}

TEST(Evolve, IdentityKeepsState) {
  const auto s = spin_coherent_state(SpinQuantumNumber(8), SphericalPoint(1.0, 1.0));
  const auto out = evolve(s, Matrix::Identity(9, 9), 5);
  ASSERT_EQ(out.size(), 6u);
  for (const auto& st : out) EXPECT_LT((st.amplitudes() - s.amplitudes()).norm(), 1e-15);
}

TEST(Evolve, DimensionMismatchIsContractViolation) {
  const auto s = spin_coherent_state(SpinQuantumNumber(8), SphericalPoint(1.0, 1.0));
  EXPECT_THROW(evolve(s, Matrix::Identity(5, 5), 3), ContractViolation);
}

TEST(Evolve, NonUnitaryDriftDetected) {
  const auto s = spin_coherent_state(SpinQuantumNumber(4), SphericalPoint(1.0, 1.0));
  const Matrix scaled = Matrix::Identity(5, 5) * (1.0 + 1e-6);
  EXPECT_THROW(evolve(s, scaled, 3), ContractViolation);
}

TEST(Evolve, NormPreservedOverThousandKicks) {
  const SpinQuantumNumber spin(80);
  const Matrix u = floquet_operator(KickedTopParams(spin, 3.0, pi / 2));
  const auto out = evolve(spin_coherent_state(spin, SphericalPoint(2.25, 2.0)), u, 1000);
  ASSERT_EQ(out.size(), 1001u);
  // Reconstruct the raw per-kick drift.
  double worst = 0.0;
  for (std::size_t k = 1; k < out.size(); ++k) {
    worst = std::max(worst, std::abs((u * out[k - 1].amplitudes()).norm() - 1.0));
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(CollectiveExpectations, TopAndBottomStates) {
  const SpinQuantumNumber spin(6);
  const auto ops = build_collective_operators(spin);
  const auto top = collective_expectations(DickeState::basis(spin, 0), ops);
  EXPECT_DOUBLE_EQ(top.jz, 3.0);
  EXPECT_EQ(top.jplus, cplx(0.0));
  const auto bottom = collective_expectations(DickeState::basis(spin, 6), ops);
  EXPECT_NEAR(spin.j() + bottom.jz, 0.0, 1e-15);  // <n_up> = 0
}

TEST(CollectiveExpectations, CoherentStateLadderConsistency) {
  const auto ops = build_collective_operators(SpinQuantumNumber(10));
  const auto s = spin_coherent_state(ops, SphericalPoint(1.2, -0.7));
  const auto e = collective_expectations(s, ops);
  const double j = 5.0;
  // <J+> = <Jx> + i<Jy> = j sin(theta) e^{i phi}.
  EXPECT_NEAR(e.jplus.real(), j * std::sin(1.2) * std::cos(-0.7), 1e-10);
  EXPECT_NEAR(e.jplus.imag(), j * std::sin(1.2) * std::sin(-0.7), 1e-10);
}

TEST(DickeState, RejectsUnnormalized) {
  Vector v = Vector::Zero(3);
  v(0) = 1.0 + 1e-9;
  EXPECT_THROW(DickeState{v}, ContractViolation);
  EXPECT_THROW(DickeState::normalized(Vector::Zero(3)), InvalidParameter);
}
