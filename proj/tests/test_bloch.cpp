#include "oracles.hpp"

#include "qubitmix/bloch.hpp"
#include "qubitmix/errors.hpp"
#include "qubitmix/sampler.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace qubitmix;

namespace {

void expect_matrix_near(const Eigen::Matrix2cd& got, const Eigen::Matrix2cd& want, double tol) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) EXPECT_NEAR(std::abs(got(i, j) - want(i, j)), 0.0, tol) << i << "," << j;
}

Eigen::Matrix2cd diag(double a, double b) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST(BlochVector, ClampsWithinToleranceAndRejectsBeyond) {
  EXPECT_DOUBLE_EQ(BlochVector(1.0 + 5e-10, 0.0, 0.0).length(), 1.0);
  EXPECT_THROW(BlochVector(0.0, 0.0, 1.0 + 1e-6), InvalidStateError);
  EXPECT_THROW(BlochVector(0.8, 0.8, 0.0), InvalidStateError);
  EXPECT_THROW(BlochVector(std::nan(""), 0.0, 0.0), InvalidStateError);
}

TEST(BlochToMatrix, Examples) {
  expect_matrix_near(bloch_to_matrix({0, 0, 0}).matrix(), 0.5 * Eigen::Matrix2cd::Identity(), 1e-15);
  expect_matrix_near(bloch_to_matrix({0, 0, 1}).matrix(), diag(1, 0), 1e-15);
  Eigen::Matrix2cd plus;
  plus << 0.5, 0.5, 0.5, 0.5;
  expect_matrix_near(bloch_to_matrix({1, 0, 0}).matrix(), plus, 1e-15);
}

TEST(BlochToMatrix, AgreesWithEntrywiseOracle) {
  SeededSampler s(11);
  for (int i = 0; i < 1000; ++i) {
    const BlochVector v = sample_hs_state(s);
    expect_matrix_near(bloch_to_matrix(v).matrix(), oracle::rho(v.vec()), 1e-15);
  }
}

TEST(MatrixToBloch, Examples) {
  const auto from = [](const Eigen::Matrix2cd& m) { return matrix_to_bloch(DensityMatrix2::from_matrix(m)); };
  EXPECT_NEAR(from(0.5 * Eigen::Matrix2cd::Identity()).length(), 0.0, 1e-15);
  const BlochVector z = from(diag(0.75, 0.25));
  EXPECT_NEAR(z.x(), 0.0, 1e-15);
  EXPECT_NEAR(z.y(), 0.0, 1e-15);
  EXPECT_NEAR(z.z(), 0.5, 1e-15);
  Eigen::Matrix2cd plus;
  plus << 0.5, 0.5, 0.5, 0.5;
  const BlochVector x = from(plus);
  EXPECT_NEAR(x.x(), 1.0, 1e-15);
  EXPECT_NEAR(x.y(), 0.0, 1e-15);
  EXPECT_NEAR(x.z(), 0.0, 1e-15);
}

TEST(DensityMatrix, RejectsInvalidMatrices) {
  Eigen::Matrix2cd non_hermitian;
  non_hermitian << 0.5, 0.3, 0.1, 0.5;
  EXPECT_THROW(DensityMatrix2::from_matrix(non_hermitian), InvalidStateError);
  EXPECT_THROW(DensityMatrix2::from_matrix(diag(0.6, 0.6)), InvalidStateError);
  EXPECT_THROW(DensityMatrix2::from_matrix(diag(1.2, -0.2)), InvalidStateError);
}

TEST(MatrixToBloch, RoundTrip) {
  SeededSampler s(12);
  for (int i = 0; i < 100000; ++i) {
    const BlochVector v = sample_hs_state(s);
    const BlochVector back = matrix_to_bloch(bloch_to_matrix(v));
    ASSERT_NEAR(back.x(), v.x(), 1e-12);
    ASSERT_NEAR(back.y(), v.y(), 1e-12);
    ASSERT_NEAR(back.z(), v.z(), 1e-12);
  }
}

TEST(MatrixToBloch, MatrixRoundTrip) {
  SeededSampler s(13);
  for (int i = 0; i < 1000; ++i) {
    const DensityMatrix2 m = DensityMatrix2::from_matrix(oracle::rho(sample_hs_state(s).vec()));
    expect_matrix_near(bloch_to_matrix(matrix_to_bloch(m)).matrix(), m.matrix(), 1e-12);
  }
}

TEST(Eigenvalues, Examples) {
  EXPECT_DOUBLE_EQ(eigenvalues(0.0).high, 0.5);
  EXPECT_DOUBLE_EQ(eigenvalues(0.0).low, 0.5);
  EXPECT_DOUBLE_EQ(eigenvalues(1.0).high, 1.0);
  EXPECT_DOUBLE_EQ(eigenvalues(1.0).low, 0.0);
  EXPECT_NEAR(eigenvalues(1.0 / 3).high, 2.0 / 3, 1e-15);
  EXPECT_NEAR(eigenvalues(1.0 / 3).low, 1.0 / 3, 1e-15);
  EXPECT_THROW(eigenvalues(-0.1), DomainError);
  EXPECT_THROW(eigenvalues(1.1), DomainError);
}

TEST(Eigenvalues, MatchDiagonalization) {
  SeededSampler s(14);
  for (int i = 0; i < 100000; ++i) {
    const BlochVector v = sample_hs_state(s);
    const QubitSpectrum a = eigenvalues(v.length());
    const QubitSpectrum b = matrix_eigenvalues(bloch_to_matrix(v));
    ASSERT_NEAR(a.high, b.high, 1e-12);
    ASSERT_NEAR(a.low, b.low, 1e-12);
    ASSERT_NEAR(a.high + a.low, 1.0, 1e-15);
  }
}

TEST(EntropyPhi, Examples) {
  EXPECT_DOUBLE_EQ(entropy_phi(0.0).value, 1.0);
  EXPECT_DOUBLE_EQ(entropy_phi(1.0).value, 0.0);
  EXPECT_NEAR(entropy_phi(0.5).value, 0.8112781244591328, 1e-10);
  EXPECT_THROW(entropy_phi(-0.01), DomainError);
  EXPECT_THROW(entropy_phi(1.01), DomainError);
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  EXPECT_DOUBLE_EQ(binary_entropy(0.0), 0.0);
}

TEST(EntropyPhi, MonotoneAndMatchesOracle) {
  double prev = 2.0;
  for (int i = 0; i <= 1000; ++i) {
    const double r = i / 1000.0;
    const double v = entropy_phi(r).value;
    EXPECT_LE(v, prev);
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    EXPECT_NEAR(v, oracle::phi(r), 1e-14);
    prev = v;
  }
}

TEST(EntropyPhi, MatchesVonNeumannOnMatrices) {
  SeededSampler s(15);
  for (int i = 0; i < 100000; ++i) {
    const BlochVector v = sample_hs_state(s);
    const DensityMatrix2 m = bloch_to_matrix(v);
    ASSERT_NEAR(von_neumann_entropy(m).value, entropy_phi(v.length()).value, 1e-10);
    ASSERT_NEAR(oracle::entropy_bits(m.matrix()), entropy_phi(v.length()).value, 1e-10);
  }
}

TEST(Coherence, Examples) {
  EXPECT_NEAR(rel_entropy_coherence(DensityMatrix2::from_matrix(diag(0.75, 0.25))).value, 0.0, 1e-15);
  EXPECT_NEAR(rel_entropy_coherence(BlochVector(1, 0, 0)).value, 1.0, 1e-12);
  EXPECT_NEAR(rel_entropy_coherence(BlochVector(0.5, 0, 0)).value, 1.0 - 0.8112781244591328, 1e-10);
}

TEST(Coherence, NonnegativeAndMatrixFormAgrees) {
  SeededSampler s(16);
  for (int i = 0; i < 10000; ++i) {
    const BlochVector v = sample_hs_state(s);
    const DensityMatrix2 m = bloch_to_matrix(v);
    const double c = rel_entropy_coherence(m).value;
    ASSERT_GE(c, -1e-15);
    Eigen::Matrix2cd d = m.matrix();
    d(0, 1) = d(1, 0) = 0.0;
    ASSERT_NEAR(c, oracle::entropy_bits(d) - oracle::entropy_bits(m.matrix()), 1e-10);
    ASSERT_NEAR(c, rel_entropy_coherence(v).value, 1e-12);
  }
}

TEST(Fidelity, Examples) {
  const DensityMatrix2 pure = bloch_to_matrix({0.6, 0.0, 0.8});
  EXPECT_NEAR(fidelity_squared(pure, pure), 1.0, 1e-12);
  const DensityMatrix2 center = bloch_to_matrix({0, 0, 0});
  EXPECT_NEAR(fidelity_squared(center, center), 1.0, 1e-15);
  EXPECT_NEAR(fidelity_squared(BlochVector(1, 0, 0), BlochVector(-1, 0, 0)), 0.0, 1e-15);
  EXPECT_NEAR(fidelity_squared(bloch_to_matrix({1, 0, 0}), bloch_to_matrix({-1, 0, 0})), 0.0, 1e-15);
}

TEST(Fidelity, MatrixAndBlochFormsAgree) {
  SeededSampler s(17);
  for (int i = 0; i < 100000; ++i) {
    const BlochVector u = sample_hs_state(s);
    const BlochVector v = sample_hs_state(s);
    const double fm = fidelity_squared(bloch_to_matrix(u), bloch_to_matrix(v));
    const double fb = fidelity_squared(u, v);
    ASSERT_NEAR(fm, fb, 1e-12);
    ASSERT_GE(fb, 0.0);
    ASSERT_LE(fb, 1.0);
    ASSERT_NEAR(fb, fidelity_squared(v, u), 1e-15);
  }
}

TEST(Pauli, Algebra) {
  const Eigen::Matrix2cd i2 = Eigen::Matrix2cd::Identity();
  expect_matrix_near(pauli_x() * pauli_x(), i2, 0.0);
  expect_matrix_near(pauli_x() * pauli_y(), std::complex<double>(0, 1) * pauli_z(), 0.0);
}
