#pragma once

// Exact single-qubit algebra on the Bloch ball.
//
// A qubit state is rho(r) = (I + r.sigma) / 2 with |r| <= 1. Everything in
// this header is a pure function of its value arguments. Entropies are in
// bits and use the convention 0 log 0 = 0.

#include <Eigen/Core>

#include <complex>

namespace qubitmix {

// Bloch lengths in (1, 1 + kBlochTolerance] are clamped onto the sphere;
// anything longer is rejected.
inline constexpr double kBlochTolerance = 1e-9;

// Tolerance for the Hermiticity / trace / positivity checks on 2x2 matrices.
inline constexpr double kStateTolerance = 1e-9;

// Eigenvalues below this are treated as exactly zero inside entropies.
inline constexpr double kEntropyZero = 1e-15;

class BlochVector {
 public:
  BlochVector() = default;
  BlochVector(double x, double y, double z);
  explicit BlochVector(const Eigen::Vector3d& v);

  double x() const { return v_.x(); }
  double y() const { return v_.y(); }
  double z() const { return v_.z(); }
  double length() const { return v_.norm(); }
  const Eigen::Vector3d& vec() const { return v_; }

  friend bool operator==(const BlochVector& a, const BlochVector& b) {
    return a.v_ == b.v_;
  }

 private:
  Eigen::Vector3d v_ = Eigen::Vector3d::Zero();
};

class DensityMatrix2 {
 public:
  // Validates Hermiticity, unit trace and positivity to kStateTolerance.
  static DensityMatrix2 from_matrix(const Eigen::Matrix2cd& m);

  const Eigen::Matrix2cd& matrix() const { return m_; }
  std::complex<double> operator()(int row, int col) const { return m_(row, col); }

 private:
  explicit DensityMatrix2(const Eigen::Matrix2cd& m) : m_(m) {}
  Eigen::Matrix2cd m_;
};

struct EntropyBits {
  double value = 0.0;
};

struct QubitSpectrum {
  double high;  // (1 + r) / 2
  double low;   // (1 - r) / 2
};

// The three Pauli matrices, sigma_x, sigma_y, sigma_z.
const Eigen::Matrix2cd& pauli_x();
const Eigen::Matrix2cd& pauli_y();
const Eigen::Matrix2cd& pauli_z();

DensityMatrix2 bloch_to_matrix(const BlochVector& v);
BlochVector matrix_to_bloch(const DensityMatrix2& m);

QubitSpectrum eigenvalues(double r);

// Spectrum of an explicit matrix by numerical diagonalization; high >= low.
QubitSpectrum matrix_eigenvalues(const DensityMatrix2& m);

// H2(p) = -p log2 p - (1-p) log2 (1-p) for p in [0, 1].
double binary_entropy(double p);

// Phi(r) = H2((1 - r) / 2), the entropy of any state with Bloch length r.
EntropyBits entropy_phi(double r);

// -sum lambda log2 lambda over the numerically diagonalized matrix.
EntropyBits von_neumann_entropy(const DensityMatrix2& m);

// Relative entropy of coherence S(rho^D) - S(rho) in the computational basis.
EntropyBits rel_entropy_coherence(const DensityMatrix2& m);
EntropyBits rel_entropy_coherence(const BlochVector& v);

// Squared Uhlmann fidelity, evaluated as 2 sqrt(det a det b) + Tr(ab).
double fidelity_squared(const DensityMatrix2& a, const DensityMatrix2& b);

// The same quantity from Bloch vectors: [1 + <u,v> + sqrt((1-u^2)(1-v^2))] / 2.
double fidelity_squared(const BlochVector& u, const BlochVector& v);

}  // namespace qubitmix
