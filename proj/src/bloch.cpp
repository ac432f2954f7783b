#include "qubitmix/bloch.hpp"

#include "qubitmix/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qubitmix {

namespace {

using cd = std::complex<double>;

Eigen::Vector3d checked_bloch(const Eigen::Vector3d& v) {
  if (!v.allFinite()) {
    throw InvalidStateError("Bloch vector has non-finite components");
  }
  const double r = v.norm();
  if (r > 1.0 + kBlochTolerance) {
    std::ostringstream msg;
    msg << "Bloch vector length " << r << " exceeds 1";
    throw InvalidStateError(msg.str());
  }
  return r > 1.0 ? Eigen::Vector3d(v / r) : v;
}

void check_unit_interval(double r, const char* what) {
  if (!(r >= 0.0 && r <= 1.0 + kBlochTolerance)) {
    std::ostringstream msg;
    msg << what << ": Bloch length " << r << " outside [0, 1]";
    throw DomainError(msg.str());
  }
}

double xlog2x(double x) { return x < kEntropyZero ? 0.0 : x * std::log2(x); }

}  // namespace

BlochVector::BlochVector(double x, double y, double z)
    : v_(checked_bloch(Eigen::Vector3d(x, y, z))) {}

BlochVector::BlochVector(const Eigen::Vector3d& v) : v_(checked_bloch(v)) {}

DensityMatrix2 DensityMatrix2::from_matrix(const Eigen::Matrix2cd& m) {
  if (!m.allFinite()) {
    throw InvalidStateError("density matrix has non-finite entries");
  }
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kStateTolerance) {
    throw InvalidStateError("matrix is not Hermitian");
  }
  const cd tr = m.trace();
  if (std::abs(tr - cd(1.0, 0.0)) > kStateTolerance) {
    throw InvalidStateError("matrix trace is not 1");
  }
  const Eigen::Matrix2cd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kStateTolerance) {
    throw InvalidStateError("matrix has a negative eigenvalue");
  }
  return DensityMatrix2(h);
}

const Eigen::Matrix2cd& pauli_x() {
  static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  return m;
}

const Eigen::Matrix2cd& pauli_y() {
  static const Eigen::Matrix2cd m =
      (Eigen::Matrix2cd() << 0, cd(0, -1), cd(0, 1), 0).finished();
  return m;
}

const Eigen::Matrix2cd& pauli_z() {
  static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  return m;
}

DensityMatrix2 bloch_to_matrix(const BlochVector& v) {
  Eigen::Matrix2cd m;
  m << cd(0.5 * (1.0 + v.z()), 0.0), cd(0.5 * v.x(), -0.5 * v.y()),
      cd(0.5 * v.x(), 0.5 * v.y()), cd(0.5 * (1.0 - v.z()), 0.0);
  return DensityMatrix2::from_matrix(m);
}

BlochVector matrix_to_bloch(const DensityMatrix2& m) {
  const cd off = m(1, 0);
  return BlochVector(2.0 * off.real(), 2.0 * off.imag(), (m(0, 0) - m(1, 1)).real());
}

QubitSpectrum eigenvalues(double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("eigenvalues: Bloch length outside [0, 1]");
  }
  return {0.5 * (1.0 + r), 0.5 * (1.0 - r)};
}

QubitSpectrum matrix_eigenvalues(const DensityMatrix2& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(m.matrix(), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();  // ascending
  return {ev(1), ev(0)};
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("binary_entropy: probability outside [0, 1]");
  }
  return -xlog2x(p) - xlog2x(1.0 - p);
}

EntropyBits entropy_phi(double r) {
  check_unit_interval(r, "entropy_phi");
  r = std::min(r, 1.0);
  // Both branches computed directly so that neither loses digits near r = 1.
  return {-xlog2x(0.5 * (1.0 + r)) - xlog2x(0.5 * (1.0 - r))};
}

EntropyBits von_neumann_entropy(const DensityMatrix2& m) {
  const QubitSpectrum s = matrix_eigenvalues(m);
  return {-xlog2x(s.high) - xlog2x(s.low)};
}

EntropyBits rel_entropy_coherence(const BlochVector& v) {
  const double diag = entropy_phi(std::abs(v.z())).value;
  const double full = entropy_phi(v.length()).value;
  return {std::max(0.0, diag - full)};
}

EntropyBits rel_entropy_coherence(const DensityMatrix2& m) {
  const double p = std::clamp(m(0, 0).real(), 0.0, 1.0);
  const double diag = binary_entropy(p);
  return {std::max(0.0, diag - von_neumann_entropy(m).value)};
}

double fidelity_squared(const DensityMatrix2& a, const DensityMatrix2& b) {
  const double det_a = std::max(0.0, a.matrix().determinant().real());
  const double det_b = std::max(0.0, b.matrix().determinant().real());
  const double overlap = (a.matrix() * b.matrix()).trace().real();
  return std::clamp(2.0 * std::sqrt(det_a * det_b) + overlap, 0.0, 1.0);
}

double fidelity_squared(const BlochVector& u, const BlochVector& v) {
  const double u2 = std::min(1.0, u.vec().squaredNorm());
  const double v2 = std::min(1.0, v.vec().squaredNorm());
  const double f = 0.5 * (1.0 + u.vec().dot(v.vec()) + std::sqrt((1.0 - u2) * (1.0 - v2)));
  return std::clamp(f, 0.0, 1.0);
}

}  // namespace qubitmix
