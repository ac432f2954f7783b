#include "qubitmix/mixing.hpp"

#include "qubitmix/errors.hpp"

#include <Eigen/Geometry>

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

namespace qubitmix {

namespace {

using cd = std::complex<double>;

void check_weight(double w, const char* what) {
  if (!(w >= 0.0 && w <= 1.0)) {
    throw DomainError(std::string(what) + ": weight outside [0, 1]");
  }
}

double clamped_sqrt(double x) { return std::sqrt(std::max(0.0, x)); }

}  // namespace

BlochVector mix_weighted(const BlochVector& a, const BlochVector& b, double w) {
  check_weight(w, "mix_weighted");
  return BlochVector(w * a.vec() + (1.0 - w) * b.vec());
}

const Eigen::Matrix4cd& swap_operator() {
  static const Eigen::Matrix4cd s = [] {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        m(2 * i + j, 2 * j + i) = 1.0;
      }
    }
    return m;
  }();
  return s;
}

PartialSwapUnitary::PartialSwapUnitary(double t) : t_(t) {
  check_weight(t, "partial_swap_unitary");
  m_ = std::sqrt(t) * Eigen::Matrix4cd::Identity() + cd(0.0, std::sqrt(1.0 - t)) * swap_operator();
}

PartialSwapUnitary partial_swap_unitary(double t) { return PartialSwapUnitary(t); }

DensityMatrix2 partial_swap_channel(const DensityMatrix2& a, const DensityMatrix2& b, double t) {
  check_weight(t, "partial_swap_channel");
  const Eigen::Matrix2cd& p = a.matrix();
  const Eigen::Matrix2cd& q = b.matrix();
  const Eigen::Matrix2cd commutator = p * q - q * p;
  const Eigen::Matrix2cd out =
      t * p + (1.0 - t) * q - cd(0.0, std::sqrt(t * (1.0 - t))) * commutator;
  return DensityMatrix2::from_matrix(out);
}

BlochVector quantum_add(const BlochVector& a, const BlochVector& b, double w) {
  check_weight(w, "quantum_add");
  const Eigen::Vector3d& r1 = a.vec();
  const Eigen::Vector3d& r2 = b.vec();
  return BlochVector(w * r1 + (1.0 - w) * r2 + std::sqrt(w * (1.0 - w)) * r1.cross(r2));
}

MixCurve::MixCurve(double r1, double r2, double theta) : r1_(r1), r2_(r2), theta_(theta) {
  if (!(r1 >= 0.0 && r1 <= 1.0 && r2 >= 0.0 && r2 <= 1.0)) {
    throw DomainError("MixCurve: Bloch lengths outside [0, 1]");
  }
  if (!(theta >= 0.0 && theta <= boost::math::double_constants::pi)) {
    throw DomainError("MixCurve: angle outside [0, pi]");
  }
  const double s = std::sin(theta);
  alpha_ = 2.0 * r1 * r2 * std::cos(theta) + r1 * r1 * r2 * r2 * s * s;
}

MixCurve MixCurve::from_states(const BlochVector& a, const BlochVector& b) {
  const double r1 = std::min(1.0, a.length());
  const double r2 = std::min(1.0, b.length());
  double theta = 0.0;
  if (r1 > 0.0 && r2 > 0.0) {
    // atan2 form keeps full precision near 0 and pi.
    theta = std::atan2(a.vec().cross(b.vec()).norm(), a.vec().dot(b.vec()));
  }
  return MixCurve(r1, r2, theta);
}

double MixCurve::phi(double t) const {
  return (r1_ * r1_ + r2_ * r2_ - alpha_) * t * t + alpha_ * t;
}

CurvePair mix_curves(const MixCurve& c, double t) {
  check_weight(t, "mix_curves");
  const double phi = c.phi(t);
  const double r1s = c.r1() * c.r1();
  const double r2s = c.r2() * c.r2();
  return {std::min(1.0, clamped_sqrt(phi - 2.0 * r2s * t + r2s)),
          std::min(1.0, clamped_sqrt(phi - 2.0 * r1s * t + r1s))};
}

double entropy_sum_curve(const MixCurve& c, double t) {
  const CurvePair r = mix_curves(c, t);
  return entropy_phi(r.r12).value + entropy_phi(r.r21).value;
}

double g2(const MixCurve& c, double t) {
  return entropy_sum_curve(c, t) - entropy_phi(c.r1()).value - entropy_phi(c.r2()).value;
}

double g2(const BlochVector& a, const BlochVector& b, double t) {
  check_weight(t, "g2");
  const double forward = quantum_add(a, b, t).length();
  const double backward = quantum_add(b, a, t).length();
  return entropy_phi(forward).value + entropy_phi(backward).value -
         entropy_phi(a.length()).value - entropy_phi(b.length()).value;
}

}  // namespace qubitmix
