#pragma once

// Two ways of combining a pair of qubit states:
//
//   convex mixture      w rho1 + (1 - w) rho2
//   quantum addition    rho1 [+]_t rho2 = Tr_2[U_t (rho1 (x) rho2) U_t^dagger]
//
// where U_t = sqrt(t) I + sqrt(1 - t) i S is the partial swap on two qubits.
// In Bloch form the quantum addition is
//
//   r(t) = t r1 + (1 - t) r2 + sqrt(t (1 - t)) r1 x r2
//
// with a right-handed cross product. The swapped output rho2 [+]_t rho1
// carries the opposite sign on the cross term.

#include "qubitmix/bloch.hpp"

#include <Eigen/Core>

namespace qubitmix {

BlochVector mix_weighted(const BlochVector& a, const BlochVector& b, double w);

// S|ij> = |ji> in the basis |00>, |01>, |10>, |11>.
const Eigen::Matrix4cd& swap_operator();

class PartialSwapUnitary {
 public:
  explicit PartialSwapUnitary(double t);

  double t() const { return t_; }
  const Eigen::Matrix4cd& matrix() const { return m_; }

 private:
  double t_;
  Eigen::Matrix4cd m_;
};

PartialSwapUnitary partial_swap_unitary(double t);

// t rho1 + (1 - t) rho2 - i sqrt(t (1 - t)) [rho1, rho2].
DensityMatrix2 partial_swap_channel(const DensityMatrix2& a, const DensityMatrix2& b, double t);

// Bloch vector of a [+]_w b.
BlochVector quantum_add(const BlochVector& a, const BlochVector& b, double w);

// Lengths of a [+]_t b and b [+]_t a as functions of t for fixed
// (r1, r2, theta):
//
//   alpha     = 2 r1 r2 cos(theta) + r1^2 r2^2 sin^2(theta)
//   phi(t)    = (r1^2 + r2^2 - alpha) t^2 + alpha t
//   r12(t)^2  = phi(t) - 2 r2^2 t + r2^2
//   r21(t)^2  = phi(t) - 2 r1^2 t + r1^2
class MixCurve {
 public:
  MixCurve(double r1, double r2, double theta);

  // Curve through two concrete states (theta is the angle between them).
  static MixCurve from_states(const BlochVector& a, const BlochVector& b);

  double r1() const { return r1_; }
  double r2() const { return r2_; }
  double theta() const { return theta_; }
  double alpha() const { return alpha_; }
  double phi(double t) const;

 private:
  double r1_;
  double r2_;
  double theta_;
  double alpha_;
};

struct CurvePair {
  double r12;
  double r21;
};

CurvePair mix_curves(const MixCurve& c, double t);

// s(t) = Phi(r12(t)) + Phi(r21(t)).
double entropy_sum_curve(const MixCurve& c, double t);

// g2(t) = s(t) - Phi(r1) - Phi(r2), the correlative power of the channel.
double g2(const MixCurve& c, double t);
double g2(const BlochVector& a, const BlochVector& b, double t);

}  // namespace qubitmix
