#pragma once

// Globally adaptive Gauss-Kronrod quadrature on finite intervals.
//
// The interval with the largest error estimate is bisected until the summed
// estimate meets max(abs_tol, rel_tol * |I|) or the subdivision budget is
// exhausted, in which case NumericalFailure is thrown with diagnostics.

#include <functional>

namespace qubitmix {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
  int rule_order = 21;  // Kronrod points: 15, 21, 31, 41, 51 or 61

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
  long evaluations = 0;
};

using Integrand = std::function<double(double)>;
using Integrand2 = std::function<double(double, double)>;

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureConfig& cfg = {});

// Iterated integral  int_{a}^{b} dx int_{lo(x)}^{hi(x)} f(x, y) dy.
// The inner integral runs with `inner`; its error estimates are not folded
// into the outer estimate, so `inner` should be the tighter of the two.
QuadratureResult integrate_nested(const Integrand2& f, double a, double b,
                                  const Integrand& lo, const Integrand& hi,
                                  const QuadratureConfig& outer,
                                  const QuadratureConfig& inner);

}  // namespace qubitmix
