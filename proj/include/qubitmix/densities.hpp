#pragma once

// Closed-form laws for the spectrum of a mixture of two random qubits drawn
// uniformly from the unitary orbits with minimal eigenvalues mu and nu
// (Bloch lengths r1 = 1 - 2 mu, r2 = 1 - 2 nu).
//
//   equiprobable mixture (rho1 + rho2) / 2
//     p(r | r1, r2)      = 2 r / (r1 r2)
//     p(lambda | mu, nu) = |lambda - 1/2| / ((1/2 - mu)(1/2 - nu))
//
//   quantum addition rho1 [+]_{1/2} rho2, with A = (1 + r1^2)(1 + r2^2)
//     q(r | r1, r2)      = 2 r / (r1 r2 sqrt(A - 4 r^2))
//     q(lambda | mu, nu) = |lambda - 1/2|
//                          / (2 (1/2 - mu)(1/2 - nu)
//                             sqrt((2mu^2 - 2mu + 1)(2nu^2 - 2nu + 1) - (2 lambda - 1)^2))
//
// Lengths live on [r-, r+] = [|r1 - r2| / 2, (r1 + r2) / 2]; eigenvalues on
// [T0, T1] u [1 - T1, 1 - T0] with T0 = (mu + nu) / 2, T1 = (1 - |mu - nu|) / 2.
// Each eigenvalue branch carries probability 1/2.
//
// Densities evaluate to 0 off their support. Degenerate parameters throw
// DegenerateParameterError.

#include <array>
#include <cstddef>

namespace qubitmix {

struct Interval {
  double lo;
  double hi;

  bool contains(double x) const { return x >= lo && x <= hi; }
  double width() const { return hi - lo; }
};

class SupportSpec {
 public:
  static SupportSpec single(Interval i);
  static SupportSpec pair(Interval lower, Interval upper);

  // Eigenvalue support [T0, T1] u [1 - T1, 1 - T0]; one interval when mu = nu.
  static SupportSpec eigenvalue(double mu, double nu);
  // Length support [r-, r+].
  static SupportSpec length(double r1, double r2);

  std::size_t size() const { return count_; }
  const Interval& operator[](std::size_t i) const { return intervals_[i]; }
  const Interval* begin() const { return intervals_.data(); }
  const Interval* end() const { return intervals_.data() + count_; }

  bool contains(double x) const;
  double lower() const { return intervals_[0].lo; }
  double upper() const { return intervals_[count_ - 1].hi; }

 private:
  std::array<Interval, 2> intervals_{};
  std::size_t count_ = 0;
};

double pdf_lambda_equi(double lambda, double mu, double nu);
double cdf_lambda_equi(double lambda, double mu, double nu);

double pdf_r_equi(double r, double r1, double r2);
double cdf_r_equi(double r, double r1, double r2);

double pdf_r_qadd(double rhat, double r1, double r2);
double cdf_r_qadd(double rhat, double r1, double r2);

double pdf_lambda_qadd(double lambdahat, double mu, double nu);
double cdf_lambda_qadd(double lambdahat, double mu, double nu);

// Largest eigenvalue x of a Hilbert-Schmidt random qubit: 24 (x - 1/2)^2 on [1/2, 1].
double pdf_maxeig_hs(double x);
double cdf_maxeig_hs(double x);

// Angle between two independent uniform directions: sin(theta) / 2 on [0, pi].
double pdf_angle(double theta);
double cdf_angle(double theta);

// Bloch length of a Hilbert-Schmidt random qubit: 3 r^2 on [0, 1].
double pdf_hs_length(double r);
double cdf_hs_length(double r);

}  // namespace qubitmix
