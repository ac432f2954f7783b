#include "qubitmix/densities.hpp"

#include "qubitmix/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qubitmix {

namespace {

constexpr double kPi = boost::math::double_constants::pi;

void check_orbit_params(double mu, double nu) {
  if (!(mu > 0.0 && mu < 0.5 && nu > 0.0 && nu < 0.5)) {
    std::ostringstream msg;
    msg << "eigenvalue density needs 0 < mu, nu < 1/2 (got mu=" << mu << ", nu=" << nu << ")";
    throw DegenerateParameterError(msg.str());
  }
}

void check_radii(double r1, double r2) {
  if (!(r1 > 0.0 && r1 <= 1.0 && r2 > 0.0 && r2 <= 1.0)) {
    std::ostringstream msg;
    msg << "length density needs 0 < r1, r2 <= 1 (got r1=" << r1 << ", r2=" << r2 << ")";
    throw DegenerateParameterError(msg.str());
  }
}

void check_radii_qadd(double r1, double r2) {
  check_radii(r1, r2);
  if (r1 == 1.0 && r2 == 1.0) {
    throw DegenerateParameterError(
        "quantum-addition length density is singular at r+ for r1 = r2 = 1");
  }
}

double radius_of(double mu) { return 1.0 - 2.0 * mu; }

// (1 + r1^2)(1 + r2^2)
double qadd_a(double r1, double r2) { return (1.0 + r1 * r1) * (1.0 + r2 * r2); }

// Eigenvalue CDF from the CDF of the Bloch length: each sign branch
// lambda = (1 +- r) / 2 carries half of the mass.
template <typename LengthCdf>
double branch_cdf(double lambda, LengthCdf&& length_cdf) {
  if (lambda < 0.5) {
    return 0.5 * (1.0 - length_cdf(1.0 - 2.0 * lambda));
  }
  return 0.5 * (1.0 + length_cdf(2.0 * lambda - 1.0));
}

// mirrored endpoints can land an ulp either side
bool on_support(const SupportSpec& s, double x) {
  constexpr double slack = 1e-13;
  return std::any_of(s.begin(), s.end(), [x](const Interval& i) { return x >= i.lo - slack && x <= i.hi + slack; });
}

}  // namespace

SupportSpec SupportSpec::single(Interval i) {
  SupportSpec s;
  s.intervals_[0] = i;
  s.count_ = 1;
  return s;
}

SupportSpec SupportSpec::pair(Interval lower, Interval upper) {
  SupportSpec s;
  s.intervals_ = {lower, upper};
  s.count_ = 2;
  return s;
}

SupportSpec SupportSpec::eigenvalue(double mu, double nu) {
  const double t0 = 0.5 * (mu + nu);
  const double t1 = 0.5 * (1.0 - std::abs(mu - nu));
  if (t1 >= 1.0 - t1) {
    return single({t0, 1.0 - t0});
  }
  return pair({t0, t1}, {1.0 - t1, 1.0 - t0});
}

SupportSpec SupportSpec::length(double r1, double r2) {
  return single({0.5 * std::abs(r1 - r2), 0.5 * (r1 + r2)});
}

bool SupportSpec::contains(double x) const {
  return std::any_of(begin(), end(), [x](const Interval& i) { return i.contains(x); });
}

double pdf_lambda_equi(double lambda, double mu, double nu) {
  check_orbit_params(mu, nu);
  if (!on_support(SupportSpec::eigenvalue(mu, nu), lambda)) return 0.0;
  return std::abs(lambda - 0.5) / ((0.5 - mu) * (0.5 - nu));
}

double cdf_lambda_equi(double lambda, double mu, double nu) {
  check_orbit_params(mu, nu);
  const double r1 = radius_of(mu);
  const double r2 = radius_of(nu);
  return branch_cdf(lambda, [&](double r) { return cdf_r_equi(r, r1, r2); });
}

double pdf_r_equi(double r, double r1, double r2) {
  check_radii(r1, r2);
  if (!on_support(SupportSpec::length(r1, r2), r)) return 0.0;
  return 2.0 * r / (r1 * r2);
}

double cdf_r_equi(double r, double r1, double r2) {
  check_radii(r1, r2);
  const Interval s = SupportSpec::length(r1, r2)[0];
  if (r <= s.lo) return 0.0;
  if (r >= s.hi) return 1.0;
  return std::clamp((r - s.lo) * (r + s.lo) / (r1 * r2), 0.0, 1.0);
}

double pdf_r_qadd(double rhat, double r1, double r2) {
  check_radii_qadd(r1, r2);
  if (!on_support(SupportSpec::length(r1, r2), rhat)) return 0.0;
  const double radicand = std::max(0.0, qadd_a(r1, r2) - 4.0 * rhat * rhat);
  return 2.0 * rhat / (r1 * r2 * std::sqrt(radicand));
}

double cdf_r_qadd(double rhat, double r1, double r2) {
  check_radii_qadd(r1, r2);
  const Interval s = SupportSpec::length(r1, r2)[0];
  if (rhat <= s.lo) return 0.0;
  if (rhat >= s.hi) return 1.0;
  // Antiderivative -sqrt(A - 4 r^2) / (2 r1 r2), rationalized against
  // A - 4 r-^2 = (1 + r1 r2)^2 to avoid cancellation.
  const double root = std::sqrt(std::max(0.0, qadd_a(r1, r2) - 4.0 * rhat * rhat));
  const double value =
      2.0 * (rhat - s.lo) * (rhat + s.lo) / (r1 * r2 * ((1.0 + r1 * r2) + root));
  return std::clamp(value, 0.0, 1.0);
}

double pdf_lambda_qadd(double lambdahat, double mu, double nu) {
  check_orbit_params(mu, nu);
  if (!on_support(SupportSpec::eigenvalue(mu, nu), lambdahat)) return 0.0;
  const double b = (2.0 * mu * mu - 2.0 * mu + 1.0) * (2.0 * nu * nu - 2.0 * nu + 1.0);
  const double d = 2.0 * lambdahat - 1.0;
  const double radicand = std::max(0.0, b - d * d);
  return std::abs(lambdahat - 0.5) / (2.0 * (0.5 - mu) * (0.5 - nu) * std::sqrt(radicand));
}

double cdf_lambda_qadd(double lambdahat, double mu, double nu) {
  check_orbit_params(mu, nu);
  const double r1 = radius_of(mu);
  const double r2 = radius_of(nu);
  return branch_cdf(lambdahat, [&](double r) { return cdf_r_qadd(r, r1, r2); });
}

double pdf_maxeig_hs(double x) {
  if (x < 0.5 || x > 1.0) return 0.0;
  return 24.0 * (x - 0.5) * (x - 0.5);
}

double cdf_maxeig_hs(double x) {
  if (x <= 0.5) return 0.0;
  if (x >= 1.0) return 1.0;
  const double u = x - 0.5;
  return 8.0 * u * u * u;
}

double pdf_angle(double theta) {
  if (theta < 0.0 || theta > kPi) return 0.0;
  return 0.5 * std::sin(theta);
}

double cdf_angle(double theta) {
  if (theta <= 0.0) return 0.0;
  if (theta >= kPi) return 1.0;
  return 0.5 * (1.0 - std::cos(theta));
}

double pdf_hs_length(double r) {
  if (r < 0.0 || r > 1.0) return 0.0;
  return 3.0 * r * r;
}

double cdf_hs_length(double r) {
  if (r <= 0.0) return 0.0;
  if (r >= 1.0) return 1.0;
  return r * r * r;
}

}  // namespace qubitmix
