#include "qubitmix/quadrature.hpp"

#include "qubitmix/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

namespace qubitmix {

namespace {

// Nonnegative Kronrod nodes on [-1, 1] (node 0 is the origin) with Kronrod
// weights and the weights of the embedded Gauss rule (0 at Kronrod-only nodes).
struct Rule {
  std::vector<double> nodes;
  std::vector<double> kronrod;
  std::vector<double> gauss;
};

template <unsigned N>
Rule make_rule() {
  using gk = boost::math::quadrature::gauss_kronrod<double, N>;
  using g = boost::math::quadrature::gauss<double, (N - 1) / 2>;
  Rule rule;
  rule.nodes.assign(gk::abscissa().begin(), gk::abscissa().end());
  rule.kronrod.assign(gk::weights().begin(), gk::weights().end());
  rule.gauss.assign(rule.nodes.size(), 0.0);
  const auto& ga = g::abscissa();
  const auto& gw = g::weights();
  for (std::size_t i = 0; i < ga.size(); ++i) {
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      if (std::abs(rule.nodes[k] - ga[i]) < 1e-12) {
        rule.gauss[k] = gw[i];
      }
    }
  }
  return rule;
}

const Rule& rule_for(int order) {
  static const Rule r15 = make_rule<15>();
  static const Rule r21 = make_rule<21>();
  static const Rule r31 = make_rule<31>();
  static const Rule r41 = make_rule<41>();
  static const Rule r51 = make_rule<51>();
  static const Rule r61 = make_rule<61>();
  switch (order) {
    case 15: return r15;
    case 21: return r21;
    case 31: return r31;
    case 41: return r41;
    case 51: return r51;
    case 61: return r61;
    default: break;
  }
  throw DomainError("quadrature: unsupported Gauss-Kronrod rule order " + std::to_string(order));
}

struct Segment {
  double a;
  double b;
  double value;
  double error;
  double l1;

  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment apply_rule(const Rule& rule, const Integrand& f, double a, double b, long& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double k_sum = 0.0;
  double g_sum = 0.0;
  double l1 = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double fsum;
    double fabs_sum;
    if (i == 0 && rule.nodes[0] == 0.0) {
      fsum = f(c);
      fabs_sum = std::abs(fsum);
      ++evals;
    } else {
      const double fp = f(c + h * rule.nodes[i]);
      const double fm = f(c - h * rule.nodes[i]);
      fsum = fp + fm;
      fabs_sum = std::abs(fp) + std::abs(fm);
      evals += 2;
    }
    k_sum += rule.kronrod[i] * fsum;
    g_sum += rule.gauss[i] * fsum;
    l1 += rule.kronrod[i] * fabs_sum;
  }
  return {a, b, k_sum * h, std::abs((k_sum - g_sum) * h), l1 * std::abs(h)};
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw DomainError("quadrature: tolerances must be positive");
  }
  if (max_subdivisions < 1) {
    throw DomainError("quadrature: max_subdivisions must be positive");
  }
  rule_for(rule_order);
}

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("quadrature: integration limits must be finite");
  }
  if (a == b) return {};
  if (b < a) {
    QuadratureResult r = integrate(f, b, a, cfg);
    r.value = -r.value;
    return r;
  }

  const Rule& rule = rule_for(cfg.rule_order);
  QuadratureResult result;
  std::priority_queue<Segment> queue;
  Segment first = apply_rule(rule, f, a, b, result.evaluations);
  double value = first.value;
  double error = first.error;
  double l1 = first.l1;
  queue.push(first);

  const auto target = [&] {
    const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * l1;
    return std::max({cfg.abs_tol, cfg.rel_tol * std::abs(value), roundoff});
  };

  for (;;) {
    if (!std::isfinite(value) || !std::isfinite(error)) {
      std::ostringstream msg;
      msg << "quadrature: non-finite integrand on [" << a << ", " << b << "]";
      throw NumericalFailure(msg.str());
    }
    if (error <= target()) break;
    if (result.subdivisions >= cfg.max_subdivisions) {
      const Segment& worst = queue.top();
      std::ostringstream msg;
      msg.precision(12);
      msg << "quadrature: no convergence on [" << a << ", " << b << "] after "
          << result.subdivisions << " subdivisions; estimate " << value << ", error " << error
          << " > target " << target() << "; worst segment [" << worst.a << ", " << worst.b
          << "] error " << worst.error;
      throw NumericalFailure(msg.str());
    }
    const Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = apply_rule(rule, f, worst.a, mid, result.evaluations);
    const Segment right = apply_rule(rule, f, mid, worst.b, result.evaluations);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    queue.push(left);
    queue.push(right);
    ++result.subdivisions;
  }

  // Re-sum from the segments to shed drift from the running updates.
  value = 0.0;
  error = 0.0;
  while (!queue.empty()) {
    value += queue.top().value;
    error += queue.top().error;
    queue.pop();
  }
  result.value = value;
  result.error = error;
  return result;
}

QuadratureResult integrate_nested(const Integrand2& f, double a, double b, const Integrand& lo,
                                  const Integrand& hi, const QuadratureConfig& outer,
                                  const QuadratureConfig& inner) {
  long inner_evals = 0;
  QuadratureResult r = integrate(
      [&](double x) {
        const QuadratureResult in = integrate([&](double y) { return f(x, y); }, lo(x), hi(x), inner);
        inner_evals += in.evaluations;
        return in.value;
      },
      a, b, outer);
  r.evaluations = inner_evals;
  return r;
}

}  // namespace qubitmix
