#include "qubitmix/stats.hpp"

#include "qubitmix/errors.hpp"
#include "qubitmix/mixing.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>
#include <vector>

namespace qubitmix {

namespace {

constexpr double kLn2 = boost::math::double_constants::ln_two;
constexpr double kPi = boost::math::double_constants::pi;

// Welford accumulator; merged with Chan's pairwise update.
struct Moments {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double total = static_cast<double>(n + o.n);
    const double delta = o.mean - mean;
    mean += delta * static_cast<double>(o.n) / total;
    m2 += o.m2 + delta * delta * static_cast<double>(n) * static_cast<double>(o.n) / total;
    n += o.n;
  }
};

void check_radii(double r1, double r2, const char* what) {
  if (!(r1 > 0.0 && r1 <= 1.0 && r2 > 0.0 && r2 <= 1.0)) {
    std::ostringstream msg;
    msg << what << ": needs 0 < r1, r2 <= 1 (got " << r1 << ", " << r2 << ")";
    throw DegenerateParameterError(msg.str());
  }
}

QuadratureConfig scaled(const QuadratureConfig& cfg, double factor) {
  QuadratureConfig out = cfg;
  out.abs_tol *= factor;
  out.rel_tol *= factor;
  return out;
}

double phi_clamped(double r) { return entropy_phi(std::clamp(r, 0.0, 1.0)).value; }

// int_{-1}^{1} Phi(sqrt(A - (1 + p u)^2) / 2) du with p = r1 r2. The
// conditional quantum-addition average is half of this.
double qadd_unit_integral(double r1, double r2, const QuadratureConfig& cfg) {
  const double a = (1.0 + r1 * r1) * (1.0 + r2 * r2);
  const double p = r1 * r2;
  const auto f = [a, p](double u) {
    const double s = 1.0 + p * u;
    return phi_clamped(0.5 * std::sqrt(std::max(0.0, a - s * s)));
  };
  return integrate(f, -1.0, 1.0, cfg).value;
}

Eigen::Vector3d mean_of_hs(unsigned n, SeededSampler& s) {
  Eigen::Vector3d sum = Eigen::Vector3d::Zero();
  for (unsigned i = 0; i < n; ++i) sum += sample_hs_state(s).vec();
  return sum / static_cast<double>(n);
}

}  // namespace

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

McEstimate monte_carlo_mean(const McKernel& kernel, const McConfig& cfg) {
  if (cfg.samples < 2) {
    throw DomainError("monte_carlo_mean: need at least two samples");
  }
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(cfg.workers), cfg.samples));
  std::vector<Moments> partial(workers);
  const auto run = [&](unsigned w) {
    const std::uint64_t share =
        cfg.samples / workers + (w < cfg.samples % workers ? 1 : 0);
    SeededSampler sampler(cfg.seed, w);
    Moments m;
    for (std::uint64_t i = 0; i < share; ++i) m.add(kernel(sampler));
    partial[w] = m;
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  Moments total;
  for (const Moments& m : partial) total.merge(m);
  const double n = static_cast<double>(total.n);
  const double variance = total.m2 / (n - 1.0);
  return {total.mean, std::sqrt(variance / n), total.n, cfg.seed, workers};
}

double entropy_moment_phi(double x) {
  x = std::abs(x);
  if (x > 1.0) {
    throw DomainError("entropy_moment_phi: argument outside [-1, 1]");
  }
  const double low = x < 1.0 ? (1.0 - x) * (1.0 - x) * (1.0 + 2.0 * x) * std::log1p(-x) : 0.0;
  return x * x * (1.0 + 6.0 * kLn2) + low + (1.0 + x) * (1.0 + x) * (1.0 - 2.0 * x) * std::log1p(x);
}

double entropy_first_moment(double x) { return entropy_moment_phi(x) / (12.0 * kLn2); }

EntropyBits cond_avg_entropy_equi(double r1, double r2) {
  check_radii(r1, r2, "cond_avg_entropy_equi");
  const double rp = 0.5 * (r1 + r2);
  const double rm = 0.5 * std::abs(r1 - r2);
  const double value =
      (entropy_moment_phi(rp) - entropy_moment_phi(rm)) / (6.0 * kLn2 * r1 * r2);
  return {std::clamp(value, 0.0, 1.0)};
}

EntropyBits cond_avg_entropy_qadd(double r1, double r2, const QuadratureConfig& cfg) {
  check_radii(r1, r2, "cond_avg_entropy_qadd");
  return {std::clamp(0.5 * qadd_unit_integral(r1, r2, cfg), 0.0, 1.0)};
}

QuadratureConfig default_hs_quadrature() {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-7;
  cfg.rel_tol = 1e-7;
  return cfg;
}

QuadratureResult avg_entropy_equi_hs(const QuadratureConfig& cfg) {
  // 18 r1 r2 (phi(r+) - phi(r-)) / (12 ln 2)
  const auto f = [](double r1, double r2) {
    const double rp = 0.5 * (r1 + r2);
    const double rm = 0.5 * std::abs(r1 - r2);
    return 1.5 / kLn2 * r1 * r2 * (entropy_moment_phi(rp) - entropy_moment_phi(rm));
  };
  const auto zero = [](double) { return 0.0; };
  const auto one = [](double) { return 1.0; };
  return integrate_nested(f, 0.0, 1.0, zero, one, cfg, scaled(cfg, 1e-2));
}

QuadratureResult avg_entropy_qadd_hs(const QuadratureConfig& cfg) {
  const QuadratureConfig innermost = scaled(cfg, 1e-4);
  // 18 r1 r2 (r1 r2 / 4) int_{-1}^{1} ... du
  const auto f = [&innermost](double r1, double r2) {
    if (r1 == 0.0 || r2 == 0.0) return 0.0;
    return 4.5 * r1 * r1 * r2 * r2 * qadd_unit_integral(r1, r2, innermost);
  };
  const auto zero = [](double) { return 0.0; };
  const auto one = [](double) { return 1.0; };
  return integrate_nested(f, 0.0, 1.0, zero, one, cfg, scaled(cfg, 1e-2));
}

boost::multiprecision::cpp_rational harmonic_number(unsigned k) {
  boost::multiprecision::cpp_rational h = 0;
  for (unsigned j = 1; j <= k; ++j) h += boost::multiprecision::cpp_rational(1, j);
  return h;
}

PageEntropy page_entropy(unsigned m, unsigned n) {
  if (m < 1 || m > n) {
    throw DomainError("page_entropy: needs 1 <= m <= n");
  }
  using boost::multiprecision::cpp_rational;
  PageEntropy out;
  out.exact = harmonic_number(m * n) - harmonic_number(n) - cpp_rational(m - 1, 2 * n);
  out.nats = static_cast<double>(out.exact);
  out.bits = out.nats / kLn2;
  return out;
}

McEstimate mc_avg_entropy_equi(const McConfig& cfg) {
  return monte_carlo_mean(
      [](SeededSampler& s) {
        const BlochVector a = sample_hs_state(s);
        const BlochVector b = sample_hs_state(s);
        return phi_clamped(0.5 * (a.vec() + b.vec()).norm());
      },
      cfg);
}

McEstimate mc_avg_entropy_qadd(const McConfig& cfg) {
  return monte_carlo_mean(
      [](SeededSampler& s) {
        const BlochVector a = sample_hs_state(s);
        const BlochVector b = sample_hs_state(s);
        return phi_clamped(quantum_add(a, b, 0.5).length());
      },
      cfg);
}

McEstimate mc_cond_avg_entropy_equi(double r1, double r2, const McConfig& cfg) {
  const OrbitSpec o1 = OrbitSpec::from_radius(r1);
  const OrbitSpec o2 = OrbitSpec::from_radius(r2);
  return monte_carlo_mean(
      [&](SeededSampler& s) {
        const BlochVector a = sample_orbit_state(o1, s);
        const BlochVector b = sample_orbit_state(o2, s);
        return phi_clamped(0.5 * (a.vec() + b.vec()).norm());
      },
      cfg);
}

McEstimate mc_cond_avg_entropy_qadd(double r1, double r2, const McConfig& cfg) {
  const OrbitSpec o1 = OrbitSpec::from_radius(r1);
  const OrbitSpec o2 = OrbitSpec::from_radius(r2);
  return monte_carlo_mean(
      [&](SeededSampler& s) {
        const BlochVector a = sample_orbit_state(o1, s);
        const BlochVector b = sample_orbit_state(o2, s);
        return phi_clamped(quantum_add(a, b, 0.5).length());
      },
      cfg);
}

McEstimate mc_avg_entropy_mean_n(unsigned n, const McConfig& cfg) {
  if (n < 1) throw DomainError("mc_avg_entropy_mean_n: n must be >= 1");
  if (cfg.samples < 1000) throw DomainError("mc_avg_entropy_mean_n: need >= 1000 samples");
  return monte_carlo_mean([n](SeededSampler& s) { return phi_clamped(mean_of_hs(n, s).norm()); },
                          cfg);
}

McEstimate mc_avg_coherence_n(unsigned n, const McConfig& cfg, const StateDraw& draw) {
  if (n < 1) throw DomainError("mc_avg_coherence_n: n must be >= 1");
  return monte_carlo_mean(
      [n, &draw](SeededSampler& s) {
        Eigen::Vector3d sum = Eigen::Vector3d::Zero();
        for (unsigned i = 0; i < n; ++i) sum += draw(s).vec();
        return rel_entropy_coherence(BlochVector(sum / static_cast<double>(n))).value;
      },
      cfg);
}

double avg_fidelity_squared_exact() {
  const double c = 3.0 * kPi / 16.0;
  return 0.5 * (1.0 + c * c);
}

QuadratureResult avg_fidelity_squared_quadrature(const QuadratureConfig& cfg) {
  long evals = 0;
  QuadratureResult r = integrate(
      [&](double u) {
        return integrate(
                   [&](double v) {
                     const double root = std::sqrt(std::max(0.0, (1.0 - u * u) * (1.0 - v * v)));
                     const QuadratureResult inner = integrate(
                         [&](double theta) {
                           const double f2 = 0.5 * (1.0 + u * v * std::cos(theta) + root);
                           return f2 * 4.5 * u * u * v * v * std::sin(theta);
                         },
                         0.0, kPi, cfg);
                     evals += inner.evaluations;
                     return inner.value;
                   },
                   0.0, 1.0, cfg)
            .value;
      },
      0.0, 1.0, cfg);
  r.evaluations = evals;
  return r;
}

McEstimate mc_avg_fidelity_squared(const McConfig& cfg) {
  return monte_carlo_mean(
      [](SeededSampler& s) {
        const BlochVector a = sample_hs_state(s);
        const BlochVector b = sample_hs_state(s);
        return fidelity_squared(a, b);
      },
      cfg);
}

double ks_one_sample(std::span<const double> sorted, const std::function<double(double)>& cdf) {
  if (sorted.empty()) throw ContractError("ks_one_sample: no samples");
  if (!std::is_sorted(sorted.begin(), sorted.end())) {
    throw ContractError("ks_one_sample: samples must be sorted ascending");
  }
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw ContractError("ks_two_sample: empty sample");
  if (!std::is_sorted(a.begin(), a.end()) || !std::is_sorted(b.begin(), b.end())) {
    throw ContractError("ks_two_sample: samples must be sorted ascending");
  }
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

}  // namespace qubitmix
