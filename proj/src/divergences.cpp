#include "qubitmix/divergences.hpp"

#include "qubitmix/errors.hpp"
#include "qubitmix/sampler.hpp"
#include "qubitmix/stats.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <thread>

namespace qubitmix {

namespace {

constexpr double kPureTolerance = 1e-12;

double phi(double r) { return entropy_phi(std::min(r, 1.0)).value; }

double mean_entropy(const BlochVector& a, const BlochVector& b) {
  return 0.5 * (phi(a.length()) + phi(b.length()));
}

struct PairTable {
  double ab;
  double ac;
  double bc;
};

struct Minima {
  TriangleDelta value;
  int delta_apex;
  int delta_prime_apex;
};

// Minimum over the three apex choices of D(x,y) + D(x,z) - D(y,z).
template <typename F>
std::pair<double, int> min_over_apex(const PairTable& j, F&& transform) {
  const double ab = transform(j.ab);
  const double ac = transform(j.ac);
  const double bc = transform(j.bc);
  const std::array<double, 3> values{ab + ac - bc, ab + bc - ac, ac + bc - ab};
  const auto it = std::min_element(values.begin(), values.end());
  return {*it, static_cast<int>(it - values.begin())};
}

Minima minima(const std::array<BlochVector, 3>& s) {
  const PairTable j{qjsd_hat(s[0], s[1]), qjsd_hat(s[0], s[2]), qjsd_hat(s[1], s[2])};
  const auto [d, d_apex] = min_over_apex(j, [](double x) { return std::sqrt(x); });
  const auto [dp, dp_apex] = min_over_apex(j, [](double x) { return x; });
  return {{d, dp}, d_apex, dp_apex};
}

}  // namespace

double qjsd(const BlochVector& a, const BlochVector& b) {
  const double r = 0.5 * (a.vec() + b.vec()).norm();
  return std::max(0.0, phi(r) - mean_entropy(a, b));
}

double qjsd_hat(const BlochVector& a, const BlochVector& b) {
  // 4 rhat^2 = r1^2 + r2^2 + 2 r1 r2 cos(theta) + r1^2 r2^2 sin^2(theta)
  const double four_r2 = a.vec().squaredNorm() + b.vec().squaredNorm() +
                         2.0 * a.vec().dot(b.vec()) + a.vec().cross(b.vec()).squaredNorm();
  const double rhat = 0.5 * std::sqrt(std::max(0.0, four_r2));
  return std::max(0.0, phi(rhat) - mean_entropy(a, b));
}

double dist_j(const BlochVector& a, const BlochVector& b) { return std::sqrt(qjsd(a, b)); }

double dist_jhat(const BlochVector& a, const BlochVector& b) { return std::sqrt(qjsd_hat(a, b)); }

TriangleDelta triangle_delta(const BlochVector& a, const BlochVector& b, const BlochVector& c) {
  const double jab = qjsd_hat(a, b);
  const double jac = qjsd_hat(a, c);
  const double jbc = qjsd_hat(b, c);
  return {std::sqrt(jab) + std::sqrt(jac) - std::sqrt(jbc), jab + jac - jbc};
}

std::string_view to_string(SampleMode mode) {
  return mode == SampleMode::Pure ? "pure" : "mixed";
}

TriangleDelta recompute(const TripleReport& report) { return minima(report.states).value; }

ViolationSearchResult violation_search(SampleMode mode, std::uint64_t n_triples,
                                       std::uint64_t seed, unsigned workers) {
  if (n_triples == 0) throw DomainError("violation_search: need at least one triple");
  workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(workers), n_triples));

  std::vector<std::vector<TripleReport>> partial(workers);
  const auto run = [&](unsigned w) {
    const std::uint64_t begin = n_triples / workers * w + std::min<std::uint64_t>(w, n_triples % workers);
    const std::uint64_t share = n_triples / workers + (w < n_triples % workers ? 1 : 0);
    for (std::uint64_t k = begin; k < begin + share; ++k) {
      SeededSampler s(seed, k);
      std::array<BlochVector, 3> states;
      for (BlochVector& v : states) {
        v = mode == SampleMode::Pure ? sample_pure_state(s) : sample_hs_state(s);
      }
      const Minima m = minima(states);
      if (m.value.delta >= 0.0 && m.value.delta_prime >= 0.0) continue;
      TripleReport r;
      r.states = states;
      r.delta = m.value.delta;
      r.delta_prime = m.value.delta_prime;
      r.delta_apex = m.delta_apex;
      r.delta_prime_apex = m.delta_prime_apex;
      for (int i = 0; i < 3; ++i) r.pure[i] = states[i].length() >= 1.0 - kPureTolerance;
      r.mode = mode;
      r.seed = seed;
      r.draw_index = k;
      partial[w].push_back(r);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  ViolationSearchResult result;
  result.n_triples = n_triples;
  for (auto& chunk : partial) {
    for (TripleReport& r : chunk) {
      result.delta_violations += r.delta_violated() ? 1 : 0;
      result.delta_prime_violations += r.delta_prime_violated() ? 1 : 0;
      result.reports.push_back(std::move(r));
    }
  }
  return result;
}

nlohmann::json to_json(const TripleReport& report) {
  nlohmann::json states = nlohmann::json::array();
  for (const BlochVector& v : report.states) states.push_back({v.x(), v.y(), v.z()});
  return {
      {"states", states},
      {"delta", report.delta},
      {"delta_prime", report.delta_prime},
      {"delta_apex", report.delta_apex},
      {"delta_prime_apex", report.delta_prime_apex},
      {"delta_violated", report.delta_violated()},
      {"delta_prime_violated", report.delta_prime_violated()},
      {"pure", report.pure},
      {"mode", to_string(report.mode)},
      {"seed", report.seed},
      {"draw_index", report.draw_index},
  };
}

}  // namespace qubitmix
