#include "qubitmix/verification.hpp"

#include "qubitmix/densities.hpp"
#include "qubitmix/errors.hpp"
#include "qubitmix/mixing.hpp"
#include "qubitmix/stats.hpp"

#include <Eigen/Geometry>

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <thread>

namespace qubitmix {

namespace {

constexpr double kPi = boost::math::double_constants::pi;
constexpr double kSupportSlack = 1e-12;

struct KindName {
  DensityKind kind;
  std::string_view name;
};

constexpr std::array<KindName, 6> kKindNames{{
    {DensityKind::LambdaEqui, "lambda-equi"},
    {DensityKind::LambdaQadd, "lambda-qadd"},
    {DensityKind::REqui, "r-equi"},
    {DensityKind::RQadd, "r-qadd"},
    {DensityKind::Angle, "angle"},
    {DensityKind::MaxEig, "maxeig"},
}};

SupportSpec support_of(DensityKind kind, const DensityParams& p) {
  switch (kind) {
    case DensityKind::LambdaEqui:
    case DensityKind::LambdaQadd:
      return SupportSpec::eigenvalue(p.first, p.second);
    case DensityKind::REqui:
    case DensityKind::RQadd:
      return SupportSpec::length(p.first, p.second);
    case DensityKind::Angle:
      return SupportSpec::single({0.0, kPi});
    case DensityKind::MaxEig:
      return SupportSpec::single({0.5, 1.0});
  }
  return SupportSpec::single({0.0, 1.0});
}

double excursion(const SupportSpec& support, double x) {
  double best = std::numeric_limits<double>::infinity();
  for (const Interval& i : support) {
    if (i.contains(x)) return 0.0;
    best = std::min(best, x < i.lo ? i.lo - x : x - i.hi);
  }
  return best;
}

double pick_branch(double r, SeededSampler& s) {
  return s.uniform() < 0.5 ? 0.5 * (1.0 + r) : 0.5 * (1.0 - r);
}

}  // namespace

std::optional<DensityKind> parse_density_kind(std::string_view name) {
  for (const KindName& k : kKindNames) {
    if (k.name == name) return k.kind;
  }
  return std::nullopt;
}

std::string_view to_string(DensityKind kind) {
  for (const KindName& k : kKindNames) {
    if (k.kind == kind) return k.name;
  }
  return "unknown";
}

bool uses_orbit_params(DensityKind kind) {
  return kind == DensityKind::LambdaEqui || kind == DensityKind::LambdaQadd;
}

bool uses_radius_params(DensityKind kind) {
  return kind == DensityKind::REqui || kind == DensityKind::RQadd;
}

void validate_params(DensityKind kind, const DensityParams& p) {
  // Evaluating the CDF once runs the parameter checks of the closed forms.
  density_cdf(kind, p, 0.5);
}

double density_pdf(DensityKind kind, const DensityParams& p, double x) {
  switch (kind) {
    case DensityKind::LambdaEqui: return pdf_lambda_equi(x, p.first, p.second);
    case DensityKind::LambdaQadd: return pdf_lambda_qadd(x, p.first, p.second);
    case DensityKind::REqui: return pdf_r_equi(x, p.first, p.second);
    case DensityKind::RQadd: return pdf_r_qadd(x, p.first, p.second);
    case DensityKind::Angle: return pdf_angle(x);
    case DensityKind::MaxEig: return pdf_maxeig_hs(x);
  }
  return 0.0;
}

double density_cdf(DensityKind kind, const DensityParams& p, double x) {
  switch (kind) {
    case DensityKind::LambdaEqui: return cdf_lambda_equi(x, p.first, p.second);
    case DensityKind::LambdaQadd: return cdf_lambda_qadd(x, p.first, p.second);
    case DensityKind::REqui: return cdf_r_equi(x, p.first, p.second);
    case DensityKind::RQadd: return cdf_r_qadd(x, p.first, p.second);
    case DensityKind::Angle: return cdf_angle(x);
    case DensityKind::MaxEig: return cdf_maxeig_hs(x);
  }
  return 0.0;
}

std::pair<double, double> density_domain(DensityKind kind) {
  return kind == DensityKind::Angle ? std::pair{0.0, kPi} : std::pair{0.0, 1.0};
}

std::vector<double> support_breakpoints(DensityKind kind, const DensityParams& p) {
  validate_params(kind, p);
  std::vector<double> points;
  for (const Interval& i : support_of(kind, p)) {
    points.push_back(i.lo);
    points.push_back(i.hi);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

double draw_density_sample(DensityKind kind, const DensityParams& p, SeededSampler& s) {
  switch (kind) {
    case DensityKind::LambdaEqui:
    case DensityKind::LambdaQadd:
    case DensityKind::REqui:
    case DensityKind::RQadd: {
      const bool orbit = uses_orbit_params(kind);
      const OrbitSpec o1 = orbit ? OrbitSpec(p.first) : OrbitSpec::from_radius(p.first);
      const OrbitSpec o2 = orbit ? OrbitSpec(p.second) : OrbitSpec::from_radius(p.second);
      const BlochVector a = sample_orbit_state(o1, s);
      const BlochVector b = sample_orbit_state(o2, s);
      const bool qadd = kind == DensityKind::LambdaQadd || kind == DensityKind::RQadd;
      const double r = qadd ? quantum_add(a, b, 0.5).length() : mix_weighted(a, b, 0.5).length();
      return orbit ? pick_branch(r, s) : r;
    }
    case DensityKind::Angle: {
      const Eigen::Vector3d u = sample_direction(s);
      const Eigen::Vector3d v = sample_direction(s);
      return std::atan2(u.cross(v).norm(), u.dot(v));
    }
    case DensityKind::MaxEig:
      return 0.5 * (1.0 + sample_hs_length(s));
  }
  return 0.0;
}

std::vector<double> draw_density_samples(DensityKind kind, const DensityParams& p,
                                         std::uint64_t n, std::uint64_t seed, unsigned workers) {
  workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(workers), std::max<std::uint64_t>(n, 1)));
  std::vector<double> out(n);
  const auto run = [&](unsigned w) {
    const std::uint64_t begin = n / workers * w + std::min<std::uint64_t>(w, n % workers);
    const std::uint64_t share = n / workers + (w < n % workers ? 1 : 0);
    SeededSampler sampler(seed, w);
    for (std::uint64_t i = 0; i < share; ++i) out[begin + i] = draw_density_sample(kind, p, sampler);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double default_ks_threshold(std::uint64_t n) { return 2.0 / std::sqrt(static_cast<double>(n)); }

VerificationReport verify_density(DensityKind kind, const DensityParams& sample_params,
                                  const DensityParams& curve_params, std::uint64_t n,
                                  std::uint64_t seed, unsigned workers, double threshold) {
  validate_params(kind, sample_params);
  validate_params(kind, curve_params);
  if (n == 0) throw DomainError("verify_density: need at least one sample");
  const std::vector<double> samples = draw_density_samples(kind, sample_params, n, seed, workers);
  const double ks = ks_one_sample(samples, [&](double x) { return density_cdf(kind, curve_params, x); });
  const SupportSpec support = support_of(kind, curve_params);
  double worst = 0.0;
  for (double x : samples) worst = std::max(worst, excursion(support, x));
  return {kind,
          sample_params,
          curve_params,
          n,
          seed,
          resolve_workers(workers),
          ks,
          threshold,
          worst,
          ks < threshold && worst <= kSupportSlack};
}

}  // namespace qubitmix
