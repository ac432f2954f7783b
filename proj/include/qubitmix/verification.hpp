#pragma once

// Monte Carlo checks of the closed-form densities: draw the quantity from
// the ensemble samplers, sort, and compare to the closed-form CDF with a
// one-sample Kolmogorov-Smirnov statistic.

#include "qubitmix/sampler.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace qubitmix {

enum class DensityKind { LambdaEqui, LambdaQadd, REqui, RQadd, Angle, MaxEig };

std::optional<DensityKind> parse_density_kind(std::string_view name);
std::string_view to_string(DensityKind kind);

// (mu, nu) for the eigenvalue kinds, (r1, r2) for the length kinds; ignored
// by Angle and MaxEig.
struct DensityParams {
  double first = 0.0;
  double second = 0.0;
};

bool uses_orbit_params(DensityKind kind);
bool uses_radius_params(DensityKind kind);

// Throws DegenerateParameterError / DomainError if `p` is unusable for `kind`.
void validate_params(DensityKind kind, const DensityParams& p);

double density_pdf(DensityKind kind, const DensityParams& p, double x);
double density_cdf(DensityKind kind, const DensityParams& p, double x);

// Abscissa range of the kind: [0, pi] for Angle, [0, 1] otherwise.
std::pair<double, double> density_domain(DensityKind kind);

// Support interval endpoints, ascending and deduplicated.
std::vector<double> support_breakpoints(DensityKind kind, const DensityParams& p);

// One draw of the random quantity the density describes. Eigenvalue kinds
// return one of the two eigenvalues, each with probability 1/2.
double draw_density_sample(DensityKind kind, const DensityParams& p, SeededSampler& s);

// n draws spread over `workers` substreams, returned sorted.
std::vector<double> draw_density_samples(DensityKind kind, const DensityParams& p,
                                         std::uint64_t n, std::uint64_t seed, unsigned workers);

// 2 / sqrt(n); equals 0.002 at n = 10^6.
double default_ks_threshold(std::uint64_t n);

struct VerificationReport {
  DensityKind kind;
  DensityParams sample_params;
  DensityParams curve_params;
  std::uint64_t n_samples;
  std::uint64_t seed;
  unsigned workers;
  double ks_statistic;
  double threshold;
  double max_support_excursion;  // largest distance of a sample outside the curve's support
  bool pass;
};

VerificationReport verify_density(DensityKind kind, const DensityParams& sample_params,
                                  const DensityParams& curve_params, std::uint64_t n,
                                  std::uint64_t seed, unsigned workers, double threshold);

}  // namespace qubitmix
