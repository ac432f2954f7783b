#pragma once

// Average entropies, coherence and fidelity of random qubit mixtures, each
// available through quadrature of the closed-form densities and through
// seeded Monte Carlo.

#include "qubitmix/bloch.hpp"
#include "qubitmix/quadrature.hpp"
#include "qubitmix/sampler.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <span>

namespace qubitmix {

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

// Samples are split evenly over `workers` threads; worker w draws from
// substream w. Results are bit-identical for a fixed (seed, samples, workers).
struct McConfig {
  std::uint64_t seed = 1;
  std::uint64_t samples = 1'000'000;
  unsigned workers = 1;  // 0 means std::thread::hardware_concurrency()
};

unsigned resolve_workers(unsigned requested);

using McKernel = std::function<double(SeededSampler&)>;
using StateDraw = std::function<BlochVector(SeededSampler&)>;

// Mean of kernel(sampler) with its standard error (sample variance / N).
McEstimate monte_carlo_mean(const McKernel& kernel, const McConfig& cfg);

// phi(x) = x^2 (1 + 6 ln 2) + (1 - x)^2 (1 + 2x) ln(1 - x) + (1 + x)^2 (1 - 2x) ln(1 + x),
// an even function with phi(0) = 0.
double entropy_moment_phi(double x);

// int_0^x Phi(r) r dr = phi(x) / (12 ln 2).
double entropy_first_moment(double x);

// E S((rho1 + rho2) / 2) for rho1, rho2 uniform on the orbits of Bloch
// lengths r1, r2: (phi(r+) - phi(r-)) / (6 ln 2 r1 r2).
EntropyBits cond_avg_entropy_equi(double r1, double r2);

// E S(rho1 [+]_{1/2} rho2) on the same orbits, by quadrature of
// (2 / r1 r2) int Phi(r) r dr / sqrt(A - 4 r^2) after the substitution
// s = sqrt(A - 4 r^2), which leaves (1 / 2 r1 r2) int_{1 - r1 r2}^{1 + r1 r2}
// Phi(sqrt(A - s^2) / 2) ds.
EntropyBits cond_avg_entropy_qadd(double r1, double r2, const QuadratureConfig& cfg = {});

// Outer tolerance for the Hilbert-Schmidt double integrals. Inner integrals
// run at 1/100 of the outer tolerances.
QuadratureConfig default_hs_quadrature();

// 18 int_0^1 int_0^1 r1 r2 [int_{r-}^{r+} Phi(r) r dr] dr1 dr2.
QuadratureResult avg_entropy_equi_hs(const QuadratureConfig& cfg = default_hs_quadrature());

// 18 int_0^1 int_0^1 r1 r2 [int_{r-}^{r+} Phi(r) r dr / sqrt(A - 4 r^2)] dr1 dr2.
QuadratureResult avg_entropy_qadd_hs(const QuadratureConfig& cfg = default_hs_quadrature());

// H_{mn} - H_n - (m - 1) / (2n). The expression is in nats; `bits` is the
// same value divided by ln 2.
struct PageEntropy {
  boost::multiprecision::cpp_rational exact;
  double nats = 0.0;
  double bits = 0.0;
};

PageEntropy page_entropy(unsigned m, unsigned n);
boost::multiprecision::cpp_rational harmonic_number(unsigned k);

McEstimate mc_avg_entropy_equi(const McConfig& cfg);
McEstimate mc_avg_entropy_qadd(const McConfig& cfg);
McEstimate mc_cond_avg_entropy_equi(double r1, double r2, const McConfig& cfg);
McEstimate mc_cond_avg_entropy_qadd(double r1, double r2, const McConfig& cfg);

// E S((rho_1 + ... + rho_n) / n) over i.i.d. Hilbert-Schmidt qubits.
McEstimate mc_avg_entropy_mean_n(unsigned n, const McConfig& cfg);

// Average relative entropy of coherence of the mean of n i.i.d. states drawn
// by `draw` (Hilbert-Schmidt by default).
McEstimate mc_avg_coherence_n(unsigned n, const McConfig& cfg,
                              const StateDraw& draw = sample_hs_state);

// E F^2 over Hilbert-Schmidt pairs: (1 + (3 pi / 16)^2) / 2.
double avg_fidelity_squared_exact();

// The same average by 3-dimensional quadrature of F^2(u, v, theta) against
// the joint density (9/2) u^2 v^2 sin(theta).
QuadratureResult avg_fidelity_squared_quadrature(const QuadratureConfig& cfg = {});

McEstimate mc_avg_fidelity_squared(const McConfig& cfg);

// Kolmogorov-Smirnov sup distance between the empirical CDF of `sorted` and
// `cdf`. Throws ContractError if the samples are not ascending.
double ks_one_sample(std::span<const double> sorted, const std::function<double(double)>& cdf);

// Two-sample KS distance between two ascending samples.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

}  // namespace qubitmix
