#pragma once

// Seeded samplers for random qubit ensembles.
//
// All draws use inverse-CDF transforms of uniform variates, so a sampler's
// k-th output depends only on (seed, stream, k). Each SeededSampler is
// single-owner; parallel code gives every worker its own stream.

#include "qubitmix/bloch.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <random>

namespace qubitmix {

// splitmix64 finalizer of (seed, stream): the engine seed for a substream.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream);

class SeededSampler {
 public:
  explicit SeededSampler(std::uint64_t seed, std::uint64_t stream = 0);

  // Uniform on [0, 1) with 53 random bits.
  double uniform();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  std::uint64_t draws() const { return draws_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t draws_ = 0;
  std::mt19937_64 engine_;
};

// States on a unitary orbit {U diag(1 - mu, mu) U^dagger}. For a qubit this
// orbit is the sphere of radius 1 - 2 mu in the Bloch ball.
class OrbitSpec {
 public:
  explicit OrbitSpec(double mu);

  double mu() const { return mu_; }
  double radius() const { return 1.0 - 2.0 * mu_; }

  // Orbit whose states have Bloch length r (mu = (1 - r) / 2).
  static OrbitSpec from_radius(double r);

 private:
  double mu_;
};

// Uniform point on the unit sphere.
Eigen::Vector3d sample_direction(SeededSampler& s);

// Bloch length of a Hilbert-Schmidt random qubit, density 3 r^2 on [0, 1].
double sample_hs_length(SeededSampler& s);

// Hilbert-Schmidt random qubit: HS length times an independent direction.
BlochVector sample_hs_state(SeededSampler& s);

// Uniform point on a unitary orbit.
BlochVector sample_orbit_state(const OrbitSpec& orbit, SeededSampler& s);

// Unit-length (pure) state with uniform direction.
BlochVector sample_pure_state(SeededSampler& s);

// Angle between two independent uniform directions, density sin(theta) / 2.
double sample_angle(SeededSampler& s);

}  // namespace qubitmix
