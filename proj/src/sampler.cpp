#include "qubitmix/sampler.hpp"

#include "qubitmix/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>

namespace qubitmix {

namespace {

constexpr double kTwoPi = boost::math::double_constants::two_pi;

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

SeededSampler::SeededSampler(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(substream_seed(seed, stream)) {}

double SeededSampler::uniform() {
  ++draws_;
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

OrbitSpec::OrbitSpec(double mu) : mu_(mu) {
  if (!(mu >= 0.0 && mu <= 0.5)) {
    throw DomainError("OrbitSpec: minimal eigenvalue mu outside [0, 1/2]");
  }
}

OrbitSpec OrbitSpec::from_radius(double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("OrbitSpec: Bloch radius outside [0, 1]");
  }
  return OrbitSpec(0.5 * (1.0 - r));
}

Eigen::Vector3d sample_direction(SeededSampler& s) {
  const double cos_theta = 2.0 * s.uniform() - 1.0;
  const double azimuth = kTwoPi * s.uniform();
  const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
  return {sin_theta * std::cos(azimuth), sin_theta * std::sin(azimuth), cos_theta};
}

double sample_hs_length(SeededSampler& s) { return std::cbrt(s.uniform()); }

BlochVector sample_hs_state(SeededSampler& s) {
  const double r = sample_hs_length(s);
  return BlochVector(r * sample_direction(s));
}

BlochVector sample_orbit_state(const OrbitSpec& orbit, SeededSampler& s) {
  return BlochVector(orbit.radius() * sample_direction(s));
}

BlochVector sample_pure_state(SeededSampler& s) { return BlochVector(sample_direction(s)); }

double sample_angle(SeededSampler& s) {
  return std::acos(std::clamp(2.0 * s.uniform() - 1.0, -1.0, 1.0));
}

}  // namespace qubitmix
