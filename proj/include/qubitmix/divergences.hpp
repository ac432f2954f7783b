#pragma once

// Quantum Jensen-Shannon divergence on qubits and its quantum-addition lower
// bound:
//
//   J(a, b)    = S((rho_a + rho_b) / 2)   - (S(rho_a) + S(rho_b)) / 2
//   Jhat(a, b) = S(rho_a [+]_{1/2} rho_b) - (S(rho_a) + S(rho_b)) / 2
//
// plus the randomized search for triples that break the triangle inequality
// for D = sqrt(Jhat) (statistic Delta) and for D^2 = Jhat (statistic Delta').

#include "qubitmix/bloch.hpp"

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace qubitmix {

double qjsd(const BlochVector& a, const BlochVector& b);
double qjsd_hat(const BlochVector& a, const BlochVector& b);
double dist_j(const BlochVector& a, const BlochVector& b);
double dist_jhat(const BlochVector& a, const BlochVector& b);

struct TriangleDelta {
  double delta;        // D(a,b) + D(a,c) - D(b,c)
  double delta_prime;  // D^2(a,b) + D^2(a,c) - D^2(b,c)
};

// Both statistics with `a` as the apex vertex.
TriangleDelta triangle_delta(const BlochVector& a, const BlochVector& b, const BlochVector& c);

enum class SampleMode { Pure, Mixed };

std::string_view to_string(SampleMode mode);

// A triple for which Delta or Delta' is negative under some apex. The stored
// statistics are minima over the three apex choices; `delta_apex` records
// which vertex realizes the minimum of Delta (likewise for Delta').
struct TripleReport {
  std::array<BlochVector, 3> states;
  double delta = 0.0;
  double delta_prime = 0.0;
  int delta_apex = 0;
  int delta_prime_apex = 0;
  std::array<bool, 3> pure{};
  SampleMode mode = SampleMode::Mixed;
  std::uint64_t seed = 0;
  std::uint64_t draw_index = 0;

  bool delta_violated() const { return delta < 0.0; }
  bool delta_prime_violated() const { return delta_prime < 0.0; }
};

// Recomputes both minima from the stored states.
TriangleDelta recompute(const TripleReport& report);

struct ViolationSearchResult {
  std::vector<TripleReport> reports;  // ascending draw_index
  std::uint64_t n_triples = 0;
  std::uint64_t delta_violations = 0;
  std::uint64_t delta_prime_violations = 0;
};

// Draws n_triples independent triples (triple k from substream k of `seed`,
// so the result does not depend on `workers`) and keeps every triple that
// violates either inequality.
ViolationSearchResult violation_search(SampleMode mode, std::uint64_t n_triples,
                                       std::uint64_t seed, unsigned workers = 1);

nlohmann::json to_json(const TripleReport& report);

}  // namespace qubitmix
