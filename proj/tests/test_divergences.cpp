#include "oracles.hpp"

#include "qubitmix/divergences.hpp"
#include "qubitmix/errors.hpp"
#include "qubitmix/mixing.hpp"
#include "qubitmix/sampler.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace qubitmix;

namespace {

const BlochVector kR1(0.594637, -0.562167, -0.402354);
const BlochVector kR2(0.246183, -0.755573, 0.593725);
const BlochVector kR3(0.190508, -0.0792096, -0.855743);

double mean_phi(const BlochVector& a, const BlochVector& b) {
  return 0.5 * (oracle::phi(a.length()) + oracle::phi(b.length()));
}

}  // namespace

TEST(Qjsd, Examples) {
  const BlochVector a(0.3, 0.1, -0.2);
  EXPECT_NEAR(qjsd(a, a), 0.0, 1e-15);
  EXPECT_NEAR(qjsd({0, 0, 1}, {0, 0, -1}), 1.0, 1e-15);
  EXPECT_NEAR(dist_j({0, 0, 1}, {0, 0, -1}), 1.0, 1e-15);
  EXPECT_NEAR(dist_j(a, a), 0.0, 1e-7);
  EXPECT_GT(qjsd(a, {0.3, 0.1, -0.1}), 0.0);
}

TEST(QjsdHat, Examples) {
  const BlochVector p(0.0, 0.6, 0.8);
  EXPECT_NEAR(qjsd_hat(p, p), 0.0, 1e-15);
  const BlochVector a(0.1, 0.2, 0.3);
  const BlochVector b(-0.2, -0.4, -0.6);
  EXPECT_NEAR(qjsd_hat(a, b), qjsd(a, b), 1e-15);
}

TEST(QjsdHat, MatchesOraclesOnRandomPairs) {
  SeededSampler s(101);
  for (int i = 0; i < 100000; ++i) {
    const BlochVector a = sample_hs_state(s);
    const BlochVector b = sample_hs_state(s);
    const double jh = qjsd_hat(a, b);
    const double j = qjsd(a, b);
    const double via_matrix = oracle::phi(oracle::quantum_add(a.vec(), b.vec(), 0.5).norm()) - mean_phi(a, b);
    const double via_mix = oracle::phi(0.5 * (a.vec() + b.vec()).norm()) - mean_phi(a, b);
    ASSERT_NEAR(jh, std::max(0.0, via_matrix), 1e-12);
    ASSERT_NEAR(j, std::max(0.0, via_mix), 1e-12);
    ASSERT_GE(jh, 0.0);
    ASSERT_LE(jh, j + 1e-12);
    ASSERT_LE(dist_jhat(a, b), dist_j(a, b) + 1e-12);
    ASSERT_EQ(jh, qjsd_hat(b, a));
    ASSERT_NEAR(j, qjsd(b, a), 1e-12);
    ASSERT_NEAR(dist_jhat(a, b), dist_jhat(b, a), 1e-12);
  }
}

TEST(QjsdHat, UnitaryInvariance) {
  SeededSampler s(102);
  std::mt19937_64 rng(102);
  for (int i = 0; i < 10000; ++i) {
    const BlochVector a = sample_hs_state(s);
    const BlochVector b = sample_hs_state(s);
    const Eigen::Matrix3d rot =
        Eigen::AngleAxisd(2 * std::numbers::pi * s.uniform(), sample_direction(s)).toRotationMatrix();
    const BlochVector ra(rot * a.vec());
    const BlochVector rb(rot * b.vec());
    ASSERT_NEAR(qjsd(ra, rb), qjsd(a, b), 1e-12);
    ASSERT_NEAR(qjsd_hat(ra, rb), qjsd_hat(a, b), 1e-12);
  }
}

TEST(TriangleDelta, PaperTriple) {
  const TriangleDelta d = triangle_delta(kR1, kR2, kR3);
  EXPECT_NEAR(d.delta, -0.0820814, 1e-6);
  EXPECT_LT(d.delta_prime, 0.0);
  EXPECT_NEAR(d.delta, dist_jhat(kR1, kR2) + dist_jhat(kR1, kR3) - dist_jhat(kR2, kR3), 1e-15);
}

TEST(TriangleDelta, DegenerateTriples) {
  const BlochVector a(0.2, -0.3, 0.5);
  const BlochVector b(-0.6, 0.1, 0.0);
  EXPECT_NEAR(triangle_delta(a, a, a).delta, 0.0, 1e-12);
  const TriangleDelta d = triangle_delta(a, b, b);
  EXPECT_NEAR(d.delta, 2 * dist_jhat(a, b), 1e-12);
  EXPECT_GE(d.delta, 0.0);
}

TEST(ViolationSearch, FindsViolationsInBothModes) {
  for (SampleMode mode : {SampleMode::Mixed, SampleMode::Pure}) {
    const ViolationSearchResult r = violation_search(mode, 10000, 2024);
    EXPECT_GE(r.delta_violations, 1u) << to_string(mode);
    EXPECT_GE(r.delta_prime_violations, 1u) << to_string(mode);
    EXPECT_EQ(r.n_triples, 10000u);
    for (std::size_t i = 0; i < r.reports.size(); ++i) {
      const TripleReport& t = r.reports[i];
      ASSERT_TRUE(t.delta_violated() || t.delta_prime_violated());
      if (i > 0) ASSERT_LT(r.reports[i - 1].draw_index, t.draw_index);
      const TriangleDelta again = recompute(t);
      ASSERT_NEAR(again.delta, t.delta, 1e-12);
      ASSERT_NEAR(again.delta_prime, t.delta_prime, 1e-12);
      ASSERT_EQ(t.mode, mode);
      ASSERT_EQ(t.seed, 2024u);
      for (int k = 0; k < 3; ++k) {
        ASSERT_EQ(t.pure[k], mode == SampleMode::Pure);
        if (mode == SampleMode::Pure) ASSERT_NEAR(t.states[k].length(), 1.0, 1e-12);
      }
      // the stored minimum is realized by the recorded apex
      const auto& st = t.states;
      const int ap = t.delta_apex;
      const TriangleDelta at = triangle_delta(st[ap], st[(ap + 1) % 3], st[(ap + 2) % 3]);
      ASSERT_NEAR(at.delta, t.delta, 1e-12);
    }
  }
}

TEST(ViolationSearch, ReproducibleAndWorkerIndependent) {
  const auto dump = [](const ViolationSearchResult& r) {
    std::string out;
    for (const auto& t : r.reports) out += to_json(t).dump() + "\n";
    return out;
  };
  const std::string one = dump(violation_search(SampleMode::Mixed, 3000, 77, 1));
  EXPECT_EQ(one, dump(violation_search(SampleMode::Mixed, 3000, 77, 1)));
  EXPECT_EQ(one, dump(violation_search(SampleMode::Mixed, 3000, 77, 3)));
  EXPECT_NE(one, dump(violation_search(SampleMode::Mixed, 3000, 78, 1)));
  EXPECT_THROW(violation_search(SampleMode::Pure, 0, 1), DomainError);
}

TEST(ViolationSearch, JsonFields) {
  const ViolationSearchResult r = violation_search(SampleMode::Pure, 2000, 5);
  ASSERT_FALSE(r.reports.empty());
  const nlohmann::json j = to_json(r.reports.front());
  for (const char* key : {"states", "delta", "delta_prime", "delta_apex", "delta_prime_apex", "pure", "mode",
                          "seed", "draw_index", "delta_violated", "delta_prime_violated"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["mode"], "pure");
  EXPECT_EQ(j["states"].size(), 3u);
  EXPECT_EQ(j["states"][0].size(), 3u);
}

// Soft check: D_J is a metric on qubits, so random triples should not break it.
TEST(DistJ, NoTriangleViolationsOnRandomTriples) {
  SeededSampler s(103);
  int violations = 0;
  for (int i = 0; i < 100000; ++i) {
    const BlochVector a = sample_hs_state(s);
    const BlochVector b = sample_hs_state(s);
    const BlochVector c = sample_hs_state(s);
    const double ab = dist_j(a, b), ac = dist_j(a, c), bc = dist_j(b, c);
    if (ab + ac < bc - 1e-12 || ab + bc < ac - 1e-12 || ac + bc < ab - 1e-12) ++violations;
  }
  EXPECT_EQ(violations, 0);
}
