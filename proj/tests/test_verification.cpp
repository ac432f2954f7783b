#include "qubitmix/errors.hpp"
#include "qubitmix/verification.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>

using namespace qubitmix;

TEST(DensityKind, NamesRoundTrip) {
  for (const char* name : {"lambda-equi", "lambda-qadd", "r-equi", "r-qadd", "angle", "maxeig"}) {
    const auto kind = parse_density_kind(name);
    ASSERT_TRUE(kind.has_value()) << name;
    EXPECT_EQ(to_string(*kind), name);
  }
  EXPECT_FALSE(parse_density_kind("lambda").has_value());
  EXPECT_TRUE(uses_orbit_params(DensityKind::LambdaQadd));
  EXPECT_TRUE(uses_radius_params(DensityKind::RQadd));
  EXPECT_FALSE(uses_orbit_params(DensityKind::MaxEig));
}

TEST(DensityKind, DomainsAndBreakpoints) {
  EXPECT_EQ(density_domain(DensityKind::Angle).second, std::numbers::pi);
  EXPECT_EQ(density_domain(DensityKind::REqui).second, 1.0);
  const std::vector<double> b = support_breakpoints(DensityKind::LambdaEqui, {1.0 / 3, 1.0 / 6});
  ASSERT_EQ(b.size(), 4u);
  EXPECT_NEAR(b[0], 0.25, 1e-15);
  EXPECT_NEAR(b[3], 0.75, 1e-15);
  EXPECT_EQ(support_breakpoints(DensityKind::LambdaEqui, {0.2, 0.2}).size(), 2u);
  EXPECT_THROW(support_breakpoints(DensityKind::REqui, {0.0, 0.5}), DegenerateParameterError);
  EXPECT_NO_THROW(validate_params(DensityKind::MaxEig, {}));
}

TEST(DrawDensitySamples, SortedDeterministicAndWorkerStable) {
  const auto a = draw_density_samples(DensityKind::RQadd, {0.4, 0.8}, 5000, 3, 1);
  const auto b = draw_density_samples(DensityKind::RQadd, {0.4, 0.8}, 5000, 3, 1);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  const auto c = draw_density_samples(DensityKind::RQadd, {0.4, 0.8}, 5000, 3, 2);
  const auto d = draw_density_samples(DensityKind::RQadd, {0.4, 0.8}, 5000, 3, 2);
  EXPECT_EQ(c, d);
  EXPECT_EQ(c.size(), 5000u);
}

TEST(DefaultThreshold, MatchesMillionSampleValue) {
  EXPECT_DOUBLE_EQ(default_ks_threshold(1'000'000), 0.002);
}

TEST(VerifyDensity, PassingRuns) {
  const VerificationReport eq =
      verify_density(DensityKind::LambdaEqui, {1.0 / 6, 1.0 / 6}, {1.0 / 6, 1.0 / 6}, 1'000'000, 1, 1, 0.002);
  EXPECT_TRUE(eq.pass) << eq.ks_statistic;
  EXPECT_EQ(eq.max_support_excursion, 0.0);
  const VerificationReport rq =
      verify_density(DensityKind::RQadd, {1.0 / 3, 2.0 / 3}, {1.0 / 3, 2.0 / 3}, 1'000'000, 2, 1, 0.002);
  EXPECT_TRUE(rq.pass) << rq.ks_statistic;
  EXPECT_LE(rq.max_support_excursion, 1e-12);
}

TEST(VerifyDensity, EveryKindAtSmallerSize) {
  const std::vector<std::pair<DensityKind, DensityParams>> cases{
      {DensityKind::LambdaEqui, {0.05, 0.4}}, {DensityKind::LambdaQadd, {1.0 / 3, 1.0 / 6}},
      {DensityKind::REqui, {0.9, 0.2}},       {DensityKind::RQadd, {1.0, 0.5}},
      {DensityKind::Angle, {}},               {DensityKind::MaxEig, {}}};
  for (const auto& [kind, p] : cases) {
    const VerificationReport r = verify_density(kind, p, p, 100000, 7, 1, default_ks_threshold(100000));
    EXPECT_TRUE(r.pass) << to_string(kind) << " ks=" << r.ks_statistic;
  }
}

TEST(VerifyDensity, MismatchedParametersFail) {
  const VerificationReport r =
      verify_density(DensityKind::LambdaEqui, {0.25, 1.0 / 6}, {1.0 / 3, 1.0 / 6}, 1'000'000, 3, 1, 0.002);
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.ks_statistic, 0.002);
  EXPECT_GT(r.max_support_excursion, 0.0);
}

TEST(VerifyDensity, RejectsBadInput) {
  EXPECT_THROW(verify_density(DensityKind::LambdaEqui, {0.5, 0.2}, {0.5, 0.2}, 1000, 1, 1, 0.1),
               DegenerateParameterError);
  EXPECT_THROW(verify_density(DensityKind::MaxEig, {}, {}, 0, 1, 1, 0.1), DomainError);
}
