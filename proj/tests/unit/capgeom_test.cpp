#include "hypershadow/capgeom.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hypershadow/specfun.hpp"
#include "oracles.hpp"

namespace hs = hypershadow;
namespace cg = hypershadow::capgeom;

namespace {

constexpr double kPi = std::numbers::pi;

TEST(SphereArea, LowDimensions) {
  EXPECT_NEAR(cg::sphere_area(2, 1.0), 2 * kPi, 1e-13);
  EXPECT_NEAR(cg::sphere_area(3, 1.0), 4 * kPi, 1e-13);
  // Γ(2) = 1: 2π² · 2³
  EXPECT_NEAR(cg::sphere_area(4, 2.0), 2 * kPi * kPi * 8, 1e-11);
  EXPECT_NEAR(cg::sphere_area(4, 2.0), 157.91367041742973, 1e-11);
}

TEST(SphereArea, OverflowAndDomain) {
  EXPECT_THROW(cg::sphere_area(1, 1.0), hs::DomainError);
  EXPECT_THROW(cg::sphere_area(3, 0.0), hs::DomainError);
  EXPECT_THROW(cg::sphere_area(400, 100.0), hs::NumericalError);
  EXPECT_TRUE(std::isfinite(cg::log_sphere_area(400, 100.0)));
}

TEST(CapConvert, Examples) {
  const auto sixty = cg::cap_convert(kPi / 3, 1.0);
  EXPECT_NEAR(sixty.epsilon, 0.5, 1e-15);
  EXPECT_NEAR(sixty.chord, 1.0, 1e-15);

  const auto empty = cg::cap_convert(0.0, 2.5);
  EXPECT_EQ(empty.epsilon, 2.5);
  EXPECT_EQ(empty.chord, 0.0);

  const auto hemisphere = cg::cap_convert(kPi / 2, 3.0);
  EXPECT_NEAR(hemisphere.epsilon, 0.0, 1e-15);
  EXPECT_NEAR(hemisphere.chord, 3.0 * std::numbers::sqrt2, 1e-14);

  EXPECT_THROW(cg::cap_convert(-0.1, 1.0), hs::DomainError);
  EXPECT_THROW(cg::cap_convert(2.0, 1.0), hs::DomainError);
}

TEST(CapConvert, RoundTripsThroughEpsilon) {
  for (double theta = 0.0; theta <= kPi / 2; theta += 0.01) {
    const double radius = 1.7;
    const auto forms = cg::cap_convert(theta, radius);
    EXPECT_NEAR(cg::cap_angle_from_epsilon(forms.epsilon, radius), theta, 1e-7);
    const cg::CapSpec spec(5, radius, theta);
    EXPECT_EQ(spec.epsilon(), forms.epsilon);
    EXPECT_EQ(spec.chord(), forms.chord);
    // chord² = 2R(R - ε), the Euclidean form of the same cap
    EXPECT_NEAR(forms.chord * forms.chord, 2 * radius * (radius - forms.epsilon), 1e-13);
  }
}

TEST(CapArea, HemisphereIsHalfTheSphere) {
  for (int n = 2; n <= 30; ++n) {
    const cg::CapSpec spec(n, 1.3, kPi / 2);
    EXPECT_NEAR(cg::cap_area(spec) / cg::sphere_area(n, 1.3), 0.5, 1e-12) << "n=" << n;
  }
}

TEST(CapArea, EmptyCap) { EXPECT_EQ(cg::cap_area(cg::CapSpec(7, 2.0, 0.0)), 0.0); }

TEST(CapArea, ThreeDimensionalZoneFormula) {
  EXPECT_NEAR(cg::cap_area(cg::CapSpec(3, 1.0, kPi / 3)), kPi, 1e-12);
  for (double theta = 0.0; theta <= kPi / 2; theta += 0.02) {
    for (double radius : {0.5, 1.0, 3.0}) {
      const double zone = 2 * kPi * radius * radius * (1 - std::cos(theta));
      EXPECT_NEAR(cg::cap_area(cg::CapSpec(3, radius, theta)), zone, 1e-10);
    }
  }
}

TEST(SingleShadow, CubeInThreeDimensions) {
  EXPECT_NEAR(cg::single_shadow_fraction(3, 1.0), 0.5 * (1 - std::sqrt(2.0 / 3.0)), 1e-14);
  EXPECT_NEAR(cg::single_shadow_fraction(3, 1.0), 0.09175170953613696, 1e-14);
}

TEST(SingleShadow, Limits) {
  for (int n : {2, 3, 10, 100}) {
    EXPECT_EQ(cg::single_shadow_fraction(n, 0.0), 0.0);
    EXPECT_EQ(cg::single_shadow_fraction(n, std::sqrt(static_cast<double>(n))), 0.5);
  }
  EXPECT_THROW(cg::single_shadow_fraction(4, 2.0001), hs::DomainError);
  EXPECT_THROW(cg::single_shadow_fraction(4, -0.1), hs::DomainError);
}

TEST(SingleShadow, UsesSquaredRadiusOverN) {
  // The shadow of a ball at distance √n has sin θ = r / √n. At r = 2, n = 5
  // the two readings r/n and r²/n differ.
  const double expected = 0.5 * hs::specfun::reg_inc_beta(4.0 / 5.0, {2.0, 0.5});
  EXPECT_NEAR(cg::single_shadow_fraction(5, 2.0), expected, 1e-15);
  const double theta = std::asin(2.0 / std::sqrt(5.0));
  const cg::CapSpec cap(5, std::sqrt(5.0), theta);
  EXPECT_NEAR(cg::single_shadow_fraction(5, 2.0), cg::cap_area(cap) / cg::sphere_area(5, std::sqrt(5.0)),
              1e-13);
}

TEST(SingleShadow, NondecreasingInRadius) {
  for (int n : {2, 3, 8, 50, 500}) {
    double previous = 0.0;
    const double top = std::sqrt(static_cast<double>(n));
    for (int i = 0; i <= 400; ++i) {
      const double value = cg::single_shadow_fraction(n, top * i / 400.0);
      EXPECT_GE(value, previous) << "n=" << n << " i=" << i;
      previous = value;
    }
  }
}

TEST(SingleShadow, UnitBallBound) {
  for (int n = 3; n <= 40; ++n) {
    const double bound = 1.0 / (2.0 * std::sqrt(kPi)) * std::pow(1.0 / n, 0.5 * (n - 1));
    EXPECT_LE(cg::single_shadow_fraction(n, 1.0), bound) << "n=" << n;
  }
}

TEST(BetaTailBound, Examples) {
  EXPECT_NEAR(cg::beta_tail_bound(3, 1.0 / 3.0), 1.0 / (3.0 * std::sqrt(kPi)), 1e-15);
  EXPECT_NEAR(cg::beta_tail_bound(3, 1.0 / 3.0), 0.18806319451591877, 1e-15);
  EXPECT_GE(cg::beta_tail_bound(3, 1.0 / 3.0), hs::specfun::reg_inc_beta(1.0 / 3.0, {1.0, 0.5}));
  EXPECT_EQ(cg::beta_tail_bound(9, 0.0), 0.0);
  EXPECT_THROW(cg::beta_tail_bound(2, 0.5), hs::DomainError);
  EXPECT_THROW(cg::beta_tail_bound(5, 1.5), hs::DomainError);
}

TEST(BetaTailBound, DominatesAtShadowArguments) {
  // The bound is used at z = r²/n with r <= 1, where it holds.
  for (int n = 3; n <= 50; ++n) {
    for (double r = 0.05; r <= 1.0; r += 0.05) {
      const double z = r * r / n;
      EXPECT_GE(cg::beta_tail_bound(n, z), hs::specfun::reg_inc_beta(z, {0.5 * (n - 1), 0.5}))
          << "n=" << n << " r=" << r;
    }
  }
}

TEST(BetaTailBound, FailsNearOneInLowDimension) {
  // Dropping (1 - u)^{-1/2} from the integrand undercounts as z -> 1.
  EXPECT_LT(cg::beta_tail_bound(3, 0.99), hs::specfun::reg_inc_beta(0.99, {1.0, 0.5}));
}

TEST(DisjointUnion, ReferenceCases) {
  EXPECT_NEAR(cg::disjoint_union_fraction(3, 1.0), 4 * (1 - std::sqrt(2.0 / 3.0)), 1e-14);
  EXPECT_NEAR(cg::disjoint_union_fraction(3, 1.0), 0.7340136762890959, 1e-14);
  // 4 · ½ · (2/π) arcsin √½ = 1
  EXPECT_NEAR(cg::disjoint_union_fraction(2, 1.0), 1.0, 1e-12);
  EXPECT_EQ(cg::disjoint_union_fraction(6, 0.0), 0.0);
  EXPECT_THROW(cg::disjoint_union_fraction(3, 1.01), hs::DomainError);
}

TEST(DisjointUnion, VanishesForUnitBalls) {
  EXPECT_LT(cg::disjoint_union_fraction(40, 1.0), 1e-6);
  EXPECT_LT(cg::disjoint_union_fraction(20, 1.0), 3e-5);
  double previous = 1.0;
  for (int n = 3; n <= 200; ++n) {
    const double value = cg::disjoint_union_fraction(n, 1.0);
    EXPECT_LE(value, previous) << "n=" << n;
    previous = value;
  }
}

TEST(DisjointUnion, AdjacentShadowsTouchAtUnitRadius) {
  for (int n = 2; n <= 64; ++n) {
    const double root_n = std::sqrt(static_cast<double>(n));
    const double centre_angle = std::acos(cg::adjacent_vertex_cosine(n));
    // adjacent vertices are 2 apart, so unit balls there are tangent
    EXPECT_NEAR(cg::cap_convert(std::min(centre_angle, kPi / 2), root_n).chord, 2.0, 1e-12)
        << "n=" << n;
    const double half_angle_unit = std::asin(1.0 / root_n);
    EXPECT_NEAR(2 * half_angle_unit, centre_angle, 1e-7) << "n=" << n;
    EXPECT_LT(2 * std::asin(0.9 / root_n), centre_angle);
    if (n > 2) EXPECT_GT(2 * std::asin(1.1 / root_n), centre_angle);
  }
}

TEST(Steele, InnerRadius) {
  const auto four = cg::steele_inner_radius(4);
  EXPECT_EQ(four.radius, 1.0);
  EXPECT_FALSE(four.escapes_cube);
  const auto nine = cg::steele_inner_radius(9);
  EXPECT_EQ(nine.radius, 2.0);
  EXPECT_FALSE(nine.escapes_cube);
  const auto sixteen = cg::steele_inner_radius(16);
  EXPECT_EQ(sixteen.radius, 3.0);
  EXPECT_TRUE(sixteen.escapes_cube);
  for (int n = 2; n <= 100; ++n) EXPECT_EQ(cg::steele_inner_radius(n).escapes_cube, n > 9);
  EXPECT_THROW(cg::steele_inner_radius(1), hs::DomainError);
}

TEST(BallArrangement, Validation) {
  EXPECT_NO_THROW(cg::BallArrangement(4, 2.0));
  EXPECT_THROW(cg::BallArrangement(4, 2.5), hs::DomainError);
  EXPECT_THROW(cg::BallArrangement(1, 0.5), hs::DomainError);
}

}  // namespace
