#include "hypershadow/capgeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hypershadow/specfun.hpp"

namespace hypershadow::capgeom {
namespace {

void require_dimension(int n, int min_n, const char* where) {
  if (n < min_n) {
    throw DomainError(std::string(where) + ": dimension must be at least " +
                      std::to_string(min_n));
  }
}

void require_angle(double theta, const char* where) {
  detail::require_finite(theta, where);
  if (theta < 0.0 || theta > std::numbers::pi / 2) {
    throw DomainError(std::string(where) + ": angle must lie in [0, pi/2]");
  }
}

void require_radius(double radius, const char* where) {
  detail::require_finite(radius, where);
  if (!(radius > 0.0)) throw DomainError(std::string(where) + ": radius must be positive");
}

void require_ball_radius(int n, double r, const char* where) {
  detail::require_finite(r, where);
  if (r < 0.0 || r > std::sqrt(static_cast<double>(n))) {
    throw DomainError(std::string(where) + ": ball radius must lie in [0, sqrt(n)]");
  }
}

}  // namespace

CapSpec::CapSpec(int n, double radius, double theta) : n_(n), radius_(radius), theta_(theta) {
  require_dimension(n, 2, "CapSpec");
  require_radius(radius, "CapSpec");
  require_angle(theta, "CapSpec");
}

double CapSpec::epsilon() const { return radius_ * std::cos(theta_); }

double CapSpec::chord() const { return 2.0 * radius_ * std::sin(0.5 * theta_); }

BallArrangement::BallArrangement(int n, double r) : n_(n), r_(r) {
  require_dimension(n, 2, "BallArrangement");
  require_ball_radius(n, r, "BallArrangement");
}

double log_sphere_area(int n, double radius) {
  require_dimension(n, 2, "sphere_area");
  require_radius(radius, "sphere_area");
  const double half_n = 0.5 * n;
  return std::numbers::ln2 + half_n * std::log(std::numbers::pi) +
         (n - 1) * std::log(radius) - specfun::log_gamma(half_n);
}

double sphere_area(int n, double radius) {
  const double log_area = log_sphere_area(n, radius);
  if (log_area > std::log(std::numeric_limits<double>::max())) {
    throw NumericalError("sphere_area: result overflows (log area " +
                         std::to_string(log_area) + ")");
  }
  return std::exp(log_area);
}

CapForms cap_convert(double theta, double radius) {
  require_angle(theta, "cap_convert");
  require_radius(radius, "cap_convert");
  return {radius * std::cos(theta), 2.0 * radius * std::sin(0.5 * theta)};
}

double cap_angle_from_epsilon(double epsilon, double radius) {
  require_radius(radius, "cap_angle_from_epsilon");
  detail::require_finite(epsilon, "cap_angle_from_epsilon");
  if (epsilon < 0.0 || epsilon > radius) {
    throw DomainError("cap_angle_from_epsilon: epsilon must lie in [0, R]");
  }
  return std::acos(epsilon / radius);
}

double cap_area(const CapSpec& spec) {
  const double s = std::sin(spec.theta());
  const double z = std::min(1.0, s * s);
  const double fraction = specfun::reg_inc_beta(z, {0.5 * (spec.n() - 1), 0.5});
  if (fraction == 0.0) return 0.0;
  return 0.5 * sphere_area(spec.n(), spec.radius()) * fraction;
}

double single_shadow_fraction(int n, double r) {
  require_dimension(n, 2, "single_shadow_fraction");
  require_ball_radius(n, r, "single_shadow_fraction");
  // r = √n is the closed boundary; r² / n can round just below 1 there.
  const double z = r == std::sqrt(static_cast<double>(n)) ? 1.0 : std::min(1.0, r * r / n);
  return 0.5 * specfun::reg_inc_beta(z, {0.5 * (n - 1), 0.5});
}

double single_shadow_fraction(const BallArrangement& balls) {
  return single_shadow_fraction(balls.n(), balls.r());
}

double beta_tail_bound(int n, double z) {
  require_dimension(n, 3, "beta_tail_bound");
  detail::require_finite(z, "beta_tail_bound");
  if (z < 0.0 || z > 1.0) throw DomainError("beta_tail_bound: z must lie in [0, 1]");
  return std::pow(z, 0.5 * (n - 1)) / std::sqrt(std::numbers::pi);
}

double disjoint_union_fraction(int n, double r) {
  require_dimension(n, 2, "disjoint_union_fraction");
  detail::require_finite(r, "disjoint_union_fraction");
  if (r < 0.0) throw DomainError("disjoint_union_fraction: radius must be non-negative");
  if (r > 1.0) {
    throw DomainError("disjoint_union_fraction: shadows overlap for r > 1");
  }
  return std::min(1.0, std::ldexp(single_shadow_fraction(n, r), n));
}

SteeleRadius steele_inner_radius(int n) {
  require_dimension(n, 2, "steele_inner_radius");
  const double radius = std::sqrt(static_cast<double>(n)) - 1.0;
  return {radius, radius > 2.0};
}

double adjacent_vertex_cosine(int n) {
  require_dimension(n, 2, "adjacent_vertex_cosine");
  return static_cast<double>(n - 2) / n;
}

}  // namespace hypershadow::capgeom
