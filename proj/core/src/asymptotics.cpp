#include "hypershadow/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hypershadow/specfun.hpp"

namespace hypershadow::asymptotics {
namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

MomentSet::MomentSet(double mu, double m2, double a, double b)
    : mu_(mu), m2_(m2), a_(a), b_(b) {
  for (double v : {mu, m2, a, b}) detail::require_finite(v, "MomentSet");
  if (m2 != 1.0) throw DomainError("MomentSet: second moment must equal 1 (use rescaled())");
  if (!(mu > 0.0)) throw DomainError("MomentSet: mean of a positive variable must be positive");
  if (mu * mu > 1.0) throw DomainError("MomentSet: mu^2 exceeds E X^2 = 1");
  if (b < 1.0) throw DomainError("MomentSet: E X^4 below (E X^2)^2 = 1");
}

MomentSet MomentSet::rescaled(double mu, double m2, double m3, double m4) {
  detail::require_finite(m2, "MomentSet::rescaled");
  if (!(m2 > 0.0)) throw DomainError("MomentSet::rescaled: second moment must be positive");
  const double scale = std::sqrt(m2);
  return MomentSet(mu / scale, 1.0, m3 / (m2 * scale), m4 / (m2 * m2));
}

std::string_view to_string(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::vanishing:
      return "vanishing";
    case RegimeKind::critical:
      return "critical";
    case RegimeKind::full:
      return "full";
  }
  return "unknown";
}

MomentSet half_normal_moments() {
  const double mu = std::sqrt(2.0 / kPi);
  return MomentSet(mu, 1.0, 2.0 * mu, 3.0);
}

double ratio_limit_variance(const MomentSet& m) {
  const double mu = m.mu();
  const double mu2 = mu * mu;
  const double mu4 = mu2 * mu2;
  const double variance = mu4 * m.b() + 4.0 * mu2 - 4.0 * mu2 * mu * m.a() - mu4;
  // Cancellation leaves a few ulps of noise around a true zero.
  const double noise = 1e-13 * (mu4 * m.b() + 4.0 * mu2 + 4.0 * mu2 * mu * std::fabs(m.a()));
  if (variance < -noise) {
    throw DomainError("ratio_limit_variance: moments are inconsistent (negative variance " +
                      std::to_string(variance) + ")");
  }
  return std::max(0.0, variance);
}

LimitLaw ratio_limit() { return {0.0, 8.0 / kPi - 24.0 / (kPi * kPi)}; }

// Delta method with g(x) = √x at x = mu²: g'(mu²)² = 1 / (4 mu²).
LimitLaw cos_theta_limit(const MomentSet& m) {
  const double mu2 = m.mu() * m.mu();
  return {m.mu(), ratio_limit_variance(m) / (4.0 * mu2)};
}

LimitLaw cos_theta_limit() { return {std::sqrt(2.0 / kPi), (kPi - 3.0) / kPi}; }

// d²/n = 1 - s²/(n t), so the same variance propagates through g at 1 - mu².
LimitLaw distance_limit(const MomentSet& m) {
  const double centre = 1.0 - m.mu() * m.mu();
  if (!(centre > 0.0)) throw DomainError("distance_limit: degenerate law (mu^2 = 1)");
  return {0.0, ratio_limit_variance(m) / (4.0 * centre)};
}

LimitLaw distance_limit() { return {0.0, 2.0 * (kPi - 3.0) / (kPi * (kPi - 2.0))}; }

double critical_alpha() { return 1.0 - 2.0 / kPi; }

double distance_limit_sd() { return std::sqrt(distance_limit().variance); }

double threshold_radius(int n, double z) {
  if (n < 2) throw DomainError("threshold_radius: dimension must be at least 2");
  detail::require_finite(z, "threshold_radius");
  const double radius = std::sqrt(critical_alpha() * n) + z * distance_limit_sd();
  if (radius < 0.0 || radius > std::sqrt(static_cast<double>(n))) {
    throw DomainError("threshold_radius: radius " + std::to_string(radius) +
                      " outside [0, sqrt(n)] for n=" + std::to_string(n) +
                      ", z=" + std::to_string(z));
  }
  return radius;
}

double target_probability_offset(double a) {
  detail::require_finite(a, "target_probability_offset");
  if (!(a > 0.0 && a < 1.0)) throw DomainError("target_probability_offset: a must lie in (0, 1)");
  return specfun::std_normal_quantile(a);
}

Regime classify_regime(int n, double r, double z_max) {
  if (n < 2) throw DomainError("classify_regime: dimension must be at least 2");
  detail::require_finite(r, "classify_regime");
  detail::require_finite(z_max, "classify_regime");
  if (!(z_max > 0.0)) throw DomainError("classify_regime: z_max must be positive");
  const double root_n = std::sqrt(static_cast<double>(n));
  if (r < 0.0 || r > root_n) throw DomainError("classify_regime: radius must lie in [0, sqrt(n)]");

  const double centre = std::sqrt(critical_alpha() * n);
  const double sd = distance_limit_sd();
  const double z = (r - centre) / sd;
  const double r_low = std::max(0.0, centre - z_max * sd);
  const double r_high = std::min(root_n, centre + z_max * sd);

  Regime regime{};
  regime.z = z;
  regime.alpha_eff = r * r / n;
  regime.window_low = r_low * r_low / n;
  regime.window_high = r_high * r_high / n;
  regime.predicted_alpha = specfun::std_normal_cdf(z);
  if (z < -z_max) {
    regime.kind = RegimeKind::vanishing;
  } else if (z > z_max) {
    regime.kind = RegimeKind::full;
  } else {
    regime.kind = RegimeKind::critical;
  }
  return regime;
}

}  // namespace hypershadow::asymptotics
