#pragma once

// Closed-form limit laws for the random-line statistics and the critical
// ball radius at which the blocked fraction tends to Φ(z).

#include <string_view>

#include "hypershadow/errors.hpp"

namespace hypershadow::asymptotics {

// First four moments of a positive random variable X normalised so that
// E X² = 1. Construction enforces m2 == 1, mu > 0, mu² <= 1 and b >= 1.
class MomentSet {
 public:
  MomentSet(double mu, double m2, double a, double b);

  // Moments of X / sqrt(E X²) from the raw moments of X.
  static MomentSet rescaled(double mu, double m2, double m3, double m4);

  double mu() const { return mu_; }
  double m2() const { return m2_; }
  double a() const { return a_; }
  double b() const { return b_; }

 private:
  double mu_;
  double m2_;
  double a_;
  double b_;
};

struct LimitLaw {
  double mean;
  double variance;
};

enum class RegimeKind { vanishing, critical, full };

std::string_view to_string(RegimeKind kind);

struct Regime {
  RegimeKind kind;
  double z;               // standardised offset from the critical radius
  double alpha_eff;       // r² / n
  double window_low;      // alpha_eff bounds of the critical window
  double window_high;
  double predicted_alpha; // Φ(z)
};

inline constexpr double kDefaultZMax = 6.0;

// |X| for standard normal X: mu = √(2/π), m2 = 1, a = 2√(2/π), b = 3.
MomentSet half_normal_moments();

// Limit variance of √n (s²/(n t) - mu²): mu⁴ b + 4 mu² - 4 mu³ a - mu⁴.
// Throws DomainError if the moments give a negative value.
double ratio_limit_variance(const MomentSet& m);

// Law of √n cos θ, reported as mean √(2/π) and variance (π - 3)/π.
LimitLaw cos_theta_limit();
LimitLaw cos_theta_limit(const MomentSet& m);

// Law of d - √((1 - 2/π) n): mean 0, variance 2(π - 3)/(π(π - 2)).
LimitLaw distance_limit();
LimitLaw distance_limit(const MomentSet& m);

// Law of √n (s²/(n t) - 2/π): N(0, 8/π - 24/π²).
LimitLaw ratio_limit();

// 1 - 2/π, the limit of d²/n.
double critical_alpha();

// Standard deviation of the limiting distance law.
double distance_limit_sd();

// √((1 - 2/π) n) + z √(2(π - 3)/(π(π - 2))). Rejects radii outside [0, √n].
double threshold_radius(int n, double z);

// z = Φ^{-1}(a) for a in (0, 1).
double target_probability_offset(double a);

// vanishing / critical / full by whether the standardised offset z lies
// below, inside or above [-z_max, z_max].
Regime classify_regime(int n, double r, double z_max = kDefaultZMax);

}  // namespace hypershadow::asymptotics
