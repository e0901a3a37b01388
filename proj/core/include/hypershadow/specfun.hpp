#pragma once

// Special functions used by the exact shadow formulas: log-gamma, the
// regularized incomplete beta function and the standard normal CDF/quantile.
//
// Every function rejects non-finite arguments with DomainError instead of
// propagating NaN. All functions are pure and thread-safe.

#include "hypershadow/errors.hpp"

namespace hypershadow::specfun {

// Shape parameters of a beta distribution. Both must be positive and finite.
class BetaParams {
 public:
  BetaParams(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  double alpha_;
  double beta_;
};

// ln Γ(x) for x > 0 (Lanczos approximation, g = 7, nine terms).
double log_gamma(double x);

// ln B(a, b) = ln Γ(a) + ln Γ(b) - ln Γ(a + b).
double log_beta(double a, double b);

// Regularized incomplete beta I_z(alpha, beta), i.e. the beta CDF at z.
// Evaluated by the continued fraction with the usual symmetry switch;
// throws NumericalError if the fraction fails to converge.
double reg_inc_beta(double z, const BetaParams& params);

// Standard normal CDF, Φ(x).
double std_normal_cdf(double x);

// Standard normal density, φ(x).
double std_normal_pdf(double x);

// Inverse of Φ. Root-finds Φ(x) = p starting from the rational
// approximation below; |Φ(x) - p| <= 1e-10.
double std_normal_quantile(double p);

// Wichura's AS 241 rational approximation of the normal quantile, relative
// accuracy about 1e-16. Uses only arithmetic, sqrt and log so it is cheap
// enough for the Monte Carlo samplers. No argument checking.
double std_normal_quantile_fast(double p) noexcept;

}  // namespace hypershadow::specfun
