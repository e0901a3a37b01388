#include "hypershadow/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace hypershadow {

namespace detail {

void require_finite(double x, const char* where) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(where) + ": non-finite argument");
  }
}

}  // namespace detail

namespace specfun {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

// ln Γ(x) for x >= 0.5.
double lanczos_log_gamma(double x) {
  const double z = x - 1.0;
  double sum = kLanczosCoeffs[0];
  for (std::size_t k = 1; k < kLanczosCoeffs.size(); ++k) {
    sum += kLanczosCoeffs[k] / (z + static_cast<double>(k));
  }
  const double t = z + kLanczosG + 0.5;
  constexpr double kHalfLog2Pi = 0.91893853320467274178;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// Remainder of Stirling's series, ln Γ(x) - [(x - ½) ln x - x + ½ ln 2π].
// Truncation error below 1e-17 for x >= 20.
double stirling_correction(double x) {
  const double r = 1.0 / x;
  const double r2 = r * r;
  return r * (1.0 / 12.0 -
              r2 * (1.0 / 360.0 -
                    r2 * (1.0 / 1260.0 - r2 * (1.0 / 1680.0 - r2 * (1.0 / 1188.0)))));
}

// ln Γ(big) - ln Γ(big + small) without forming the two large logs.
double log_gamma_ratio(double big, double small) {
  const double sum = big + small;
  return -(big - 0.5) * std::log1p(small / big) - small * std::log(sum) + small +
         stirling_correction(big) - stirling_correction(sum);
}

constexpr int kBetaMaxIterations = 300;
constexpr double kBetaRelTol = 1e-14;
constexpr double kTiny = 1e-300;

// Continued fraction for I_x(a, b), modified Lentz evaluation.
double beta_continued_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kBetaMaxIterations; ++m) {
    const double dm = m;
    const double m2 = 2.0 * dm;
    double aa = dm * (b - dm) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + dm) * (qab + dm) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kBetaRelTol) return h;
  }
  throw NumericalError("reg_inc_beta: continued fraction did not converge (a=" +
                       std::to_string(a) + ", b=" + std::to_string(b) +
                       ", x=" + std::to_string(x) + ")");
}

// x^a (1-x)^b / (a B(a, b)) times the continued fraction, with y = 1 - x
// passed separately so the caller controls where the subtraction happens.
double beta_tail(double a, double b, double x, double y) {
  const double log_front = a * std::log(x) + b * std::log(y) - log_beta(a, b);
  return std::exp(log_front) * beta_continued_fraction(a, b, x) / a;
}

}  // namespace

BetaParams::BetaParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  detail::require_finite(alpha, "BetaParams");
  detail::require_finite(beta, "BetaParams");
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw DomainError("BetaParams: shape parameters must be positive");
  }
}

double log_gamma(double x) {
  detail::require_finite(x, "log_gamma");
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
  if (x < 0.5) return lanczos_log_gamma(x + 1.0) - std::log(x);
  return lanczos_log_gamma(x);
}

double log_beta(double a, double b) {
  detail::require_finite(a, "log_beta");
  detail::require_finite(b, "log_beta");
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("log_beta: arguments must be positive");
  const double big = std::max(a, b);
  const double small = std::min(a, b);
  if (big >= 20.0) return log_gamma(small) + log_gamma_ratio(big, small);
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double reg_inc_beta(double z, const BetaParams& params) {
  detail::require_finite(z, "reg_inc_beta");
  if (z < 0.0 || z > 1.0) throw DomainError("reg_inc_beta: z must lie in [0, 1]");
  if (z == 0.0) return 0.0;
  if (z == 1.0) return 1.0;
  const double a = params.alpha();
  const double b = params.beta();
  const double y = 1.0 - z;
  double result;
  if (z < (a + 1.0) / (a + b + 2.0)) {
    result = beta_tail(a, b, z, y);
  } else {
    result = 1.0 - beta_tail(b, a, y, z);
  }
  return std::clamp(result, 0.0, 1.0);
}

double std_normal_cdf(double x) {
  detail::require_finite(x, "std_normal_cdf");
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double std_normal_pdf(double x) {
  detail::require_finite(x, "std_normal_pdf");
  constexpr double kInvSqrt2Pi = 0.39894228040143267794;
  return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

double std_normal_quantile_fast(double p) noexcept {
  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    const double num =
        (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
              6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
            1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
          1.3314166789178437745e+2) * r + 3.3871328727963666080e+0);
    const double den =
        (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
              3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
            5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
          4.2313330701600911252e+1) * r + 1.0);
    return q * num / den;
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
                3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
              4.63033784615654529590e+0) * r + 1.42343711074968357734e+0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
              2.05319162663775882187e+0) * r + 1.0);
  } else {
    r -= 5.0;
    value = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
              5.46378491116411436990e+0) * r + 6.65790464350110377720e+0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
  }
  return q < 0.0 ? -value : value;
}

double std_normal_quantile(double p) {
  detail::require_finite(p, "std_normal_quantile");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("std_normal_quantile: p must lie in (0, 1)");
  if (p == 0.5) return 0.0;

  // Newton polish of the rational estimate; bisection on a fixed bracket is
  // the fallback if Newton stalls (only reachable for denormal p).
  double x = std_normal_quantile_fast(p);
  for (int i = 0; i < 8; ++i) {
    const double density = std_normal_pdf(x);
    if (!(density > 0.0)) break;
    const double step = (std_normal_cdf(x) - p) / density;
    x -= step;
    if (std::fabs(step) <= 1e-15 * std::max(1.0, std::fabs(x))) break;
  }
  if (std::isfinite(x) && std::fabs(std_normal_cdf(x) - p) <= 1e-10) return x;

  double lo = -40.0;
  double hi = 40.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (std_normal_cdf(mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  x = 0.5 * (lo + hi);
  if (std::fabs(std_normal_cdf(x) - p) > 1e-10) {
    throw NumericalError("std_normal_quantile: root search failed");
  }
  return x;
}

}  // namespace specfun
}  // namespace hypershadow
