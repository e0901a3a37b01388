#include "hypershadow/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hypershadow/specfun.hpp"

namespace hypershadow::concentration {
namespace {

void require_dimension(int n, const char* where) {
  if (n < 1) throw DomainError(std::string(where) + ": n must be at least 1");
}

void require_latitude(int n, int k, const char* where) {
  require_dimension(n, where);
  if (k < 0 || k > n) throw DomainError(std::string(where) + ": k must lie in [0, n]");
}

// ln(n!) - [(n + ½) ln n - n + ½ ln 2π].
double stirling_error(double n) {
  constexpr double s0 = 1.0 / 12.0;
  constexpr double s1 = 1.0 / 360.0;
  constexpr double s2 = 1.0 / 1260.0;
  constexpr double s3 = 1.0 / 1680.0;
  constexpr double s4 = 1.0 / 1188.0;
  // Exact values at the integers, where the series is not yet accurate.
  static constexpr double kSmall[16] = {
      0.0,
      0.08106146679532725822,
      0.041340695955409294094,
      0.027677925684998339149,
      0.020790672103765093112,
      0.016644691189821192163,
      0.013876128823070747999,
      0.011896709945891770095,
      0.010411265261972096497,
      0.0092554621827127329177,
      0.0083305634333628712565,
      0.007573675487951840795,
      0.0069428401072095298657,
      0.0064089941880042070684,
      0.0059513701127588477356,
      0.005554733551962801371,
  };
  if (n <= 15.0) return kSmall[static_cast<int>(n)];
  const double nn = n * n;
  if (n > 500.0) return (s0 - s1 / nn) / n;
  if (n > 80.0) return (s0 - (s1 - s2 / nn) / nn) / n;
  if (n > 35.0) return (s0 - (s1 - (s2 - s3 / nn) / nn) / nn) / n;
  return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

// x ln(x / np) + np - x, evaluated without cancellation when x ≈ np.
double deviance_term(double x, double np) {
  if (std::fabs(x - np) < 0.1 * (x + np)) {
    double v = (x - np) / (x + np);
    double s = (x - np) * v;
    double ej = 2.0 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
    return s;
  }
  return x * std::log(x / np) + np - x;
}

// Neumaier's compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

// Largest integer <= x, forgiving rounding noise just below an integer.
int floor_tolerant(double x) { return static_cast<int>(std::floor(x + 1e-9 * (1.0 + std::fabs(x)))); }
int ceil_tolerant(double x) { return static_cast<int>(std::ceil(x - 1e-9 * (1.0 + std::fabs(x)))); }

}  // namespace

LatitudeModel::LatitudeModel(int n) : n_(n) { require_dimension(n, "LatitudeModel"); }

double LatitudeModel::pmf(int k) const { return latitude_pmf(n_, k); }

double LatitudeModel::cosine(int k) const { return latitude_cosine(n_, k); }

double latitude_pmf(int n, int k) {
  require_latitude(n, k, "latitude_pmf");
  if (k == 0 || k == n) return std::ldexp(1.0, -n);
  k = std::min(k, n - k);
  const double dn = n;
  const double dk = k;
  const double half = 0.5 * dn;
  const double log_core = stirling_error(dn) - stirling_error(dk) - stirling_error(dn - dk) -
                          deviance_term(dk, half) - deviance_term(dn - dk, half);
  const double log_front = std::log(2.0 * std::numbers::pi) + std::log(dk) + std::log1p(-dk / dn);
  return std::exp(log_core - 0.5 * log_front);
}

double latitude_mass(int n, int lo, int hi) {
  require_dimension(n, "latitude_mass");
  lo = std::max(lo, 0);
  hi = std::min(hi, n);
  CompensatedSum sum;
  for (int k = lo; k <= hi; ++k) sum.add(latitude_pmf(n, k));
  return std::min(1.0, sum.value());
}

SlabProbability slab_probability(int n, double eps) {
  require_dimension(n, "slab_probability");
  detail::require_finite(eps, "slab_probability");
  if (eps < 0.0 || eps > 0.5) throw DomainError("slab_probability: eps must lie in [0, 1/2]");

  const double centre = 0.5 * n;
  const double width = eps * n;
  SlabProbability slab{};
  slab.k_low = std::max(0, ceil_tolerant(centre - width));
  slab.k_high = std::min(n, floor_tolerant(centre + width));

  const double sd = 0.5 * std::sqrt(static_cast<double>(n));
  if (slab.k_low > slab.k_high) {
    slab.normal_approx = 0.0;
  } else {
    slab.normal_approx = specfun::std_normal_cdf((slab.k_high + 0.5 - centre) / sd) -
                         specfun::std_normal_cdf((slab.k_low - 0.5 - centre) / sd);
  }
  slab.approximate = n > kExactSlabLimit;
  if (slab.approximate) {
    slab.exact = slab.normal_approx;
  } else {
    slab.exact = slab.k_low > slab.k_high ? 0.0 : latitude_mass(n, slab.k_low, slab.k_high);
  }
  return slab;
}

double latitude_cosine(int n, int k) {
  require_latitude(n, k, "latitude_cosine");
  return static_cast<double>(n - 2 * k) / n;
}

int cap_latitude_limit(int n, double theta) {
  require_dimension(n, "cap_mass");
  detail::require_finite(theta, "cap_mass");
  if (theta < 0.0 || theta > std::numbers::pi) throw DomainError("cap_mass: theta must lie in [0, pi]");
  return std::clamp(floor_tolerant(0.5 * n * (1.0 - std::cos(theta))), 0, n);
}

double cap_mass(int n, double theta) {
  const int k_max = cap_latitude_limit(n, theta);
  if (k_max >= n) return 1.0;
  return latitude_mass(n, 0, k_max);
}

}  // namespace hypershadow::concentration
