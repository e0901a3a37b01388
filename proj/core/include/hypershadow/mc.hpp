#pragma once

// Monte Carlo estimation of the blocked-light probability and sampling of the
// limit statistics.
//
// Trial i always draws from RandomStream(seed, i), so every result is a pure
// function of (seed, trials) and does not depend on the worker count.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypershadow/asymptotics.hpp"
#include "hypershadow/errors.hpp"
#include "hypershadow/random_stream.hpp"

namespace hypershadow::mc {

struct MCEstimate {
  int n = 0;
  double r = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double ci_level = 0.0;
  std::uint64_t seed = 0;

  // Binomial standard error sqrt(p (1 - p) / trials) at p = p_hat.
  double standard_error() const;
};

struct Interval {
  double low;
  double high;
};

// Wilson score interval for hits successes out of trials.
Interval wilson_interval(std::uint64_t hits, std::uint64_t trials, double level);

enum class StatisticKind { ratio_centered, cos_theta, distance_centered };

std::string_view to_string(StatisticKind kind);
// Throws DomainError for an unknown name.
StatisticKind parse_statistic_kind(std::string_view name);

// Per-trial values of one of the studied statistics:
//   ratio_centered     √n (s²/(n t) - mu²)
//   cos_theta          √(s²/(n t))             (not centred or scaled)
//   distance_centered  √(d²) - √((1 - mu²) n)
// with mu² = 2/π for half-normal coordinates.
struct StatisticSample {
  StatisticKind kind;
  int n;
  std::vector<double> values;

  // Factor that turns the sample variance into the limit-law variance:
  // n for cos_theta, 1 for the already scaled statistics.
  double variance_scale() const;
};

// Distribution of the positive coordinates X_i of a random direction.
struct CoordinateLaw {
  std::string name;
  asymptotics::MomentSet moments;
  double (*draw)(randgeom::RandomStream&);
};

CoordinateLaw half_normal_law();
// Uniform on [0, √3], scaled so that E X² = 1.
CoordinateLaw uniform_law();

// 0 selects std::thread::hardware_concurrency().
unsigned resolve_workers(unsigned workers);

// Probability that a random line through the origin meets a ball of radius r
// at some vertex of [-1, 1]^n, i.e. that the distance to the nearest vertex
// is at most r.
MCEstimate estimate_alpha(int n, double r, std::uint64_t trials, std::uint64_t seed,
                          double ci_level = 0.95, unsigned workers = 0);

StatisticSample sample_limit_statistic(StatisticKind kind, int n, std::uint64_t trials,
                                       std::uint64_t seed, unsigned workers = 0);
StatisticSample sample_limit_statistic(StatisticKind kind, int n, std::uint64_t trials,
                                       std::uint64_t seed, unsigned workers,
                                       const CoordinateLaw& law);

// The three statistics from one pass over the same lines, in the order
// ratio_centered, cos_theta, distance_centered.
std::vector<StatisticSample> sample_all_limit_statistics(int n, std::uint64_t trials,
                                                         std::uint64_t seed,
                                                         unsigned workers = 0);

// Sample values mapped to the scale of the limit law:
// law.mean + sqrt(variance_scale) * (x - law.mean).
std::vector<double> on_limit_scale(const StatisticSample& sample,
                                   const asymptotics::LimitLaw& law);

struct MomentReport {
  std::size_t sample_size = 0;
  double empirical_mean = 0.0;
  double empirical_variance = 0.0;
  double law_mean = 0.0;
  double law_variance = 0.0;
  double tol_mean = 0.0;
  double tol_var = 0.0;
  bool mean_pass = false;
  bool variance_checked = false;
  bool variance_pass = false;
  std::string warning;

  bool pass() const { return mean_pass && (!variance_checked || variance_pass); }
};

// Compares the empirical mean and variance (on the limit scale) with the law:
// |mean - law.mean| <= tol_mean and |var / law.variance - 1| <= tol_var. The
// variance check is skipped, with a warning, when law.variance is 0.
MomentReport moment_check(const StatisticSample& sample, const asymptotics::LimitLaw& law,
                          double tol_mean, double tol_var);

struct QuantileRow {
  double probability;
  double empirical;
  double expected;
  double gap;
  bool pass;
};

struct QuantileReport {
  std::vector<QuantileRow> rows;
  double tol = 0.0;
  bool pass = false;
};

// Empirical quantiles (linear interpolation between order statistics)
// against the normal law's quantiles. Requires at least 1000 values.
QuantileReport quantile_check(const StatisticSample& sample, const asymptotics::LimitLaw& law,
                              std::span<const double> probabilities, double tol);

double empirical_quantile(std::span<const double> sorted, double probability);

struct ConvergenceRow {
  int n;
  double z;
  double r;
  MCEstimate estimate;
  double predicted_alpha;
};

std::vector<ConvergenceRow> alpha_convergence_table(std::span<const int> n_list,
                                                    std::span<const double> z_list,
                                                    std::uint64_t trials, std::uint64_t seed,
                                                    unsigned workers = 0);

}  // namespace hypershadow::mc
