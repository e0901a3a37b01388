#include "hypershadow/mc.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "hypershadow/capgeom.hpp"
#include "hypershadow/randgeom.hpp"
#include "hypershadow/specfun.hpp"

namespace hypershadow::mc {

using randgeom::RandomStream;

namespace {

// Runs fn(begin, end, worker) over contiguous trial blocks. The split only
// affects scheduling: callers key their randomness on the trial index.
template <class Fn>
void parallel_blocks(std::uint64_t trials, unsigned workers, Fn&& fn) {
  const std::uint64_t count =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, trials));
  if (count == 1) {
    fn(std::uint64_t{0}, trials, 0u);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(count);
  threads.reserve(count);
  for (std::uint64_t w = 0; w < count; ++w) {
    const std::uint64_t begin = trials * w / count;
    const std::uint64_t end = trials * (w + 1) / count;
    threads.emplace_back([&, begin, end, w] {
      try {
        fn(begin, end, static_cast<unsigned>(w));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& thread : threads) thread.join();
  for (auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

double draw_half_normal(RandomStream& stream) { return std::fabs(stream.next_normal()); }

double draw_scaled_uniform(RandomStream& stream) {
  return std::numbers::sqrt3 * stream.next_uniform();
}

struct LineSums {
  double s;
  double t;
};

inline LineSums draw_line(int n, RandomStream& stream, double (*draw)(RandomStream&)) {
  double s = 0.0;
  double t = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = draw(stream);
    s += x;
    t += x * x;
  }
  return {s, t};
}

inline LineSums draw_half_normal_line(int n, RandomStream& stream) {
  double s = 0.0;
  double t = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = std::fabs(stream.next_normal());
    s += x;
    t += x * x;
  }
  return {s, t};
}

struct Centering {
  double mu_sq;
  double root_n;
  double distance_centre;
};

Centering centering_for(int n, const CoordinateLaw& law) {
  const double mu_sq = law.moments.mu() * law.moments.mu();
  return {mu_sq, std::sqrt(static_cast<double>(n)), std::sqrt((1.0 - mu_sq) * n)};
}

double statistic_value(StatisticKind kind, const randgeom::LineStats& line, const Centering& c) {
  switch (kind) {
    case StatisticKind::ratio_centered:
      return c.root_n * (line.cos_sq - c.mu_sq);
    case StatisticKind::cos_theta:
      return std::sqrt(line.cos_sq);
    case StatisticKind::distance_centered:
      return std::sqrt(line.d_sq) - c.distance_centre;
  }
  return 0.0;
}

void require_trials(std::uint64_t trials, std::uint64_t min_trials, const char* where) {
  if (trials < min_trials) {
    throw DomainError(std::string(where) + ": need at least " + std::to_string(min_trials) +
                      " trials");
  }
}

// Welford's running mean/variance; a constant sample keeps its mean exactly.
struct RunningMoments {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }
  double variance() const { return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0; }
};

}  // namespace

double MCEstimate::standard_error() const {
  if (trials == 0) return 0.0;
  return std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(trials));
}

Interval wilson_interval(std::uint64_t hits, std::uint64_t trials, double level) {
  detail::require_finite(level, "wilson_interval");
  if (!(level > 0.0 && level < 1.0)) throw DomainError("wilson_interval: level must lie in (0, 1)");
  require_trials(trials, 1, "wilson_interval");
  if (hits > trials) throw DomainError("wilson_interval: hits exceed trials");
  const double z = specfun::std_normal_quantile(1.0 - 0.5 * (1.0 - level));
  const double count = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / count;
  const double z2n = z * z / count;
  const double centre = (p + 0.5 * z2n) / (1.0 + z2n);
  const double half =
      z / (1.0 + z2n) * std::sqrt(p * (1.0 - p) / count + z * z / (4.0 * count * count));
  // The exact interval always contains p; keep that true after rounding.
  return {std::clamp(std::min(centre - half, p), 0.0, 1.0),
          std::clamp(std::max(centre + half, p), 0.0, 1.0)};
}

std::string_view to_string(StatisticKind kind) {
  switch (kind) {
    case StatisticKind::ratio_centered:
      return "ratio_centered";
    case StatisticKind::cos_theta:
      return "cos_theta";
    case StatisticKind::distance_centered:
      return "distance_centered";
  }
  return "unknown";
}

StatisticKind parse_statistic_kind(std::string_view name) {
  for (auto kind : {StatisticKind::ratio_centered, StatisticKind::cos_theta,
                    StatisticKind::distance_centered}) {
    if (name == to_string(kind)) return kind;
  }
  throw DomainError("unknown statistic kind '" + std::string(name) + "'");
}

double StatisticSample::variance_scale() const {
  return kind == StatisticKind::cos_theta ? static_cast<double>(n) : 1.0;
}

CoordinateLaw half_normal_law() {
  return {"half_normal", asymptotics::half_normal_moments(), &draw_half_normal};
}

CoordinateLaw uniform_law() {
  // X = √3 U: E X = √3/2, E X² = 1, E X³ = 3√3/4, E X⁴ = 9/5.
  const double root3 = std::numbers::sqrt3;
  return {"uniform", asymptotics::MomentSet(root3 / 2.0, 1.0, 3.0 * root3 / 4.0, 9.0 / 5.0),
          &draw_scaled_uniform};
}

unsigned resolve_workers(unsigned workers) {
  if (workers > 0) return workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

MCEstimate estimate_alpha(int n, double r, std::uint64_t trials, std::uint64_t seed,
                          double ci_level, unsigned workers) {
  const capgeom::BallArrangement balls(n, r);
  require_trials(trials, 1, "estimate_alpha");
  detail::require_finite(ci_level, "estimate_alpha");
  if (!(ci_level > 0.0 && ci_level < 1.0)) {
    throw DomainError("estimate_alpha: ci_level must lie in (0, 1)");
  }

  const double r_sq = balls.r() * balls.r();
  const unsigned count = resolve_workers(workers);
  std::vector<std::uint64_t> hits_per_worker(count, 0);
  parallel_blocks(trials, count, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    std::uint64_t hits = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      RandomStream stream(seed, i);
      const LineSums sums = draw_half_normal_line(n, stream);
      const auto line = randgeom::line_stats_from_sums(n, sums.s, sums.t);
      if (line.d_sq <= r_sq) ++hits;
    }
    hits_per_worker[w] = hits;
  });

  MCEstimate estimate;
  estimate.n = n;
  estimate.r = r;
  estimate.trials = trials;
  for (auto h : hits_per_worker) estimate.hits += h;
  estimate.p_hat = static_cast<double>(estimate.hits) / static_cast<double>(trials);
  const Interval ci = wilson_interval(estimate.hits, trials, ci_level);
  estimate.ci_low = ci.low;
  estimate.ci_high = ci.high;
  estimate.ci_level = ci_level;
  estimate.seed = seed;
  return estimate;
}

StatisticSample sample_limit_statistic(StatisticKind kind, int n, std::uint64_t trials,
                                       std::uint64_t seed, unsigned workers,
                                       const CoordinateLaw& law) {
  if (n < 1) throw DomainError("sample_limit_statistic: dimension must be at least 1");
  require_trials(trials, 2, "sample_limit_statistic");
  const Centering centering = centering_for(n, law);

  StatisticSample sample{kind, n, std::vector<double>(trials)};
  parallel_blocks(trials, resolve_workers(workers),
                  [&](std::uint64_t begin, std::uint64_t end, unsigned) {
                    for (std::uint64_t i = begin; i < end; ++i) {
                      RandomStream stream(seed, i);
                      const LineSums sums = draw_line(n, stream, law.draw);
                      const auto line = randgeom::line_stats_from_sums(n, sums.s, sums.t);
                      sample.values[i] = statistic_value(kind, line, centering);
                    }
                  });
  return sample;
}

StatisticSample sample_limit_statistic(StatisticKind kind, int n, std::uint64_t trials,
                                       std::uint64_t seed, unsigned workers) {
  return sample_limit_statistic(kind, n, trials, seed, workers, half_normal_law());
}

std::vector<StatisticSample> sample_all_limit_statistics(int n, std::uint64_t trials,
                                                         std::uint64_t seed, unsigned workers) {
  if (n < 1) throw DomainError("sample_all_limit_statistics: dimension must be at least 1");
  require_trials(trials, 2, "sample_all_limit_statistics");
  const Centering centering = centering_for(n, half_normal_law());
  constexpr StatisticKind kinds[] = {StatisticKind::ratio_centered, StatisticKind::cos_theta,
                                     StatisticKind::distance_centered};
  std::vector<StatisticSample> samples;
  for (auto kind : kinds) samples.push_back({kind, n, std::vector<double>(trials)});

  parallel_blocks(trials, resolve_workers(workers),
                  [&](std::uint64_t begin, std::uint64_t end, unsigned) {
                    for (std::uint64_t i = begin; i < end; ++i) {
                      RandomStream stream(seed, i);
                      const LineSums sums = draw_half_normal_line(n, stream);
                      const auto line = randgeom::line_stats_from_sums(n, sums.s, sums.t);
                      for (std::size_t k = 0; k < samples.size(); ++k) {
                        samples[k].values[i] = statistic_value(kinds[k], line, centering);
                      }
                    }
                  });
  return samples;
}

std::vector<double> on_limit_scale(const StatisticSample& sample,
                                   const asymptotics::LimitLaw& law) {
  const double scale = std::sqrt(sample.variance_scale());
  std::vector<double> mapped;
  mapped.reserve(sample.values.size());
  for (double x : sample.values) {
    mapped.push_back(scale == 1.0 ? x : law.mean + scale * (x - law.mean));
  }
  return mapped;
}

MomentReport moment_check(const StatisticSample& sample, const asymptotics::LimitLaw& law,
                          double tol_mean, double tol_var) {
  if (sample.values.empty()) throw DomainError("moment_check: empty sample");
  if (!(law.variance >= 0.0)) throw DomainError("moment_check: law variance must be >= 0");
  if (tol_mean < 0.0 || tol_var < 0.0) throw DomainError("moment_check: negative tolerance");

  RunningMoments moments;
  for (double x : on_limit_scale(sample, law)) moments.add(x);

  MomentReport report;
  report.sample_size = moments.count;
  report.empirical_mean = moments.mean;
  report.empirical_variance = moments.variance();
  report.law_mean = law.mean;
  report.law_variance = law.variance;
  report.tol_mean = tol_mean;
  report.tol_var = tol_var;
  report.mean_pass = std::fabs(moments.mean - law.mean) <= tol_mean;
  if (law.variance == 0.0) {
    report.warning = "law variance is 0; variance check skipped";
  } else {
    report.variance_checked = true;
    report.variance_pass = std::fabs(report.empirical_variance / law.variance - 1.0) <= tol_var;
  }
  return report;
}

double empirical_quantile(std::span<const double> sorted, double probability) {
  if (sorted.empty()) throw DomainError("empirical_quantile: empty sample");
  const double position = probability * static_cast<double>(sorted.size() - 1);
  const auto lower = static_cast<std::size_t>(std::floor(position));
  const std::size_t upper = std::min(lower + 1, sorted.size() - 1);
  const double weight = position - static_cast<double>(lower);
  return sorted[lower] + weight * (sorted[upper] - sorted[lower]);
}

QuantileReport quantile_check(const StatisticSample& sample, const asymptotics::LimitLaw& law,
                              std::span<const double> probabilities, double tol) {
  if (sample.values.size() < 1000) throw DomainError("quantile_check: need at least 1000 values");
  if (!(law.variance >= 0.0)) throw DomainError("quantile_check: law variance must be >= 0");
  for (double p : probabilities) {
    if (!(p > 0.0 && p < 1.0)) {
      throw DomainError("quantile_check: probabilities must lie in (0, 1)");
    }
  }
  std::vector<double> sorted = on_limit_scale(sample, law);
  std::sort(sorted.begin(), sorted.end());

  QuantileReport report;
  report.tol = tol;
  report.pass = true;
  const double sd = std::sqrt(law.variance);
  for (double p : probabilities) {
    QuantileRow row;
    row.probability = p;
    row.empirical = empirical_quantile(sorted, p);
    row.expected = law.mean + sd * specfun::std_normal_quantile(p);
    row.gap = std::fabs(row.empirical - row.expected);
    row.pass = row.gap <= tol;
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

std::vector<ConvergenceRow> alpha_convergence_table(std::span<const int> n_list,
                                                    std::span<const double> z_list,
                                                    std::uint64_t trials, std::uint64_t seed,
                                                    unsigned workers) {
  std::vector<ConvergenceRow> rows;
  for (int n : n_list) {
    if (n < 2) throw DomainError("alpha_convergence_table: dimension must be at least 2");
    for (double z : z_list) {
      const double r = asymptotics::threshold_radius(n, z);
      rows.push_back({n, z, r, estimate_alpha(n, r, trials, seed, 0.95, workers),
                      specfun::std_normal_cdf(z)});
    }
  }
  return rows;
}

}  // namespace hypershadow::mc
