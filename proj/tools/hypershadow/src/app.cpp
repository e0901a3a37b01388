#include "hypershadow_cli/app.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hypershadow/asymptotics.hpp"
#include "hypershadow/capgeom.hpp"
#include "hypershadow/concentration.hpp"
#include "hypershadow/errors.hpp"
#include "hypershadow/mc.hpp"
#include "hypershadow/specfun.hpp"
#include "hypershadow_cli/output.hpp"

#ifndef HYPERSHADOW_VERSION
#define HYPERSHADOW_VERSION "0.0.0"
#endif

namespace hypershadow::cli {
namespace {

namespace as = hypershadow::asymptotics;
using Json = nlohmann::ordered_json;

// Flag combinations and environment values that parse but make no sense.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Deterministic commands report the default seed; the worker count never
// changes results, so it stays out of the manifest.
struct Result {
  Table table;
  RunManifest manifest = [] {
    RunManifest m;
    m.seed = kDefaultSeed;
    return m;
  }();
};

struct CommonOptions {
  std::string format = "csv";
  std::string output;
  std::string manifest;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", common.output, "Write the table to this file instead of stdout");
  cmd->add_option("--manifest", common.manifest,
                  "Write the run manifest (JSON) to this file; defaults to <output>.manifest.json "
                  "when --output is given");
}

std::optional<std::uint64_t> parse_positive(const std::string& text) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value == 0) return std::nullopt;
  return value;
}

std::uint64_t resolve_trials(const std::optional<std::uint64_t>& flag, const EnvLookup& env) {
  if (flag) {
    if (*flag == 0) throw UsageError("--trials must be positive");
    return *flag;
  }
  if (const auto text = env(kTrialsEnvVar)) {
    const auto value = parse_positive(*text);
    if (!value) {
      throw UsageError(std::string(kTrialsEnvVar) + " must be a positive integer, got '" + *text +
                       "'");
    }
    return *value;
  }
  return kDefaultTrials;
}

std::string current_timestamp(const EnvLookup& env) {
  // SOURCE_DATE_EPOCH pins the timestamp for reproducible builds and tests.
  if (const auto text = env("SOURCE_DATE_EPOCH")) {
    std::int64_t seconds = 0;
    const auto [ptr, ec] = std::from_chars(text->data(), text->data() + text->size(), seconds);
    if (ec != std::errc() || ptr != text->data() + text->size()) {
      throw UsageError("SOURCE_DATE_EPOCH must be an integer, got '" + *text + "'");
    }
    return iso8601_utc(seconds);
  }
  const auto now = std::chrono::system_clock::now();
  return iso8601_utc(std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count());
}

Cell real(double value) { return value; }
Cell integer(std::int64_t value) { return value; }
Cell count(std::uint64_t value) { return value; }
Cell text(std::string value) { return value; }
const Cell kEmpty = std::monostate{};

// ---- shadow exact -------------------------------------------------------

struct ShadowExactOptions {
  std::vector<int> n;
  std::vector<double> r;
};

Result shadow_exact(const ShadowExactOptions& opt) {
  Result result;
  result.table.columns = {"n", "r", "single_fraction", "union_fraction", "bound", "note"};
  for (int n : opt.n) {
    for (double r : opt.r) {
      const double single = capgeom::single_shadow_fraction(n, r);
      std::string note;
      Cell union_cell = kEmpty;
      if (r <= 1.0) {
        union_cell = capgeom::disjoint_union_fraction(n, r);
      } else {
        note = "union omitted: shadows overlap for r > 1";
      }
      Cell bound_cell = kEmpty;
      if (n >= 3) {
        bound_cell = 0.5 * capgeom::beta_tail_bound(n, std::min(1.0, r * r / n));
      } else {
        if (!note.empty()) note += "; ";
        note += "bound omitted: needs n >= 3";
      }
      result.table.add_row({integer(n), real(r), real(single), union_cell, bound_cell,
                            note.empty() ? kEmpty : text(note)});
    }
  }
  result.manifest.command = "shadow exact";
  result.manifest.parameters["n"] = opt.n;
  result.manifest.parameters["r"] = opt.r;
  return result;
}

// ---- shadow mc ----------------------------------------------------------

struct ShadowMcOptions {
  std::vector<int> n;
  std::vector<double> r;
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = kDefaultSeed;
  double ci = 0.95;
  unsigned workers = 0;
};

Result shadow_mc(const ShadowMcOptions& opt, const EnvLookup& env) {
  const std::uint64_t trials = resolve_trials(opt.trials, env);
  Result result;
  result.table.columns = {"n",      "r",       "trials",   "hits", "p_hat",
                          "ci_low", "ci_high", "ci_level", "seed"};
  for (int n : opt.n) {
    for (double r : opt.r) {
      const auto e = mc::estimate_alpha(n, r, trials, opt.seed, opt.ci, opt.workers);
      result.table.add_row({integer(e.n), real(e.r), count(e.trials), count(e.hits),
                            real(e.p_hat), real(e.ci_low), real(e.ci_high), real(e.ci_level),
                            count(e.seed)});
    }
  }
  result.manifest.command = "shadow mc";
  result.manifest.parameters["n"] = opt.n;
  result.manifest.parameters["r"] = opt.r;
  result.manifest.parameters["trials"] = trials;
  result.manifest.parameters["seed"] = opt.seed;
  result.manifest.parameters["ci"] = opt.ci;
  result.manifest.seed = opt.seed;
  return result;
}

// ---- threshold ----------------------------------------------------------

struct ThresholdOptions {
  std::vector<int> n;
  std::vector<double> z;
  std::vector<double> target;
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = kDefaultSeed;
  double ci = 0.95;
  unsigned workers = 0;
};

Result threshold(const ThresholdOptions& opt) {
  if (opt.z.empty() == opt.target.empty()) throw UsageError("threshold needs exactly one of --z or --target");
  if (opt.trials && opt.n.empty()) throw UsageError("threshold --trials needs --n");
  if (opt.trials && *opt.trials == 0) throw UsageError("--trials must be positive");

  struct Offset {
    double z;
    Cell target;
  };
  std::vector<Offset> offsets;
  for (double z : opt.z) offsets.push_back({z, kEmpty});
  for (double a : opt.target) offsets.push_back({as::target_probability_offset(a), real(a)});

  Result result;
  result.table.columns = {"n",      "z",     "target", "r",       "predicted_alpha", "regime",
                          "trials", "hits",  "p_hat",  "ci_low",  "ci_high",         "seed"};
  const std::vector<int> dims = opt.n.empty() ? std::vector<int>{0} : opt.n;
  for (int n : dims) {
    for (const auto& offset : offsets) {
      const double predicted = specfun::std_normal_cdf(offset.z);
      std::vector<Cell> row(result.table.columns.size(), kEmpty);
      row[1] = real(offset.z);
      row[2] = offset.target;
      row[4] = real(predicted);
      if (n != 0) {
        const double r = as::threshold_radius(n, offset.z);
        row[0] = integer(n);
        row[3] = real(r);
        row[5] = text(std::string(as::to_string(as::classify_regime(n, r).kind)));
        if (opt.trials) {
          const auto e = mc::estimate_alpha(n, r, *opt.trials, opt.seed, opt.ci, opt.workers);
          row[6] = count(e.trials);
          row[7] = count(e.hits);
          row[8] = real(e.p_hat);
          row[9] = real(e.ci_low);
          row[10] = real(e.ci_high);
          row[11] = count(e.seed);
        }
      }
      result.table.add_row(std::move(row));
    }
  }
  result.manifest.command = "threshold";
  if (!opt.n.empty()) result.manifest.parameters["n"] = opt.n;
  if (!opt.z.empty()) result.manifest.parameters["z"] = opt.z;
  if (!opt.target.empty()) result.manifest.parameters["target"] = opt.target;
  if (opt.trials) {
    result.manifest.parameters["trials"] = *opt.trials;
    result.manifest.parameters["seed"] = opt.seed;
    result.manifest.parameters["ci"] = opt.ci;
  }
  result.manifest.seed = opt.seed;
  return result;
}

// ---- limits -------------------------------------------------------------

struct LimitsOptions {
  int n = 0;
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 0;
  std::string kind = "all";
  std::string law = "half_normal";
  double tol_mean = 0.01;
  std::optional<double> tol_var;
  double tol_quantile = 0.02;
  std::vector<double> quantiles = {0.025, 0.25, 0.5, 0.75, 0.975};
};

as::LimitLaw limit_law_for(mc::StatisticKind kind, const mc::CoordinateLaw& law, bool half_normal) {
  switch (kind) {
    case mc::StatisticKind::ratio_centered:
      return half_normal ? as::ratio_limit() : as::LimitLaw{0.0, as::ratio_limit_variance(law.moments)};
    case mc::StatisticKind::cos_theta:
      return half_normal ? as::cos_theta_limit() : as::cos_theta_limit(law.moments);
    case mc::StatisticKind::distance_centered:
      return half_normal ? as::distance_limit() : as::distance_limit(law.moments);
  }
  throw std::logic_error("unhandled statistic kind");
}

Result limits(const LimitsOptions& opt, const EnvLookup& env) {
  const std::uint64_t trials = resolve_trials(opt.trials, env);
  const bool half_normal = opt.law == "half_normal";
  const mc::CoordinateLaw law = half_normal ? mc::half_normal_law() : mc::uniform_law();

  std::vector<mc::StatisticSample> samples;
  if (opt.kind == "all") {
    if (half_normal) {
      samples = mc::sample_all_limit_statistics(opt.n, trials, opt.seed, opt.workers);
    } else {
      for (auto kind : {mc::StatisticKind::ratio_centered, mc::StatisticKind::cos_theta,
                        mc::StatisticKind::distance_centered}) {
        samples.push_back(mc::sample_limit_statistic(kind, opt.n, trials, opt.seed, opt.workers, law));
      }
    }
  } else {
    samples.push_back(mc::sample_limit_statistic(mc::parse_statistic_kind(opt.kind), opt.n, trials,
                                                 opt.seed, opt.workers, law));
  }

  Result result;
  result.table.columns = {"kind",     "law",      "n",   "trials",    "seed", "check",
                          "probability", "empirical", "expected", "gap", "tolerance", "pass", "note"};
  for (const auto& sample : samples) {
    const auto limit = limit_law_for(sample.kind, law, half_normal);
    const double tol_var =
        opt.tol_var.value_or(sample.kind == mc::StatisticKind::ratio_centered ? 0.05 : 0.08);
    const auto report = mc::moment_check(sample, limit, opt.tol_mean, tol_var);
    const std::string kind(mc::to_string(sample.kind));
    auto prefix = [&](const char* check) {
      return std::vector<Cell>{text(kind), text(opt.law), integer(opt.n), count(trials),
                               count(opt.seed), text(check)};
    };

    auto mean_row = prefix("mean");
    mean_row.insert(mean_row.end(),
                    {kEmpty, real(report.empirical_mean), real(report.law_mean),
                     real(std::fabs(report.empirical_mean - report.law_mean)), real(opt.tol_mean),
                     Cell(report.mean_pass), kEmpty});
    result.table.add_row(std::move(mean_row));

    auto var_row = prefix("variance");
    if (report.variance_checked) {
      var_row.insert(var_row.end(),
                     {kEmpty, real(report.empirical_variance), real(report.law_variance),
                      real(std::fabs(report.empirical_variance / report.law_variance - 1.0)),
                      real(tol_var), Cell(report.variance_pass), text("relative gap")});
    } else {
      var_row.insert(var_row.end(), {kEmpty, real(report.empirical_variance),
                                     real(report.law_variance), kEmpty, real(tol_var), kEmpty,
                                     text(report.warning)});
    }
    result.table.add_row(std::move(var_row));

    if (limit.variance > 0.0) {
      const auto quantiles = mc::quantile_check(sample, limit, opt.quantiles, opt.tol_quantile);
      for (const auto& q : quantiles.rows) {
        auto row = prefix("quantile");
        row.insert(row.end(), {real(q.probability), real(q.empirical), real(q.expected),
                               real(q.gap), real(opt.tol_quantile), Cell(q.pass), kEmpty});
        result.table.add_row(std::move(row));
      }
    }
  }
  result.manifest.command = "limits";
  result.manifest.parameters["n"] = opt.n;
  result.manifest.parameters["trials"] = trials;
  result.manifest.parameters["seed"] = opt.seed;
  result.manifest.parameters["kind"] = opt.kind;
  result.manifest.parameters["law"] = opt.law;
  result.manifest.parameters["tol_mean"] = opt.tol_mean;
  if (opt.tol_var) result.manifest.parameters["tol_var"] = *opt.tol_var;
  result.manifest.parameters["tol_quantile"] = opt.tol_quantile;
  result.manifest.parameters["quantiles"] = opt.quantiles;
  result.manifest.seed = opt.seed;
  return result;
}

// ---- concentration ------------------------------------------------------

struct SlabOptions {
  std::vector<int> n;
  std::vector<double> eps;
};

Result concentration_slab(const SlabOptions& opt) {
  Result result;
  result.table.columns = {"n", "eps", "k_low", "k_high", "exact", "normal_approx", "approximate"};
  for (int n : opt.n) {
    for (double eps : opt.eps) {
      const auto slab = concentration::slab_probability(n, eps);
      result.table.add_row({integer(n), real(eps), integer(slab.k_low), integer(slab.k_high),
                            real(slab.exact), real(slab.normal_approx), Cell(slab.approximate)});
    }
  }
  result.manifest.command = "concentration slab";
  result.manifest.parameters["n"] = opt.n;
  result.manifest.parameters["eps"] = opt.eps;
  return result;
}

struct CapOptions {
  std::vector<int> n;
  std::vector<double> theta;
};

Result concentration_cap(const CapOptions& opt) {
  Result result;
  result.table.columns = {"n", "theta", "k_max", "mass"};
  for (int n : opt.n) {
    for (double theta : opt.theta) {
      result.table.add_row({integer(n), real(theta),
                            integer(concentration::cap_latitude_limit(n, theta)),
                            real(concentration::cap_mass(n, theta))});
    }
  }
  result.manifest.command = "concentration cap";
  result.manifest.parameters["n"] = opt.n;
  result.manifest.parameters["theta"] = opt.theta;
  return result;
}

struct PmfOptions {
  int n = 0;
  std::vector<int> k;
};

Result concentration_pmf(const PmfOptions& opt) {
  Result result;
  result.table.columns = {"n", "k", "pmf", "cosine"};
  std::vector<int> ks = opt.k;
  if (ks.empty()) {
    if (opt.n < 1) throw DomainError("latitude_pmf: n must be at least 1");
    for (int k = 0; k <= opt.n; ++k) ks.push_back(k);
  }
  for (int k : ks) {
    result.table.add_row({integer(opt.n), integer(k), real(concentration::latitude_pmf(opt.n, k)),
                          real(concentration::latitude_cosine(opt.n, k))});
  }
  result.manifest.command = "concentration pmf";
  result.manifest.parameters["n"] = opt.n;
  if (!opt.k.empty()) result.manifest.parameters["k"] = opt.k;
  return result;
}

// ---- steele -------------------------------------------------------------

struct SteeleOptions {
  std::vector<int> n;
  std::optional<int> from;
  std::optional<int> to;
};

Result steele(const SteeleOptions& opt) {
  std::vector<int> dims = opt.n;
  if (opt.from || opt.to) {
    if (!opt.from || !opt.to) throw UsageError("steele needs both --from and --to");
    if (*opt.from > *opt.to) throw UsageError("steele: --from must not exceed --to");
    for (int n = *opt.from; n <= *opt.to; ++n) dims.push_back(n);
  }
  if (dims.empty()) throw UsageError("steele needs --n or --from/--to");
  Result result;
  result.table.columns = {"n", "inner_radius", "escapes_cube"};
  for (int n : dims) {
    const auto s = capgeom::steele_inner_radius(n);
    result.table.add_row({integer(n), real(s.radius), Cell(s.escapes_cube)});
  }
  result.manifest.command = "steele";
  if (!opt.n.empty()) result.manifest.parameters["n"] = opt.n;
  if (opt.from) result.manifest.parameters["from"] = *opt.from;
  if (opt.to) result.manifest.parameters["to"] = *opt.to;
  return result;
}

// ---- emission -----------------------------------------------------------

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << contents;
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

void emit(const Result& result, const CommonOptions& common, std::ostream& out) {
  std::ostringstream body;
  if (common.format == "json") {
    write_json(result.table, result.manifest, body);
  } else {
    write_csv(result.table, body);
  }
  if (common.output.empty()) {
    out << body.str();
  } else {
    write_file(common.output, body.str());
  }
  std::string manifest_path = common.manifest;
  if (manifest_path.empty() && !common.output.empty() && common.format == "csv") {
    manifest_path = common.output + ".manifest.json";
  }
  if (!manifest_path.empty()) write_file(manifest_path, manifest_json(result.manifest).dump(2) + "\n");
}

template <typename T>
CLI::Option* add_list(CLI::App* cmd, const std::string& name, std::vector<T>& values,
                      const std::string& help) {
  return cmd->add_option(name, values, help)->delimiter(',')->expected(1, -1);
}

void add_mc_flags(CLI::App* cmd, std::optional<std::uint64_t>& trials, std::uint64_t& seed,
                  unsigned& workers) {
  cmd->add_option("--trials", trials,
                  std::string("Monte Carlo trials (default ") + std::to_string(kDefaultTrials) +
                      ", or $" + kTrialsEnvVar + ")");
  cmd->add_option("--seed", seed, "64-bit seed")->capture_default_str();
  cmd->add_option("--workers", workers, "Worker threads; 0 uses all hardware threads")
      ->capture_default_str();
}

}  // namespace

EnvLookup process_environment() {
  return [](const std::string& name) -> std::optional<std::string> {
    if (const char* value = std::getenv(name.c_str())) return std::string(value);
    return std::nullopt;
  };
}

const char* tool_version() { return HYPERSHADOW_VERSION; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const EnvLookup& env) {
  CLI::App app{"Shadows of balls at the vertices of the cube [-1, 1]^n", "hypershadow"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  std::function<Result()> action;
  CommonOptions common;

  auto* shadow = app.add_subcommand("shadow", "Blocked-light fraction of the vertex balls");
  shadow->require_subcommand(1);

  ShadowExactOptions exact_opt;
  auto* exact = shadow->add_subcommand("exact", "Closed-form shadow fractions");
  add_list(exact, "--n", exact_opt.n, "Dimensions")->required();
  add_list(exact, "--r", exact_opt.r, "Ball radii")->required();
  add_common(exact, common);
  exact->callback([&] { action = [&] { return shadow_exact(exact_opt); }; });

  ShadowMcOptions mc_opt;
  auto* mc_cmd = shadow->add_subcommand("mc", "Monte Carlo estimate with a Wilson interval");
  add_list(mc_cmd, "--n", mc_opt.n, "Dimensions")->required();
  add_list(mc_cmd, "--r", mc_opt.r, "Ball radii")->required();
  add_mc_flags(mc_cmd, mc_opt.trials, mc_opt.seed, mc_opt.workers);
  mc_cmd->add_option("--ci", mc_opt.ci, "Confidence level of the interval")->capture_default_str();
  add_common(mc_cmd, common);
  mc_cmd->callback([&] { action = [&] { return shadow_mc(mc_opt, env); }; });

  ThresholdOptions th_opt;
  auto* th = app.add_subcommand("threshold", "Critical radius for a limiting fraction");
  add_list(th, "--n", th_opt.n, "Dimensions");
  auto* z_opt = add_list(th, "--z", th_opt.z, "Standardised offsets");
  auto* target_opt = add_list(th, "--target", th_opt.target, "Target fractions in (0, 1)");
  z_opt->excludes(target_opt);
  add_mc_flags(th, th_opt.trials, th_opt.seed, th_opt.workers);
  th->add_option("--ci", th_opt.ci, "Confidence level of the interval")->capture_default_str();
  add_common(th, common);
  th->callback([&] { action = [&] { return threshold(th_opt); }; });

  LimitsOptions lim_opt;
  auto* lim = app.add_subcommand("limits", "Empirical check of the limit laws");
  lim->add_option("--n", lim_opt.n, "Dimension")->required();
  add_mc_flags(lim, lim_opt.trials, lim_opt.seed, lim_opt.workers);
  lim->add_option("--kind", lim_opt.kind, "Statistic")
      ->check(CLI::IsMember({"ratio_centered", "cos_theta", "distance_centered", "all"}))
      ->capture_default_str();
  lim->add_option("--law", lim_opt.law, "Coordinate law of the random direction")
      ->check(CLI::IsMember({"half_normal", "uniform"}))
      ->capture_default_str();
  lim->add_option("--tol-mean", lim_opt.tol_mean, "Absolute mean tolerance")->capture_default_str();
  lim->add_option("--tol-var", lim_opt.tol_var,
                  "Relative variance tolerance (default 0.05 for ratio_centered, 0.08 otherwise)");
  lim->add_option("--tol-quantile", lim_opt.tol_quantile, "Absolute quantile tolerance")
      ->capture_default_str();
  add_list(lim, "--quantiles", lim_opt.quantiles, "Probabilities to compare");
  add_common(lim, common);
  lim->callback([&] { action = [&] { return limits(lim_opt, env); }; });

  auto* conc = app.add_subcommand("concentration", "Latitude masses of the cube's vertices");
  conc->require_subcommand(1);

  SlabOptions slab_opt;
  auto* slab = conc->add_subcommand("slab", "P(|K - n/2| <= eps n)");
  add_list(slab, "--n", slab_opt.n, "Dimensions")->required();
  add_list(slab, "--eps", slab_opt.eps, "Half-widths as a fraction of n")->required();
  add_common(slab, common);
  slab->callback([&] { action = [&] { return concentration_slab(slab_opt); }; });

  CapOptions cap_opt;
  auto* cap = conc->add_subcommand("cap", "Vertex mass of a cap around a vertex");
  add_list(cap, "--n", cap_opt.n, "Dimensions")->required();
  add_list(cap, "--theta", cap_opt.theta, "Angular radii in [0, pi]")->required();
  add_common(cap, common);
  cap->callback([&] { action = [&] { return concentration_cap(cap_opt); }; });

  PmfOptions pmf_opt;
  auto* pmf = conc->add_subcommand("pmf", "Latitude probabilities");
  pmf->add_option("--n", pmf_opt.n, "Dimension")->required();
  add_list(pmf, "--k", pmf_opt.k, "Latitudes (default all)");
  add_common(pmf, common);
  pmf->callback([&] { action = [&] { return concentration_pmf(pmf_opt); }; });

  SteeleOptions st_opt;
  auto* st = app.add_subcommand("steele", "Radius of the sphere inside the vertex balls");
  auto* st_n = add_list(st, "--n", st_opt.n, "Dimensions");
  auto* st_from = st->add_option("--from", st_opt.from, "First dimension of a range");
  auto* st_to = st->add_option("--to", st_opt.to, "Last dimension of a range");
  st_n->excludes(st_from)->excludes(st_to);
  add_common(st, common);
  st->callback([&] { action = [&] { return steele(st_opt); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    Result result = action();
    result.manifest.tool_version = tool_version();
    result.manifest.timestamp = current_timestamp(env);
    emit(result, common, out);
    return kExitSuccess;
  } catch (const UsageError& e) {
    err << "hypershadow: error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "hypershadow: error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "hypershadow: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "hypershadow: error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hypershadow::cli
