#include "hypershadow/randgeom.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hypershadow::randgeom {
namespace {

void require_dimension(int n, int min_n, const char* where) {
  if (n < min_n) {
    throw DomainError(std::string(where) + ": dimension must be at least " +
                      std::to_string(min_n));
  }
}

}  // namespace

void fill_std_normal(std::span<double> out, RandomStream& stream) noexcept {
  for (double& v : out) v = stream.next_normal();
}

void fill_half_normal(std::span<double> out, RandomStream& stream) noexcept {
  for (double& v : out) v = std::fabs(stream.next_normal());
}

std::vector<double> sample_std_normal_vec(int n, RandomStream& stream) {
  require_dimension(n, 1, "sample_std_normal_vec");
  std::vector<double> out(static_cast<std::size_t>(n));
  fill_std_normal(out, stream);
  return out;
}

std::vector<double> sample_half_normal_vec(int n, RandomStream& stream) {
  require_dimension(n, 1, "sample_half_normal_vec");
  std::vector<double> out(static_cast<std::size_t>(n));
  fill_half_normal(out, stream);
  return out;
}

std::vector<double> sample_unit_sphere(int n, RandomStream& stream) {
  require_dimension(n, 2, "sample_unit_sphere");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (;;) {
    fill_std_normal(out, stream);
    double norm_sq = 0.0;
    for (double v : out) norm_sq += v * v;
    const double norm = std::sqrt(norm_sq);
    if (norm > 0.0 && std::isfinite(norm)) {
      for (double& v : out) v /= norm;
      return out;
    }
  }
}

std::vector<int> nearest_vertex(std::span<const double> y) {
  std::vector<int> vertex;
  vertex.reserve(y.size());
  for (double v : y) vertex.push_back(v < 0.0 ? -1 : 1);
  return vertex;
}

LineStats line_stats_from_sums(int n, double s, double t) {
  if (n < 1) throw DomainError("line_stats: dimension must be at least 1");
  if (!(t > 0.0) || !std::isfinite(t) || !std::isfinite(s)) {
    throw DomainError("line_stats: degenerate direction (t must be positive)");
  }
  // Cauchy-Schwarz bounds s²/t by n; rounding can overshoot by an ulp.
  const double ratio = std::min(s * s / t, static_cast<double>(n));
  return {n, s, t, n - ratio, ratio / n};
}

LineStats line_stats(std::span<const double> x) {
  double s = 0.0;
  double t = 0.0;
  for (double v : x) {
    s += v;
    t += v * v;
  }
  return line_stats_from_sums(static_cast<int>(x.size()), s, t);
}

}  // namespace hypershadow::randgeom
