#pragma once

// Random directions in R^n and the reduction of "random line through the
// origin versus the nearest vertex of [-1, 1]^n" to sums of half-normal
// coordinates.

#include <span>
#include <vector>

#include "hypershadow/errors.hpp"
#include "hypershadow/random_stream.hpp"

namespace hypershadow::randgeom {

// Statistics of one random line y = X t against the vertex (1, ..., 1),
// where X has positive coordinates.
//
//   s      = Σ X_i
//   t      = Σ X_i²
//   d_sq   = n - s²/t     squared line-to-vertex distance
//   cos_sq = s²/(n t)     squared cosine of the line-to-vertex angle
//
// s²/t is formed once and both d_sq and cos_sq are derived from it.
struct LineStats {
  int n;
  double s;
  double t;
  double d_sq;
  double cos_sq;
};

std::vector<double> sample_std_normal_vec(int n, RandomStream& stream);
void fill_std_normal(std::span<double> out, RandomStream& stream) noexcept;

// Uniform point on S^{n-1}: a standard normal vector divided by its norm.
std::vector<double> sample_unit_sphere(int n, RandomStream& stream);

// |Z_i| for i.i.d. standard normal Z_i.
std::vector<double> sample_half_normal_vec(int n, RandomStream& stream);
void fill_half_normal(std::span<double> out, RandomStream& stream) noexcept;

// Coordinate-wise sign pattern of y; sign(0) is taken as +1. This vertex and
// its antipode are the vertices closest to the line through y.
std::vector<int> nearest_vertex(std::span<const double> y);

// Throws DomainError when every coordinate is zero.
LineStats line_stats(std::span<const double> x);

// Same quantities from precomputed sums.
LineStats line_stats_from_sums(int n, double s, double t);

}  // namespace hypershadow::randgeom
