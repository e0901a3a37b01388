#pragma once

// Latitudes of hypercube vertices relative to a pole p ∈ {-1, 1}^n. The
// latitude K of a uniform random vertex (number of coordinates that disagree
// with p) is Binomial(n, ½).

#include <cstdint>

#include "hypershadow/errors.hpp"

namespace hypershadow::concentration {

// Above this dimension slab_probability reports the normal approximation
// instead of summing the binomial masses.
inline constexpr int kExactSlabLimit = 100000;

class LatitudeModel {
 public:
  explicit LatitudeModel(int n);

  int n() const { return n_; }
  double pmf(int k) const;
  double cosine(int k) const;

 private:
  int n_;
};

struct SlabProbability {
  int k_low;             // first latitude inside the slab
  int k_high;            // last latitude inside the slab
  double exact;          // Σ pmf over the slab (normal_approx when approximate)
  double normal_approx;  // N(n/2, n/4) with continuity correction
  bool approximate;      // true when n > kExactSlabLimit
};

// C(n, k) / 2^n. Uses Loader's saddle-point expansion, so the relative error
// stays near machine precision for any n.
double latitude_pmf(int n, int k);

// P(|K - n/2| <= eps n).
SlabProbability slab_probability(int n, double eps);

// (n - 2k) / n: cosine of the angle between the pole and a vertex in L_k.
double latitude_cosine(int n, int k);

// Largest latitude inside the cap of angular radius theta, in [0, n].
int cap_latitude_limit(int n, double theta);

// Mass of the cap of angular radius theta around the pole:
// P(latitude_cosine >= cos theta) = P(K <= n (1 - cos theta) / 2).
double cap_mass(int n, double theta);

// Σ_{k=lo}^{hi} latitude_pmf(n, k) with compensated summation.
double latitude_mass(int n, int lo, int hi);

}  // namespace hypershadow::concentration
