#pragma once

// Exact geometry of hyperspheres, spherical caps and the shadow that a ball
// at a cube vertex casts on the circumscribing sphere S^{n-1}(√n).

#include "hypershadow/errors.hpp"

namespace hypershadow::capgeom {

// Cap on S^{n-1}(R) with half-angle theta measured from its axis.
class CapSpec {
 public:
  CapSpec(int n, double radius, double theta);

  int n() const { return n_; }
  double radius() const { return radius_; }
  double theta() const { return theta_; }

  // Distance from the centre to the cutting hyperplane, R cos θ.
  double epsilon() const;
  // Euclidean distance from the cap's pole to its rim, 2R sin(θ/2).
  double chord() const;

 private:
  int n_;
  double radius_;
  double theta_;
};

// Balls of a common radius r centred at all 2^n vertices of [-1, 1]^n.
// r = √n (total blockage) is accepted; r > √n is rejected.
class BallArrangement {
 public:
  BallArrangement(int n, double r);

  int n() const { return n_; }
  double r() const { return r_; }

 private:
  int n_;
  double r_;
};

struct CapForms {
  double epsilon;
  double chord;
};

struct SteeleRadius {
  double radius;
  bool escapes_cube;
};

// Surface area of S^{n-1}(R), 2 π^{n/2} R^{n-1} / Γ(n/2). Evaluated in log
// space; throws NumericalError when the result overflows a double.
double sphere_area(int n, double radius);

// Natural log of sphere_area, usable where the area itself overflows.
double log_sphere_area(int n, double radius);

CapForms cap_convert(double theta, double radius);

// Inverse of the distance form: θ = arccos(ε / R).
double cap_angle_from_epsilon(double epsilon, double radius);

// ½ A_n(R) I_{sin²θ}((n-1)/2, ½).
double cap_area(const CapSpec& spec);

// Fraction of the sphere covered by the shadow of one ball of radius r at
// distance √n from the light source: ½ I_{r²/n}((n-1)/2, ½).
double single_shadow_fraction(int n, double r);
double single_shadow_fraction(const BallArrangement& balls);

// (1/√π) z^{(n-1)/2}: the closed-form tail estimate of I_z((n-1)/2, ½).
// Requires n >= 3.
double beta_tail_bound(int n, double z);

// Total blocked fraction 2^n · single_shadow_fraction(n, r), clamped to 1.
// Valid only while the shadows are disjoint, i.e. r <= 1; larger r throws.
double disjoint_union_fraction(int n, double r);

// Radius √n - 1 of the sphere at the origin tangent to unit balls at the
// vertices of [-1, 1]^n, and whether it pokes out of [-2, 2]^n.
SteeleRadius steele_inner_radius(int n);

// Cosine of the angle between two adjacent cube vertices, (n - 2) / n.
double adjacent_vertex_cosine(int n);

}  // namespace hypershadow::capgeom
