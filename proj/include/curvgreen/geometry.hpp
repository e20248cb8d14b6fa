#pragma once

#include <vector>

#include "curvgreen/types.hpp"

namespace cg {

enum class ManifoldKind { Hyperboloid, Hypersphere, Euclidean };

struct ManifoldSpec {
  ManifoldKind kind = ManifoldKind::Hyperboloid;
  int d = 3;
  double R = 1.0;  // ignored for Euclidean
};

// radial is r (hyperboloid), theta (hypersphere) or |x| (Euclidean).
// angles = (theta_{d-1}, ..., theta_2, phi); d - 1 entries.
struct GeodesicPolarPoint {
  double radial = 0.0;
  std::vector<double> angles;
};

// x_0 .. x_d (x_1 .. x_d for Euclidean).
struct AmbientPoint {
  std::vector<double> coords;
};

AmbientPoint embed(const ManifoldSpec& m, const GeodesicPolarPoint& p);
double geodesic_distance(const ManifoldSpec& m, const AmbientPoint& a, const AmbientPoint& b);
// cos(gamma) between the angular parts of two points.
double separation_angle(const GeodesicPolarPoint& p, const GeodesicPolarPoint& q);
// Area of the (d-1)-sphere of radius R.
double sphere_surface_measure(int d, double R);
double radial_volume_weight(const ManifoldSpec& m, double radial);

// acosh(z) as log(z + sqrt(z - 1) sqrt(z + 1)).
double stable_acosh(double z);

}  // namespace cg
