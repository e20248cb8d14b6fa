#include "curvgreen/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace cg {

namespace {

constexpr double kClamp = 1e-12;

void check_spec(const ManifoldSpec& m) {
  if (m.d < 1) throw Error(ErrorCode::Range, "d must be at least 1");
  if (m.kind != ManifoldKind::Euclidean && !(m.R > 0)) throw Error(ErrorCode::Range, "R must be positive");
}

// Unit vector in R^d for the angular part (theta_{d-1}, ..., theta_2, phi).
std::vector<double> unit_angular(const std::vector<double>& ang, int d) {
  if (static_cast<int>(ang.size()) != d - 1) throw Error(ErrorCode::Range, "need d - 1 angles");
  for (int i = 0; i + 1 < d - 1; ++i)
    if (!(ang[i] >= 0 && ang[i] <= M_PI)) throw Error(ErrorCode::Range, "polar angles must lie in [0, pi]");
  if (d >= 2 && !(ang.back() >= 0 && ang.back() < 2 * M_PI)) throw Error(ErrorCode::Range, "phi must lie in [0, 2 pi)");
  std::vector<double> u(d);
  if (d == 1) {
    u[0] = 1.0;
    return u;
  }
  double s = 1.0;
  for (int i = 0; i + 1 < d - 1; ++i) {
    u[i] = s * std::cos(ang[i]);
    s *= std::sin(ang[i]);
  }
  u[d - 2] = s * std::cos(ang.back());
  u[d - 1] = s * std::sin(ang.back());
  return u;
}

}  // namespace

double stable_acosh(double z) { return std::log(z + std::sqrt(z - 1) * std::sqrt(z + 1)); }

AmbientPoint embed(const ManifoldSpec& m, const GeodesicPolarPoint& p) {
  check_spec(m);
  const int d = m.d;
  std::vector<double> u = unit_angular(p.angles, d);
  AmbientPoint a;
  switch (m.kind) {
    case ManifoldKind::Hyperboloid: {
      if (!(p.radial >= 0)) throw Error(ErrorCode::Range, "r must be nonnegative");
      a.coords.push_back(m.R * std::cosh(p.radial));
      double s = m.R * std::sinh(p.radial);
      for (double v : u) a.coords.push_back(s * v);
      break;
    }
    case ManifoldKind::Hypersphere: {
      if (!(p.radial >= 0 && p.radial <= M_PI)) throw Error(ErrorCode::Range, "theta must lie in [0, pi]");
      a.coords.push_back(m.R * std::cos(p.radial));
      double s = m.R * std::sin(p.radial);
      for (double v : u) a.coords.push_back(s * v);
      break;
    }
    case ManifoldKind::Euclidean: {
      if (!(p.radial >= 0)) throw Error(ErrorCode::Range, "radius must be nonnegative");
      for (double v : u) a.coords.push_back(p.radial * v);
      break;
    }
  }
  return a;
}

double geodesic_distance(const ManifoldSpec& m, const AmbientPoint& a, const AmbientPoint& b) {
  check_spec(m);
  const size_t n = (m.kind == ManifoldKind::Euclidean) ? m.d : m.d + 1;
  if (a.coords.size() != n || b.coords.size() != n) throw Error(ErrorCode::OffManifold, "wrong number of coordinates");
  if (m.kind == ManifoldKind::Euclidean) {
    double s = 0;
    for (size_t i = 0; i < n; ++i) s += (a.coords[i] - b.coords[i]) * (a.coords[i] - b.coords[i]);
    return std::sqrt(s);
  }
  const double R2 = m.R * m.R;
  const bool hyp = (m.kind == ManifoldKind::Hyperboloid);
  auto form = [&](const AmbientPoint& x, const AmbientPoint& y) {
    double s = x.coords[0] * y.coords[0];
    for (size_t i = 1; i < n; ++i) s += (hyp ? -1.0 : 1.0) * x.coords[i] * y.coords[i];
    return s;
  };
  for (const AmbientPoint* p : {&a, &b}) {
    if (std::abs(form(*p, *p) - R2) > 1e-12 * R2 * std::max(1.0, std::abs(p->coords[0] * p->coords[0]) / R2))
      throw Error(ErrorCode::OffManifold, "point is not on the manifold");
    if (hyp && !(p->coords[0] > 0)) throw Error(ErrorCode::OffManifold, "hyperboloid point needs x0 > 0");
  }
  if (hyp) {
    // [x,y] = R^2 + |x - y|^2 / 2 in the Minkowski sense; use the difference for accuracy near 1
    double dd = -(a.coords[0] - b.coords[0]) * (a.coords[0] - b.coords[0]);
    for (size_t i = 1; i < n; ++i) dd += (a.coords[i] - b.coords[i]) * (a.coords[i] - b.coords[i]);
    double zm1 = dd / (2 * R2);
    if (zm1 < 0) {
      if (zm1 < -kClamp) throw Error(ErrorCode::OffManifold, "Minkowski form below R^2");
      zm1 = 0;
    }
    // acosh(1 + t) = log(1 + t + sqrt(t (t + 2)))
    return m.R * std::log1p(zm1 + std::sqrt(zm1 * (zm1 + 2)));
  }
  double c = form(a, b) / R2;
  if (c > 1 + kClamp || c < -1 - kClamp) throw Error(ErrorCode::OffManifold, "inner product out of range");
  c = std::clamp(c, -1.0, 1.0);
  // chord length gives the small-angle regime without cancellation
  double ch = 0;
  for (size_t i = 0; i < n; ++i) ch += (a.coords[i] - b.coords[i]) * (a.coords[i] - b.coords[i]);
  ch = std::sqrt(ch) / m.R;
  if (c > 0) return m.R * 2 * std::asin(std::min(1.0, ch / 2));
  return m.R * std::acos(c);
}

double separation_angle(const GeodesicPolarPoint& p, const GeodesicPolarPoint& q) {
  if (p.angles.size() != q.angles.size()) throw Error(ErrorCode::Range, "points have different dimensions");
  const int d = static_cast<int>(p.angles.size()) + 1;
  std::vector<double> u = unit_angular(p.angles, d), v = unit_angular(q.angles, d);
  double s = 0;
  for (int i = 0; i < d; ++i) s += u[i] * v[i];
  return std::clamp(s, -1.0, 1.0);
}

double sphere_surface_measure(int d, double R) {
  if (d < 1 || !(R > 0)) throw Error(ErrorCode::Range, "need d >= 1 and R > 0");
  return 2 * std::pow(M_PI, d / 2.0) * std::pow(R, d - 1) / std::tgamma(d / 2.0);
}

double radial_volume_weight(const ManifoldSpec& m, double radial) {
  check_spec(m);
  switch (m.kind) {
    case ManifoldKind::Hyperboloid:
      if (!(radial >= 0)) throw Error(ErrorCode::Range, "r must be nonnegative");
      return std::pow(m.R, m.d) * std::pow(std::sinh(radial), m.d - 1);
    case ManifoldKind::Hypersphere:
      if (!(radial >= 0 && radial <= M_PI)) throw Error(ErrorCode::Range, "theta must lie in [0, pi]");
      return std::pow(m.R, m.d) * std::pow(std::sin(radial), m.d - 1);
    case ManifoldKind::Euclidean:
      if (!(radial >= 0)) throw Error(ErrorCode::Range, "radius must be nonnegative");
      return std::pow(radial, m.d - 1);
  }
  return 0;
}

}  // namespace cg
