#include <cmath>

#include "curvgreen/expansions.hpp"
#include "curvgreen/geometry.hpp"
#include "doctest.h"

using namespace cg;

TEST_CASE("embedded points lie on their manifolds") {
  GeodesicPolarPoint p{0.9, {0.4, 1.3}};  // d = 3
  auto h = embed(ManifoldSpec{ManifoldKind::Hyperboloid, 3, 2.0}, p);
  double mink = h.coords[0] * h.coords[0];
  for (size_t i = 1; i < h.coords.size(); ++i) mink -= h.coords[i] * h.coords[i];
  CHECK(mink == doctest::Approx(4.0).epsilon(1e-13));
  auto s = embed(ManifoldSpec{ManifoldKind::Hypersphere, 3, 2.0}, p);
  double euc = 0;
  for (double c : s.coords) euc += c * c;
  CHECK(euc == doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("distance from the origin is the radial coordinate") {
  GeodesicPolarPoint o{0.0, {0.0, 0.0}}, p{0.7, {0.4, 1.3}};
  for (auto k : {ManifoldKind::Hyperboloid, ManifoldKind::Hypersphere}) {
    ManifoldSpec m{k, 3, 1.5};
    CHECK(geodesic_distance(m, embed(m, o), embed(m, p)) == doctest::Approx(1.5 * 0.7).epsilon(1e-12));
  }
  ManifoldSpec e{ManifoldKind::Euclidean, 3, 1.0};
  CHECK(geodesic_distance(e, embed(e, o), embed(e, p)) == doctest::Approx(0.7).epsilon(1e-13));
}

TEST_CASE("two-point formulas match embedded distances") {
  GeodesicPolarPoint p{0.6, {0.4, 1.3}}, q{1.1, {1.2, 2 * M_PI - 0.5}};
  const double cg_ = separation_angle(p, q);
  const double gam = std::acos(cg_);
  ManifoldSpec h{ManifoldKind::Hyperboloid, 3, 1.0};
  auto th = TwoPointConfig::hyperbolic(0.6, 1.1, gam);
  CHECK(th.composite == doctest::Approx(geodesic_distance(h, embed(h, p), embed(h, q))).epsilon(1e-12));
  ManifoldSpec s{ManifoldKind::Hypersphere, 3, 1.0};
  auto ts = TwoPointConfig::spherical(0.6, 1.1, gam);
  CHECK(ts.composite == doctest::Approx(geodesic_distance(s, embed(s, p), embed(s, q))).epsilon(1e-12));
  ManifoldSpec e{ManifoldKind::Euclidean, 3, 1.0};
  auto te = TwoPointConfig::euclidean(0.6, 1.1, gam);
  CHECK(te.composite == doctest::Approx(geodesic_distance(e, embed(e, p), embed(e, q))).epsilon(1e-12));
}

TEST_CASE("gamma = 0 gives the radial difference") {
  auto t = TwoPointConfig::spherical(0.4, 0.9, 0.0);
  CHECK(t.composite == doctest::Approx(0.5).epsilon(1e-12));
  auto h = TwoPointConfig::hyperbolic(1.4, 0.3, 0.0);
  CHECK(h.composite == doctest::Approx(1.1).epsilon(1e-12));
  CHECK(h.lt == 0.3);
  CHECK(h.gt == 1.4);
}

TEST_CASE("tiny separations stay accurate") {
  auto t = TwoPointConfig::spherical(0.5, 0.5 + 1e-9, 0.0);
  CHECK(t.composite == doctest::Approx(1e-9).epsilon(1e-6));
  CHECK(stable_acosh(1.0 + 5e-19) >= 0.0);
  CHECK(stable_acosh(std::cosh(1e-6)) == doctest::Approx(1e-6).epsilon(1e-3));
}

TEST_CASE("sphere surface measure") {
  CHECK(sphere_surface_measure(3, 1.0) == doctest::Approx(4 * M_PI).epsilon(1e-14));
  CHECK(sphere_surface_measure(2, 2.0) == doctest::Approx(4 * M_PI).epsilon(1e-14));
  CHECK(sphere_surface_measure(4, 1.0) == doctest::Approx(2 * M_PI * M_PI).epsilon(1e-14));
}

TEST_CASE("radial volume weights") {
  ManifoldSpec h{ManifoldKind::Hyperboloid, 3, 2.0}, s{ManifoldKind::Hypersphere, 3, 2.0},
      e{ManifoldKind::Euclidean, 3, 1.0};
  CHECK(radial_volume_weight(h, 0.5) == doctest::Approx(8 * std::pow(std::sinh(0.5), 2)).epsilon(1e-14));
  CHECK(radial_volume_weight(s, 0.5) == doctest::Approx(8 * std::pow(std::sin(0.5), 2)).epsilon(1e-14));
  CHECK(radial_volume_weight(e, 0.5) == doctest::Approx(0.25).epsilon(1e-14));
  // small radius: R^d r^{d-1}
  CHECK(radial_volume_weight(h, 1e-4) / (8 * 1e-8) == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("off-manifold points are rejected") {
  ManifoldSpec s{ManifoldKind::Hypersphere, 2, 1.0};
  AmbientPoint a{{1.0, 0.0, 0.0}}, b{{2.0, 0.0, 0.0}};
  try {
    geodesic_distance(s, a, b);
    FAIL("expected OFF_MANIFOLD");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OffManifold);
  }
}
