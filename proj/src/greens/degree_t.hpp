// Degrees of the Green's functions at working precision.
#pragma once

#include "common/num.hpp"
#include "curvgreen/geometry.hpp"
#include "curvgreen/greens.hpp"

namespace cg::detail {

template <class T>
struct Deg {
  Cx<T> nu;
  Cx<T> mu_minus_nu;  // without cancellation
};

// mu - nu is formed as 2 beta^2 R^2 / ((d-1) + sqrt(disc)) where the two
// terms would otherwise cancel.
template <class T>
Deg<T> degree_t(ManifoldKind kind, Sign sign, int d, double beta, double R) {
  using std::sqrt;
  const T a = T(d - 1);
  const T b2 = T(beta) * T(beta) * T(R) * T(R);
  const T mu = T(d) / T(2) - T(1);
  const T half = T(1) / T(2);
  Deg<T> g;
  const bool hyp = (kind == ManifoldKind::Hyperboloid);
  const bool plus = (sign == Sign::Plus);
  if (hyp == plus) {
    // (d-1)^2 + 4 beta^2 R^2: real degree above mu
    T sq = sqrt(a * a + T(4) * b2);
    g.nu = Cx<T>((sq - T(1)) / T(2));
    g.mu_minus_nu = Cx<T>(-T(2) * b2 / (a + sq));
    return g;
  }
  T disc = a * a - T(4) * b2;
  if (disc >= 0) {
    T sq = sqrt(disc);
    g.nu = Cx<T>((sq - T(1)) / T(2));
    g.mu_minus_nu = Cx<T>(T(2) * b2 / (a + sq));
    return g;
  }
  // oscillatory regime: -i branch on the hyperboloid, +i on the sphere
  T im = sqrt(-disc) / T(2);
  if (hyp) im = -im;
  g.nu = Cx<T>(-half, im);
  g.mu_minus_nu = Cx<T>(mu + half, -im);
  return g;
}

}  // namespace cg::detail
