// Cylinder functions through Boost.Math, plus envelopes and the classical polynomials.
#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <limits>

#include "curvgreen/specfun.hpp"

namespace cg {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double bj(double mu, double x) { return boost::math::cyl_bessel_j(mu, x); }
double by(double mu, double x) { return boost::math::cyl_neumann(mu, x); }

}  // namespace

EvalResult cyl(CylKind kind, double mu, double x) {
  if (!(mu >= 0) || !std::isfinite(x)) throw Error(ErrorCode::Domain, "cyl needs mu >= 0 and finite x");
  const bool needs_pos = (kind == CylKind::Y || kind == CylKind::K || kind == CylKind::H1 || kind == CylKind::H2);
  if (needs_pos ? !(x > 0) : !(x >= 0)) throw Error(ErrorCode::Domain, "cyl argument out of range");
  EvalResult r;
  r.terms_used = 1;
  // Boost is accurate to a few hundred ulps in this range; the estimate is
  // scaled by the oscillation envelope so that it stays honest near zeros.
  const double tol = 256 * kEps * (1.0 + 0.05 * mu);
  switch (kind) {
    case CylKind::J: {
      double j = bj(mu, x);
      r.value = j;
      double s = (x > 0) ? std::hypot(j, by(mu, x)) : std::abs(j);
      r.abs_err_est = tol * std::min(s, std::abs(j) + 1e-300 + tol * s) + tol * std::abs(j);
      break;
    }
    case CylKind::Y: {
      double y = by(mu, x);
      r.value = y;
      r.abs_err_est = tol * std::hypot(y, bj(mu, x));
      break;
    }
    case CylKind::I: {
      double v = boost::math::cyl_bessel_i(mu, x);
      r.value = v;
      r.abs_err_est = tol * std::abs(v);
      break;
    }
    case CylKind::K: {
      double v = boost::math::cyl_bessel_k(mu, x);
      r.value = v;
      r.abs_err_est = tol * std::abs(v);
      break;
    }
    case CylKind::H1:
    case CylKind::H2: {
      double j = bj(mu, x), y = by(mu, x);
      r.value = (kind == CylKind::H1) ? cplx(j, y) : cplx(j, -y);
      r.abs_err_est = tol * std::abs(r.value);
      break;
    }
  }
  if (!std::isfinite(r.value.real()) || !std::isfinite(r.value.imag()))
    r.flags |= NEAR_POLE;
  return r;
}

double env_j(double mu, double x) {
  if (!(x >= 0)) throw Error(ErrorCode::Domain, "env_j needs x >= 0");
  double a = bj(mu, x), b = bj(mu + 1, x);
  return std::sqrt(a * a + b * b);
}

double env_h(CylKind kind, double mu, double x) {
  if (kind != CylKind::H1 && kind != CylKind::H2) throw Error(ErrorCode::Domain, "env_h takes H1 or H2");
  if (!(x > 0)) throw Error(ErrorCode::Domain, "env_h needs x > 0");
  // |H1| = |H2| for real argument
  double h0 = std::hypot(bj(mu, x), by(mu, x));
  double h1 = std::hypot(bj(mu + 1, x), by(mu + 1, x));
  double w = std::min(1.0, x * x);
  return std::sqrt(h0 * h0 + w * h1 * h1);
}

double chebyshev_t(int n, double x) {
  if (n == 0) return 1.0;
  double t0 = 1.0, t1 = x;
  for (int k = 1; k < n; ++k) {
    double t2 = 2 * x * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

double gegenbauer_c(int n, double mu, double x) {
  if (n == 0) return 1.0;
  double c0 = 1.0, c1 = 2 * mu * x;
  for (int k = 2; k <= n; ++k) {
    double c2 = (2 * x * (k + mu - 1) * c1 - (k + 2 * mu - 2) * c0) / k;
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

double legendre_poly(int n, double x) {
  if (n == 0) return 1.0;
  double p0 = 1.0, p1 = x;
  for (int k = 1; k < n; ++k) {
    double p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

}  // namespace cg
