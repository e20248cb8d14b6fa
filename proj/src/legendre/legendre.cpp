#include "curvgreen/legendre.hpp"

#include <algorithm>
#include <cmath>

#include "common/ladder.hpp"
#include "legendre/leg_t.hpp"

namespace cg {

using namespace detail;

FerrersArg FerrersArg::from_x(double x) {
  FerrersArg a;
  a.x = x;
  a.theta = std::acos(std::clamp(x, -1.0, 1.0));
  return a;
}

FerrersArg FerrersArg::from_theta(double theta) {
  FerrersArg a;
  a.theta = theta;
  a.x = std::cos(theta);
  a.has_theta = true;
  return a;
}

FerrersArg FerrersArg::reflected() const {
  FerrersArg a = *this;
  a.negated = !negated;
  return a;
}

double FerrersArg::value() const {
  double v = has_theta ? std::cos(theta) : x;
  return negated ? -v : v;
}

HyperbolicArg HyperbolicArg::from_z(double z) {
  HyperbolicArg a;
  a.z = z;
  a.r = (z >= 1) ? std::acosh(z) : 0.0;
  return a;
}

HyperbolicArg HyperbolicArg::from_r(double r) {
  HyperbolicArg a;
  a.r = r;
  a.z = std::cosh(r);
  a.has_r = true;
  return a;
}

double HyperbolicArg::value() const { return has_r ? std::cosh(r) : z; }

namespace {

void check(const FerrersArg& a) {
  bool ok = a.has_theta ? (a.theta > 0 && a.theta < M_PI) : (a.x > -1 && a.x < 1);
  if (!ok) throw Error(ErrorCode::Domain, "Ferrers argument must lie strictly inside (-1, 1)");
}

void check(const HyperbolicArg& a) {
  bool ok = a.has_r ? (a.r > 0) : (a.z > 1);
  if (!ok) throw Error(ErrorCode::Domain, "Legendre argument must exceed 1");
}

// sin(w t)/w and sinh(w t)/w with the w -> 0 limit.
cplx sinc_w(cplx w, double t) {
  if (std::abs(w * t) < 1e-6) return t * (1.0 - w * w * t * t / 6.0);
  return std::sin(w * t) / w;
}
cplx sinhc_w(cplx w, double t) {
  if (std::abs(w * t) < 1e-6) return t * (1.0 + w * w * t * t / 6.0);
  return std::sinh(w * t) / w;
}

// Angle and the elementary pair (mu = -1/2, mu = +1/2) for each kind.
struct Seed {
  cplx lo, hi;  // orders -1/2 and +1/2
  double c;     // x / sqrt(1 - x^2) or z / sqrt(z^2 - 1)
  double k;     // +1 for Ferrers, -1 for Legendre
};

Seed seed_ferrers(HalfOddKind kind, cplx nu, const FerrersArg& a) {
  double th;
  if (a.has_theta)
    th = a.negated ? M_PI - a.theta : a.theta;
  else
    th = std::acos(a.negated ? -a.x : a.x);
  const double s = std::sin(th);
  const cplx w = nu + 0.5;
  Seed sd;
  sd.k = 1.0;
  sd.c = std::cos(th) / s;
  if (kind == HalfOddKind::FerrersP) {
    double f = std::sqrt(2.0 / (M_PI * s));
    sd.lo = f * sinc_w(w, th);
    sd.hi = f * std::cos(w * th);
  } else {
    double f = std::sqrt(M_PI / (2.0 * s));
    sd.lo = f * std::cos(w * th) / w;
    sd.hi = -f * std::sin(w * th);
  }
  return sd;
}

Seed seed_legendre(HalfOddKind kind, cplx nu, const HyperbolicArg& a) {
  const double r = a.has_r ? a.r : std::acosh(a.z);
  const double sh = std::sinh(r);
  const cplx w = nu + 0.5;
  Seed sd;
  sd.k = -1.0;
  sd.c = std::cosh(r) / sh;
  if (kind == HalfOddKind::P) {
    double f = std::sqrt(2.0 / (M_PI * sh));
    sd.lo = f * sinhc_w(w, r);
    sd.hi = f * std::cosh(w * r);
  } else {
    double f = std::sqrt(M_PI / (2.0 * sh));
    cplx e = std::exp(-w * r);
    sd.lo = cplx(0, -1) * f * e / w;
    sd.hi = cplx(0, 1) * f * e;
  }
  return sd;
}

// Runs the order recurrence from the seed to two_mu / 2, carrying a forward
// error bound. Returns false when the bound exceeds 1e-10 relative.
bool recur(const Seed& sd, cplx nu, int two_mu, EvalResult* out) {
  constexpr double eps = 2.220446049250313e-16;
  int steps = 0;
  cplx v;
  double err;
  if (two_mu == -1) {
    v = sd.lo;
    err = 4 * eps * std::abs(v);
  } else if (two_mu == 1) {
    v = sd.hi;
    err = 4 * eps * std::abs(v);
  } else if (two_mu > 1) {
    cplx f0 = sd.lo, f1 = sd.hi;
    double e0 = 4 * eps * std::abs(f0), e1 = 4 * eps * std::abs(f1);
    for (double mu = -0.5; 2 * (mu + 2) <= two_mu; mu += 1.0) {
      cplx A = -2.0 * (mu + 1) * sd.c, B = -sd.k * (nu - mu) * (nu + mu + 1.0);
      cplx f2 = A * f1 + B * f0;
      double e2 = std::abs(A) * e1 + std::abs(B) * e0 + 2 * eps * (std::abs(A * f1) + std::abs(B * f0));
      f0 = f1;
      f1 = f2;
      e0 = e1;
      e1 = e2;
      ++steps;
    }
    v = f1;
    err = e1;
  } else {
    // downward: f(mu) from f(mu + 1) and f(mu + 2)
    cplx f2 = sd.hi, f1 = sd.lo;
    double e2 = 4 * eps * std::abs(f2), e1 = 4 * eps * std::abs(f1);
    for (double mu = -1.5; 2 * mu >= two_mu; mu -= 1.0) {
      cplx den = sd.k * (nu - mu) * (nu + mu + 1.0);
      if (std::abs(den) == 0) return false;
      cplx C = -2.0 * (mu + 1) * sd.c;
      cplx f0 = (-f2 + C * f1) / den;
      double e0 = (e2 + std::abs(C) * e1 + 2 * eps * (std::abs(f2) + std::abs(C * f1))) / std::abs(den) +
                  eps * std::abs(f0);
      f2 = f1;
      f1 = f0;
      e2 = e1;
      e1 = e0;
      ++steps;
    }
    v = f1;
    err = e1;
  }
  out->value = v;
  out->abs_err_est = err;
  out->terms_used = steps + 1;
  return std::isfinite(v.real()) && std::isfinite(v.imag()) && err <= 1e-10 * std::abs(v);
}

}  // namespace

EvalResult ferrers_p(cplx nu, cplx mu, const FerrersArg& x) {
  check(x);
  return ladder([&](auto tag) {
    using T = decltype(tag);
    return Leg<T>::ferrers_p(cx<T>(nu), cx<T>(mu), make_farg<T>(x));
  });
}

EvalResult ferrers_q(cplx nu, cplx mu, const FerrersArg& x) {
  check(x);
  return ladder([&](auto tag) {
    using T = decltype(tag);
    return Leg<T>::ferrers_q(cx<T>(nu), cx<T>(mu), make_farg<T>(x));
  });
}

EvalResult ferrers_p_reflected(cplx nu, cplx mu, const FerrersArg& x) {
  check(x);
  if (!(mu.real() > 0)) throw Error(ErrorCode::Domain, "reflected Ferrers P needs Re mu > 0");
  return ladder([&](auto tag) {
    using T = decltype(tag);
    return Leg<T>::ferrers_p_refl(cx<T>(nu), cx<T>(mu), make_farg<T>(x));
  });
}

EvalResult odd_ferrers_f(cplx nu, cplx mu, const FerrersArg& x) {
  check(x);
  if (x.value() == 0.0 && !x.has_theta) return EvalResult{};
  return ladder([&](auto tag) {
    using T = decltype(tag);
    return Leg<T>::odd_f(cx<T>(nu), cx<T>(mu), make_farg<T>(x));
  });
}

EvalResult legendre_p(cplx nu, cplx mu, const HyperbolicArg& z) {
  check(z);
  return ladder([&](auto tag) {
    using T = decltype(tag);
    return Leg<T>::legendre_p(cx<T>(nu), cx<T>(mu), make_harg<T>(z));
  });
}

EvalResult legendre_q(cplx nu, cplx mu, const HyperbolicArg& z) {
  check(z);
  return ladder([&](auto tag) {
    using T = decltype(tag);
    return Leg<T>::legendre_q(cx<T>(nu), cx<T>(mu), make_harg<T>(z));
  });
}

EvalResult half_odd_eval(HalfOddKind kind, cplx nu, int two_mu, const FerrersArg& x) {
  if (two_mu % 2 == 0) throw Error(ErrorCode::Domain, "half_odd_eval needs an odd 2 mu");
  if (kind != HalfOddKind::FerrersP && kind != HalfOddKind::FerrersQ)
    throw Error(ErrorCode::Domain, "Ferrers argument given for a Legendre kind");
  check(x);
  EvalResult r;
  if (recur(seed_ferrers(kind, nu, x), nu, two_mu, &r)) return r;
  const double mu = two_mu / 2.0;
  r = (kind == HalfOddKind::FerrersP) ? ferrers_p(nu, mu, x) : ferrers_q(nu, mu, x);
  r.flags |= RECURRENCE_UNSTABLE;
  return r;
}

EvalResult half_odd_eval(HalfOddKind kind, cplx nu, int two_mu, const HyperbolicArg& z) {
  if (two_mu % 2 == 0) throw Error(ErrorCode::Domain, "half_odd_eval needs an odd 2 mu");
  if (kind != HalfOddKind::P && kind != HalfOddKind::Q)
    throw Error(ErrorCode::Domain, "hyperbolic argument given for a Ferrers kind");
  check(z);
  EvalResult r;
  if (recur(seed_legendre(kind, nu, z), nu, two_mu, &r)) return r;
  const double mu = two_mu / 2.0;
  r = (kind == HalfOddKind::P) ? legendre_p(nu, mu, z) : legendre_q(nu, mu, z);
  r.flags |= RECURRENCE_UNSTABLE;
  return r;
}

EvalResult half_odd_eval(HalfOddKind kind, cplx nu, int two_mu, double arg) {
  if (kind == HalfOddKind::FerrersP || kind == HalfOddKind::FerrersQ)
    return half_odd_eval(kind, nu, two_mu, FerrersArg::from_x(arg));
  return half_odd_eval(kind, nu, two_mu, HyperbolicArg::from_z(arg));
}

EvalResult gegenbauer_function(cplx lambda, cplx mu, double gamma_angle) {
  if (!(gamma_angle > 0 && gamma_angle < M_PI)) throw Error(ErrorCode::Domain, "gamma must lie in (0, pi)");
  return ladder([&](auto tag) {
    using T = decltype(tag);
    return Leg<T>::gegenbauer(cx<T>(lambda), cx<T>(mu), T(gamma_angle));
  });
}

}  // namespace cg
