#include "curvgreen/asymptotics.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/tools/roots.hpp>

#include <cmath>

#include "curvgreen/specfun.hpp"

namespace cg {

namespace {

constexpr cplx I{0.0, 1.0};

double bj(double mu, double x) { return boost::math::cyl_bessel_j(mu, x); }
double by(double mu, double x) { return boost::math::cyl_neumann(mu, x); }
double bi(double mu, double x) { return boost::math::cyl_bessel_i(mu, x); }
double bk(double mu, double x) { return boost::math::cyl_bessel_k(mu, x); }

// First positive root of J_mu = Y_mu.
double x_mu(double mu) {
  auto g = [mu](double x) { return bj(mu, x) - by(mu, x); };
  double a = 1e-3, b = a;
  while (g(b) > 0) {
    a = b;
    b += 0.05 * (1.0 + 0.2 * mu);
  }
  boost::math::tools::eps_tolerance<double> tol(50);
  std::uintmax_t it = 100;
  auto br = boost::math::tools::toms748_solve(g, a, b, tol, it);
  return 0.5 * (br.first + br.second);
}

// Real-variable envelopes: sqrt(2)|J|, sqrt(2)|Y| below X_mu, the modulus above.
double env_j_real(double mu, double x) {
  if (x <= x_mu(mu)) return std::sqrt(2.0) * std::abs(bj(mu, x));
  return std::hypot(bj(mu, x), by(mu, x));
}
double env_y_real(double mu, double x) {
  if (x <= x_mu(mu)) return std::sqrt(2.0) * std::abs(by(mu, x));
  return std::hypot(bj(mu, x), by(mu, x));
}

void need_ferrers_range(double theta, double delta) {
  if (!(theta > 0 && theta <= M_PI - delta))
    throw Error(ErrorCode::Domain, "theta must lie in (0, pi - delta]");
}

}  // namespace

AsymptoticApprox legendre_large_nu(LegendreAsymKind kind, double nu, double mu, double r) {
  if (!(nu > 0) || !(mu >= 0) || !(r > 0)) throw Error(ErrorCode::Domain, "need nu > 0, mu >= 0, r > 0");
  const double s = std::sqrt(r / std::sinh(r));
  const double w = (nu + 0.5) * r;
  AsymptoticApprox a;
  a.regime = AsymRegime::LegendreLargeNu;
  if (kind == LegendreAsymKind::PNegMu) {
    a.value = std::pow(nu, -mu) * s * bi(mu, w);
  } else {
    a.value = std::exp(I * (M_PI * mu)) * std::pow(nu, mu) * s * bk(mu, w);
  }
  // the leading factor does not oscillate, so it is its own envelope
  a.envelope_scale = std::abs(a.value);
  return a;
}

AsymptoticApprox conical_large_tau(ConicalAsymKind kind, double tau, double mu, double r, int order_sign) {
  if (!(tau > 0) || !(mu >= 0)) throw Error(ErrorCode::Domain, "need tau > 0 and mu >= 0");
  if (kind == ConicalAsymKind::PNeg ? !(r >= 0) : !(r > 0)) throw Error(ErrorCode::Domain, "r out of range");
  const double s = (r == 0) ? 1.0 : std::sqrt(r / std::sinh(r));
  const double w = tau * r;
  AsymptoticApprox a;
  a.regime = AsymRegime::ConicalLargeTau;
  switch (kind) {
    case ConicalAsymKind::PNeg: {
      double f = std::pow(tau, -mu) * s;
      a.value = f * bj(mu, w);
      a.envelope_scale = f * env_j(mu, w);
      break;
    }
    case ConicalAsymKind::PPos: {
      double f = std::pow(tau, mu) * s;
      double c = std::cos(M_PI * mu), sn = std::sin(M_PI * mu);
      a.value = f * (c * bj(mu, w) - sn * by(mu, w));
      a.envelope_scale = f * (std::abs(c) * env_j(mu, w) + std::abs(sn) * env_h(CylKind::H1, mu, w));
      break;
    }
    case ConicalAsymKind::QPlusBranch:
    case ConicalAsymKind::QMinusBranch: {
      const bool up = (order_sign >= 0);
      const double m = up ? mu : -mu;
      cplx pre;
      cplx h;
      if (kind == ConicalAsymKind::QPlusBranch) {
        // -(i pi/2) e^{(-1 +- 3) i pi mu/2} tau^{+-mu} H2
        double ph = (up ? 2.0 : -4.0) * M_PI * mu / 2;
        pre = -(I * M_PI / 2.0) * std::exp(I * ph);
        h = cplx(bj(mu, w), -by(mu, w));
      } else {
        // (i pi/2) e^{(1 +- 1) i pi mu/2} tau^{+-mu} H1
        double ph = (up ? 2.0 : 0.0) * M_PI * mu / 2;
        pre = (I * M_PI / 2.0) * std::exp(I * ph);
        h = cplx(bj(mu, w), by(mu, w));
      }
      pre *= std::pow(tau, m) * s;
      a.value = pre * h;
      a.envelope_scale = std::abs(pre) * env_h(CylKind::H1, mu, w);
      break;
    }
  }
  return a;
}

AsymptoticApprox ferrers_large_nu(FerrersAsymKind kind, double nu, double mu, double theta, double delta) {
  if (!(nu > 0) || !(mu >= 0)) throw Error(ErrorCode::Domain, "need nu > 0 and mu >= 0");
  need_ferrers_range(theta, delta);
  const double s = std::sqrt(theta / std::sin(theta));
  const double w = (nu + 0.5) * theta;
  const double J = bj(mu, w), Y = by(mu, w);
  const double eJ = env_j_real(mu, w), eY = env_y_real(mu, w);
  const double cm = std::cos(M_PI * mu), sm = std::sin(M_PI * mu);
  const double cd = std::cos(M_PI * (nu - mu)), sd = std::sin(M_PI * (nu - mu));
  double f = 0, c1 = 0, c2 = 0;  // value = f * (c1 J + c2 Y)
  switch (kind) {
    case FerrersAsymKind::PNegMu: f = std::pow(nu, -mu) * s; c1 = 1; break;
    case FerrersAsymKind::PPosMu: f = std::pow(nu, mu) * s; c1 = cm; c2 = -sm; break;
    case FerrersAsymKind::QNegMu: f = -M_PI / (2 * std::pow(nu, mu)) * s; c2 = 1; break;
    case FerrersAsymKind::QPosMu: f = -M_PI * std::pow(nu, mu) / 2 * s; c1 = sm; c2 = cm; break;
    case FerrersAsymKind::PNegMuRefl: f = std::pow(nu, -mu) * s; c1 = cd; c2 = sd; break;
    case FerrersAsymKind::QNegMuRefl: f = -M_PI / (2 * std::pow(nu, mu)) * s; c1 = sd; c2 = -cd; break;
  }
  AsymptoticApprox a;
  a.regime = AsymRegime::FerrersLargeNu;
  a.value = f * (c1 * J + c2 * Y);
  a.envelope_scale = std::abs(f) * (std::abs(c1) * eJ + std::abs(c2) * eY);
  return a;
}

AsymptoticApprox ferrers_conical_large_tau(FerrersAsymKind kind, double tau, double mu, double theta, int branch,
                                           double delta) {
  if (!(tau > 0) || !(mu >= 0)) throw Error(ErrorCode::Domain, "need tau > 0 and mu >= 0");
  need_ferrers_range(theta, delta);
  const double sg = (branch >= 0) ? 1.0 : -1.0;
  const double s = std::sqrt(theta / std::sin(theta));
  const double w = tau * theta;
  const double Iv = bi(mu, w), Kv = bk(mu, w);
  const double tm = std::pow(tau, -mu), tp = std::pow(tau, mu);
  cplx c1 = 0.0, c2 = 0.0;  // value = c1 I + c2 K
  switch (kind) {
    case FerrersAsymKind::PNegMu: c1 = tm * s; break;
    case FerrersAsymKind::PPosMu:
      c1 = tp * s;
      c2 = tp * s * (2 / M_PI) * std::sin(M_PI * mu);
      break;
    case FerrersAsymKind::QNegMu:
      c2 = tm * s * std::exp(-sg * I * (M_PI * mu));
      c1 = -sg * tm * s * I * (M_PI / 2);
      break;
    case FerrersAsymKind::QPosMu:
      c2 = tp * s * std::cos(M_PI * mu);
      c1 = -sg * tp * s * I * (M_PI / 2);
      break;
    case FerrersAsymKind::PNegMuRefl: c2 = std::exp(M_PI * tau) / (M_PI * tp) * s; break;
    case FerrersAsymKind::QNegMuRefl: c2 = -sg * I * std::exp(M_PI * tau) / (2 * tp) * s; break;
  }
  AsymptoticApprox a;
  a.regime = AsymRegime::FerrersConical;
  a.value = c1 * Iv + c2 * Kv;
  // the two terms carry separate error factors; combine by absolute sum
  a.envelope_scale = std::abs(c1) * Iv + std::abs(c2) * Kv;
  return a;
}

namespace {

// Branch formula valid on (0, pi/2], evaluated at t; returns value and envelope.
std::pair<double, double> odd_branch(OddRegime regime, double p, double mu, double t) {
  const double s = std::sqrt(t / std::sin(t));
  if (regime == OddRegime::LargeNu) {
    const double w = (p + 0.5) * t;
    const double cd = std::cos(M_PI * (p - mu)) - 1.0, sd = std::sin(M_PI * (p - mu));
    const double f = std::pow(p, -mu) * s;
    return {f * (cd * bj(mu, w) + sd * by(mu, w)),
            f * (std::abs(cd) * env_j_real(mu, w) + std::abs(sd) * env_y_real(mu, w))};
  }
  const double w = p * t;
  const double f = std::pow(p, -mu) * s;
  const double k = std::exp(M_PI * p) * bk(mu, w) / M_PI, i = bi(mu, w);
  return {f * (k - i), f * (k + i)};
}

}  // namespace

AsymptoticApprox odd_ferrers_asymptotic(OddRegime regime, double param, double mu, double theta) {
  if (!(param > 0) || !(mu >= 0)) throw Error(ErrorCode::Domain, "need param > 0 and mu >= 0");
  if (!(theta > 0 && theta < M_PI)) throw Error(ErrorCode::Domain, "theta must lie in (0, pi)");
  AsymptoticApprox a;
  a.regime = AsymRegime::OddFerrers;
  if (theta <= M_PI / 2) {
    auto [v, e] = odd_branch(regime, param, mu, theta);
    a.value = v;
    a.envelope_scale = e;
  } else {
    auto [v, e] = odd_branch(regime, param, mu, M_PI - theta);
    a.value = -v;
    a.envelope_scale = e;
  }
  // second formula at pi/2 is minus the first
  a.branch_gap = 2 * std::abs(odd_branch(regime, param, mu, M_PI / 2).first);
  return a;
}

double empirical_order(const std::vector<std::pair<double, double>>& pts) {
  std::vector<std::pair<double, double>> lg;
  for (auto [p, e] : pts)
    if (p > 0 && e > 0 && std::isfinite(e)) lg.emplace_back(std::log(p), std::log(e));
  if (lg.size() < 3) throw Error(ErrorCode::InsufficientData, "need at least 3 positive (param, error) points");
  double mx = 0, my = 0;
  for (auto [x, y] : lg) {
    mx += x;
    my += y;
  }
  mx /= lg.size();
  my /= lg.size();
  double sxy = 0, sxx = 0;
  for (auto [x, y] : lg) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  if (sxx == 0) throw Error(ErrorCode::InsufficientData, "parameter values are all equal");
  return sxy / sxx;
}

}  // namespace cg
