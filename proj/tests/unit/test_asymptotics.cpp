#include <cmath>
#include <vector>

#include "curvgreen/asymptotics.hpp"
#include "curvgreen/legendre.hpp"
#include "doctest.h"
#include "util.hpp"

using namespace cg;
using tu::rel;

namespace {

double norm_err(const AsymptoticApprox& a, cplx exact) { return std::abs(a.value - exact) / a.envelope_scale; }

// Envelope-normalized error of a Ferrers kind at parameter p.
double ferrers_err(bool conical, FerrersAsymKind k, double p, double mu, double th) {
  const cplx nu = conical ? cplx(-0.5, p) : cplx(p, 0);
  auto x = FerrersArg::from_theta(th);
  auto a = conical ? ferrers_conical_large_tau(k, p, mu, th) : ferrers_large_nu(k, p, mu, th);
  cplx exact;
  switch (k) {
    case FerrersAsymKind::PNegMu: exact = ferrers_p(nu, -mu, x).value; break;
    case FerrersAsymKind::PPosMu: exact = ferrers_p(nu, mu, x).value; break;
    case FerrersAsymKind::QNegMu: exact = ferrers_q(nu, -mu, x).value; break;
    case FerrersAsymKind::QPosMu: exact = ferrers_q(nu, mu, x).value; break;
    case FerrersAsymKind::PNegMuRefl: exact = ferrers_p(nu, -mu, x.reflected()).value; break;
    case FerrersAsymKind::QNegMuRefl: exact = ferrers_q(nu, -mu, x.reflected()).value; break;
  }
  return norm_err(a, exact);
}

double conical_err(ConicalAsymKind k, double tau, double mu, double r) {
  auto z = HyperbolicArg::from_r(r);
  const cplx nu(-0.5, tau), nub(-0.5, -tau);
  cplx exact;
  switch (k) {
    case ConicalAsymKind::PNeg: exact = legendre_p(nu, -mu, z).value; break;
    case ConicalAsymKind::PPos: exact = legendre_p(nu, mu, z).value; break;
    case ConicalAsymKind::QPlusBranch: exact = legendre_q(nu, mu, z).value; break;
    case ConicalAsymKind::QMinusBranch: exact = legendre_q(nub, mu, z).value; break;
  }
  return norm_err(conical_large_tau(k, tau, mu, r), exact);
}

const FerrersAsymKind kFerrersKinds[] = {FerrersAsymKind::PNegMu,     FerrersAsymKind::PPosMu,
                                         FerrersAsymKind::QNegMu,     FerrersAsymKind::QPosMu,
                                         FerrersAsymKind::PNegMuRefl, FerrersAsymKind::QNegMuRefl};
const ConicalAsymKind kConicalKinds[] = {ConicalAsymKind::PNeg, ConicalAsymKind::PPos, ConicalAsymKind::QPlusBranch,
                                         ConicalAsymKind::QMinusBranch};

}  // namespace

TEST_CASE("Legendre large degree, mu = 0") {
  auto a = legendre_large_nu(LegendreAsymKind::PNegMu, 50, 0, 1.0);
  CHECK(rel(a.value, legendre_p(50.0, 0.0, HyperbolicArg::from_r(1.0)).value) < 0.05);
}

TEST_CASE("Legendre large degree error halves when nu doubles") {
  for (auto k : {LegendreAsymKind::PNegMu, LegendreAsymKind::QMu}) {
    for (double mu : {0.0, 1.0}) {
      auto e = [&](double nu) {
        auto z = HyperbolicArg::from_r(0.9);
        cplx exact = k == LegendreAsymKind::PNegMu ? legendre_p(nu, -mu, z).value : legendre_q(nu, mu, z).value;
        return rel(legendre_large_nu(k, nu, mu, 0.9).value, exact);
      };
      const double f = e(50) / e(100);
      CAPTURE(mu);
      CHECK(f >= 1.5);
      CHECK(f <= 2.5);
    }
  }
}

TEST_CASE("Legendre large degree at mu = 1/2 against the elementary form") {
  const double nu = 80, r = 0.7;
  auto a = legendre_large_nu(LegendreAsymKind::PNegMu, nu, 0.5, r);
  cplx exact = half_odd_eval(HalfOddKind::P, nu, -1, HyperbolicArg::from_r(r)).value;
  CHECK(rel(a.value, exact) < 3.0 / nu);
}

TEST_CASE("conical P at tau = 40") {
  CHECK(conical_err(ConicalAsymKind::PNeg, 40, 1, 0.8) < 3.0 / 40);
}

TEST_CASE("conical Q minus branch is Hankel-like with the i pi / 2 prefactor") {
  auto a = conical_large_tau(ConicalAsymKind::QMinusBranch, 20, 0, 1.0);
  cplx exact = legendre_q(cplx(-0.5, -20), 0.0, HyperbolicArg::from_r(1.0)).value;
  CHECK(std::signbit(a.value.imag()) == std::signbit(exact.imag()));
  CHECK(std::abs(a.value - exact) / a.envelope_scale < 3.0 / 20);
}

TEST_CASE("conical error halves when tau doubles") {
  // pointwise errors oscillate with the phase, so take the sup over an
  // argument window wider than one period
  auto sup = [](ConicalAsymKind k, double tau) {
    double m = 0;
    for (int i = 0; i <= 40; ++i) m = std::max(m, conical_err(k, tau, 1.0, 0.6 + 0.01 * i));
    return m;
  };
  for (auto k : kConicalKinds) {
    CAPTURE(int(k));
    const double f = sup(k, 50) / sup(k, 100);
    CHECK(f >= 1.5);
    CHECK(f <= 2.5);
  }
}

TEST_CASE("Ferrers large degree examples") {
  CHECK(ferrers_err(false, FerrersAsymKind::PNegMu, 60, 0.5, 0.9) < 3.0 / 60);
  // Q at mu = 0 against -(pi/2) sqrt(theta / sin theta) Y0((nu+1/2) theta)
  const double nu = 45, th = 1.1;
  cplx exact = ferrers_q(nu, 0.0, FerrersArg::from_theta(th)).value;
  auto a = ferrers_large_nu(FerrersAsymKind::QPosMu, nu, 0, th);
  CHECK(std::abs(a.value - exact) / a.envelope_scale < 3.0 / nu);
  // reflected kind tracks the cos / sin (pi (nu - mu)) oscillation
  for (double n : {30.0, 30.25, 30.5}) {
    CAPTURE(n);
    CHECK(ferrers_err(false, FerrersAsymKind::PNegMuRefl, n, 0.5, 0.8) < 3.0 / n);
  }
}

TEST_CASE("Ferrers large degree refuses theta near pi") {
  CHECK_THROWS_AS(ferrers_large_nu(FerrersAsymKind::PNegMu, 40, 0.5, M_PI - 0.05), Error);
  CHECK_THROWS_AS(ferrers_large_nu(FerrersAsymKind::PNegMu, 40, 0.5, 0.0), Error);
}

TEST_CASE("Ferrers conical reflected P grows like e^{pi tau}") {
  const double tau = 15, mu = 1, th = 0.7;
  auto a = ferrers_conical_large_tau(FerrersAsymKind::PNegMuRefl, tau, mu, th);
  cplx exact = ferrers_p_reflected(cplx(-0.5, tau), mu, FerrersArg::from_theta(th)).value;
  CHECK(rel(a.value, exact) < 3.0 / tau);
}

TEST_CASE("uniform bound C / param with C <= 5") {
  const double C = 5;
  for (double p : {25.0, 50.0, 100.0}) {
    for (double mu : {0.0, 0.5, 1.0}) {
      for (double th : {0.3, 1.2, 2.5}) {
        for (auto k : kFerrersKinds) {
          CAPTURE(p);
          CAPTURE(mu);
          CAPTURE(th);
          CAPTURE(int(k));
          CHECK(ferrers_err(false, k, p, mu, th) <= C / p);
          CHECK(ferrers_err(true, k, p, mu, th) <= C / p);
        }
      }
      for (double r : {0.3, 0.8, 1.5}) {
        for (auto k : kConicalKinds) {
          CAPTURE(p);
          CAPTURE(mu);
          CAPTURE(r);
          CAPTURE(int(k));
          CHECK(conical_err(k, p, mu, r) <= C / p);
        }
      }
    }
  }
}

TEST_CASE("conical plus and minus Q kinds are conjugate") {
  auto a = conical_large_tau(ConicalAsymKind::QPlusBranch, 30, 0.0, 0.6);
  auto b = conical_large_tau(ConicalAsymKind::QMinusBranch, 30, 0.0, 0.6);
  // at mu = 0 the phase factors are 1 and the two kinds are mirror images
  CHECK(rel(a.value, std::conj(b.value)) < 1e-14);
}

TEST_CASE("odd Ferrers approximant") {
  for (double th : {0.4, 1.0, 1.4}) {
    // pi - mirror need not round back to th; use it as is
    const double mirror = M_PI - th;
    auto a = odd_ferrers_asymptotic(OddRegime::LargeNu, 40, 0.5, M_PI - mirror);
    auto b = odd_ferrers_asymptotic(OddRegime::LargeNu, 40, 0.5, mirror);
    CHECK(a.value == -b.value);
  }
  auto a = odd_ferrers_asymptotic(OddRegime::LargeNu, 40, 0.5, 0.6);
  cplx exact = odd_ferrers_f(40.0, -0.5, FerrersArg::from_theta(0.6)).value;
  CHECK(rel(a.value, exact) < 3.0 / 40);
  // branch continuity at pi/2
  auto m = odd_ferrers_asymptotic(OddRegime::LargeNu, 40, 0.5, M_PI / 2);
  CHECK(m.branch_gap <= 2 * 5.0 / 40 * m.envelope_scale);
}

TEST_CASE("odd Ferrers conical is dominated by the e^{pi tau} K term") {
  const double tau = 12, th = 0.5;
  auto a = odd_ferrers_asymptotic(OddRegime::Conical, tau, 0.5, th);
  cplx exact = odd_ferrers_f(cplx(-0.5, tau), -0.5, FerrersArg::from_theta(th)).value;
  CHECK(rel(a.value, exact) < 3.0 / tau);
}

TEST_CASE("empirical order") {
  CHECK(empirical_order({{10, 0.1}, {20, 0.05}, {40, 0.025}}) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(empirical_order({{10, 0.3}, {20, 0.3}, {40, 0.3}})) < 1e-12);
  CHECK_THROWS_AS(empirical_order({{10, 0.1}, {20, 0.05}}), Error);
  std::vector<std::pair<double, double>> pts;
  for (double p : {25.0, 50.0, 100.0}) pts.emplace_back(p, conical_err(ConicalAsymKind::PNeg, p, 1.0, 0.8));
  const double s = empirical_order(pts);
  CHECK(s >= -1.4);
  CHECK(s <= -0.6);
}
