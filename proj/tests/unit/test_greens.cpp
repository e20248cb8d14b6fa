#include <cmath>

#include "curvgreen/greens.hpp"
#include "curvgreen/specfun.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "util.hpp"

using namespace cg;
using tu::rel;

namespace {

WaveParams wp(ManifoldKind k, int d, double R, double beta, Sign s) { return WaveParams(ManifoldSpec{k, d, R}, beta, s); }

void check_table(GreensVariant v, int d, const oracle::CaseGreen* b, const oracle::CaseGreen* e, double tol) {
  for (const auto* c = b; c != e; ++c) {
    CAPTURE(variant_name(v));
    CAPTURE(c->R);
    CAPTURE(c->beta);
    CAPTURE(c->rho);
    CHECK(rel(green_value(v, variant_params(v, d, c->R, c->beta), c->rho).value, c->value) < tol);
  }
}

#define TABLE(v, d, arr, tol) check_table(v, d, std::begin(arr), std::end(arr), tol)

}  // namespace

TEST_CASE("wave parameters") {
  auto h = wp(ManifoldKind::Hyperboloid, 3, 1.0, 1.0, Sign::Plus);
  CHECK(h.mu() == 0.5);
  CHECK(h.nu().real() == doctest::Approx(-0.5 + std::sqrt(2.0)).epsilon(1e-14));
  CHECK(h.discriminant() == doctest::Approx(4 + 4).epsilon(1e-14));
  auto m = wp(ManifoldKind::Hyperboloid, 3, 1.0, 2.0, Sign::Minus);
  CHECK(m.discriminant() == doctest::Approx(4 - 16).epsilon(1e-14));
  CHECK(m.nu().imag() < 0);  // outgoing branch
  CHECK(m.nu().real() == doctest::Approx(-0.5).epsilon(1e-14));
  auto s = wp(ManifoldKind::Hypersphere, 4, 1.0, 0.9, Sign::Minus);
  CHECK(s.mu() == 1.0);
  CHECK(s.nu().real() == doctest::Approx(-0.5 + 0.5 * std::sqrt(4 * 0.81 + 9)).epsilon(1e-14));
}

TEST_CASE("variant names round trip") {
  for (int i = 0; i <= int(GreensVariant::LAPLACE_S); ++i) {
    auto v = static_cast<GreensVariant>(i);
    CHECK(variant_from_name(variant_name(v)) == v);
  }
  CHECK_THROWS_AS(variant_from_name("NOPE"), Error);
  CHECK(is_candidate(GreensVariant::SF_MINUS));
  CHECK(is_candidate(GreensVariant::FRAKA_MINUS));
  CHECK_FALSE(is_candidate(GreensVariant::S_PLUS));
  CHECK_FALSE(is_candidate(GreensVariant::H_MINUS));
}

TEST_CASE("Euclidean fundamental solutions against Bessel closed forms") {
  for (const auto& c : oracle::kEuclid) {
    CAPTURE(c.d);
    CHECK(rel(euclidean_green(Sign::Plus, c.d, c.beta, c.r).value, c.plus) < 1e-12);
    CHECK(rel(euclidean_green(Sign::Minus, c.d, c.beta, c.r).value, c.minus) < 1e-12);
  }
  CHECK(rel(euclidean_green(Sign::Plus, 3, 2.0, 0.7).value, std::exp(-1.4) / (4 * M_PI * 0.7)) < 1e-14);
  CHECK(rel(euclidean_green(Sign::Plus, 1, 2.0, 0.7).value, std::exp(-1.4) / 4.0) < 1e-14);
  CHECK_THROWS_AS(euclidean_green(Sign::Plus, 3, 1.0, 0.0), Error);
}

TEST_CASE("d = 1 Euclidean solution has unit derivative jump") {
  const double b = 1.3, h = 1e-6;
  double d = (euclidean_green(Sign::Plus, 1, b, 2 * h).value.real() - euclidean_green(Sign::Plus, 1, b, h).value.real()) / h;
  CHECK(-2 * d == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("closed forms in three dimensions") {
  TABLE(GreensVariant::H_PLUS, 3, oracle::kHPlus3, 1e-12);
  TABLE(GreensVariant::H_MINUS, 3, oracle::kHMinus3, 1e-12);
  TABLE(GreensVariant::S_PLUS, 3, oracle::kSPlus3, 1e-11);
  TABLE(GreensVariant::A_PLUS, 3, oracle::kAPlus3, 1e-11);
  TABLE(GreensVariant::SF_MINUS, 3, oracle::kSFMinus3, 1e-11);
  TABLE(GreensVariant::AF_MINUS, 3, oracle::kAFMinus3, 1e-11);
}

TEST_CASE("hyperboloid in two dimensions") {
  TABLE(GreensVariant::H_PLUS, 2, oracle::kHPlus2, 1e-12);
  // beta R = 1/2: degree -1/2, complete elliptic integral form
  TABLE(GreensVariant::H_MINUS, 2, oracle::kHMinus2Elliptic, 1e-12);
}

TEST_CASE("flat limit of the hyperboloid, d = 3") {
  const double R = 200, r = 0.5;
  cplx g = hyperboloid_green(Sign::Plus, wp(ManifoldKind::Hyperboloid, 3, R, 1.0, Sign::Plus), r / R).value;
  CHECK(rel(g, euclidean_green(Sign::Plus, 3, 1.0, r).value) < 0.01);
}

TEST_CASE("beta -> 0 on the hyperboloid gives the Laplace solution") {
  ManifoldSpec m{ManifoldKind::Hyperboloid, 3, 1.0};
  cplx g = hyperboloid_green(Sign::Plus, WaveParams(m, 1e-6, Sign::Plus), 0.8).value;
  cplx l = laplace_green(m, 0.8).value;
  CHECK(rel(g, l) < 1e-5);
  CHECK(rel(l, std::exp(-0.8) / (4 * M_PI * std::sinh(0.8))) < 1e-13);
}

TEST_CASE("sphere PLUS singular strength at the origin") {
  const double rho = 1e-3;
  auto w = wp(ManifoldKind::Hypersphere, 4, 1.0, 1.0, Sign::Plus);
  double want = std::tgamma(1.0) / (4 * M_PI * M_PI * rho * rho);
  CHECK(rel(sphere_green_plus(w, rho).value, want) < 0.01);
}

TEST_CASE("realness of the real variants") {
  for (int d : {2, 3, 4, 5}) {
    for (double rho : {0.3, 1.4, 2.6}) {
      for (auto v : {GreensVariant::H_PLUS, GreensVariant::S_PLUS, GreensVariant::A_PLUS, GreensVariant::SF_MINUS,
                     GreensVariant::AF_MINUS}) {
        CAPTURE(variant_name(v));
        CAPTURE(d);
        CAPTURE(rho);
        cplx g = green_value(v, variant_params(v, d, 1.0, 0.83), rho).value;
        CHECK(std::abs(g.imag()) <= 1e-10 * std::abs(g));
      }
    }
  }
}

TEST_CASE("antipodal variants are odd about pi/2") {
  for (auto v : {GreensVariant::A_PLUS, GreensVariant::AF_MINUS, GreensVariant::FRAKA_MINUS}) {
    for (int d : {3, 4}) {
      auto w = variant_params(v, d, 1.0, 0.77);
      cplx a = green_value(v, w, 0.6).value, b = green_value(v, w, M_PI - 0.6).value;
      CAPTURE(variant_name(v));
      CHECK(std::abs(a + b) <= 1e-12 * std::abs(a));
      CHECK(std::abs(green_value(v, w, M_PI / 2).value) <= 1e-12 * std::abs(a));
    }
  }
}

TEST_CASE("hyperboloid decay at large distance") {
  for (auto v : {GreensVariant::H_PLUS, GreensVariant::H_MINUS}) {
    auto w = variant_params(v, 3, 1.0, 1.5);
    double prev = INFINITY;
    for (double rho = 5; rho <= 30; rho += 2.5) {
      double a = std::abs(green_value(v, w, rho).value);
      CHECK(a < prev);
      prev = a;
    }
    CHECK(prev < 1e-10);
  }
}

TEST_CASE("sphere MINUS candidates carry diagnostics") {
  auto w = wp(ManifoldKind::Hypersphere, 3, 1.0, 0.8, Sign::Minus);
  auto sf = sphere_candidate_minus(Candidate::SF, w, 0.7);
  CHECK(sf.candidate);
  CHECK(rel(sf.normalization, -1 / 0.64) < 1e-14);
  auto fr = sphere_candidate_minus(Candidate::FRAK, w, 0.7);
  cplx want = -(1 / 0.64) * (1.0 - std::exp(cplx(0, M_PI) * (w.nu() - w.mu())));
  CHECK(rel(fr.normalization, want) < 1e-12);
  CHECK(std::abs(fr.eval.value.imag()) > 0);
  CHECK(sf.pole_distance > 0);
}

TEST_CASE("eigenvalue poles") {
  auto w = wp(ManifoldKind::Hypersphere, 3, 1.0, 1.0, Sign::Minus);
  auto p = eigenvalue_poles(w, 3);
  REQUIRE(p.size() == 3);
  CHECK(p[0] * p[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(p[1] * p[1] == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(p[2] * p[2] == doctest::Approx(15.0).epsilon(1e-12));
  CHECK(eigenvalue_poles(w, 0).empty());
  auto q = eigenvalue_poles(wp(ManifoldKind::Hypersphere, 4, 2.0, 1.0, Sign::Minus), 6);
  for (size_t i = 1; i < q.size(); ++i) CHECK(q[i] > q[i - 1]);
  try {
    eigenvalue_poles(wp(ManifoldKind::Hypersphere, 3, 1.0, 1.0, Sign::Plus), 2);
    FAIL("expected WRONG_VARIANT");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongVariant);
  }
}

TEST_CASE("evaluation refuses beta at an eigenvalue pole") {
  auto w = wp(ManifoldKind::Hypersphere, 3, 1.0, std::sqrt(8.0), Sign::Minus);
  try {
    sphere_candidate_minus(Candidate::SF, w, 0.7);
    FAIL("expected EIGENVALUE_POLE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EigenvaluePole);
  }
}

TEST_CASE("Laplace solutions") {
  ManifoldSpec s2{ManifoldKind::Hypersphere, 2, 1.0};
  CHECK(rel(laplace_green(s2, 0.9).value, std::log(1 / std::tan(0.45)) / (2 * M_PI)) < 1e-13);
  ManifoldSpec s3{ManifoldKind::Hypersphere, 3, 1.0};
  for (const auto& c : oracle::kLaplaceS3) CHECK(rel(laplace_green(s3, c.rho).value, c.value) < 1e-10);
  ManifoldSpec h3{ManifoldKind::Hyperboloid, 3, 1.0};
  CHECK(std::abs(laplace_green(h3, 30.0).value) < 1e-20);
}

TEST_CASE("antipodal PLUS approaches Laplace as beta -> 0") {
  ManifoldSpec s3{ManifoldKind::Hypersphere, 3, 1.0};
  cplx a = sphere_green_antipodal_plus(WaveParams(s3, 1e-6, Sign::Plus), 1.1).value;
  CHECK(rel(a, laplace_green(s3, 1.1).value) < 1e-5);
}

TEST_CASE("domain errors") {
  auto w = wp(ManifoldKind::Hyperboloid, 3, 1.0, 1.0, Sign::Plus);
  CHECK_THROWS_AS(hyperboloid_green(Sign::Plus, w, 0.0), Error);
  CHECK_THROWS_AS(hyperboloid_green(Sign::Plus, w, -1.0), Error);
  auto s = wp(ManifoldKind::Hypersphere, 3, 1.0, 1.0, Sign::Plus);
  CHECK_THROWS_AS(sphere_green_plus(s, M_PI), Error);
  CHECK_THROWS_AS(WaveParams(ManifoldSpec{ManifoldKind::Hypersphere, 3, 1.0}, -1.0, Sign::Plus), Error);
}
