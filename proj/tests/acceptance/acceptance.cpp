// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "curvgreen/expansions.hpp"
#include "curvgreen/greens.hpp"
#include "curvgreen/verify.hpp"

using namespace cg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures with a short reason; keeps the worst measured value.
struct Tally {
  int total = 0, failed = 0;
  double worst = 0.0;
  std::string first_fail;

  void add(bool ok, double measured, const std::string& what) {
    ++total;
    if (std::isfinite(measured)) worst = std::max(worst, measured);
    if (!ok) {
      ++failed;
      if (first_fail.empty()) first_fail = what;
    }
  }
  void add(const CheckReport& r) {
    ++total;
    if (r.status == CheckStatus::FAIL) {
      ++failed;
      if (first_fail.empty()) first_fail = r.check_id + " (" + r.notes + ")";
    }
  }
  Outcome outcome(const char* unit = nullptr) const {
    char buf[160];
    if (unit)
      std::snprintf(buf, sizeof buf, "%d/%d ok, worst %s %.3g", total - failed, total, unit, worst);
    else
      std::snprintf(buf, sizeof buf, "%d/%d ok", total - failed, total);
    std::string s = buf;
    if (failed) s += "; first failure: " + first_fail;
    return {failed == 0 && total > 0, s};
  }
};

double rel(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }

WaveParams wp(ManifoldKind k, int d, double R, double beta, Sign s) { return WaveParams(ManifoldSpec{k, d, R}, beta, s); }

// Runs a block, turning an escaped exception into a failure.
Outcome guarded(const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

Outcome c1_closed_form() {
  Tally t;
  const auto t0 = std::chrono::steady_clock::now();
  for (double beta : {0.1, 0.5, 1.0, 2.0, 5.0})
    for (double rho : {0.05, 0.3, 1.0, 3.0, 8.0}) {
      const double R = 1.0;
      const double want = std::exp(-rho * std::sqrt(1 + beta * beta * R * R)) / (4 * M_PI * R * std::sinh(rho));
      double e = rel(hyperboloid_green(Sign::Plus, wp(ManifoldKind::Hyperboloid, 3, R, beta, Sign::Plus), rho).value,
                     want);
      t.add(e < 1e-10, e, "beta=" + std::to_string(beta) + " rho=" + std::to_string(rho));
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  t.add(secs < 1.0, 0.0, "runtime " + std::to_string(secs) + " s");
  Outcome o = t.outcome("rel err");
  o.detail += ", " + std::to_string(secs) + " s";
  return o;
}

const GreensVariant kCurved[] = {GreensVariant::H_PLUS,   GreensVariant::H_MINUS,    GreensVariant::S_PLUS,
                                 GreensVariant::A_PLUS,   GreensVariant::SF_MINUS,   GreensVariant::FRAK_MINUS,
                                 GreensVariant::AF_MINUS, GreensVariant::FRAKA_MINUS};

Outcome c2_ode() {
  Tally t;
  for (auto v : kCurved)
    for (int d : {2, 3, 4})
      for (double b : {0.3, 2.3}) {
        auto r = check_ode(v, d, b);
        t.add(r);
        t.worst = std::max(t.worst, r.measured);
      }
  return t.outcome("residual");
}

Outcome c3_normalization() {
  Tally t;
  for (auto v : {GreensVariant::S_PLUS, GreensVariant::SF_MINUS, GreensVariant::A_PLUS, GreensVariant::FRAK_MINUS})
    for (int d : {3, 4}) {
      auto r = check_normalization(v, variant_params(v, d, 1.0, 0.7));
      t.add(r);
      t.worst = std::max(t.worst, r.measured);
    }
  return t.outcome("rel dev");
}

Outcome c4_mellin() {
  Tally t;
  struct P {
    double a;
    cplx nu;
    double mu;
  };
  for (P p : {P{1.0, 0.0, 0.0}, P{0.8, 1.7, 0.6}, P{2.1, 2.3, 1.5}}) {
    auto r = check_mellin(p.a, p.nu, p.mu);
    t.add(r);
    t.worst = std::max(t.worst, r.measured);
  }
  // the trivial case is exactly 2
  t.add(std::abs(mellin_closed(1.0, 0.0, 0.0) - 2.0) < 1e-14, 0.0, "closed form at (1, 0, 0) is not 2");
  return t.outcome("rel err");
}

Outcome c5_addition() {
  Tally t;
  const FerrersAddKind fk[] = {FerrersAddKind::PmPp, FerrersAddKind::PmQp,   FerrersAddKind::PmPm,
                               FerrersAddKind::PmQm, FerrersAddKind::PmPmmx, FerrersAddKind::QmPmmx};
  const double th[][2] = {{0.5, 0.9}, {0.3, 1.2}, {1.0, 1.4}};
  for (auto k : fk)
    for (auto& p : th)
      for (double g : {0.4, 1.0, 2.2})
        for (double nu : {2.3, 0.7})
          for (double mu : {1.1, 0.5}) {
            auto s = addition_ferrers(k, nu, mu, TwoPointConfig::spherical(p[0], p[1], g), 80);
            double e = s.rel_err.value_or(INFINITY);
            t.add(e < 1e-7, e, std::string(ferrers_add_name(k)) + " nu=" + std::to_string(nu));
          }
  const double rr[][2] = {{0.5, 1.2}, {0.2, 2.0}};
  for (auto k : {LegendreAddKind::P, LegendreAddKind::Q})
    for (auto& p : rr)
      for (double g : {0.4, 1.0, 2.2})
        for (cplx nu : {cplx(1.0), cplx(1.7), cplx(-0.5, 2.0)})
          for (double mu : {0.0, 0.5, 1.0}) {
            auto s = addition_legendre(k, nu, mu, TwoPointConfig::hyperbolic(p[0], p[1], g), 80);
            double e = s.rel_err.value_or(INFINITY);
            t.add(e < 1e-7, e, std::string(k == LegendreAddKind::P ? "P" : "Q") + " legendre");
          }
  // boundary tan(a/2) tan(b/2) = 1
  bool refused = false;
  try {
    addition_ferrers(FerrersAddKind::PmQp, 2.3, 1.1, TwoPointConfig::spherical(M_PI / 2, M_PI / 2, 1.0), 80);
  } catch (const Error& e) {
    refused = e.code() == ErrorCode::DomainViolation;
  }
  t.add(refused, 0.0, "boundary case accepted");
  return t.outcome("rel err");
}

Outcome c6_gegenbauer() {
  Tally t;
  for (int d : {3, 4})
    for (auto v : {GreensVariant::H_PLUS, GreensVariant::H_MINUS, GreensVariant::S_PLUS, GreensVariant::A_PLUS,
                   GreensVariant::SF_MINUS, GreensVariant::FRAK_MINUS})
      for (double beta : {0.7, 1.9}) {
        const bool hyp = variant_manifold(v) == ManifoldKind::Hyperboloid;
        auto c = hyp ? TwoPointConfig::hyperbolic(0.6, 1.1, 0.7) : TwoPointConfig::spherical(0.4, 0.8, 1.2);
        auto s = green_expansion(v, variant_params(v, d, 1.0, beta), c, 40);
        double e = s.rel_err.value_or(INFINITY);
        t.add(e < (d == 3 ? 1e-7 : 1e-6), e, std::string(variant_name(v)) + " d=" + std::to_string(d));
      }
  return t.outcome("rel err");
}

Outcome c7_fourier() {
  Tally t;
  for (auto v : {GreensVariant::H_PLUS, GreensVariant::H_MINUS, GreensVariant::S_PLUS, GreensVariant::A_PLUS,
                 GreensVariant::SF_MINUS, GreensVariant::FRAK_MINUS}) {
    const bool hyp = variant_manifold(v) == ManifoldKind::Hyperboloid;
    auto c = hyp ? TwoPointConfig::hyperbolic(0.6, 1.1, 0.7) : TwoPointConfig::spherical(0.4, 0.8, 1.2);
    auto s = fourier_2d(v, variant_params(v, 2, 1.0, 0.7), c, 80);
    double e = s.rel_err.value_or(INFINITY);
    t.add(e < 1e-7, e, variant_name(v));
  }
  // beta = 1/(2R) on the hyperboloid, against K by quadrature
  for (double R : {1.0, 2.0}) {
    auto c = TwoPointConfig::hyperbolic(0.6, 1.1, 0.7);
    auto s = fourier_2d(GreensVariant::H_MINUS, variant_params(GreensVariant::H_MINUS, 2, R, 0.5 / R), c, 80);
    const double k = 1 / std::cosh(c.composite / 2);
    std::function<double(double)> f = [&](double x) { return 1 / std::sqrt(1 - k * k * std::sin(x) * std::sin(x)); };
    const double K = quad(f, 0.0, M_PI / 2, 1e-14).value.real();
    double e = rel(s.value, k * K / (2 * M_PI));
    t.add(e < 1e-7, e, "elliptic identity R=" + std::to_string(R));
  }
  return t.outcome("rel err");
}

Outcome c8_asymptotic() {
  Tally t;
  std::string fits;
  for (auto f : {AsymFamily::LegendreConical, AsymFamily::FerrersLargeNu, AsymFamily::FerrersConical}) {
    auto r = check_asymptotic_order(f);
    t.add(r);
    fits += std::string(fits.empty() ? "" : ", ") + asym_family_name(f) + " " + std::to_string(r.measured);
  }
  Outcome o = t.outcome();
  o.detail = "exponents " + fits + (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome c9_flat() {
  Tally t;
  const std::vector<double> Rs{10, 30, 100, 300};
  for (auto v : {GreensVariant::H_PLUS, GreensVariant::H_MINUS, GreensVariant::S_PLUS, GreensVariant::A_PLUS,
                 GreensVariant::FRAK_MINUS})
    for (auto& r : check_flat_limit(v, 3, 1.0, 0.5, Rs)) t.add(r);
  auto sf = check_flat_limit(GreensVariant::SF_MINUS, 3, 0.7371, 0.5, Rs);
  bool osc = false;
  for (auto& r : sf) {
    t.add(r);
    if (r.check_id.find("/oscillation") != std::string::npos) osc = r.status == CheckStatus::PASS;
  }
  t.add(osc, 0.0, "SF_MINUS oscillation not detected");
  return t.outcome();
}

Outcome c10_beta_zero() {
  Tally t;
  const std::vector<double> bs{1e-3, 1e-4, 1e-5, 1e-6, 1e-7};
  for (auto v : {GreensVariant::A_PLUS, GreensVariant::AF_MINUS, GreensVariant::FRAKA_MINUS})
    for (auto& r : check_beta_zero_limit(v, 3, 1.0, 0.9, bs)) t.add(r);
  for (auto v : {GreensVariant::S_PLUS, GreensVariant::SF_MINUS})
    for (int d : {3, 4})
      for (auto& r : check_beta_zero_limit(v, d, 1.0, 0.9, bs)) t.add(r);
  return t.outcome();
}

Outcome c11_eps_ball() {
  Tally t;
  for (auto v : {GreensVariant::S_PLUS, GreensVariant::A_PLUS, GreensVariant::SF_MINUS})
    for (int d : {3, 4}) {
      auto r = check_eps_ball(v, variant_params(v, d, 1.0, 0.7), 1e-2);
      t.add(r);
      t.add(r.measured <= 1e-3, r.measured, r.check_id);
    }
  return t.outcome("gap");
}

Outcome c12_connection() {
  Tally t;
  for (unsigned seed : {20240917u, 7u, 99u}) {
    auto r = check_connection_suite(seed, 40);
    t.add(r);
    t.worst = std::max(t.worst, r.measured);
  }
  return t.outcome("rel err");
}

}  // namespace

int main() {
  struct Item {
    const char* name;
    Outcome (*run)();
  };
  const Item items[] = {
      {"closed-form hyperboloid d=3", c1_closed_form},
      {"ODE residuals", c2_ode},
      {"normalization integrals", c3_normalization},
      {"Mellin integral", c4_mellin},
      {"addition theorems", c5_addition},
      {"Gegenbauer Green's expansions", c6_gegenbauer},
      {"d=2 Fourier expansions", c7_fourier},
      {"asymptotic orders", c8_asymptotic},
      {"flat-space limits", c9_flat},
      {"beta -> 0 limits", c10_beta_zero},
      {"eps-ball constraint", c11_eps_ball},
      {"connection formulas", c12_connection},
  };
  int failed = 0, n = 0;
  for (const auto& it : items) {
    ++n;
    Outcome o = guarded(it.run);
    if (!o.pass) ++failed;
    std::printf("CRITERION %2d %s: %s [%s]\n", n, o.pass ? "PASS" : "FAIL", it.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", n - failed, n);
  return failed ? 1 : 0;
}
