#include "curvgreen/expansions.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "curvgreen/legendre.hpp"
#include "curvgreen/specfun.hpp"

namespace cg {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr double kStopRel = 1e-15;

// Sums term(0..n_max); stops after 3 consecutive terms below 1e-15 |sum|.
template <class F>
SeriesReport run_series(F&& term, int n_max) {
  if (n_max < 0) throw Error(ErrorCode::Domain, "n_max must be nonnegative");
  SeriesReport s;
  cplx sum = 0.0;
  int small = 0;
  std::vector<double> mags;
  for (int n = 0; n <= n_max; ++n) {
    cplx t = term(n);
    sum += t;
    double m = std::abs(t);
    mags.push_back(m);
    s.terms = n + 1;
    s.last_term_mag = m;
    if (m < kStopRel * std::abs(sum)) {
      if (++small >= 3) break;
    } else {
      small = 0;
    }
  }
  if (s.terms == n_max + 1 && mags.size() >= 5) {
    bool nondec = true;
    for (size_t i = mags.size() - 4; i < mags.size(); ++i)
      if (mags[i] < mags[i - 1]) nondec = false;
    s.nonconvergent = nondec && mags.back() > 0;
  }
  s.value = sum;
  return s;
}

void finish(SeriesReport& s, cplx pre, cplx constant, std::optional<cplx> ref) {
  s.value = constant + pre * s.value;
  s.last_term_mag *= std::abs(pre);
  if (ref) {
    s.reference_value = *ref;
    double den = std::abs(*ref);
    s.rel_err = std::abs(s.value - *ref) / (den > 0 ? den : 1.0);
  }
}

// (n + mu) C_n^mu(x), or eps_n T_n(x) at mu = 0. The matching outer factor is
// 2^mu Gamma(mu) (1 at mu = 0).
double geg_weight(int n, double mu, double x) {
  if (mu == 0) return (n == 0 ? 1.0 : 2.0) * chebyshev_t(n, x);
  return (n + mu) * gegenbauer_c(n, mu, x);
}
double geg_outer(double mu) { return mu == 0 ? 1.0 : std::pow(2.0, mu) * std::tgamma(mu); }

double sgn(int n) { return (n % 2) ? -1.0 : 1.0; }

FerrersArg fa(double th) { return FerrersArg::from_theta(th); }
HyperbolicArg ha(double r) { return HyperbolicArg::from_r(r); }

void need_kind(const TwoPointConfig& c, ManifoldKind k) {
  if (c.kind != k) throw Error(ErrorCode::Domain, "two-point configuration is for a different manifold");
}

void need_nu(cplx nu) {
  if (nu.imag() == 0 && nu.real() < 0 && std::floor(nu.real()) == nu.real())
    throw Error(ErrorCode::Domain, "nu must not be a negative integer");
}

void need_mu(double mu, bool allow_zero) {
  if (!(mu > -0.5)) throw Error(ErrorCode::Domain, "need Re mu > -1/2");
  if (!allow_zero && mu == 0) throw Error(ErrorCode::Domain, "mu must be nonzero here");
}

// Fills domain_ok and est_ratio; refuses unless relaxed.
void sphere_domain(SeriesReport& s, const TwoPointConfig& c, bool needs_distinct, const SeriesOptions& o) {
  DomainCheck dc = convergence_domain(c.lt, c.gt, needs_distinct);
  s.domain_ok = dc.domain_ok;
  s.est_ratio = dc.est_ratio;
  if (!dc.domain_ok && !o.relaxed)
    throw Error(ErrorCode::DomainViolation,
                needs_distinct ? "need tan(theta_</2) tan(theta_>/2) < 1 and theta != theta'"
                               : "need tan(theta_</2) tan(theta_>/2) < 1");
}

void hyper_domain(SeriesReport& s, const TwoPointConfig& c, const SeriesOptions& o) {
  s.domain_ok = c.distinct;
  s.est_ratio = std::tanh(c.lt / 2) / std::tanh(c.gt / 2);
  if (!c.distinct && !o.relaxed) throw Error(ErrorCode::DomainViolation, "need r != r'");
}

cplx fp(cplx nu, double m, double th) { return ferrers_p(nu, m, fa(th)).value; }
cplx fq(cplx nu, double m, double th) { return ferrers_q(nu, m, fa(th)).value; }
cplx fp_mx(cplx nu, double m, double th) { return ferrers_p(nu, m, fa(th).reflected()).value; }
cplx fq_mx(cplx nu, double m, double th) { return ferrers_q(nu, m, fa(th).reflected()).value; }

}  // namespace

TwoPointConfig TwoPointConfig::hyperbolic(double r, double rp, double gamma) {
  if (!(r > 0 && rp > 0)) throw Error(ErrorCode::Domain, "r and r' must be positive");
  TwoPointConfig c;
  c.kind = ManifoldKind::Hyperboloid;
  c.a = r;
  c.b = rp;
  c.gamma = gamma;
  c.lt = std::min(r, rp);
  c.gt = std::max(r, rp);
  c.distinct = (r != rp);
  // cosh(rho) - 1 = 2 sinh^2((r-r')/2) + 2 sinh r sinh r' sin^2(gamma/2)
  double sh = std::sinh((r - rp) / 2), sg = std::sin(gamma / 2);
  double t = 2 * sh * sh + 2 * std::sinh(r) * std::sinh(rp) * sg * sg;
  c.composite = std::log1p(t + std::sqrt(t * (t + 2)));
  return c;
}

TwoPointConfig TwoPointConfig::spherical(double th, double thp, double gamma) {
  if (!(th > 0 && th < M_PI && thp > 0 && thp < M_PI)) throw Error(ErrorCode::Domain, "theta must lie in (0, pi)");
  TwoPointConfig c;
  c.kind = ManifoldKind::Hypersphere;
  c.a = th;
  c.b = thp;
  c.gamma = gamma;
  c.lt = std::min(th, thp);
  c.gt = std::max(th, thp);
  c.distinct = (th != thp);
  // sin^2(Theta/2) = sin^2((theta-theta')/2) + sin theta sin theta' sin^2(gamma/2)
  double sd = std::sin((th - thp) / 2), sg = std::sin(gamma / 2);
  double u = sd * sd + std::sin(th) * std::sin(thp) * sg * sg;
  c.composite = 2 * std::asin(std::sqrt(std::clamp(u, 0.0, 1.0)));
  return c;
}

TwoPointConfig TwoPointConfig::euclidean(double r, double rp, double gamma) {
  if (!(r > 0 && rp > 0)) throw Error(ErrorCode::Domain, "r and r' must be positive");
  TwoPointConfig c;
  c.kind = ManifoldKind::Euclidean;
  c.a = r;
  c.b = rp;
  c.gamma = gamma;
  c.lt = std::min(r, rp);
  c.gt = std::max(r, rp);
  c.distinct = (r != rp);
  double sg = std::sin(gamma / 2);
  c.composite = std::sqrt((r - rp) * (r - rp) + 4 * r * rp * sg * sg);
  return c;
}

DomainCheck convergence_domain(double lt, double gt, bool needs_distinct) {
  if (lt > gt) std::swap(lt, gt);
  DomainCheck d;
  double tt = std::tan(lt / 2) * std::tan(gt / 2);
  d.est_ratio = tt;
  if (needs_distinct) d.est_ratio = std::max(tt, std::tan(lt / 2) / std::tan(gt / 2));
  // tan(a/2) tan(b/2) < 1 iff a + b < pi; the sum is exact at the boundary
  d.domain_ok = (lt + gt < M_PI) && (!needs_distinct || lt != gt);
  return d;
}

const char* ferrers_add_name(FerrersAddKind k) {
  switch (k) {
    case FerrersAddKind::PmPp: return "PmPp";
    case FerrersAddKind::PmQp: return "PmQp";
    case FerrersAddKind::PmPm: return "PmPm";
    case FerrersAddKind::PmQm: return "PmQm";
    case FerrersAddKind::PmPmmx: return "PmPmmx";
    case FerrersAddKind::QmPmmx: return "QmPmmx";
  }
  return "?";
}

SeriesReport addition_legendre(LegendreAddKind kind, cplx nu, double mu, const TwoPointConfig& c, int n_max,
                               const SeriesOptions& opt) {
  need_kind(c, ManifoldKind::Hyperboloid);
  need_nu(nu);
  need_mu(mu, true);
  const double x = std::cos(c.gamma);
  SeriesReport s;
  hyper_domain(s, c, opt);
  const bool q = (kind == LegendreAddKind::Q);
  SeriesReport t = run_series(
      [&](int n) {
        double m = mu + n;
        cplx a = legendre_p(nu, -m, ha(c.lt)).value;
        cplx b = q ? legendre_q(nu, m, ha(c.gt)).value : legendre_p(nu, m, ha(c.gt)).value;
        return sgn(n) * geg_weight(n, mu, x) * a * b;
      },
      n_max);
  t.domain_ok = s.domain_ok;
  t.est_ratio = s.est_ratio;
  const double pre = geg_outer(mu) / std::pow(std::sinh(c.a) * std::sinh(c.b), mu);
  const HyperbolicArg z = ha(c.composite);
  cplx lhs = (q ? legendre_q(nu, mu, z) : legendre_p(nu, mu, z)).value / std::pow(std::sinh(c.composite), mu);
  finish(t, pre, 0.0, lhs);
  return t;
}

SeriesReport addition_ferrers(FerrersAddKind kind, cplx nu, double mu, const TwoPointConfig& c, int n_max,
                              const SeriesOptions& opt) {
  need_kind(c, ManifoldKind::Hypersphere);
  need_nu(nu);
  need_mu(mu, true);
  const double x = std::cos(c.gamma);
  SeriesReport s;
  sphere_domain(s, c, kind != FerrersAddKind::PmPm, opt);
  const double lt = c.lt, gt = c.gt;
  const bool has_poch = (kind == FerrersAddKind::PmPm || kind == FerrersAddKind::PmQm ||
                         kind == FerrersAddKind::PmPmmx || kind == FerrersAddKind::QmPmmx);
  const bool alt = (kind == FerrersAddKind::PmPp || kind == FerrersAddKind::PmQp || kind == FerrersAddKind::PmPm ||
                    kind == FerrersAddKind::PmQm);
  SeriesReport t = run_series(
      [&](int n) -> cplx {
        const double m = mu + n;
        cplx coef = geg_weight(n, mu, x) * (alt ? sgn(n) : 1.0);
        if (has_poch) {
          coef *= pochhammer(nu + mu + 1.0, n) * pochhammer(mu - nu, n);
          // skip exactly-vanishing terms without touching Q
          if (coef == 0.0) return 0.0;
        }
        if (coef == 0.0) return 0.0;
        switch (kind) {
          case FerrersAddKind::PmPp: return coef * fp(nu, -m, lt) * fp(nu, m, gt);
          case FerrersAddKind::PmQp: return coef * fp(nu, -m, lt) * fq(nu, m, gt);
          case FerrersAddKind::PmPm: return coef * fp(nu, -m, c.a) * fp(nu, -m, c.b);
          case FerrersAddKind::PmQm: return coef * fp(nu, -m, lt) * fq(nu, -m, gt);
          case FerrersAddKind::PmPmmx: return coef * fp(nu, -m, lt) * fp_mx(nu, -m, gt);
          case FerrersAddKind::QmPmmx: return coef * fp(nu, -m, lt) * fq_mx(nu, -m, gt);
        }
        return 0.0;
      },
      n_max);
  t.domain_ok = s.domain_ok;
  t.est_ratio = s.est_ratio;
  const double pre = geg_outer(mu) / std::pow(std::sin(c.a) * std::sin(c.b), mu);
  const double th = c.composite;
  cplx lhs;
  switch (kind) {
    case FerrersAddKind::PmPp: lhs = fp(nu, mu, th); break;
    case FerrersAddKind::PmQp: lhs = fq(nu, mu, th); break;
    case FerrersAddKind::PmPm: lhs = fp(nu, -mu, th); break;
    case FerrersAddKind::PmQm: lhs = fq(nu, -mu, th); break;
    case FerrersAddKind::PmPmmx: lhs = fp_mx(nu, -mu, th); break;
    case FerrersAddKind::QmPmmx: lhs = fq_mx(nu, -mu, th); break;
  }
  finish(t, pre, 0.0, lhs / std::pow(std::sin(th), mu));
  return t;
}

SeriesReport addition_special(SpecialCase sc, const SpecialParams& p, const TwoPointConfig& c, int n_max,
                              const SeriesOptions& opt) {
  const double x = std::cos(c.gamma);
  SeriesReport s;
  switch (sc) {
    case SpecialCase::NU_EQ_MU_INT:
    case SpecialCase::NU_EQ_MU_HALFINT: {
      need_kind(c, ManifoldKind::Hypersphere);
      const double mu = p.mu;
      if (!(mu > -0.5) || mu == 0) throw Error(ErrorCode::WrongCase, "need Re mu > -1/2 and mu != 0");
      const bool tan_form = (sc == SpecialCase::NU_EQ_MU_INT);
      const double two = 2 * mu;
      if (tan_form && std::floor(two) == two && std::fmod(std::abs(two), 2.0) == 1.0)
        throw Error(ErrorCode::WrongCase, "the tan/sec form excludes half odd integer mu");
      if (!tan_form && std::floor(mu) == mu) throw Error(ErrorCode::WrongCase, "the cot/csc form excludes integer mu");
      sphere_domain(s, c, true, opt);
      SeriesReport t = run_series(
          [&](int n) -> cplx {
            double w = sgn(n) * (n + mu) * gegenbauer_c(n, mu, x);
            if (w == 0) return 0.0;
            cplx a = fp(mu, -n - mu, c.lt);
            cplx b = tan_form ? fq(mu, n + mu, c.gt) : fp(mu, n + mu, c.gt);
            return w * a * b;
          },
          n_max);
      t.domain_ok = s.domain_ok;
      t.est_ratio = s.est_ratio;
      const double sp = std::pow(std::sin(c.a) * std::sin(c.b), mu);
      const double g1 = std::tgamma(mu + 1), gh = std::tgamma(mu + 0.5);
      double pre, k0;
      if (tan_form) {
        k0 = M_PI * std::tan(M_PI * mu) / (std::pow(2.0, mu + 1) * g1);
        pre = std::sqrt(M_PI) / std::cos(M_PI * mu) / (mu * std::pow(2.0, mu) * gh * sp);
      } else {
        k0 = -M_PI / std::tan(M_PI * mu) / (std::pow(2.0, mu + 1) * g1);
        pre = std::pow(M_PI, 1.5) / std::sin(M_PI * mu) / (mu * std::pow(2.0, mu + 1) * gh * sp);
      }
      cplx lhs = fq(mu, -mu, c.composite) / std::pow(std::sin(c.composite), mu);
      finish(t, pre, k0, lhs);
      return t;
    }
    case SpecialCase::LOGCOT: {
      need_kind(c, ManifoldKind::Hypersphere);
      sphere_domain(s, c, true, opt);
      const double tl = std::tan(c.lt / 2), tg = std::tan(c.gt / 2);
      const double a = tl / tg, b = -tl * tg;
      SeriesReport t = run_series(
          [&](int n) -> cplx {
            if (n == 0) return std::log(1 / tg);
            return (std::pow(a, n) - std::pow(b, n)) / n * chebyshev_t(n, x);
          },
          n_max);
      t.domain_ok = s.domain_ok;
      t.est_ratio = s.est_ratio;
      finish(t, 1.0, 0.0, cplx(std::log(1 / std::tan(c.composite / 2))));
      return t;
    }
    case SpecialCase::Q_K_MK: {
      need_kind(c, ManifoldKind::Hypersphere);
      if (p.k < 1) throw Error(ErrorCode::WrongCase, "k must be a positive integer");
      sphere_domain(s, c, true, opt);
      const int k = p.k;
      SeriesReport t = run_series(
          [&](int n) -> cplx {
            double w = sgn(n) * (n + k) * gegenbauer_c(n, k, x);
            if (w == 0) return 0.0;
            return w * fp(k, -n - k, c.lt) * fq(k, n + k, c.gt);
          },
          n_max);
      t.domain_ok = s.domain_ok;
      t.est_ratio = s.est_ratio;
      double pre = std::sqrt(M_PI) * sgn(k) /
                   (k * std::pow(2.0, k) * std::tgamma(k + 0.5) * std::pow(std::sin(c.a) * std::sin(c.b), k));
      cplx lhs = fq(k, -k, c.composite) / std::pow(std::sin(c.composite), k);
      finish(t, pre, 0.0, lhs);
      return t;
    }
    case SpecialCase::Q_MH_MMH: {
      need_kind(c, ManifoldKind::Hypersphere);
      if (p.m < 0) throw Error(ErrorCode::WrongCase, "m must be a nonnegative integer");
      sphere_domain(s, c, true, opt);
      const int m = p.m;
      const double mh = m + 0.5;
      SeriesReport t = run_series(
          [&](int n) -> cplx {
            double w = sgn(n) * (2 * n + 2 * m + 1) * gegenbauer_c(n, mh, x);
            if (w == 0) return 0.0;
            cplx a = half_odd_eval(HalfOddKind::FerrersP, mh, -2 * (n + m) - 1, fa(c.lt)).value;
            cplx b = half_odd_eval(HalfOddKind::FerrersP, mh, 2 * (n + m) + 1, fa(c.gt)).value;
            return w * a * b;
          },
          n_max);
      t.domain_ok = s.domain_ok;
      t.est_ratio = s.est_ratio;
      double pre = sgn(m) * std::pow(M_PI, 1.5) /
                   ((2 * m + 1) * std::pow(2.0, m + 1.5) * std::tgamma(m + 1.0) *
                    std::pow(std::sin(c.a) * std::sin(c.b), mh));
      cplx lhs = fq(mh, -mh, c.composite) / std::pow(std::sin(c.composite), mh);
      finish(t, pre, 0.0, lhs);
      return t;
    }
    case SpecialCase::COSH_SINH_LEGENDRE: {
      const cplx nu = p.nu;
      need_nu(nu);
      const cplx w0 = nu + 0.5;
      const bool hyp = (p.form == TrigForm::Cosh || p.form == TrigForm::Exp);
      need_kind(c, hyp ? ManifoldKind::Hyperboloid : ManifoldKind::Hypersphere);
      if (hyp)
        hyper_domain(s, c, opt);
      else
        sphere_domain(s, c, true, opt);
      SeriesReport t = run_series(
          [&](int n) -> cplx {
            double w = sgn(n) * (2 * n + 1) * legendre_poly(n, x);
            if (w == 0) return 0.0;
            const int lo = -2 * n - 1, hi = 2 * n + 1;
            switch (p.form) {
              case TrigForm::Cosh:
                return w * half_odd_eval(HalfOddKind::P, nu, lo, ha(c.lt)).value *
                       half_odd_eval(HalfOddKind::P, nu, hi, ha(c.gt)).value;
              case TrigForm::Exp:
                return w * half_odd_eval(HalfOddKind::P, nu, lo, ha(c.lt)).value *
                       half_odd_eval(HalfOddKind::Q, nu, hi, ha(c.gt)).value;
              case TrigForm::Cos:
                return w * half_odd_eval(HalfOddKind::FerrersP, nu, lo, fa(c.lt)).value *
                       half_odd_eval(HalfOddKind::FerrersP, nu, hi, fa(c.gt)).value;
              case TrigForm::Sin:
                return w * half_odd_eval(HalfOddKind::FerrersP, nu, lo, fa(c.lt)).value *
                       half_odd_eval(HalfOddKind::FerrersQ, nu, hi, fa(c.gt)).value;
            }
            return 0.0;
          },
          n_max);
      t.domain_ok = s.domain_ok;
      t.est_ratio = s.est_ratio;
      const double th = c.composite;
      cplx pre, lhs;
      switch (p.form) {
        case TrigForm::Cosh:
          pre = M_PI / (2 * std::sqrt(std::sinh(c.a) * std::sinh(c.b)));
          lhs = std::cosh(w0 * th) / std::sinh(th);
          break;
        case TrigForm::Exp:
          pre = -I / std::sqrt(std::sinh(c.a) * std::sinh(c.b));
          lhs = std::exp(-w0 * th) / std::sinh(th);
          break;
        case TrigForm::Cos:
          pre = M_PI / (2 * std::sqrt(std::sin(c.a) * std::sin(c.b)));
          lhs = std::cos(w0 * th) / std::sin(th);
          break;
        case TrigForm::Sin:
          pre = -1.0 / std::sqrt(std::sin(c.a) * std::sin(c.b));
          lhs = std::sin(w0 * th) / std::sin(th);
          break;
      }
      finish(t, pre, 0.0, lhs);
      return t;
    }
  }
  throw Error(ErrorCode::WrongCase, "unknown special case");
}

namespace {

// Gamma(nu + mu + 1) Gamma(mu - nu), through the reflection-free product.
cplx gamma_pair(cplx nu, double mu) { return gamma(nu + mu + 1.0).value * gamma(mu - nu).value; }

}  // namespace

SeriesReport green_expansion(GreensVariant v, const WaveParams& wp_in, const TwoPointConfig& c, int l_max,
                             const SeriesOptions& opt) {
  if (wp_in.d() < 3) throw Error(ErrorCode::Domain, "Gegenbauer expansions need d >= 3");
  switch (v) {
    case GreensVariant::H_PLUS:
    case GreensVariant::H_MINUS:
    case GreensVariant::S_PLUS:
    case GreensVariant::A_PLUS:
    case GreensVariant::SF_MINUS:
    case GreensVariant::FRAK_MINUS:
      break;
    default:
      throw Error(ErrorCode::WrongVariant, std::string("no Gegenbauer expansion for ") + variant_name(v));
  }
  const WaveParams wp = variant_params(v, wp_in.d(), wp_in.R(), wp_in.beta());
  const int d = wp.d();
  const double mu = wp.mu(), R = wp.R();
  const cplx nu = wp.nu();
  const double x = std::cos(c.gamma);
  const double a_const = std::tgamma(d / 2.0) / (2.0 * (d - 2) * std::pow(M_PI, d / 2.0) * std::pow(R, d - 2));
  SeriesReport s;
  SeriesReport t;
  cplx pre;
  if (v == GreensVariant::H_PLUS || v == GreensVariant::H_MINUS) {
    need_kind(c, ManifoldKind::Hyperboloid);
    hyper_domain(s, c, opt);
    t = run_series(
        [&](int l) -> cplx {
          double w = sgn(l) * (2 * l + d - 2) * gegenbauer_c(l, mu, x);
          if (w == 0) return 0.0;
          return w * legendre_p(nu, -(mu + l), ha(c.lt)).value * legendre_q(nu, mu + l, ha(c.gt)).value;
        },
        l_max);
    pre = std::exp(-I * M_PI * mu) * a_const / std::pow(std::sinh(c.a) * std::sinh(c.b), mu);
  } else {
    need_kind(c, ManifoldKind::Hypersphere);
    sphere_domain(s, c, true, opt);
    const double sp = std::pow(std::sin(c.a) * std::sin(c.b), mu);
    if (v == GreensVariant::FRAK_MINUS) {
      t = run_series(
          [&](int l) -> cplx {
            cplx w = sgn(l) * (2 * l + d - 2) * gegenbauer_c(l, mu, x) * pochhammer(nu + d / 2.0, l) *
                     pochhammer(mu - nu, l);
            if (w == 0.0) return 0.0;
            const double m = mu + l;
            return w * fp(nu, -m, c.lt) * (fq(nu, -m, c.gt) + I * (M_PI / 2) * fp(nu, -m, c.gt));
          },
          l_max);
      pre = a_const * gamma(nu + d / 2.0).value * rgamma(nu - d / 2.0 + 2.0).value / sp;
    } else {
      const bool odd = (v == GreensVariant::A_PLUS);
      t = run_series(
          [&](int l) -> cplx {
            cplx w = (2.0 * l + d - 2) * gegenbauer_c(l, mu, x) * pochhammer(nu + d / 2.0, l) *
                     pochhammer(d / 2.0 - 1 - nu, l);
            if (w == 0.0) return 0.0;
            const double m = mu + l;
            // the antipodal kernel is P(-x) - (-1)^l P(x), not the plain odd function
            cplx k = odd ? fp_mx(nu, -m, c.gt) - sgn(l) * fp(nu, -m, c.gt) : fp_mx(nu, -m, c.gt);
            return w * fp(nu, -m, c.lt) * k;
          },
          l_max);
      const cplx b_const = std::pow(2.0, mu) * std::tgamma(mu) * gamma_pair(nu, mu) /
                           (std::pow(2.0, d / 2.0 + 2) * std::pow(M_PI, d / 2.0) * std::pow(R, d - 2));
      pre = b_const / sp;
    }
  }
  t.domain_ok = s.domain_ok;
  t.est_ratio = s.est_ratio;
  finish(t, pre, 0.0, green_value(v, wp, c.composite).value);
  return t;
}

SeriesReport fourier_2d(GreensVariant v, const WaveParams& wp_in, const TwoPointConfig& c, int l_max,
                        const SeriesOptions& opt) {
  if (wp_in.d() != 2) throw Error(ErrorCode::Domain, "azimuthal Fourier expansions are for d = 2");
  const WaveParams wp = variant_params(v, 2, wp_in.R(), wp_in.beta());
  const cplx nu = wp.nu();
  const double x = std::cos(c.gamma);
  auto eps_t = [&](int l) { return (l == 0 ? 1.0 : 2.0) * chebyshev_t(l, x); };
  SeriesReport s;
  SeriesReport t;
  cplx pre;
  switch (v) {
    case GreensVariant::H_PLUS:
    case GreensVariant::H_MINUS:
      need_kind(c, ManifoldKind::Hyperboloid);
      hyper_domain(s, c, opt);
      t = run_series(
          [&](int l) -> cplx {
            double w = sgn(l) * eps_t(l);
            if (w == 0) return 0.0;
            return w * legendre_p(nu, -l, ha(c.lt)).value * legendre_q(nu, l, ha(c.gt)).value;
          },
          l_max);
      pre = 1.0 / (2 * M_PI);
      break;
    case GreensVariant::S_PLUS:
    case GreensVariant::SF_MINUS:
    case GreensVariant::A_PLUS: {
      need_kind(c, ManifoldKind::Hypersphere);
      sphere_domain(s, c, true, opt);
      const bool odd = (v == GreensVariant::A_PLUS);
      t = run_series(
          [&](int l) -> cplx {
            cplx w = eps_t(l) * pochhammer(-nu, l) * pochhammer(nu + 1.0, l);
            if (w == 0.0) return 0.0;
            cplx k = odd ? fp_mx(nu, -l, c.gt) - sgn(l) * fp(nu, -l, c.gt) : fp_mx(nu, -l, c.gt);
            return w * fp(nu, -l, c.lt) * k;
          },
          l_max);
      pre = -1.0 / (4.0 * std::sin(M_PI * nu));
      break;
    }
    case GreensVariant::FRAK_MINUS:
      need_kind(c, ManifoldKind::Hypersphere);
      sphere_domain(s, c, true, opt);
      t = run_series(
          [&](int l) -> cplx {
            double w = sgn(l) * eps_t(l);
            if (w == 0) return 0.0;
            return w * fp(nu, -l, c.lt) * (fq(nu, l, c.gt) + I * (M_PI / 2) * fp(nu, l, c.gt));
          },
          l_max);
      pre = 1.0 / (2 * M_PI);
      break;
    default:
      throw Error(ErrorCode::WrongVariant, std::string("no Fourier expansion for ") + variant_name(v));
  }
  t.domain_ok = s.domain_ok;
  t.est_ratio = s.est_ratio;
  finish(t, pre, 0.0, green_value(v, wp, c.composite).value);
  return t;
}

SeriesReport euclidean_expansion(Sign sign, int d, double beta, double r, double rp, double gamma_angle,
                                 int l_max) {
  if (d < 2) throw Error(ErrorCode::Domain, "Euclidean expansions need d >= 2");
  if (!(beta > 0)) throw Error(ErrorCode::Domain, "beta must be positive");
  TwoPointConfig c = TwoPointConfig::euclidean(r, rp, gamma_angle);
  if (!c.distinct) throw Error(ErrorCode::DomainViolation, "need r != r'");
  const double mu = d / 2.0 - 1.0;
  const double x = std::cos(gamma_angle);
  const double bl = beta * c.lt, bg = beta * c.gt;
  SeriesReport t = run_series(
      [&](int l) -> cplx {
        double w = geg_weight(l, mu, x);
        if (w == 0) return 0.0;
        const double m = mu + l;
        if (sign == Sign::Plus) return w * cyl(CylKind::I, m, bl).value * cyl(CylKind::K, m, bg).value;
        return w * cyl(CylKind::J, m, bl).value * cyl(CylKind::H1, m, bg).value;
      },
      l_max);
  t.est_ratio = c.lt / c.gt;
  t.domain_ok = true;
  const double outer = geg_outer(mu) / std::pow(beta * r * rp, mu);
  cplx pre = (sign == Sign::Plus) ? cplx(std::pow(2 * M_PI, -d / 2.0) * std::pow(beta, mu))
                                  : cplx(0, 0.25) * std::pow(beta / (2 * M_PI), mu);
  finish(t, pre * outer, 0.0, euclidean_green(sign, d, beta, c.composite).value);
  return t;
}

}  // namespace cg
