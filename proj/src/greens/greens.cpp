#include "curvgreen/greens.hpp"

#include <algorithm>
#include <cmath>

#include "common/ladder.hpp"
#include "curvgreen/legendre.hpp"
#include "curvgreen/specfun.hpp"
#include "greens/degree_t.hpp"
#include "legendre/leg_t.hpp"

namespace cg {

using namespace detail;

namespace {

constexpr double kPoleWindow = 1e-6;

struct Tag {
  GreensVariant v;
  const char* name;
};
constexpr Tag kTags[] = {
    {GreensVariant::H_PLUS, "H_PLUS"},         {GreensVariant::H_MINUS, "H_MINUS"},
    {GreensVariant::S_PLUS, "S_PLUS"},         {GreensVariant::A_PLUS, "A_PLUS"},
    {GreensVariant::SF_MINUS, "SF_MINUS"},     {GreensVariant::FRAK_MINUS, "FRAK_MINUS"},
    {GreensVariant::AF_MINUS, "AF_MINUS"},     {GreensVariant::FRAKA_MINUS, "FRAKA_MINUS"},
    {GreensVariant::EUCLID_PLUS, "EUCLID_PLUS"}, {GreensVariant::EUCLID_MINUS, "EUCLID_MINUS"},
    {GreensVariant::LAPLACE_H, "LAPLACE_H"},   {GreensVariant::LAPLACE_S, "LAPLACE_S"},
};

void need_sphere_rho(double rho) {
  if (!(rho > 0 && rho < M_PI)) throw Error(ErrorCode::Domain, "rho must lie in (0, pi)");
}

// Closed forms on the curved manifolds at working precision T.
template <class T>
Res<T> curved(GreensVariant v, const WaveParams& wp, double rho_in) {
  using std::abs;
  using std::exp;
  using std::log;
  using std::pow;
  using std::sin;
  using std::sinh;
  using C = Cx<T>;
  using L = Leg<T>;
  const int d = wp.d();
  const T R = T(wp.R());
  const T rho = T(rho_in);
  const T mu = T(d) / T(2) - T(1);
  const C cmu(mu);
  const C I(T(0), T(1));
  const T PI = pi<T>();
  const Deg<T> g = degree_t<T>(variant_manifold(v), variant_sign(v), d, wp.beta(), wp.R());
  const C nu = g.nu;
  const T scale = abs(nu) + mu + T(1);
  Res<T> out;

  if (v == GreensVariant::H_PLUS || v == GreensVariant::H_MINUS) {
    Res<T> q = L::legendre_q(nu, cmu, harg_r<T>(rho));
    C pre = exp(-I * PI * mu) / (pow(T(2) * PI, T(d) / T(2)) * pow(R, T(d - 2)) * pow(sinh(rho), mu));
    out.v = pre * q.v;
    out.err = abs(pre) * q.err + abs(out.v) * T(8) * eps<T>();
    out.terms = q.terms;
    out.flags = q.flags;
    return out;
  }

  const FArgT<T> x = farg_theta<T>(rho);
  const T sin_mu = pow(sin(rho), mu);
  const T denom = pow(T(2), T(d) / T(2) + T(1)) * pow(PI, T(d) / T(2)) * pow(R, T(d - 2)) * sin_mu;

  if (v == GreensVariant::FRAK_MINUS) {
    const C a = nu + mu + T(1), b = nu - mu + T(1);
    C pre = gamma_ratio<T>(a, b) / (pow(R, T(d - 2)) * pow(T(2) * PI, T(d) / T(2)) * sin_mu);
    Res<T> q = L::ferrers_q(nu, -cmu, x);
    Res<T> p = L::ferrers_p(nu, -cmu, x);
    C body = q.v + I * (PI / T(2)) * p.v;
    out.v = pre * body;
    out.err = abs(pre) * (q.err + PI / T(2) * p.err) +
              abs(out.v) * (gamma_relerr<T>(a) + gamma_relerr<T>(b) + gamma_argerr<T>(b, scale) + T(8) * eps<T>());
    out.terms = q.terms + p.terms;
    out.flags = q.flags | p.flags;
    return out;
  }

  // S_PLUS, A_PLUS, SF_MINUS, AF_MINUS, FRAKA_MINUS share Gamma(nu+mu+1) Gamma(mu-nu).
  const C a = nu + mu + T(1);
  C pre = gamma2<T>(a, g.mu_minus_nu) / denom;
  T pre_rel = gamma_relerr<T>(a) + gamma_relerr<T>(g.mu_minus_nu) + gamma_argerr<T>(g.mu_minus_nu, scale) +
              T(8) * eps<T>();
  Res<T> f;
  if (v == GreensVariant::S_PLUS || v == GreensVariant::SF_MINUS) {
    f = (mu > 0) ? L::ferrers_p_refl(nu, cmu, x) : L::ferrers_p(nu, -cmu, x.reflect());
  } else {
    f = L::odd_f(nu, -cmu, x);
    if (v == GreensVariant::FRAKA_MINUS) {
      // (1 + e^{i pi (nu - mu)}) with nu - mu = -(mu - nu)
      C ph = T(1) + exp(-I * PI * g.mu_minus_nu);
      pre *= ph;
      pre_rel += T(4) * eps<T>() * scale / (abs(ph) + eps<T>());
    }
  }
  out.v = pre * f.v;
  out.err = abs(pre) * f.err + abs(out.v) * pre_rel;
  out.terms = f.terms;
  out.flags = f.flags;
  return out;
}

EvalResult curved_eval(GreensVariant v, const WaveParams& wp, double rho) {
  return ladder([&](auto tag) {
    using T = decltype(tag);
    return curved<T>(v, wp, rho);
  });
}

double pole_distance(const WaveParams& wp) {
  // beta_n = sqrt(n (n + d - 1)) / R; scan the two nearest
  const double b = wp.beta() * wp.R();
  const int d = wp.d();
  double n0 = std::max(1.0, std::floor(-(d - 1) / 2.0 + std::sqrt((d - 1) * (d - 1) / 4.0 + b * b)));
  double best = INFINITY;
  for (double n = std::max(1.0, n0 - 1); n <= n0 + 2; n += 1) {
    double bn = std::sqrt(n * (n + d - 1));
    best = std::min(best, std::abs(b - bn) / bn);
  }
  return best;
}

void need_wave(const WaveParams& wp, ManifoldKind k, const char* what) {
  if (wp.manifold().kind != k) throw Error(ErrorCode::WrongVariant, what);
}

}  // namespace

const char* variant_name(GreensVariant v) {
  for (const Tag& t : kTags)
    if (t.v == v) return t.name;
  return "UNKNOWN";
}

GreensVariant variant_from_name(const std::string& s) {
  std::string u = s;
  std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return std::toupper(c); });
  for (const Tag& t : kTags)
    if (u == t.name) return t.v;
  throw Error(ErrorCode::Domain, "unknown variant '" + s + "'");
}

bool is_candidate(GreensVariant v) {
  return v == GreensVariant::SF_MINUS || v == GreensVariant::FRAK_MINUS || v == GreensVariant::AF_MINUS ||
         v == GreensVariant::FRAKA_MINUS;
}

ManifoldKind variant_manifold(GreensVariant v) {
  switch (v) {
    case GreensVariant::H_PLUS:
    case GreensVariant::H_MINUS:
    case GreensVariant::LAPLACE_H:
      return ManifoldKind::Hyperboloid;
    case GreensVariant::EUCLID_PLUS:
    case GreensVariant::EUCLID_MINUS:
      return ManifoldKind::Euclidean;
    default:
      return ManifoldKind::Hypersphere;
  }
}

Sign variant_sign(GreensVariant v) {
  switch (v) {
    case GreensVariant::H_PLUS:
    case GreensVariant::S_PLUS:
    case GreensVariant::A_PLUS:
    case GreensVariant::EUCLID_PLUS:
    case GreensVariant::LAPLACE_H:
    case GreensVariant::LAPLACE_S:
      return Sign::Plus;
    default:
      return Sign::Minus;
  }
}

WaveParams::WaveParams(const ManifoldSpec& m, double beta, Sign sign) : m_(m), beta_(beta), sign_(sign) {
  if (m.d < 1) throw Error(ErrorCode::Range, "d must be at least 1");
  if (m.kind == ManifoldKind::Euclidean) m_.R = 1.0;
  if (!(m_.R > 0)) throw Error(ErrorCode::Range, "R must be positive");
  if (!(beta >= 0) || !std::isfinite(beta)) throw Error(ErrorCode::Domain, "beta must be nonnegative");
  mu_ = m.d / 2.0 - 1.0;
  const double a = m.d - 1.0, b2 = 4 * beta * beta * m_.R * m_.R;
  const bool plus = (sign == Sign::Plus);
  disc_ = (m.kind == ManifoldKind::Hyperboloid) == plus ? a * a + b2 : a * a - b2;
  if (m.kind == ManifoldKind::Euclidean) {
    nu_ = 0.0;
    return;
  }
  nu_ = degree_t<double>(m.kind, sign, m.d, beta, m_.R).nu;
}

EvalResult euclidean_green(Sign sign, int d, double beta, double r) {
  if (!(r > 0)) throw Error(ErrorCode::Domain, "r must be positive");
  if (d < 1) throw Error(ErrorCode::Range, "d must be at least 1");
  if (!(beta > 0)) throw Error(ErrorCode::Domain, "beta must be positive");
  const double mu = d / 2.0 - 1.0;
  const double am = std::abs(mu);  // K and H1 of order -mu reduce to order mu (up to a phase for H1)
  EvalResult e;
  if (sign == Sign::Plus) {
    EvalResult k = cyl(CylKind::K, am, beta * r);
    double f = std::pow(2 * M_PI, -d / 2.0) * std::pow(beta / r, mu);
    e.value = f * k.value;
    e.abs_err_est = f * k.abs_err_est;
  } else {
    EvalResult h = cyl(CylKind::H1, am, beta * r);
    cplx hv = h.value;
    if (mu < 0) hv *= std::exp(cplx(0, M_PI * am));  // H1_{-a} = e^{i pi a} H1_a
    cplx f = cplx(0, 0.25) * std::pow(beta / (2 * M_PI * r), mu);
    e.value = f * hv;
    e.abs_err_est = std::abs(f) * h.abs_err_est;
  }
  e.terms_used = 1;
  return e;
}

EvalResult hyperboloid_green(Sign sign, const WaveParams& wp, double rho) {
  need_wave(wp, ManifoldKind::Hyperboloid, "hyperboloid_green needs hyperboloid parameters");
  if (!(rho > 0)) throw Error(ErrorCode::Domain, "rho must be positive");
  if (!(wp.beta() > 0)) throw Error(ErrorCode::Domain, "beta must be positive");
  WaveParams w(wp.manifold(), wp.beta(), sign);
  return curved_eval(sign == Sign::Plus ? GreensVariant::H_PLUS : GreensVariant::H_MINUS, w, rho);
}

EvalResult sphere_green_plus(const WaveParams& wp, double rho) {
  need_wave(wp, ManifoldKind::Hypersphere, "sphere_green_plus needs hypersphere parameters");
  need_sphere_rho(rho);
  if (!(wp.beta() > 0)) throw Error(ErrorCode::Domain, "beta must be positive");
  return curved_eval(GreensVariant::S_PLUS, wp, rho);
}

EvalResult sphere_green_antipodal_plus(const WaveParams& wp, double rho) {
  need_wave(wp, ManifoldKind::Hypersphere, "sphere_green_antipodal_plus needs hypersphere parameters");
  need_sphere_rho(rho);
  if (!(wp.beta() > 0)) throw Error(ErrorCode::Domain, "beta must be positive");
  return curved_eval(GreensVariant::A_PLUS, wp, rho);
}

CandidateResult sphere_candidate_minus(Candidate c, const WaveParams& wp, double rho) {
  need_wave(wp, ManifoldKind::Hypersphere, "sphere candidates need hypersphere parameters");
  need_sphere_rho(rho);
  if (!(wp.beta() > 0)) throw Error(ErrorCode::Domain, "beta must be positive");
  WaveParams w(wp.manifold(), wp.beta(), Sign::Minus);
  CandidateResult out;
  out.pole_distance = pole_distance(w);
  const double b2 = w.beta() * w.beta();
  GreensVariant v = GreensVariant::SF_MINUS;
  switch (c) {
    case Candidate::SF:
      v = GreensVariant::SF_MINUS;
      out.normalization = -1.0 / b2;
      break;
    case Candidate::FRAK:
      v = GreensVariant::FRAK_MINUS;
      out.normalization = -(1.0 - std::exp(cplx(0, M_PI) * (w.nu() - w.mu()))) / b2;
      break;
    case Candidate::AF: v = GreensVariant::AF_MINUS; break;
    case Candidate::FRAKA: v = GreensVariant::FRAKA_MINUS; break;
  }
  if (c != Candidate::FRAK && out.pole_distance < kPoleWindow)
    throw Error(ErrorCode::EigenvaluePole, "beta is within 1e-6 (relative) of an eigenvalue pole");
  out.eval = curved_eval(v, w, rho);
  return out;
}

EvalResult laplace_green(const ManifoldSpec& m, double rho) {
  if (m.d < 2) throw Error(ErrorCode::Range, "Laplace solutions need d >= 2");
  if (!(m.R > 0)) throw Error(ErrorCode::Range, "R must be positive");
  const double mu = m.d / 2.0 - 1.0;
  const double pw = std::pow(2 * M_PI, m.d / 2.0) * std::pow(m.R, m.d - 2);
  EvalResult e;
  if (m.kind == ManifoldKind::Hyperboloid) {
    if (!(rho > 0)) throw Error(ErrorCode::Range, "rho must be positive");
    EvalResult q = legendre_q(mu, mu, HyperbolicArg::from_r(rho));
    cplx f = std::exp(cplx(0, -M_PI * mu)) / (pw * std::pow(std::sinh(rho), mu));
    e = q;
    e.value = f * q.value;
    e.abs_err_est = std::abs(f) * q.abs_err_est;
  } else if (m.kind == ManifoldKind::Hypersphere) {
    if (!(rho > 0 && rho < M_PI)) throw Error(ErrorCode::Range, "rho must lie in (0, pi)");
    EvalResult q = ferrers_q(mu, -mu, FerrersArg::from_theta(rho));
    double f = std::tgamma(m.d - 1.0) / (pw * std::pow(std::sin(rho), mu));
    e = q;
    e.value = f * q.value;
    e.abs_err_est = f * q.abs_err_est;
  } else {
    throw Error(ErrorCode::Range, "Laplace solutions are provided for the curved manifolds");
  }
  return e;
}

std::vector<double> eigenvalue_poles(const WaveParams& wp, int count) {
  if (wp.manifold().kind != ManifoldKind::Hypersphere || wp.sign() != Sign::Minus)
    throw Error(ErrorCode::WrongVariant, "eigenvalue poles exist only for the hypersphere with sign MINUS");
  std::vector<double> out;
  for (int n = 1; n <= count; ++n) out.push_back(std::sqrt(double(n) * (n + wp.d() - 1)) / wp.R());
  return out;
}

EvalResult green_value(GreensVariant v, const WaveParams& wp, double rho) {
  switch (v) {
    case GreensVariant::EUCLID_PLUS: return euclidean_green(Sign::Plus, wp.d(), wp.beta(), rho);
    case GreensVariant::EUCLID_MINUS: return euclidean_green(Sign::Minus, wp.d(), wp.beta(), rho);
    case GreensVariant::LAPLACE_H:
    case GreensVariant::LAPLACE_S: {
      ManifoldSpec m = wp.manifold();
      m.kind = variant_manifold(v);
      return laplace_green(m, rho);
    }
    case GreensVariant::H_PLUS: return hyperboloid_green(Sign::Plus, wp, rho);
    case GreensVariant::H_MINUS: return hyperboloid_green(Sign::Minus, wp, rho);
    case GreensVariant::S_PLUS: return sphere_green_plus(wp, rho);
    case GreensVariant::A_PLUS: return sphere_green_antipodal_plus(wp, rho);
    case GreensVariant::SF_MINUS: return sphere_candidate_minus(Candidate::SF, wp, rho).eval;
    case GreensVariant::FRAK_MINUS: return sphere_candidate_minus(Candidate::FRAK, wp, rho).eval;
    case GreensVariant::AF_MINUS: return sphere_candidate_minus(Candidate::AF, wp, rho).eval;
    case GreensVariant::FRAKA_MINUS: return sphere_candidate_minus(Candidate::FRAKA, wp, rho).eval;
  }
  throw Error(ErrorCode::WrongVariant, "unknown variant");
}

WaveParams variant_params(GreensVariant v, int d, double R, double beta) {
  ManifoldSpec m{variant_manifold(v), d, R};
  return WaveParams(m, beta, variant_sign(v));
}

}  // namespace cg
