// Legendre and Ferrers kernels on a generic real type.
#pragma once

#include "curvgreen/legendre.hpp"
#include "specfun/hyp_t.hpp"

namespace cg::detail {

// x with its exact complements.
template <class T>
struct FArgT {
  T x, omx, opx;  // x, 1 - x, 1 + x

  FArgT reflect() const { return {-x, opx, omx}; }
  T one_minus_x2() const { return omx * opx; }
};

// z with its exact complements.
template <class T>
struct HArgT {
  T z, zm1, zp1;  // z, z - 1, z + 1
};

template <class T>
FArgT<T> make_farg(const FerrersArg& a) {
  using std::cos;
  using std::sin;
  FArgT<T> f;
  if (a.has_theta) {
    T th = T(a.theta);
    T s = sin(th / T(2)), c = cos(th / T(2));
    f.omx = T(2) * s * s;
    f.opx = T(2) * c * c;
    f.x = cos(th);
  } else {
    f.x = T(a.x);
    f.omx = T(1) - f.x;
    f.opx = T(1) + f.x;
  }
  return a.negated ? f.reflect() : f;
}

template <class T>
FArgT<T> farg_theta(const T& th) {
  using std::cos;
  using std::sin;
  T s = sin(th / T(2)), c = cos(th / T(2));
  return {cos(th), T(2) * s * s, T(2) * c * c};
}

template <class T>
HArgT<T> make_harg(const HyperbolicArg& a) {
  using std::cosh;
  using std::sinh;
  HArgT<T> h;
  if (a.has_r) {
    T r = T(a.r);
    T s = sinh(r / T(2)), c = cosh(r / T(2));
    h.zm1 = T(2) * s * s;
    h.zp1 = T(2) * c * c;
    h.z = cosh(r);
  } else {
    h.z = T(a.z);
    h.zm1 = h.z - T(1);
    h.zp1 = h.z + T(1);
  }
  return h;
}

template <class T>
HArgT<T> harg_r(const T& r) {
  using std::cosh;
  using std::sinh;
  T s = sinh(r / T(2)), c = cosh(r / T(2));
  return {cosh(r), T(2) * s * s, T(2) * c * c};
}

template <class T>
struct Leg {
  using C = Cx<T>;
  using R = Res<T>;
  using H = Hyp<T>;

  static C one() { return C(T(1)); }

  // P_nu^mu(x)
  static R ferrers_p(const C& nu, const C& mu, const FArgT<T>& a) {
    using std::abs;
    using std::exp;
    using std::log;
    R h = H::eval(-nu, nu + T(1), one() - mu, C(a.omx / T(2)), C(a.opx / T(2)));
    T lr = log(a.opx) - log(a.omx);
    C f = exp(mu * lr / T(2));
    R out;
    out.v = f * h.v;
    out.err = abs(f) * h.err + abs(out.v) * eps<T>() * (T(4) + abs(mu * lr));
    out.terms = h.terms;
    return out;
  }

  // P_nu^{-mu}(-x), expanded about x = -1.
  static R ferrers_p_refl(const C& nu, const C& mu, const FArgT<T>& a) {
    using std::abs;
    using std::exp;
    using std::log;
    R h = H::eval(-nu, nu + T(1), one() + mu, C(a.opx / T(2)), C(a.omx / T(2)));
    T lr = log(a.opx) - log(a.omx);
    C f = exp(mu * lr / T(2));
    R out;
    out.v = f * h.v;
    out.err = abs(f) * h.err + abs(out.v) * eps<T>() * (T(4) + abs(mu * lr));
    out.terms = h.terms;
    return out;
  }

  // Two-term formula in x^2.
  static R ferrers_q_x2(const C& nu, const C& mu, const FArgT<T>& a) {
    using std::abs;
    using std::exp;
    using std::log;
    const C s = nu + mu;
    const T x2 = a.x * a.x, om = a.one_minus_x2();
    const T pi_ = pi<T>();
    C w = exp(-mu * log(om) / T(2));  // (1 - x^2)^{-mu/2}
    C p2 = exp((mu - T(1)) * log(T(2)));
    C base = pi_ * p2 * w;

    const T sc = abs(nu) + abs(mu) + T(2);
    R out;
    C t1(T(0)), t2(T(0));
    T e1(0), e2(0);
    C cs = cospi<T>(s / T(2)), sn = sinpi<T>(s / T(2));
    if (a.x != 0 && abs(cs) != 0) {
      C g = gamma_ratio<T>((s + T(2)) / T(2), (nu - mu + T(1)) / T(2));
      if (abs(g) != 0) {
        R h = H::eval((one() - s) / T(2), (nu - mu + T(2)) / T(2), C(T(3) / T(2)), C(x2), C(om));
        C k = base * g * cs * a.x;
        t1 = k * h.v;
        e1 = abs(k) * h.err + abs(t1) * (gamma_relerr<T>((s + T(2)) / T(2)) + gamma_relerr<T>((nu - mu + T(1)) / T(2)) +
                                          gamma_argerr<T>((s + T(2)) / T(2), sc) + gamma_argerr<T>((nu - mu + T(1)) / T(2), sc) +
                                          trig_argerr<T>(s / T(2), sc, T(0.5)));
        out.terms += h.terms;
      }
    }
    if (abs(sn) != 0) {
      C g = gamma_ratio<T>((s + T(1)) / T(2), (nu - mu + T(2)) / T(2));
      if (abs(g) != 0) {
        R h = H::eval(-s / T(2), (nu - mu + T(1)) / T(2), C(T(1) / T(2)), C(x2), C(om));
        C k = -base * g * sn;
        t2 = k * h.v;
        e2 = abs(k) * h.err + abs(t2) * (gamma_relerr<T>((s + T(1)) / T(2)) + gamma_relerr<T>((nu - mu + T(2)) / T(2)) +
                                          gamma_argerr<T>((s + T(1)) / T(2), sc) + gamma_argerr<T>((nu - mu + T(2)) / T(2), sc) +
                                          trig_argerr<T>(s / T(2), sc));
        out.terms += h.terms;
      }
    }
    out.v = t1 + t2;
    T mag = abs(t1) + abs(t2);
    out.err = e1 + e2 + T(8) * eps<T>() * mag * (T(1) + abs(mu));
    if (mag > T(1e6) * abs(out.v)) out.flags |= NEAR_POLE;
    return out;
  }

  // Reflection route through P_nu^mu(+-x).
  static R ferrers_q_refl(const C& nu, const C& mu, const FArgT<T>& a) {
    using std::abs;
    const C s = nu + mu;
    C sn = sinpi<T>(s);
    if (abs(sn) == 0) throw Error(ErrorCode::NoConvergence, "reflection route singular");
    C cs = cospi<T>(s);
    R p = ferrers_p(nu, mu, a);
    R pm = ferrers_p(nu, mu, a.reflect());
    C k = pi<T>() / (T(2) * sn);
    R out;
    out.v = k * (cs * p.v - pm.v);
    out.err = abs(k) * (abs(cs) * p.err + pm.err) + T(8) * eps<T>() * abs(k) * (abs(cs * p.v) + abs(pm.v)) +
              abs(out.v) * trig_argerr<T>(s, abs(nu) + abs(mu) + T(1));
    out.terms = p.terms + pm.terms;
    return out;
  }

  static R ferrers_q_core(const C& nu, const C& mu, const FArgT<T>& a) {
    using std::abs;
    R best;
    bool have = false;
    try {
      best = ferrers_q_x2(nu, mu, a);
      have = finite_c<T>(best.v) && finite(best.err);
    } catch (const Error& ex) {
      if (ex.code() != ErrorCode::NoConvergence) throw;
    }
    if (!have || best.err > T(1e3) * eps<T>() * abs(best.v)) {
      try {
        R r = ferrers_q_refl(nu, mu, a);
        if (finite_c<T>(r.v) && finite(r.err) && (!have || r.err < best.err)) {
          best = r;
          have = true;
        }
      } catch (const Error& ex) {
        if (ex.code() != ErrorCode::NoConvergence) throw;
      }
    }
    if (!have) throw Error(ErrorCode::NoConvergence, "Ferrers Q failed on both routes");
    return best;
  }

  static bool undefined_q(const C& nu, const C& mu, bool* anomalous) {
    long n = 0;
    C s1 = nu + mu + T(1);
    if (!is_nonpos_int<T>(s1, &n)) return false;
    *anomalous = is_nonpos_int<T>(nu + T(3) / T(2));
    return true;
  }

  // Q_nu^mu(x)
  static R ferrers_q(const C& nu, const C& mu, const FArgT<T>& a) {
    using std::abs;
    bool anomalous = false;
    if (!undefined_q(nu, mu, &anomalous)) return ferrers_q_core(nu, mu, a);
    if (!anomalous) throw Error(ErrorCode::Undefined, "Ferrers Q is undefined for nu + mu a negative integer");
    // symmetric limit in nu, Richardson on h and h/2
    const T h(1e-6);
    auto avg = [&](const T& hh) {
      R p = ferrers_q_core(nu + hh, mu, a);
      R m = ferrers_q_core(nu - hh, mu, a);
      R r;
      r.v = (p.v + m.v) / T(2);
      r.err = (p.err + m.err) / T(2);
      r.terms = p.terms + m.terms;
      return r;
    };
    R f1 = avg(h), f2 = avg(h / T(2));
    R out;
    out.v = (T(4) * f2.v - f1.v) / T(3);
    out.err = (T(4) * f2.err + f1.err) / T(3) + abs(f2.v - f1.v) * h * h * T(10);
    out.terms = f1.terms + f2.terms;
    return out;
  }

  // f_nu^mu(x) = P_nu^mu(-x) - P_nu^mu(x)
  static R odd_f(const C& nu, const C& mu, const FArgT<T>& a) {
    using std::abs;
    R p = ferrers_p(nu, mu, a);
    R m = ferrers_p(nu, mu, a.reflect());
    R out;
    out.v = m.v - p.v;
    out.err = p.err + m.err + T(2) * eps<T>() * (abs(p.v) + abs(m.v));
    out.terms = p.terms + m.terms;
    return out;
  }

  // P_nu^mu(z)
  static R legendre_p(const C& nu, const C& mu, const HArgT<T>& a) {
    using std::abs;
    using std::exp;
    using std::log;
    R h = H::eval(-nu, nu + T(1), one() - mu, C(-a.zm1 / T(2)), C(a.zp1 / T(2)));
    T lr = log(a.zp1) - log(a.zm1);
    C f = exp(mu * lr / T(2));
    R out;
    out.v = f * h.v;
    out.err = abs(f) * h.err + abs(out.v) * eps<T>() * (T(4) + abs(mu * lr));
    out.terms = h.terms;
    return out;
  }

  // Q_nu^mu(z), including e^{i pi mu}
  static R legendre_q(const C& nu, const C& mu, const HArgT<T>& a) {
    using std::abs;
    using std::exp;
    using std::log;
    const C s1 = nu + mu + T(1);
    if (is_nonpos_int<T>(s1)) throw Error(ErrorCode::ParamPole, "Gamma(nu + mu + 1) has a pole");
    const T z2 = a.z * a.z;
    const C I(T(0), T(1));
    C L = log(pi<T>()) / T(2) + I * pi<T>() * mu + lgamma_c<T>(s1) + mu * log(a.zm1 * a.zp1) / T(2) -
          (nu + T(1)) * log(T(2)) - s1 * log(a.z);
    R h = H::eval(s1 / T(2), (s1 + T(1)) / T(2), nu + T(3) / T(2), C(T(1) / z2), C(a.zm1 * a.zp1 / z2));
    C f = exp(L);
    R out;
    out.v = f * h.v;
    out.err = abs(f) * h.err + abs(out.v) * (gamma_relerr<T>(s1) + gamma_argerr<T>(s1, abs(nu) + abs(mu) + T(1)) +
                                             T(4) * eps<T>() * (T(1) + abs(L)));
    out.terms = h.terms;
    return out;
  }

  // C_lambda^mu(cos gamma)
  static R gegenbauer(const C& lam, const C& mu, const T& gam) {
    using std::abs;
    using std::exp;
    using std::log;
    using std::sin;
    const C g2 = T(2) * mu + lam;
    if (is_nonpos_int<T>(g2)) throw Error(ErrorCode::ParamPole, "Gamma(2 mu + lambda) has a pole");
    R out;
    if (is_nonpos_int<T>(lam + T(1)) || is_nonpos_int<T>(mu)) {
      out.v = C(T(0));
      return out;
    }
    C lc = log(pi<T>()) / T(2) + lgamma_c<T>(g2) - lgamma_c<T>(lam + T(1)) - lgamma_c<T>(mu) -
           (mu - T(1) / T(2)) * log(T(2)) + (T(1) / T(2) - mu) * log(sin(gam));
    C k = exp(lc);
    R p = ferrers_p(mu + lam - T(1) / T(2), T(1) / T(2) - mu, farg_theta<T>(gam));
    out.v = k * p.v;
    out.err = abs(k) * p.err +
              abs(out.v) * (gamma_relerr<T>(g2) + gamma_relerr<T>(lam + T(1)) + gamma_relerr<T>(mu) + T(4) * eps<T>() * abs(lc));
    out.terms = p.terms;
    return out;
  }
};

}  // namespace cg::detail

#ifndef CG_ENGINE_INSTANTIATE
namespace cg::detail {
extern template struct Leg<double>;
extern template struct Leg<R50>;
extern template struct Leg<R100>;
}  // namespace cg::detail
#endif
