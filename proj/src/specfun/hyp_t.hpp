// Regularized Gauss hypergeometric function F(a,b;c;z)/Gamma(c) on a generic real type.
//
// Every entry point takes z together with 1-z so that callers holding an
// exact complement (1-x, z-1, ...) do not lose it to rounding.
#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "specfun/gamma_t.hpp"

namespace cg::detail {

template <class T>
struct Hyp {
  using C = Cx<T>;
  using R = Res<T>;

  // Defining series. Valid for |z| < 1, and for any z when terminating.
  static R direct(const C& a, const C& b, const C& c, const C& z) {
    using std::abs;
    using std::sqrt;
    R out;
    long na = -1, nb = -1, j = -1;
    bool ta = is_nonpos_int<T>(a, &na);
    bool tb = is_nonpos_int<T>(b, &nb);
    long nterm = -1;
    if (ta) nterm = na;
    if (tb) nterm = (nterm < 0) ? nb : std::min(nterm, nb);

    long k0 = 0;
    C t;
    if (is_nonpos_int<T>(c, &j)) {
      k0 = j + 1;
      if (nterm >= 0 && nterm < k0) {
        out.v = C(T(0));
        out.terms = 0;
        return out;
      }
      t = poch_c<T>(a, int(k0)) * poch_c<T>(b, int(k0));
      C zp(T(1));
      T fact(1);
      for (long k = 1; k <= k0; ++k) {
        zp *= z;
        fact *= T(k);
      }
      t = t * zp / fact;
    } else {
      t = rgamma_c<T>(c);
    }

    C s(T(0));
    T asum(0);
    T tail(0);
    const T e = eps<T>();
    const T az = abs(z);
    const T aa = abs(a), ab = abs(b), ac = abs(c);
    long k = k0;
    int n = 0;
    for (;; ++k) {
      s += t;
      T at = abs(t);
      asum += at * sqrt(T(n + 1));
      ++n;
      if (at == 0 && (nterm >= 0 && k >= nterm)) break;
      C q = (a + T(k)) * (b + T(k)) * z / ((c + T(k)) * T(k + 1));
      C tn = t * q;
      T atn = abs(tn);
      if (atn == 0) {
        if (nterm >= 0 && k + 1 > nterm) break;
        if (az == 0) break;
      }
      // Beyond k > |c| the ratios obey |q_j| <= B_k for all j >= k, so the
      // tail is dominated by a geometric series once B_k < 1.
      if (atn <= e * abs(s) * T(0.25)) {
        T kk = T(k + 1);
        if (kk > ac) {
          T B = az * (T(1) + aa / kk) * (T(1) + ab / kk) / (T(1) - ac / kk);
          if (B < T(1) && atn / (T(1) - B) <= e * abs(s) * T(0.5)) {
            tail = atn / (T(1) - B);
            break;
          }
        }
      }
      if (n > Tune<T>::max_terms) throw Error(ErrorCode::NoConvergence, "2F1 series did not converge");
      t = tn;
    }
    out.v = s;
    out.err = tail + T(2) * e * asum + abs(s) * gamma_relerr<T>(c);
    out.terms = n;
    return out;
  }

  // F(a,b;a+b+m;z)/Gamma(a+b+m), m >= 0 integer, written in w = 1-z.
  static R degenerate(const C& a, const C& b, long m, const C& w) {
    using std::abs;
    using std::log;
    R out;
    const T e = eps<T>();
    const C one(T(1));
    const C mw = -w;  // z - 1

    // finite part
    C fin(T(0));
    T fabs_sum(0);
    C rg = rgamma2<T>(a + T(m), b + T(m));
    if (m > 0 && abs(rg) != 0) {
      C pk(T(1));  // (a)_k (b)_k / k! (z-1)^k
      T factm(1);
      for (long i = 1; i <= m - 1; ++i) factm *= T(i);  // (m-1)!
      T fm = factm;
      for (long k = 0; k < m; ++k) {
        C term = pk * fm;
        fin += term;
        fabs_sum += abs(term);
        pk = pk * (a + T(k)) * (b + T(k)) * mw / T(k + 1);
        if (m - k - 1 > 0) fm /= T(m - k - 1);
      }
      fin *= rg;
      fabs_sum *= abs(rg);
    }

    // logarithmic part
    long na = -1, nb = -1;
    bool ta = is_nonpos_int<T>(a, &na);
    bool tb = is_nonpos_int<T>(b, &nb);
    C lsum(T(0));
    T labs_sum(0);
    int n = 0;
    T tail(0);
    if (!(ta && tb)) {
      C lw = log(w);
      C rgab(T(0));
      long kcap = -1;  // last k with nonzero coefficient in the terminating limit
      C lim(T(0));
      if (ta || tb) {
        long nn = ta ? na : nb;
        const C& other = ta ? b : a;
        kcap = nn - m;
        T nf(1);
        for (long i = 2; i <= nn; ++i) nf *= T(i);
        lim = rgamma_c<T>(other) * ((nn + 1) % 2 == 0 ? nf : -nf);
      } else {
        rgab = rgamma2<T>(a, b);
      }
      if (!(kcap < 0 && (ta || tb))) {
        T mf(1);
        for (long i = 2; i <= m; ++i) mf *= T(i);
        C ek = C(T(1) / mf);  // (a+m)_k (b+m)_k / (k! (k+m)!) w^k
        C psi1 = C(-euler_gamma<T>());
        C psi2 = C(-euler_gamma<T>());
        for (long i = 1; i <= m; ++i) psi2 += C(T(1) / T(i));
        C psia, psib;
        if (!(ta || tb)) {
          psia = digamma_c<T>(a + T(m));
          psib = digamma_c<T>(b + T(m));
        }
        const T aw = abs(w);
        const T abm = abs(a + T(m)), bbm = abs(b + T(m));
        for (long k = 0;; ++k) {
          C Lk;
          if (ta || tb)
            Lk = (k <= kcap) ? lim : C(T(0));
          else
            Lk = (lw - psi1 - psi2 + psia + psib) * rgab;
          C term = ek * Lk;
          lsum += term;
          T at = abs(term);
          labs_sum += at;
          ++n;
          if ((ta || tb) && k >= kcap) break;
          C q = (a + T(m + k)) * (b + T(m + k)) * w / (T(k + 1) * T(k + m + 1));
          ek = ek * q;
          psi1 += C(T(1) / T(k + 1));
          psi2 += C(T(1) / T(k + m + 1));
          if (!(ta || tb)) {
            psia += one / (a + T(m + k));
            psib += one / (b + T(m + k));
          }
          T kk = T(k + 1);
          T B = aw * (T(1) + abm / kk) * (T(1) + bbm / kk);
          if (B < T(1) && abs(ek) * (abs(Lk) + T(1)) / (T(1) - B) <= e * abs(lsum) * T(0.25)) {
            tail = abs(ek) * (abs(Lk) + T(1)) / (T(1) - B);
            break;
          }
          if (n > Tune<T>::max_terms) throw Error(ErrorCode::NoConvergence, "log-case 2F1 did not converge");
        }
      }
    }
    C mwm(T(1));
    for (long i = 0; i < m; ++i) mwm *= mw;
    C v = fin - mwm * lsum;
    out.v = v;
    out.err = T(4) * e * (fabs_sum + abs(mwm) * labs_sum) * T(1 + n / 50) + abs(mwm) * tail +
              abs(v) * gamma_relerr<T>(a + b + T(m)) * T(2);
    out.terms = n + int(m);
    return out;
  }

  // Connection through w = 1 - z.
  static R om(const C& a, const C& b, const C& c, const C& w) {
    using std::abs;
    using std::exp;
    using std::log;
    const C s = c - a - b;
    long m = 0;
    if (is_int<T>(s, &m)) {
      if (m >= 0) return degenerate(a, b, m, w);
      R r = degenerate(c - a, c - b, -m, w);
      C f = exp(s * log(w));
      r.v *= f;
      r.err = r.err * abs(f) + abs(r.v) * eps<T>() * (T(4) + abs(s * log(w)));
      return r;
    }
    const C one(T(1));
    C pref = pi<T>() / sinpi<T>(s);
    C g1 = rgamma2<T>(c - a, c - b);
    C g2 = rgamma2<T>(a, b);
    R out;
    C t1(T(0)), t2(T(0));
    T e1(0), e2(0);
    int terms = 0;
    if (abs(g1) != 0) {
      R r1 = direct(a, b, one - s, w);
      C k1 = pref * g1;
      t1 = k1 * r1.v;
      e1 = abs(k1) * r1.err + abs(t1) * (gamma_relerr<T>(c - a) + gamma_relerr<T>(c - b));
      terms += r1.terms;
    }
    if (abs(g2) != 0) {
      R r2 = direct(c - a, c - b, one + s, w);
      C ws = exp(s * log(w));
      C k2 = pref * g2 * ws;
      t2 = -k2 * r2.v;
      e2 = abs(k2) * r2.err + abs(t2) * (gamma_relerr<T>(a) + gamma_relerr<T>(b) + eps<T>() * abs(s * log(w)));
      terms += r2.terms;
    }
    out.v = t1 + t2;
    out.err = e1 + e2 + T(4) * eps<T>() * (abs(t1) + abs(t2)) * (T(1) + abs(s)) +
              (abs(t1) + abs(t2)) * trig_argerr<T>(s, abs(a) + abs(b) + abs(c));
    out.terms = terms;
    return out;
  }

  enum class Route { D, OM, PFaD, PFbD, PFaOM, PFbOM };

  static R run(Route rt, const C& a, const C& b, const C& c, const C& z, const C& omz) {
    using std::abs;
    using std::exp;
    using std::log;
    switch (rt) {
      case Route::D:
        return direct(a, b, c, z);
      case Route::OM:
        return om(a, b, c, omz);
      default:
        break;
    }
    const bool use_a = (rt == Route::PFaD || rt == Route::PFaOM);
    const C& p = use_a ? a : b;
    const C q = use_a ? (c - b) : (c - a);
    C zz = -z / omz;                      // z/(z-1)
    C omzz = C(T(1)) / omz;               // 1 - z/(z-1)
    C lg = log(omz);
    C f = exp(-p * lg);                   // (1-z)^{-p}
    R in = (rt == Route::PFaD || rt == Route::PFbD) ? direct(p, q, c, zz) : om(p, q, c, omzz);
    R out;
    out.v = f * in.v;
    out.err = abs(f) * in.err + abs(out.v) * eps<T>() * (T(4) + abs(p * lg));
    out.terms = in.terms;
    return out;
  }

  // Best available candidate. z and omz = 1 - z.
  static R eval(const C& a, const C& b, const C& c, const C& z, const C& omz) {
    using std::abs;
    const T lim(0.95);
    struct Cand {
      T q;
      Route r;
    };
    std::vector<Cand> cands;
    const T az = abs(z), a1 = abs(omz);
    const T ap = az / a1, apo = T(1) / a1;
    bool term = is_nonpos_int<T>(a) || is_nonpos_int<T>(b);
    if (az < lim || term) cands.push_back({term ? std::min(az, T(0.5)) : az, Route::D});
    if (a1 < lim) cands.push_back({a1, Route::OM});
    if (ap < lim) {
      cands.push_back({ap, Route::PFaD});
      cands.push_back({ap * T(1.0001), Route::PFbD});
    }
    if (apo < lim) {
      cands.push_back({apo, Route::PFaOM});
      cands.push_back({apo * T(1.0001), Route::PFbOM});
    }
    if (cands.empty()) throw Error(ErrorCode::NoConvergence, "no 2F1 transformation brings the argument inside 0.95");
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.q < y.q; });

    R best;
    bool have = false;
    const T good = T(32) * eps<T>();
    int total = 0;
    Error last(ErrorCode::NoConvergence, "2F1 failed");
    for (const auto& cd : cands) {
      R r;
      try {
        r = run(cd.r, a, b, c, z, omz);
      } catch (const Error& ex) {
        if (ex.code() != ErrorCode::NoConvergence) throw;
        last = ex;
        continue;
      }
      total += r.terms;
      if (!finite_c<T>(r.v) || !finite(r.err)) continue;
      if (!have || r.err < best.err) {
        best = r;
        have = true;
      }
      T m = abs(best.v);
      if (best.err <= good * m || (m == 0 && best.err == 0)) break;
    }
    if (!have) throw last;
    best.terms = std::max(best.terms, 1);
    (void)total;
    return best;
  }
};

}  // namespace cg::detail

#ifndef CG_ENGINE_INSTANTIATE
namespace cg::detail {
extern template struct Hyp<double>;
extern template struct Hyp<R50>;
extern template struct Hyp<R100>;
}  // namespace cg::detail
#endif
