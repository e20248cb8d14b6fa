// Gamma family on a generic real type T.
#pragma once

#include <boost/math/special_functions/bernoulli.hpp>

#include <vector>

#include "common/num.hpp"

namespace cg::detail {

// B_{2k} / (2k (2k-1)), k = 1..kmax
template <class T>
const std::vector<T>& stirling_coefs() {
  static const std::vector<T> c = [] {
    std::vector<T> v;
    for (int k = 1; k <= Tune<T>::kmax; ++k)
      v.push_back(boost::math::bernoulli_b2n<T>(k) / T((2 * k) * (2 * k - 1)));
    return v;
  }();
  return c;
}

// B_{2k} / (2k), k = 1..kmax
template <class T>
const std::vector<T>& digamma_coefs() {
  static const std::vector<T> c = [] {
    std::vector<T> v;
    for (int k = 1; k <= Tune<T>::kmax; ++k) v.push_back(boost::math::bernoulli_b2n<T>(k) / T(2 * k));
    return v;
  }();
  return c;
}

// Stirling series for log Gamma, valid for large |z| with Re z > 0.
template <class T>
Cx<T> lgamma_stirling(const Cx<T>& z) {
  using std::abs;
  using std::log;
  const auto& c = stirling_coefs<T>();
  Cx<T> s = (z - T(0.5)) * log(z) - z + T(0.5) * log(T(2) * pi<T>());
  Cx<T> zi = Cx<T>(T(1)) / z;
  Cx<T> z2 = zi * zi;
  Cx<T> p = zi;
  T prev = T(std::numeric_limits<double>::max());
  for (const T& ck : c) {
    Cx<T> t = ck * p;
    T at = abs(t);
    if (at > prev) break;
    s += t;
    if (at <= eps<T>() * abs(s) * T(0.01)) break;
    prev = at;
    p *= z2;
  }
  return s;
}

// log Gamma(z) modulo 2 pi i. Throws POLE at non-positive integers.
template <class T>
Cx<T> lgamma_c(const Cx<T>& z) {
  using std::abs;
  using std::ceil;
  using std::log;
  if (is_nonpos_int<T>(z)) throw Error(ErrorCode::Pole, "gamma pole");
  if (real(z) < T(0.5)) {
    Cx<T> one(T(1));
    return log(pi<T>()) - log_sinpi<T>(z) - lgamma_c<T>(one - z);
  }
  const T N = T(Tune<T>::shift);
  if (abs(z) >= N) return lgamma_stirling<T>(z);
  T m = ceil(N - T(real(z)));
  if (m < T(0)) m = T(0);
  int mi = static_cast<int>(dbl(m));
  Cx<T> prod(T(1));
  Cx<T> acc(T(0));
  for (int k = 0; k < mi; ++k) {
    prod *= (z + T(k));
    if (k % 8 == 7) {
      acc += log(prod);
      prod = Cx<T>(T(1));
    }
  }
  acc += log(prod);
  return lgamma_stirling<T>(z + m) - acc;
}

// Lanczos approximation (g = 7, n = 9) for double.
inline cplx gamma_lanczos(cplx z) {
  static constexpr double g = 7.0;
  static constexpr double p[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                  771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                  -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  z -= 1.0;
  cplx x = p[0];
  for (int i = 1; i < 9; ++i) x += p[i] / (z + double(i));
  cplx t = z + g + 0.5;
  return std::sqrt(2.0 * pi<double>()) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

template <class T>
Cx<T> gamma_c(const Cx<T>& z) {
  using std::abs;
  using std::exp;
  if (is_nonpos_int<T>(z)) throw Error(ErrorCode::Pole, "gamma pole");
  if (real(z) < T(0.5)) {
    Cx<T> one(T(1));
    return pi<T>() / (sinpi<T>(z) * gamma_c<T>(one - z));
  }
  if constexpr (std::is_same_v<T, double>) {
    if (abs(z) < 140.0) return gamma_lanczos(z);
    return exp(lgamma_c<T>(z));
  } else {
    using std::ceil;
    const T N = T(Tune<T>::shift);
    if (abs(z) >= N) return exp(lgamma_stirling<T>(z));
    T m = ceil(N - T(real(z)));
    int mi = static_cast<int>(dbl(m));
    Cx<T> prod(T(1));
    for (int k = 0; k < mi; ++k) prod *= (z + T(k));
    return exp(lgamma_stirling<T>(z + m)) / prod;
  }
}

// 1/Gamma(z), exactly zero at the poles.
template <class T>
Cx<T> rgamma_c(const Cx<T>& z) {
  using std::abs;
  using std::exp;
  if (is_nonpos_int<T>(z)) return Cx<T>(T(0));
  if (real(z) < T(0.5)) {
    Cx<T> one(T(1));
    return sinpi<T>(z) * gamma_c<T>(one - z) / pi<T>();
  }
  if constexpr (std::is_same_v<T, double>) {
    if (abs(z) > 140.0) return exp(-lgamma_c<T>(z));
  }
  return Cx<T>(T(1)) / gamma_c<T>(z);
}

// Rough relative error of the gamma routines at z.
template <class T>
T gamma_relerr(const Cx<T>& z) {
  using std::abs;
  using std::log;
  T a = abs(z);
  return eps<T>() * (T(8) + T(2) * a * log(T(2) + a));
}

// Distance from z to the nearest integer (offset = 0) or half-integer (offset = 1/2).
template <class T>
T int_dist(const Cx<T>& z, const T& offset = T(0)) {
  using std::abs;
  T re = T(real(z)) - offset;
  T d = re - round_t(re);
  return abs(Cx<T>(d, T(imag(z))));
}

// Relative error of Gamma(z) caused by an absolute error eps*scale in z.
template <class T>
T gamma_argerr(const Cx<T>& z, const T& scale) {
  using std::abs;
  using std::log;
  T pd = (real(z) < T(0.5)) ? int_dist<T>(z) : T(1);
  if (pd == 0) pd = eps<T>();
  return eps<T>() * scale * (T(1) / pd + log(T(2) + abs(z)));
}

// Relative error of sin(pi w) (offset 0) or cos(pi w) (offset 1/2) from an
// absolute error eps*scale in w.
template <class T>
T trig_argerr(const Cx<T>& w, const T& scale, const T& offset = T(0)) {
  T d = int_dist<T>(w, offset);
  if (d == 0) d = eps<T>();
  return eps<T>() * scale * (T(1) + T(1) / d);
}

// 1/(Gamma(x) Gamma(y)) through logs when the arguments are large.
template <class T>
Cx<T> rgamma2(const Cx<T>& x, const Cx<T>& y) {
  using std::abs;
  using std::exp;
  if (is_nonpos_int<T>(x) || is_nonpos_int<T>(y)) return Cx<T>(T(0));
  if (abs(x) < T(30) && abs(y) < T(30)) return rgamma_c<T>(x) * rgamma_c<T>(y);
  return exp(-(lgamma_c<T>(x) + lgamma_c<T>(y)));
}

// Gamma(x) Gamma(y); POLE if either argument is a pole.
template <class T>
Cx<T> gamma2(const Cx<T>& x, const Cx<T>& y) {
  using std::abs;
  using std::exp;
  if (abs(x) < T(30) && abs(y) < T(30)) return gamma_c<T>(x) * gamma_c<T>(y);
  return exp(lgamma_c<T>(x) + lgamma_c<T>(y));
}

// Gamma(x)/Gamma(y); zero when y is a pole, POLE when x is.
template <class T>
Cx<T> gamma_ratio(const Cx<T>& x, const Cx<T>& y) {
  using std::abs;
  using std::exp;
  if (is_nonpos_int<T>(x)) throw Error(ErrorCode::Pole, "gamma pole");
  if (is_nonpos_int<T>(y)) return Cx<T>(T(0));
  if (abs(x) < T(30) && abs(y) < T(30)) return gamma_c<T>(x) * rgamma_c<T>(y);
  return exp(lgamma_c<T>(x) - lgamma_c<T>(y));
}

template <class T>
Cx<T> digamma_c(const Cx<T>& z) {
  using std::abs;
  using std::ceil;
  using std::log;
  if (is_nonpos_int<T>(z)) throw Error(ErrorCode::Pole, "digamma pole");
  Cx<T> one(T(1));
  if (real(z) < T(0.5)) return digamma_c<T>(one - z) - pi<T>() * cospi<T>(z) / sinpi<T>(z);
  const T N = T(Tune<T>::shift);
  Cx<T> acc(T(0));
  Cx<T> w = z;
  if (abs(w) < N) {
    T m = ceil(N - T(real(w)));
    int mi = static_cast<int>(dbl(m));
    for (int k = 0; k < mi; ++k) acc += one / (z + T(k));
    w = z + m;
  }
  const auto& c = digamma_coefs<T>();
  Cx<T> s = log(w) - T(0.5) / w;
  Cx<T> wi2 = one / (w * w);
  Cx<T> p = wi2;
  T prev = T(std::numeric_limits<double>::max());
  for (const T& ck : c) {
    Cx<T> t = ck * p;
    T at = abs(t);
    if (at > prev) break;
    s -= t;
    if (at <= eps<T>() * abs(s) * T(0.01)) break;
    prev = at;
    p *= wi2;
  }
  return s - acc;
}

template <class T>
Cx<T> poch_c(const Cx<T>& z, int n) {
  Cx<T> p(T(1));
  for (int k = 0; k < n; ++k) p *= (z + T(k));
  return p;
}

}  // namespace cg::detail
