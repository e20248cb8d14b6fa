// Precision-generic helpers shared by the templated kernels.
#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/fpclassify.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cmath>
#include <complex>
#include <limits>

#include "curvgreen/types.hpp"

namespace cg::detail {

namespace mp = boost::multiprecision;
using R50 = mp::cpp_bin_float_50;
using R100 = mp::cpp_bin_float_100;

template <class T>
struct ComplexOf;
template <>
struct ComplexOf<double> {
  using type = std::complex<double>;
};
template <>
struct ComplexOf<R50> {
  using type = mp::cpp_complex_50;
};
template <>
struct ComplexOf<R100> {
  using type = mp::cpp_complex_100;
};
template <class T>
using Cx = typename ComplexOf<T>::type;

// Stirling shift threshold and series cap per precision.
template <class T>
struct Tune;
template <>
struct Tune<double> {
  static constexpr int shift = 12;
  static constexpr int kmax = 24;
  static constexpr int max_terms = 200000;
};
template <>
struct Tune<R50> {
  static constexpr int shift = 26;
  static constexpr int kmax = 70;
  static constexpr int max_terms = 100000;
};
template <>
struct Tune<R100> {
  static constexpr int shift = 48;
  static constexpr int kmax = 120;
  static constexpr int max_terms = 100000;
};

template <class T>
inline T eps() {
  return std::numeric_limits<T>::epsilon();
}
template <class T>
inline T pi() {
  return boost::math::constants::pi<T>();
}
template <class T>
inline T euler_gamma() {
  return boost::math::constants::euler<T>();
}

inline double dbl(double x) { return x; }
template <class T>
inline double dbl(const T& x) {
  return x.template convert_to<double>();
}
template <class T>
inline cplx cdbl(const Cx<T>& z) {
  return {dbl(real(z)), dbl(imag(z))};
}
template <class T>
inline Cx<T> cx(cplx z) {
  return Cx<T>(T(z.real()), T(z.imag()));
}
template <class T>
inline Cx<T> cx(const T& re, const T& im = T(0)) {
  return Cx<T>(re, im);
}

template <class T>
inline bool finite(const T& x) {
  return (boost::math::isfinite)(x);
}
template <class T>
inline bool finite_c(const Cx<T>& z) {
  return finite(T(real(z))) && finite(T(imag(z)));
}

// Exact test for z in {0, -1, -2, ...}; n receives -z.
template <class T>
inline bool is_nonpos_int(const Cx<T>& z, long* n = nullptr) {
  using std::floor;
  T re = real(z);
  if (imag(z) != 0 || re > 0 || floor(re) != re) return false;
  if (re < T(-1e9)) return false;
  if (n) *n = static_cast<long>(dbl(-re));
  return true;
}

template <class T>
inline bool is_int(const Cx<T>& z, long* n = nullptr) {
  using std::abs;
  using std::floor;
  T re = real(z);
  if (imag(z) != 0 || floor(re) != re || abs(re) > T(1e9)) return false;
  if (n) *n = static_cast<long>(dbl(re));
  return true;
}

template <class T>
inline T round_t(const T& x) {
  using std::floor;
  return floor(x + T(0.5));
}

// sin(pi z) and cos(pi z) with exact reduction of the real part.
template <class T>
inline Cx<T> sinpi(const Cx<T>& z) {
  using std::sin;
  T n = round_t(T(real(z)));
  Cx<T> w = Cx<T>(T(real(z)) - n, T(imag(z)));
  Cx<T> s = sin(w * pi<T>());
  long k = static_cast<long>(dbl(n));
  return (k % 2 == 0) ? s : -s;
}
template <class T>
inline Cx<T> cospi(const Cx<T>& z) {
  using std::cos;
  T n = round_t(T(real(z)));
  Cx<T> w = Cx<T>(T(real(z)) - n, T(imag(z)));
  Cx<T> s = cos(w * pi<T>());
  long k = static_cast<long>(dbl(n));
  return (k % 2 == 0) ? s : -s;
}

// log(sin(pi z)) modulo 2 pi i, safe for large |Im z|.
template <class T>
inline Cx<T> log_sinpi(const Cx<T>& z) {
  using std::exp;
  using std::log;
  T y = imag(z) * pi<T>();
  const Cx<T> I(T(0), T(1));
  if (y > T(20)) {
    Cx<T> w = z * pi<T>();
    return -I * w + log((exp(T(2) * I * w) - Cx<T>(T(1))) / (T(2) * I));
  }
  if (y < T(-20)) {
    Cx<T> w = z * pi<T>();
    return I * w + log((Cx<T>(T(1)) - exp(T(-2) * I * w)) / (T(2) * I));
  }
  return log(sinpi<T>(z));
}

// Sum of |value| and error carried through the kernels.
template <class T>
struct Res {
  Cx<T> v{};
  T err = T(0);
  int terms = 0;
  unsigned flags = 0;
};

template <class T>
inline T rel_err(const Res<T>& r) {
  using std::abs;
  T m = abs(r.v);
  if (m == 0) return r.err == 0 ? T(0) : T(std::numeric_limits<double>::infinity());
  return r.err / m;
}

}  // namespace cg::detail
