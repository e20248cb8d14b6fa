#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "curvgreen/types.hpp"

namespace tu {

inline double rel(std::complex<double> got, std::complex<double> want) {
  const double s = std::abs(want);
  return s > 0 ? std::abs(got - want) / s : std::abs(got);
}

}  // namespace tu
