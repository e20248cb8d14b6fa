// Precision fallback: double, then 50 and 100 decimal digits.
#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "common/num.hpp"
#include "curvgreen/tolerance.hpp"

namespace cg::detail {

template <class T>
EvalResult to_result(const Res<T>& r) {
  EvalResult e;
  e.value = cdbl<T>(r.v);
  e.abs_err_est = dbl(r.err) + 2.2e-16 * std::abs(e.value);
  e.terms_used = r.terms;
  e.flags = r.flags;
  return e;
}

// f is called with a value of type double, R50 or R100 and returns Res<T>.
// The first tier whose error estimate meets the target wins; otherwise the
// most accurate attempt is returned with NEAR_POLE set.
template <class F>
EvalResult ladder(F&& f) {
  const double tgt = current_target();
  EvalResult best;
  double best_rel = std::numeric_limits<double>::infinity();
  bool have = false;
  bool nc = false;
  std::string nc_msg;

  auto attempt = [&](auto tag) -> bool {
    using T = decltype(tag);
    Res<T> r;
    try {
      r = f(tag);
    } catch (const Error& ex) {
      if (ex.code() != ErrorCode::NoConvergence) throw;
      nc = true;
      nc_msg = ex.what();
      return false;
    }
    if (!finite_c<T>(r.v) || !finite(r.err)) return false;
    EvalResult e = to_result(r);
    if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag())) return false;
    double m = std::abs(e.value);
    double rel;
    if (m > 0)
      rel = e.abs_err_est / m;
    else
      rel = (r.err == 0 || dbl(r.err) < 1e-280) ? 0.0 : std::numeric_limits<double>::infinity();
    if (!have || rel < best_rel) {
      best = e;
      best_rel = rel;
      have = true;
    }
    return rel <= tgt;
  };

  if (attempt(double{})) return best;
  if (attempt(R50{})) return best;
  if (attempt(R100{})) return best;
  if (!have) {
    if (nc) throw Error(ErrorCode::NoConvergence, nc_msg);
    throw Error(ErrorCode::NoConvergence, "evaluation overflowed at every working precision");
  }
  best.flags |= NEAR_POLE;
  return best;
}

}  // namespace cg::detail
