#include "curvgreen/specfun.hpp"

#include "common/ladder.hpp"
#include "curvgreen/tolerance.hpp"
#include "specfun/hyp_t.hpp"

namespace cg {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Pole: return "POLE";
    case ErrorCode::ParamPole: return "PARAM_POLE";
    case ErrorCode::Domain: return "DOMAIN";
    case ErrorCode::NoConvergence: return "NO_CONVERGENCE";
    case ErrorCode::Undefined: return "UNDEFINED";
    case ErrorCode::EigenvaluePole: return "EIGENVALUE_POLE";
    case ErrorCode::DomainViolation: return "DOMAIN_VIOLATION";
    case ErrorCode::WrongCase: return "WRONG_CASE";
    case ErrorCode::WrongVariant: return "WRONG_VARIANT";
    case ErrorCode::Range: return "RANGE";
    case ErrorCode::OffManifold: return "OFF_MANIFOLD";
    case ErrorCode::Grid: return "GRID";
    case ErrorCode::InsufficientData: return "INSUFFICIENT_DATA";
  }
  return "UNKNOWN";
}

namespace {
thread_local double g_target = kDefaultTarget;
}

double current_target() { return g_target; }
TargetScope::TargetScope(double target) : saved_(g_target) {
  if (target > 0) g_target = target;
}
TargetScope::~TargetScope() { g_target = saved_; }

using namespace detail;

EvalResult gamma(cplx z) {
  EvalResult r;
  r.value = gamma_c<double>(z);
  r.abs_err_est = std::abs(r.value) * gamma_relerr<double>(z);
  r.terms_used = 9;
  return r;
}

EvalResult rgamma(cplx z) {
  EvalResult r;
  r.value = rgamma_c<double>(z);
  r.abs_err_est = std::abs(r.value) * gamma_relerr<double>(z);
  r.terms_used = 9;
  return r;
}

EvalResult digamma(cplx z) {
  EvalResult r;
  r.value = digamma_c<double>(z);
  r.abs_err_est = 16 * eps<double>() * (std::abs(r.value) + 1.0);
  return r;
}

cplx pochhammer(cplx z, int n) { return poch_c<double>(z, n); }

cplx gamma_ratio_asymptotic(cplx a, cplx b, double tau, TauSign sign) {
  const double s = (sign == TauSign::Plus) ? 1.0 : -1.0;
  cplx d = a - b;
  return std::exp(cplx(0, s * M_PI / 2) * d + d * std::log(tau));
}

EvalResult regularized_2f1(cplx a, cplx b, cplx c, cplx z) {
  return ladder([&](auto tag) {
    using T = decltype(tag);
    Cx<T> zz = cx<T>(z);
    Cx<T> om = Cx<T>(T(1)) - zz;
    return Hyp<T>::eval(cx<T>(a), cx<T>(b), cx<T>(c), zz, om);
  });
}

EvalResult gauss_2f1(cplx a, cplx b, cplx c, cplx z) {
  if (is_nonpos_int<double>(c)) throw Error(ErrorCode::ParamPole, "c is a non-positive integer");
  return ladder([&](auto tag) {
    using T = decltype(tag);
    Cx<T> zz = cx<T>(z);
    Cx<T> om = Cx<T>(T(1)) - zz;
    Cx<T> cc = cx<T>(c);
    Res<T> r = Hyp<T>::eval(cx<T>(a), cx<T>(b), cc, zz, om);
    using std::abs;
    Cx<T> g = gamma_c<T>(cc);
    r.v *= g;
    r.err = r.err * abs(g) + abs(r.v) * gamma_relerr<T>(cc);
    return r;
  });
}

}  // namespace cg
