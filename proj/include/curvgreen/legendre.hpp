#pragma once

#include "curvgreen/types.hpp"

namespace cg {

// Point of (-1, 1), given either as x or as theta with x = cos(theta).
// Giving theta keeps 1 - x and 1 + x exact near the endpoints.
struct FerrersArg {
  double x = 0.0;
  double theta = 0.0;
  bool has_theta = false;
  bool negated = false;  // the point is -x (theta -> pi - theta)

  static FerrersArg from_x(double x);
  static FerrersArg from_theta(double theta);
  FerrersArg reflected() const;
  double value() const;
};

// Point of (1, inf), given either as z or as r with z = cosh(r).
struct HyperbolicArg {
  double z = 2.0;
  double r = 0.0;
  bool has_r = false;

  static HyperbolicArg from_z(double z);
  static HyperbolicArg from_r(double r);
  double value() const;
};

// Ferrers functions on (-1, 1).
EvalResult ferrers_p(cplx nu, cplx mu, const FerrersArg& x);
// UNDEFINED when nu + mu is a negative integer, except nu = -3/2, -5/2, ...
EvalResult ferrers_q(cplx nu, cplx mu, const FerrersArg& x);
// P_nu^{-mu}(-x), stable as x -> -1. DOMAIN unless Re mu > 0.
EvalResult ferrers_p_reflected(cplx nu, cplx mu, const FerrersArg& x);
// f_nu^mu(x) = P_nu^mu(-x) - P_nu^mu(x)
EvalResult odd_ferrers_f(cplx nu, cplx mu, const FerrersArg& x);

// Associated Legendre functions on (1, inf). Q carries the e^{i pi mu} factor.
EvalResult legendre_p(cplx nu, cplx mu, const HyperbolicArg& z);
EvalResult legendre_q(cplx nu, cplx mu, const HyperbolicArg& z);

enum class HalfOddKind { P, Q, FerrersP, FerrersQ };

// Order mu = two_mu / 2 with two_mu odd, from the mu = +-1/2 elementary
// forms and the three-term order recurrence.
EvalResult half_odd_eval(HalfOddKind kind, cplx nu, int two_mu, const FerrersArg& x);
EvalResult half_odd_eval(HalfOddKind kind, cplx nu, int two_mu, const HyperbolicArg& z);
// arg is x for the Ferrers kinds and z for the Legendre kinds.
EvalResult half_odd_eval(HalfOddKind kind, cplx nu, int two_mu, double arg);

// Gegenbauer function C_lambda^mu(cos gamma).
EvalResult gegenbauer_function(cplx lambda, cplx mu, double gamma_angle);

}  // namespace cg
