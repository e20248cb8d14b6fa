#pragma once

#include "curvgreen/types.hpp"

namespace cg {

EvalResult gamma(cplx z);
// 1/Gamma(z); zero at the poles of Gamma.
EvalResult rgamma(cplx z);
EvalResult digamma(cplx z);
cplx pochhammer(cplx z, int n);

enum class TauSign { Plus, Minus };

// Leading term e^{+-i pi (a-b)/2} tau^{a-b} of Gamma(a +- i tau)/Gamma(b +- i tau).
cplx gamma_ratio_asymptotic(cplx a, cplx b, double tau, TauSign sign);

// 2F1(a,b;c;z). PARAM_POLE when c is a non-positive integer.
EvalResult gauss_2f1(cplx a, cplx b, cplx c, cplx z);
// 2F1(a,b;c;z)/Gamma(c), entire in a, b, c.
EvalResult regularized_2f1(cplx a, cplx b, cplx c, cplx z);

enum class CylKind { J, Y, I, K, H1, H2 };

EvalResult cyl(CylKind kind, double mu, double x);
double env_j(double mu, double x);
double env_h(CylKind kind, double mu, double x);

double chebyshev_t(int n, double x);
double gegenbauer_c(int n, double mu, double x);
double legendre_poly(int n, double x);

}  // namespace cg
