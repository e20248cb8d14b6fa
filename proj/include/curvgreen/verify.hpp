#pragma once

#include <functional>
#include <string>
#include <vector>

#include "curvgreen/greens.hpp"
#include "curvgreen/types.hpp"

namespace cg {

// ---- quadrature ----

enum class Singularity { None, LeftAlg, RightAlg, LeftLog, RightLog };

// Endpoint behaviour of the integrand. For the ALG kinds, p is the exponent
// of the blow-up: f ~ (x - a)^{-p}.
struct QuadHint {
  Singularity kind = Singularity::None;
  double p = 0.0;
};

// Adaptive Gauss-Kronrod (7/15) bisection. Deterministic subdivision order.
// NO_CONVERGENCE when an interval at depth 60 (or the interval budget) still
// misses its share of tol.
EvalResult quad(const std::function<cplx(double)>& f, double a, double b, double tol, QuadHint hint = {});
EvalResult quad(const std::function<double(double)>& f, double a, double b, double tol, QuadHint hint = {});

// ---- reports ----

enum class CheckStatus { PASS, FAIL, SKIP };
const char* status_name(CheckStatus s);

struct CheckReport {
  std::string check_id;
  CheckStatus status = CheckStatus::SKIP;
  double measured = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  std::string notes;
};

// ---- radial equations ----

// Operator -f'' - (d-1) coth(r) f' + (l(l+d-2)/sinh^2 r +- beta^2 R^2) f
// (cot / sin on the sphere), with the sign of wp.
using RadialFn = std::function<cplx(double)>;

// Profile of a Green's function as a function of the geodesic radius (l = 0).
RadialFn green_profile(GreensVariant v, const WaveParams& wp);

// Separable solutions sinh^{-mu} r P/Q_nu^{+-(mu+l)}(cosh r), or the Ferrers
// analogues on the sphere.
enum class HomogeneousKind { PPlus, PMinus, QPlus, QMinus };
RadialFn homogeneous_solution(HomogeneousKind k, const WaveParams& wp, int l);

// Max over the grid of |residual| / (sum of the magnitudes of its terms).
// GRID when the grid is empty or comes within 1e-2 of a singular endpoint.
double radial_residual(const RadialFn& f, const WaveParams& wp, int l, const std::vector<double>& grid);
double radial_residual(GreensVariant v, const WaveParams& wp, const std::vector<double>& grid);

// ---- checks ----

// Integral of u over the hypersphere against the expected total.
CheckReport check_normalization(GreensVariant v, const WaveParams& wp);

// Divergence-theorem balance on the geodesic ball of angular radius eps.
CheckReport check_eps_ball(GreensVariant v, const WaveParams& wp, double eps);

// Error against the Euclidean function at rho = r_phys / R along R_list. One
// report per R, then a summary. For SF_MINUS the summary asserts oscillation.
std::vector<CheckReport> check_flat_limit(GreensVariant v, int d, double beta, double r_phys,
                                          const std::vector<double>& R_list);

// beta -> 0 along a decreasing sequence. Antipodal variants: value at the
// smallest beta against laplace_green. S_PLUS / SF_MINUS: fitted exponent and
// the beta^2 constant.
std::vector<CheckReport> check_beta_zero_limit(GreensVariant v, int d, double R, double rho,
                                               const std::vector<double>& betas);

// Closed Mellin-type integral of (1 - x^2)^{alpha-1} P_nu^{-mu}(x) over (-1, 1).
cplx mellin_closed(double alpha, cplx nu, double mu);
CheckReport check_mellin(double alpha, cplx nu, double mu);

enum class AsymFamily { LegendreConical, FerrersLargeNu, FerrersConical };
const char* asym_family_name(AsymFamily f);
// Envelope-normalized error sup over a small (kind, mu, argument) grid at
// parameters {25, 50, 100}; PASS when the fitted exponent is in [-1.4, -0.6].
CheckReport check_asymptotic_order(AsymFamily f);

// Connection and reflection identities at random points (fixed seed).
CheckReport check_connection_suite(unsigned seed, int samples);

// ODE residual check for a variant, d and beta on a default grid.
CheckReport check_ode(GreensVariant v, int d, double beta);

std::vector<CheckReport> default_suite();

}  // namespace cg
