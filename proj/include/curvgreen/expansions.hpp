#pragma once

#include <optional>

#include "curvgreen/geometry.hpp"
#include "curvgreen/greens.hpp"
#include "curvgreen/types.hpp"

namespace cg {

// Two points in geodesic polar form: radial pair and separation angle gamma.
// The composite separation (rho or Theta, or the Euclidean distance) is
// always recomputed here from the two-point formula.
struct TwoPointConfig {
  ManifoldKind kind = ManifoldKind::Hypersphere;
  double a = 0.0, b = 0.0;  // r, r' or theta, theta'
  double gamma = 0.0;
  double composite = 0.0;
  double lt = 0.0, gt = 0.0;  // ordered radial values
  bool distinct = true;

  static TwoPointConfig hyperbolic(double r, double r_prime, double gamma);
  static TwoPointConfig spherical(double theta, double theta_prime, double gamma);
  static TwoPointConfig euclidean(double r, double r_prime, double gamma);
};

struct SeriesReport {
  cplx value{};
  int terms = 0;
  double last_term_mag = 0.0;
  double est_ratio = 0.0;
  bool domain_ok = true;
  // last 5 terms were non-decreasing when the cap was reached
  bool nonconvergent = false;
  std::optional<cplx> reference_value;
  std::optional<double> rel_err;
};

struct SeriesOptions {
  // Evaluate outside the stated convergence conditions instead of refusing.
  bool relaxed = false;
};

struct DomainCheck {
  bool domain_ok = false;
  double est_ratio = 0.0;
};

DomainCheck convergence_domain(double theta_lt, double theta_gt, bool needs_distinct);

enum class LegendreAddKind { P, Q };
SeriesReport addition_legendre(LegendreAddKind kind, cplx nu, double mu, const TwoPointConfig& cfg, int n_max,
                               const SeriesOptions& opt = {});

enum class FerrersAddKind { PmPp, PmQp, PmPm, PmQm, PmPmmx, QmPmmx };
const char* ferrers_add_name(FerrersAddKind k);
SeriesReport addition_ferrers(FerrersAddKind kind, cplx nu, double mu, const TwoPointConfig& cfg, int n_max,
                              const SeriesOptions& opt = {});

enum class SpecialCase { NU_EQ_MU_HALFINT, NU_EQ_MU_INT, LOGCOT, Q_K_MK, Q_MH_MMH, COSH_SINH_LEGENDRE };
// Sub-forms of COSH_SINH_LEGENDRE: cosh and exp on the hyperboloid, cos and
// sin on the sphere.
enum class TrigForm { Cosh, Exp, Cos, Sin };

struct SpecialParams {
  double mu = 1.0;  // NU_EQ_MU_*
  int k = 1;        // Q_K_MK, k >= 1
  int m = 0;        // Q_MH_MMH, m >= 0
  cplx nu = 0.0;    // COSH_SINH_LEGENDRE
  TrigForm form = TrigForm::Cos;
};

SeriesReport addition_special(SpecialCase c, const SpecialParams& p, const TwoPointConfig& cfg, int n_max,
                              const SeriesOptions& opt = {});

// Gegenbauer expansion of a Green's function, d >= 3.
SeriesReport green_expansion(GreensVariant v, const WaveParams& wp, const TwoPointConfig& cfg, int l_max,
                             const SeriesOptions& opt = {});

// Azimuthal Fourier expansion, d = 2.
SeriesReport fourier_2d(GreensVariant v, const WaveParams& wp, const TwoPointConfig& cfg, int l_max,
                        const SeriesOptions& opt = {});

// Bessel-Gegenbauer series of the Euclidean fundamental solutions.
SeriesReport euclidean_expansion(Sign sign, int d, double beta, double r, double r_prime, double gamma, int l_max);

}  // namespace cg
