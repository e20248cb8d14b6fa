#pragma once

#include <string>
#include <vector>

#include "curvgreen/geometry.hpp"
#include "curvgreen/types.hpp"

namespace cg {

enum class Sign { Plus, Minus };  // operator -Delta +- beta^2

enum class GreensVariant {
  H_PLUS,
  H_MINUS,
  S_PLUS,
  A_PLUS,
  SF_MINUS,
  FRAK_MINUS,
  AF_MINUS,
  FRAKA_MINUS,
  EUCLID_PLUS,
  EUCLID_MINUS,
  LAPLACE_H,
  LAPLACE_S,
};

const char* variant_name(GreensVariant v);
// Throws DOMAIN for an unknown name.
GreensVariant variant_from_name(const std::string& s);
// SF, FRAK, AF, FRAKA: candidate solutions, not proven fundamental solutions.
bool is_candidate(GreensVariant v);
ManifoldKind variant_manifold(GreensVariant v);
Sign variant_sign(GreensVariant v);

// Derived quantities are fixed at construction.
class WaveParams {
 public:
  WaveParams(const ManifoldSpec& m, double beta, Sign sign);

  const ManifoldSpec& manifold() const { return m_; }
  double beta() const { return beta_; }
  Sign sign() const { return sign_; }
  int d() const { return m_.d; }
  double R() const { return m_.R; }
  double mu() const { return mu_; }
  // Degree for this manifold and sign. On the hyperboloid with sign MINUS in
  // the oscillatory regime the imaginary part is negative.
  cplx nu() const { return nu_; }
  // (d-1)^2 -+ 4 beta^2 R^2, the quantity under the square root in nu.
  double discriminant() const { return disc_; }

 private:
  ManifoldSpec m_;
  double beta_;
  Sign sign_;
  double mu_;
  cplx nu_;
  double disc_;
};

EvalResult euclidean_green(Sign sign, int d, double beta, double r);
EvalResult hyperboloid_green(Sign sign, const WaveParams& wp, double rho);
EvalResult sphere_green_plus(const WaveParams& wp, double rho);
EvalResult sphere_green_antipodal_plus(const WaveParams& wp, double rho);

enum class Candidate { SF, FRAK, AF, FRAKA };

struct CandidateResult {
  EvalResult eval;
  bool candidate = true;
  // Value of the volume integral implied by the closed form:
  // -1/beta^2 (SF), -(1/beta^2)(1 - e^{i pi (nu - mu)}) (FRAK), 0 (AF, FRAKA).
  cplx normalization{};
  // Relative beta distance to the nearest eigenvalue pole.
  double pole_distance = 0.0;
};

CandidateResult sphere_candidate_minus(Candidate c, const WaveParams& wp, double rho);

// Laplace fundamental solutions (beta -> 0). Hypersphere gives the opposite
// antipodal solution.
EvalResult laplace_green(const ManifoldSpec& m, double rho);

// First `count` beta > 0 at which Gamma(mu - nu) has a pole for sphere MINUS.
// WRONG_VARIANT unless wp is a hypersphere with sign MINUS.
std::vector<double> eigenvalue_poles(const WaveParams& wp, int count);

// Dispatch by variant tag. For EUCLID_* rho is the Euclidean distance and
// wp.beta() / wp.d() are used; for LAPLACE_* beta is ignored.
EvalResult green_value(GreensVariant v, const WaveParams& wp, double rho);

// Parameters for the variant's own manifold and sign.
WaveParams variant_params(GreensVariant v, int d, double R, double beta);

}  // namespace cg
