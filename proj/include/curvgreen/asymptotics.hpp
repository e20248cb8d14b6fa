#pragma once

#include <utility>
#include <vector>

#include "curvgreen/types.hpp"

namespace cg {

enum class AsymRegime { LegendreLargeNu, ConicalLargeTau, FerrersLargeNu, FerrersConical, OddFerrers };

// Leading-order approximant. envelope_scale is the envelope magnitude used to
// normalize errors where the approximant oscillates through zero.
struct AsymptoticApprox {
  cplx value{};
  double envelope_scale = 0.0;
  AsymRegime regime = AsymRegime::LegendreLargeNu;
  // Odd Ferrers only: |difference| of the two branch formulas at theta = pi/2.
  double branch_gap = 0.0;
};

// Exclusion near theta = pi for the Ferrers approximants.
inline constexpr double kAsymDelta = 0.1;

enum class LegendreAsymKind { PNegMu, QMu };
// P_nu^{-mu}(cosh r), Q_nu^{mu}(cosh r) for large nu.
AsymptoticApprox legendre_large_nu(LegendreAsymKind kind, double nu, double mu, double r);

// Degrees -1/2 +- i tau. The Q kinds take order sign * mu.
enum class ConicalAsymKind { PNeg, PPos, QPlusBranch, QMinusBranch };
AsymptoticApprox conical_large_tau(ConicalAsymKind kind, double tau, double mu, double r, int order_sign = +1);

// Ferrers functions at cos(theta), and the two reflected kinds at -cos(theta).
enum class FerrersAsymKind { PNegMu, PPosMu, QNegMu, QPosMu, PNegMuRefl, QNegMuRefl };
AsymptoticApprox ferrers_large_nu(FerrersAsymKind kind, double nu, double mu, double theta,
                                  double delta = kAsymDelta);

// Same kinds for degree -1/2 + branch * i tau, branch = +1 or -1.
AsymptoticApprox ferrers_conical_large_tau(FerrersAsymKind kind, double tau, double mu, double theta, int branch = +1,
                                           double delta = kAsymDelta);

enum class OddRegime { LargeNu, Conical };
// f^{-mu} for degree nu (LargeNu) or -1/2 + i tau (Conical).
AsymptoticApprox odd_ferrers_asymptotic(OddRegime regime, double param, double mu, double theta);

// Least-squares slope of log(error) against log(param).
// INSUFFICIENT_DATA with fewer than 3 usable points.
double empirical_order(const std::vector<std::pair<double, double>>& param_err);

}  // namespace cg
