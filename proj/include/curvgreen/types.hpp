#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace cg {

using cplx = std::complex<double>;

enum class ErrorCode {
  Pole,
  ParamPole,
  Domain,
  NoConvergence,
  Undefined,
  EigenvaluePole,
  DomainViolation,
  WrongCase,
  WrongVariant,
  Range,
  OffManifold,
  Grid,
  InsufficientData,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

enum Flag : unsigned {
  NEAR_POLE = 1u << 0,
  SLOW_CONVERGENCE = 1u << 1,
  ASYMPTOTIC_REGIME = 1u << 2,
  RECURRENCE_UNSTABLE = 1u << 3,
};

struct EvalResult {
  cplx value{};
  double abs_err_est = 0.0;
  int terms_used = 0;
  unsigned flags = 0;
};

// Target relative accuracy for the internal precision fallback.
inline constexpr double kDefaultTarget = 1e-12;

}  // namespace cg
