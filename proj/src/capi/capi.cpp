#include "curvgreen/curvgreen.h"

#include <deque>
#include <functional>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "curvgreen/expansions.hpp"
#include "curvgreen/greens.hpp"
#include "curvgreen/legendre.hpp"
#include "curvgreen/tolerance.hpp"
#include "curvgreen/verify.hpp"

struct cg_wave_s {
  cg::WaveParams wp;
};

struct cg_series_s {
  cg::SeriesReport rep;
};

struct cg_checks_s {
  std::deque<cg::CheckReport> list;  // stable addresses for the returned strings
};

namespace {

thread_local std::string t_error;
thread_local double t_target = cg::kDefaultTarget;

cg_status fail(cg_status s, const std::string& msg) {
  t_error = msg;
  return s;
}

// Runs f with the caller's target and turns exceptions into status codes.
template <class F>
cg_status guard(F&& f) {
  try {
    cg::TargetScope scope(t_target);
    f();
    t_error.clear();
    return CG_OK;
  } catch (const cg::Error& e) {
    return fail(static_cast<cg_status>(static_cast<int>(e.code()) + 1), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CG_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CG_E_INTERNAL, e.what());
  } catch (...) {
    return fail(CG_E_INTERNAL, "unknown exception");
  }
}

cg::cplx to_cpp(cg_complex z) { return {z.re, z.im}; }
cg_complex to_c(cg::cplx z) { return {z.real(), z.imag()}; }

cg_eval to_c(const cg::EvalResult& r) {
  cg_eval e;
  e.value = to_c(r.value);
  e.abs_err_est = r.abs_err_est;
  e.terms_used = r.terms_used;
  e.flags = r.flags;
  return e;
}

bool valid_variant(cg_variant v) { return v >= CG_H_PLUS && v < CG_VARIANT_COUNT; }
cg::GreensVariant to_cpp(cg_variant v) { return static_cast<cg::GreensVariant>(v); }

bool valid_manifold(cg_manifold m) { return m >= CG_HYPERBOLOID && m <= CG_EUCLIDEAN; }
cg::ManifoldKind to_cpp(cg_manifold m) { return static_cast<cg::ManifoldKind>(m); }

cg::Sign to_cpp(cg_sign s) { return s == CG_PLUS ? cg::Sign::Plus : cg::Sign::Minus; }

#define CG_REQUIRE(cond, msg) \
  do {                        \
    if (!(cond)) return fail(CG_E_INVALID_ARGUMENT, msg); \
  } while (0)

cg_status new_series(cg_series* out, const std::function<cg::SeriesReport()>& f) {
  CG_REQUIRE(out, "out is NULL");
  *out = nullptr;
  return guard([&] { *out = new cg_series_s{f()}; });
}

cg_status append(cg_checks c, const std::function<void(std::deque<cg::CheckReport>&)>& f) {
  CG_REQUIRE(c, "check list is NULL");
  return guard([&] { f(c->list); });
}

}  // namespace

extern "C" {

const char* cg_version(void) { return CURVGREEN_VERSION; }

const char* cg_status_name(cg_status s) {
  switch (s) {
    case CG_OK: return "OK";
    case CG_E_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case CG_E_INTERNAL: return "INTERNAL";
    default:
      if (s >= CG_E_POLE && s <= CG_E_INSUFFICIENT_DATA) return cg::error_name(static_cast<cg::ErrorCode>(s - 1));
      return "UNKNOWN";
  }
}

const char* cg_last_error(void) { return t_error.c_str(); }

cg_status cg_set_target(double target) {
  CG_REQUIRE(target > 0 && target < 1, "target must lie in (0, 1)");
  t_target = target;
  return CG_OK;
}

double cg_get_target(void) { return t_target; }

const char* cg_variant_name(cg_variant v) { return valid_variant(v) ? cg::variant_name(to_cpp(v)) : "UNKNOWN"; }

cg_status cg_variant_from_name(const char* name, cg_variant* out) {
  CG_REQUIRE(name && out, "NULL argument");
  return guard([&] { *out = static_cast<cg_variant>(cg::variant_from_name(name)); });
}

int cg_variant_is_candidate(cg_variant v) { return valid_variant(v) && cg::is_candidate(to_cpp(v)); }

cg_status cg_wave_create(cg_manifold m, int d, double R, double beta, cg_sign sign, cg_wave* out) {
  CG_REQUIRE(out, "out is NULL");
  *out = nullptr;
  CG_REQUIRE(valid_manifold(m), "unknown manifold");
  CG_REQUIRE(sign == CG_PLUS || sign == CG_MINUS, "unknown sign");
  return guard([&] { *out = new cg_wave_s{cg::WaveParams(cg::ManifoldSpec{to_cpp(m), d, R}, beta, to_cpp(sign))}; });
}

cg_status cg_wave_for_variant(cg_variant v, int d, double R, double beta, cg_wave* out) {
  CG_REQUIRE(out, "out is NULL");
  *out = nullptr;
  CG_REQUIRE(valid_variant(v), "unknown variant");
  return guard([&] { *out = new cg_wave_s{cg::variant_params(to_cpp(v), d, R, beta)}; });
}

void cg_wave_free(cg_wave w) { delete w; }

cg_status cg_wave_info(cg_wave w, double* mu, cg_complex* nu, double* discriminant) {
  CG_REQUIRE(w, "wave is NULL");
  if (mu) *mu = w->wp.mu();
  if (nu) *nu = to_c(w->wp.nu());
  if (discriminant) *discriminant = w->wp.discriminant();
  return CG_OK;
}

cg_status cg_ferrers_p(cg_complex nu, cg_complex mu, double x, cg_eval* out) {
  CG_REQUIRE(out, "out is NULL");
  return guard([&] { *out = to_c(cg::ferrers_p(to_cpp(nu), to_cpp(mu), cg::FerrersArg::from_x(x))); });
}

cg_status cg_ferrers_q(cg_complex nu, cg_complex mu, double x, cg_eval* out) {
  CG_REQUIRE(out, "out is NULL");
  return guard([&] { *out = to_c(cg::ferrers_q(to_cpp(nu), to_cpp(mu), cg::FerrersArg::from_x(x))); });
}

cg_status cg_legendre_p(cg_complex nu, cg_complex mu, double z, cg_eval* out) {
  CG_REQUIRE(out, "out is NULL");
  return guard([&] { *out = to_c(cg::legendre_p(to_cpp(nu), to_cpp(mu), cg::HyperbolicArg::from_z(z))); });
}

cg_status cg_legendre_q(cg_complex nu, cg_complex mu, double z, cg_eval* out) {
  CG_REQUIRE(out, "out is NULL");
  return guard([&] { *out = to_c(cg::legendre_q(to_cpp(nu), to_cpp(mu), cg::HyperbolicArg::from_z(z))); });
}

cg_status cg_green(cg_variant v, cg_wave w, double rho, cg_eval* out) {
  CG_REQUIRE(w && out, "NULL argument");
  CG_REQUIRE(valid_variant(v), "unknown variant");
  return guard([&] { *out = to_c(cg::green_value(to_cpp(v), w->wp, rho)); });
}

cg_status cg_sphere_candidate(cg_variant v, cg_wave w, double rho, cg_eval* out, cg_complex* normalization,
                              double* pole_distance) {
  CG_REQUIRE(w && out, "NULL argument");
  cg::Candidate c;
  switch (v) {
    case CG_SF_MINUS: c = cg::Candidate::SF; break;
    case CG_FRAK_MINUS: c = cg::Candidate::FRAK; break;
    case CG_AF_MINUS: c = cg::Candidate::AF; break;
    case CG_FRAKA_MINUS: c = cg::Candidate::FRAKA; break;
    default: return fail(CG_E_WRONG_VARIANT, "WRONG_VARIANT: not a sphere MINUS candidate");
  }
  return guard([&] {
    auto r = cg::sphere_candidate_minus(c, w->wp, rho);
    *out = to_c(r.eval);
    if (normalization) *normalization = to_c(r.normalization);
    if (pole_distance) *pole_distance = r.pole_distance;
  });
}

cg_status cg_laplace_green(cg_manifold m, int d, double R, double rho, cg_eval* out) {
  CG_REQUIRE(out, "out is NULL");
  CG_REQUIRE(valid_manifold(m), "unknown manifold");
  return guard([&] { *out = to_c(cg::laplace_green(cg::ManifoldSpec{to_cpp(m), d, R}, rho)); });
}

cg_status cg_eigenvalue_poles(cg_wave w, int count, double* out) {
  CG_REQUIRE(w && out, "NULL argument");
  CG_REQUIRE(count >= 0, "count must be nonnegative");
  return guard([&] {
    auto p = cg::eigenvalue_poles(w->wp, count);
    for (int i = 0; i < count; ++i) out[i] = i < static_cast<int>(p.size()) ? p[i] : 0.0;
  });
}

namespace {
cg::TwoPointConfig two_point(cg::ManifoldKind k, double a, double b, double gamma) {
  switch (k) {
    case cg::ManifoldKind::Hyperboloid: return cg::TwoPointConfig::hyperbolic(a, b, gamma);
    case cg::ManifoldKind::Hypersphere: return cg::TwoPointConfig::spherical(a, b, gamma);
    default: return cg::TwoPointConfig::euclidean(a, b, gamma);
  }
}
}  // namespace

cg_status cg_expand_green(cg_variant v, cg_wave w, double a, double b, double gamma, int l_max, int relaxed,
                          cg_series* out) {
  CG_REQUIRE(w, "wave is NULL");
  CG_REQUIRE(valid_variant(v), "unknown variant");
  return new_series(out, [&] {
    auto cfg = two_point(cg::variant_manifold(to_cpp(v)), a, b, gamma);
    return cg::green_expansion(to_cpp(v), w->wp, cfg, l_max, cg::SeriesOptions{relaxed != 0});
  });
}

cg_status cg_expand_fourier(cg_variant v, cg_wave w, double a, double b, double gamma, int l_max, int relaxed,
                            cg_series* out) {
  CG_REQUIRE(w, "wave is NULL");
  CG_REQUIRE(valid_variant(v), "unknown variant");
  return new_series(out, [&] {
    auto cfg = two_point(cg::variant_manifold(to_cpp(v)), a, b, gamma);
    return cg::fourier_2d(to_cpp(v), w->wp, cfg, l_max, cg::SeriesOptions{relaxed != 0});
  });
}

cg_status cg_expand_euclidean(cg_sign sign, int d, double beta, double r, double r_prime, double gamma, int l_max,
                              cg_series* out) {
  CG_REQUIRE(sign == CG_PLUS || sign == CG_MINUS, "unknown sign");
  return new_series(out, [&] { return cg::euclidean_expansion(to_cpp(sign), d, beta, r, r_prime, gamma, l_max); });
}

cg_status cg_expand_legendre(int q_kind, cg_complex nu, double mu, double r, double r_prime, double gamma, int n_max,
                             int relaxed, cg_series* out) {
  return new_series(out, [&] {
    auto k = q_kind ? cg::LegendreAddKind::Q : cg::LegendreAddKind::P;
    return cg::addition_legendre(k, to_cpp(nu), mu, cg::TwoPointConfig::hyperbolic(r, r_prime, gamma), n_max,
                                 cg::SeriesOptions{relaxed != 0});
  });
}

cg_status cg_expand_ferrers(cg_ferrers_kind k, cg_complex nu, double mu, double theta, double theta_prime,
                            double gamma, int n_max, int relaxed, cg_series* out) {
  CG_REQUIRE(k >= CG_ADD_PM_PP && k <= CG_ADD_QM_PMMX, "unknown Ferrers kind");
  return new_series(out, [&] {
    return cg::addition_ferrers(static_cast<cg::FerrersAddKind>(k), to_cpp(nu), mu,
                                cg::TwoPointConfig::spherical(theta, theta_prime, gamma), n_max,
                                cg::SeriesOptions{relaxed != 0});
  });
}

cg_status cg_expand_special(cg_special_case c, const cg_special_params* p, cg_manifold m, double a, double b,
                            double gamma, int n_max, int relaxed, cg_series* out) {
  CG_REQUIRE(p, "params is NULL");
  CG_REQUIRE(c >= CG_NU_EQ_MU_HALFINT && c <= CG_COSH_SINH_LEGENDRE, "unknown special case");
  CG_REQUIRE(m == CG_HYPERBOLOID || m == CG_HYPERSPHERE, "special cases live on the curved manifolds");
  CG_REQUIRE(p->form >= CG_TRIG_COSH && p->form <= CG_TRIG_SIN, "unknown trig form");
  return new_series(out, [&] {
    cg::SpecialParams sp;
    sp.mu = p->mu;
    sp.k = p->k;
    sp.m = p->m;
    sp.nu = to_cpp(p->nu);
    sp.form = static_cast<cg::TrigForm>(p->form);
    return cg::addition_special(static_cast<cg::SpecialCase>(c), sp, two_point(to_cpp(m), a, b, gamma), n_max,
                                cg::SeriesOptions{relaxed != 0});
  });
}

cg_status cg_series_get(cg_series s, cg_series_info* out) {
  CG_REQUIRE(s && out, "NULL argument");
  const auto& r = s->rep;
  out->value = to_c(r.value);
  out->terms = r.terms;
  out->last_term_mag = r.last_term_mag;
  out->est_ratio = r.est_ratio;
  out->domain_ok = r.domain_ok;
  out->nonconvergent = r.nonconvergent;
  out->has_reference = r.reference_value.has_value();
  out->reference_value = to_c(r.reference_value.value_or(0.0));
  out->has_rel_err = r.rel_err.has_value();
  out->rel_err = r.rel_err.value_or(0.0);
  return CG_OK;
}

void cg_series_free(cg_series s) { delete s; }

cg_status cg_checks_new(cg_checks* out) {
  CG_REQUIRE(out, "out is NULL");
  *out = nullptr;
  return guard([&] { *out = new cg_checks_s; });
}

void cg_checks_free(cg_checks c) { delete c; }

size_t cg_checks_count(cg_checks c) { return c ? c->list.size() : 0; }

cg_status cg_checks_get(cg_checks c, size_t i, cg_check_info* out) {
  CG_REQUIRE(c && out, "NULL argument");
  if (i >= c->list.size()) return fail(CG_E_RANGE, "RANGE: check index out of range");
  const auto& r = c->list[i];
  out->check_id = r.check_id.c_str();
  out->status = static_cast<cg_check_status>(r.status);
  out->measured = r.measured;
  out->target = r.target;
  out->tolerance = r.tolerance;
  out->notes = r.notes.c_str();
  return CG_OK;
}

size_t cg_checks_failures(cg_checks c) {
  if (!c) return 0;
  size_t n = 0;
  for (const auto& r : c->list) n += (r.status == cg::CheckStatus::FAIL);
  return n;
}

cg_status cg_check_default_suite(cg_checks c) {
  return append(c, [](auto& l) {
    for (auto& r : cg::default_suite()) l.push_back(std::move(r));
  });
}

cg_status cg_check_ode(cg_checks c, cg_variant v, int d, double beta) {
  CG_REQUIRE(valid_variant(v), "unknown variant");
  return append(c, [&](auto& l) { l.push_back(cg::check_ode(to_cpp(v), d, beta)); });
}

cg_status cg_check_normalization(cg_checks c, cg_variant v, int d, double R, double beta) {
  CG_REQUIRE(valid_variant(v), "unknown variant");
  return append(c, [&](auto& l) {
    l.push_back(cg::check_normalization(to_cpp(v), cg::variant_params(to_cpp(v), d, R, beta)));
  });
}

cg_status cg_check_eps_ball(cg_checks c, cg_variant v, int d, double R, double beta, double eps) {
  CG_REQUIRE(valid_variant(v), "unknown variant");
  return append(c, [&](auto& l) {
    l.push_back(cg::check_eps_ball(to_cpp(v), cg::variant_params(to_cpp(v), d, R, beta), eps));
  });
}

cg_status cg_check_flat_limit(cg_checks c, cg_variant v, int d, double beta, double r_phys, const double* R_list,
                              size_t n) {
  CG_REQUIRE(valid_variant(v), "unknown variant");
  CG_REQUIRE(R_list || n == 0, "R_list is NULL");
  return append(c, [&](auto& l) {
    for (auto& r : cg::check_flat_limit(to_cpp(v), d, beta, r_phys, std::vector<double>(R_list, R_list + n)))
      l.push_back(std::move(r));
  });
}

cg_status cg_check_beta_zero(cg_checks c, cg_variant v, int d, double R, double rho, const double* betas, size_t n) {
  CG_REQUIRE(valid_variant(v), "unknown variant");
  CG_REQUIRE(betas || n == 0, "betas is NULL");
  return append(c, [&](auto& l) {
    for (auto& r : cg::check_beta_zero_limit(to_cpp(v), d, R, rho, std::vector<double>(betas, betas + n)))
      l.push_back(std::move(r));
  });
}

cg_status cg_check_mellin(cg_checks c, double alpha, cg_complex nu, double mu) {
  return append(c, [&](auto& l) { l.push_back(cg::check_mellin(alpha, to_cpp(nu), mu)); });
}

cg_status cg_check_asymptotic(cg_checks c, cg_asym_family f) {
  CG_REQUIRE(f >= CG_ASYM_LEGENDRE_CONICAL && f <= CG_ASYM_FERRERS_CONICAL, "unknown family");
  return append(c, [&](auto& l) { l.push_back(cg::check_asymptotic_order(static_cast<cg::AsymFamily>(f))); });
}

cg_status cg_check_connection(cg_checks c, unsigned seed, int samples) {
  return append(c, [&](auto& l) { l.push_back(cg::check_connection_suite(seed, samples)); });
}

}  // extern "C"
