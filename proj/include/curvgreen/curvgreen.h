/* curvgreen C API.
 *
 * Every function returns a cg_status. On failure the thread-local message
 * from cg_last_error() says what went wrong. Handles are opaque and owned by
 * the caller; release them with the matching *_free function (NULL is fine).
 */
#ifndef CURVGREEN_H
#define CURVGREEN_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(CG_BUILDING_LIBRARY)
#    define CG_API __declspec(dllexport)
#  else
#    define CG_API __declspec(dllimport)
#  endif
#else
#  define CG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cg_status {
  CG_OK = 0,
  CG_E_POLE = 1,
  CG_E_PARAM_POLE = 2,
  CG_E_DOMAIN = 3,
  CG_E_NO_CONVERGENCE = 4,
  CG_E_UNDEFINED = 5,
  CG_E_EIGENVALUE_POLE = 6,
  CG_E_DOMAIN_VIOLATION = 7,
  CG_E_WRONG_CASE = 8,
  CG_E_WRONG_VARIANT = 9,
  CG_E_RANGE = 10,
  CG_E_OFF_MANIFOLD = 11,
  CG_E_GRID = 12,
  CG_E_INSUFFICIENT_DATA = 13,
  CG_E_INVALID_ARGUMENT = 100, /* NULL pointer, bad enum value, bad handle */
  CG_E_INTERNAL = 101
} cg_status;

/* Flag bits in cg_eval.flags */
#define CG_FLAG_NEAR_POLE 0x1u
#define CG_FLAG_SLOW_CONVERGENCE 0x2u
#define CG_FLAG_ASYMPTOTIC_REGIME 0x4u
#define CG_FLAG_RECURRENCE_UNSTABLE 0x8u

typedef enum cg_manifold { CG_HYPERBOLOID = 0, CG_HYPERSPHERE = 1, CG_EUCLIDEAN = 2 } cg_manifold;
typedef enum cg_sign { CG_PLUS = 0, CG_MINUS = 1 } cg_sign;

typedef enum cg_variant {
  CG_H_PLUS = 0,
  CG_H_MINUS,
  CG_S_PLUS,
  CG_A_PLUS,
  CG_SF_MINUS,
  CG_FRAK_MINUS,
  CG_AF_MINUS,
  CG_FRAKA_MINUS,
  CG_EUCLID_PLUS,
  CG_EUCLID_MINUS,
  CG_LAPLACE_H,
  CG_LAPLACE_S,
  CG_VARIANT_COUNT
} cg_variant;

typedef struct cg_complex {
  double re, im;
} cg_complex;

typedef struct cg_eval {
  cg_complex value;
  double abs_err_est;
  int terms_used;
  unsigned flags;
} cg_eval;

typedef struct cg_wave_s* cg_wave;
typedef struct cg_series_s* cg_series;
typedef struct cg_checks_s* cg_checks;

/* ---- library ---- */

CG_API const char* cg_version(void);
CG_API const char* cg_status_name(cg_status s);
/* Message of the last failed call on this thread ("" if none). */
CG_API const char* cg_last_error(void);
/* Relative accuracy target for the precision fallback, per thread. */
CG_API cg_status cg_set_target(double target);
CG_API double cg_get_target(void);

CG_API const char* cg_variant_name(cg_variant v);
CG_API cg_status cg_variant_from_name(const char* name, cg_variant* out);
CG_API int cg_variant_is_candidate(cg_variant v);

/* ---- wave parameters ---- */

CG_API cg_status cg_wave_create(cg_manifold m, int d, double R, double beta, cg_sign sign, cg_wave* out);
/* Parameters on the variant's own manifold with its own sign. */
CG_API cg_status cg_wave_for_variant(cg_variant v, int d, double R, double beta, cg_wave* out);
CG_API void cg_wave_free(cg_wave w);
CG_API cg_status cg_wave_info(cg_wave w, double* mu, cg_complex* nu, double* discriminant);

/* ---- special functions ---- */

CG_API cg_status cg_ferrers_p(cg_complex nu, cg_complex mu, double x, cg_eval* out);
CG_API cg_status cg_ferrers_q(cg_complex nu, cg_complex mu, double x, cg_eval* out);
CG_API cg_status cg_legendre_p(cg_complex nu, cg_complex mu, double z, cg_eval* out);
CG_API cg_status cg_legendre_q(cg_complex nu, cg_complex mu, double z, cg_eval* out);

/* ---- Green's functions ---- */

/* rho: geodesic angle (rho = r / R) on the curved manifolds, distance for
   EUCLID_*. */
CG_API cg_status cg_green(cg_variant v, cg_wave w, double rho, cg_eval* out);
/* Sphere MINUS candidate (SF, FRAK, AF, FRAKA) with its implied
   normalization and the relative distance to the nearest eigenvalue pole. */
CG_API cg_status cg_sphere_candidate(cg_variant v, cg_wave w, double rho, cg_eval* out, cg_complex* normalization,
                                     double* pole_distance);
CG_API cg_status cg_laplace_green(cg_manifold m, int d, double R, double rho, cg_eval* out);
/* First `count` eigenvalue poles in beta; w must be hypersphere MINUS. */
CG_API cg_status cg_eigenvalue_poles(cg_wave w, int count, double* out);

/* ---- series ---- */

typedef struct cg_series_info {
  cg_complex value;
  int terms;
  double last_term_mag;
  double est_ratio;
  int domain_ok;
  int nonconvergent;
  int has_reference;
  cg_complex reference_value;
  int has_rel_err;
  double rel_err;
} cg_series_info;

typedef enum cg_ferrers_kind {
  CG_ADD_PM_PP = 0,
  CG_ADD_PM_QP,
  CG_ADD_PM_PM,
  CG_ADD_PM_QM,
  CG_ADD_PM_PMMX,
  CG_ADD_QM_PMMX
} cg_ferrers_kind;

typedef enum cg_special_case {
  CG_NU_EQ_MU_HALFINT = 0,
  CG_NU_EQ_MU_INT,
  CG_LOGCOT,
  CG_Q_K_MK,
  CG_Q_MH_MMH,
  CG_COSH_SINH_LEGENDRE
} cg_special_case;

typedef enum cg_trig_form { CG_TRIG_COSH = 0, CG_TRIG_EXP, CG_TRIG_COS, CG_TRIG_SIN } cg_trig_form;

typedef struct cg_special_params {
  double mu;      /* NU_EQ_MU_* */
  int k;          /* Q_K_MK */
  int m;          /* Q_MH_MMH */
  cg_complex nu;  /* COSH_SINH_LEGENDRE */
  cg_trig_form form;
} cg_special_params;

/* Two points: (a, b) are (r, r') on the hyperboloid or in flat space,
   (theta, theta') on the sphere; gamma is the separation angle. */
CG_API cg_status cg_expand_green(cg_variant v, cg_wave w, double a, double b, double gamma, int l_max, int relaxed,
                                 cg_series* out);
CG_API cg_status cg_expand_fourier(cg_variant v, cg_wave w, double a, double b, double gamma, int l_max, int relaxed,
                                   cg_series* out);
CG_API cg_status cg_expand_euclidean(cg_sign sign, int d, double beta, double r, double r_prime, double gamma,
                                     int l_max, cg_series* out);
CG_API cg_status cg_expand_legendre(int q_kind, cg_complex nu, double mu, double r, double r_prime, double gamma,
                                    int n_max, int relaxed, cg_series* out);
CG_API cg_status cg_expand_ferrers(cg_ferrers_kind k, cg_complex nu, double mu, double theta, double theta_prime,
                                   double gamma, int n_max, int relaxed, cg_series* out);
/* manifold selects hyperbolic (r, r') or spherical (theta, theta') inputs. */
CG_API cg_status cg_expand_special(cg_special_case c, const cg_special_params* p, cg_manifold m, double a, double b,
                                   double gamma, int n_max, int relaxed, cg_series* out);
CG_API cg_status cg_series_get(cg_series s, cg_series_info* out);
CG_API void cg_series_free(cg_series s);

/* ---- verification ---- */

typedef enum cg_check_status { CG_CHECK_PASS = 0, CG_CHECK_FAIL = 1, CG_CHECK_SKIP = 2 } cg_check_status;

typedef enum cg_asym_family {
  CG_ASYM_LEGENDRE_CONICAL = 0,
  CG_ASYM_FERRERS_LARGE_NU,
  CG_ASYM_FERRERS_CONICAL
} cg_asym_family;

/* Strings stay valid until the list is freed. */
typedef struct cg_check_info {
  const char* check_id;
  cg_check_status status;
  double measured;
  double target;
  double tolerance;
  const char* notes;
} cg_check_info;

CG_API cg_status cg_checks_new(cg_checks* out);
CG_API void cg_checks_free(cg_checks c);
CG_API size_t cg_checks_count(cg_checks c);
CG_API cg_status cg_checks_get(cg_checks c, size_t i, cg_check_info* out);
/* Number of FAIL entries. */
CG_API size_t cg_checks_failures(cg_checks c);

/* Each of these appends its reports to the list. */
CG_API cg_status cg_check_default_suite(cg_checks c);
CG_API cg_status cg_check_ode(cg_checks c, cg_variant v, int d, double beta);
CG_API cg_status cg_check_normalization(cg_checks c, cg_variant v, int d, double R, double beta);
CG_API cg_status cg_check_eps_ball(cg_checks c, cg_variant v, int d, double R, double beta, double eps);
CG_API cg_status cg_check_flat_limit(cg_checks c, cg_variant v, int d, double beta, double r_phys,
                                     const double* R_list, size_t n);
CG_API cg_status cg_check_beta_zero(cg_checks c, cg_variant v, int d, double R, double rho, const double* betas,
                                    size_t n);
CG_API cg_status cg_check_mellin(cg_checks c, double alpha, cg_complex nu, double mu);
CG_API cg_status cg_check_asymptotic(cg_checks c, cg_asym_family f);
CG_API cg_status cg_check_connection(cg_checks c, unsigned seed, int samples);

#ifdef __cplusplus
}
#endif

#endif
