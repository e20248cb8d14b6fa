// curvgreen command-line front end. Talks to the library only through the C API.
//
// Exit status: 0 success, 2 when any check fails, 1 on usage or domain errors.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "curvgreen/curvgreen.h"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Library failure; carries the status name and message.
struct LibError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(cg_status s) {
  if (s != CG_OK) throw LibError(std::string(cg_status_name(s)) + ": " + cg_last_error());
}

std::string num(double x) {
  char b[40];
  std::snprintf(b, sizeof b, "%.17g", x);
  return b;
}

// Doubles go into JSON as parsed-back 17-digit values; non-finite become null.
json jnum(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(num(x).c_str(), nullptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) {
    if (c == '"') o += '"';
    o += c;
  }
  return o + "\"";
}

json flag_names(unsigned f) {
  json a = json::array();
  if (f & CG_FLAG_NEAR_POLE) a.push_back("NEAR_POLE");
  if (f & CG_FLAG_SLOW_CONVERGENCE) a.push_back("SLOW_CONVERGENCE");
  if (f & CG_FLAG_ASYMPTOTIC_REGIME) a.push_back("ASYMPTOTIC_REGIME");
  if (f & CG_FLAG_RECURRENCE_UNSTABLE) a.push_back("RECURRENCE_UNSTABLE");
  return a;
}

std::string flag_string(unsigned f) {
  std::string s;
  for (auto& n : flag_names(f)) s += (s.empty() ? "" : "|") + n.get<std::string>();
  return s;
}

// RAII owners for the C handles.
struct Wave {
  cg_wave h = nullptr;
  ~Wave() { cg_wave_free(h); }
};
struct Series {
  cg_series h = nullptr;
  ~Series() { cg_series_free(h); }
};
struct Checks {
  cg_checks h = nullptr;
  Checks() { check(cg_checks_new(&h)); }
  ~Checks() { cg_checks_free(h); }
};

// ---- options ----

struct Opts {
  std::string output;
  double tol = 0;
  std::string config;

  // geometry and parameters
  std::string manifold, sign, variant;
  int d = 3;
  double R = 1.0, beta = 1.0, rho = NAN;
  double r = NAN, r_prime = NAN, theta = NAN, theta_prime = NAN, gamma = NAN;
  int lmax = 30, nmax = 80;
  bool relaxed = false;

  // expand
  std::string addition;
  double nu = 0, nu_im = 0, mu = 0;

  // verify
  std::string suite, check_name, family = "legendre_conical";
  double eps = 1e-2, r_phys = 0.5, alpha = 1.0;
  std::vector<double> R_list{10, 30, 100, 300}, betas{1e-3, 1e-4, 1e-5, 1e-6, 1e-7};
  unsigned seed = 20240917;
  int samples = 40;

  // sweep
  std::string param = "rho";
  std::vector<double> values;
  double from = NAN, to = NAN;
  int steps = 10;

  // poles
  int count = 5;

  // special
  std::string special_case;
  int k = 1, m = 0;
  std::string form = "cos";
};

const std::map<std::string, cg_manifold> kManifolds{
    {"hyperboloid", CG_HYPERBOLOID}, {"hypersphere", CG_HYPERSPHERE}, {"euclidean", CG_EUCLIDEAN}};

std::vector<std::string> variant_names() {
  std::vector<std::string> v;
  for (int i = 0; i < CG_VARIANT_COUNT; ++i) v.push_back(cg_variant_name(static_cast<cg_variant>(i)));
  return v;
}

cg_variant parse_variant(const std::string& s) {
  cg_variant v;
  if (cg_variant_from_name(s.c_str(), &v) != CG_OK) throw UsageError("--variant: unknown variant " + s);
  return v;
}

cg_sign parse_sign(const std::string& s) { return s == "minus" ? CG_MINUS : CG_PLUS; }

double need(double x, const char* flag, const char* range) {
  if (std::isnan(x)) throw UsageError(std::string(flag) + " is required (" + range + ")");
  return x;
}

// Record of the options that shaped the run.
json config_echo(const CLI::App* sub) {
  json e = json::object();
  e["command"] = sub->get_name();
  for (const CLI::Option* o : sub->get_options()) {
    if (o->get_lnames().empty() || o->get_lnames()[0] == "help") continue;
    std::string key = o->get_lnames()[0];
    std::vector<std::string> vals = o->count() > 0 ? o->results() : std::vector<std::string>{};
    if (vals.empty()) {
      const std::string& def = o->get_default_str();
      if (def.empty()) continue;
      vals = {def};
    }
    auto conv = [](const std::string& s) -> json {
      char* end = nullptr;
      long long n = std::strtoll(s.c_str(), &end, 10);
      if (end && *end == '\0' && end != s.c_str()) return n;
      double x = std::strtod(s.c_str(), &end);
      if (end && *end == '\0' && end != s.c_str()) return x;
      return s;
    };
    if (o->get_expected_max() > 1) {
      json a = json::array();
      for (auto& v : vals) {
        std::stringstream ss(v);
        std::string part;
        while (std::getline(ss, part, ',')) {
          // defaults print as "[a,b,c]"
          std::erase(part, '[');
          std::erase(part, ']');
          if (!part.empty()) a.push_back(conv(part));
        }
      }
      e[key] = a;
    } else if (o->get_type_size() == 0) {
      e[key] = true;
    } else {
      e[key] = conv(vals.back());
    }
  }
  // a variant carries its own sign
  if (e.contains("variant")) e.erase("sign");
  return e;
}

json header(const CLI::App* sub) {
  json j;
  j["tool_version"] = cg_version();
  j["config_echo"] = config_echo(sub);
  return j;
}

// ---- commands ----

json eval_doc(const std::string& variant, const cg_eval& e) {
  json j;
  j["variant"] = variant;
  j["value_re"] = jnum(e.value.re);
  j["value_im"] = jnum(e.value.im);
  j["abs_err_est"] = jnum(e.abs_err_est);
  j["terms_used"] = e.terms_used;
  j["flags"] = flag_names(e.flags);
  return j;
}

int cmd_eval(const Opts& o, const CLI::App* sub) {
  const double rho = need(o.rho, "--rho", "geodesic angle > 0, or distance for euclidean");
  std::vector<cg_variant> vs;
  if (!o.variant.empty()) {
    vs.push_back(parse_variant(o.variant));
  } else {
    if (o.manifold.empty()) throw UsageError("--manifold or --variant is required");
    const bool minus = parse_sign(o.sign) == CG_MINUS;
    switch (kManifolds.at(o.manifold)) {
      case CG_HYPERBOLOID: vs.push_back(minus ? CG_H_MINUS : CG_H_PLUS); break;
      case CG_EUCLIDEAN: vs.push_back(minus ? CG_EUCLID_MINUS : CG_EUCLID_PLUS); break;
      case CG_HYPERSPHERE:
        // both candidates side by side, neither preferred
        if (minus)
          vs = {CG_SF_MINUS, CG_FRAK_MINUS};
        else
          vs.push_back(CG_S_PLUS);
        break;
    }
  }
  std::vector<json> rows;
  for (cg_variant v : vs) {
    Wave w;
    check(cg_wave_for_variant(v, o.d, o.R, o.beta, &w.h));
    cg_eval e;
    json row;
    if (cg_variant_is_candidate(v)) {
      cg_complex norm;
      double pd;
      check(cg_sphere_candidate(v, w.h, rho, &e, &norm, &pd));
      row = eval_doc(cg_variant_name(v), e);
      row["candidate"] = true;
      row["normalization_re"] = jnum(norm.re);
      row["normalization_im"] = jnum(norm.im);
      row["pole_distance"] = jnum(pd);
    } else {
      check(cg_green(v, w.h, rho, &e));
      row = eval_doc(cg_variant_name(v), e);
    }
    rows.push_back(row);
  }
  if (o.output == "csv") {
    std::cout << "variant,value_re,value_im,abs_err_est,terms_used,flags\n";
    for (auto& r : rows)
      std::cout << r["variant"].get<std::string>() << ',' << num(r["value_re"].is_null() ? NAN : r["value_re"].get<double>())
                << ',' << num(r["value_im"].is_null() ? NAN : r["value_im"].get<double>()) << ','
                << num(r["abs_err_est"].is_null() ? NAN : r["abs_err_est"].get<double>()) << ','
                << r["terms_used"].get<int>() << ',' << csv_field([&] {
                     std::string s;
                     for (auto& f : r["flags"]) s += (s.empty() ? "" : "|") + f.get<std::string>();
                     return s;
                   }()) << '\n';
    return 0;
  }
  json doc = header(sub);
  if (rows.size() == 1) {
    for (auto& [k, v] : rows[0].items()) doc[k] = v;
  } else {
    doc["candidates"] = rows;
  }
  std::cout << doc.dump(2) << '\n';
  return 0;
}

json series_doc(const cg_series_info& s) {
  json j;
  j["value_re"] = jnum(s.value.re);
  j["value_im"] = jnum(s.value.im);
  j["terms"] = s.terms;
  j["last_term_mag"] = jnum(s.last_term_mag);
  j["est_ratio"] = jnum(s.est_ratio);
  j["domain_ok"] = bool(s.domain_ok);
  j["nonconvergent"] = bool(s.nonconvergent);
  if (s.has_reference) {
    j["reference_value_re"] = jnum(s.reference_value.re);
    j["reference_value_im"] = jnum(s.reference_value.im);
  } else {
    j["reference_value_re"] = nullptr;
    j["reference_value_im"] = nullptr;
  }
  j["rel_err"] = s.has_rel_err ? jnum(s.rel_err) : json(nullptr);
  return j;
}

int emit_series(const Opts& o, const CLI::App* sub, cg_series h) {
  cg_series_info s;
  check(cg_series_get(h, &s));
  json body = series_doc(s);
  if (o.output == "csv") {
    std::vector<std::string> keys;
    for (auto& [k, v] : body.items()) keys.push_back(k);
    for (size_t i = 0; i < keys.size(); ++i) std::cout << (i ? "," : "") << keys[i];
    std::cout << '\n';
    size_t i = 0;
    for (auto& [k, v] : body.items()) {
      std::cout << (i++ ? "," : "");
      if (v.is_number_float()) std::cout << num(v.get<double>());
      else if (v.is_null()) std::cout << "";
      else std::cout << v.dump();
    }
    std::cout << '\n';
    return 0;
  }
  json doc = header(sub);
  for (auto& [k, v] : body.items()) doc[k] = v;
  std::cout << doc.dump(2) << '\n';
  return 0;
}

// Radial pair from --r/--r-prime or --theta/--theta-prime.
std::pair<double, double> radial_pair(const Opts& o, bool sphere) {
  if (sphere)
    return {need(o.theta, "--theta", "0 < theta < pi"), need(o.theta_prime, "--theta-prime", "0 < theta' < pi")};
  return {need(o.r, "--r", "r > 0"), need(o.r_prime, "--r-prime", "r' > 0")};
}

int cmd_expand(const Opts& o, const CLI::App* sub) {
  const double gamma = need(o.gamma, "--gamma", "0 <= gamma <= pi");
  Series s;
  const cg_complex nu{o.nu, o.nu_im};
  if (!o.addition.empty()) {
    static const std::map<std::string, int> kinds{{"P", -1},     {"Q", -2},       {"PmPp", CG_ADD_PM_PP},
                                                  {"PmQp", CG_ADD_PM_QP}, {"PmPm", CG_ADD_PM_PM},
                                                  {"PmQm", CG_ADD_PM_QM}, {"PmPmmx", CG_ADD_PM_PMMX},
                                                  {"QmPmmx", CG_ADD_QM_PMMX}};
    const int k = kinds.at(o.addition);
    if (k < 0) {
      auto [a, b] = radial_pair(o, false);
      check(cg_expand_legendre(k == -2, nu, o.mu, a, b, gamma, o.nmax, o.relaxed, &s.h));
    } else {
      auto [a, b] = radial_pair(o, true);
      check(cg_expand_ferrers(static_cast<cg_ferrers_kind>(k), nu, o.mu, a, b, gamma, o.nmax, o.relaxed, &s.h));
    }
    return emit_series(o, sub, s.h);
  }
  if (o.variant.empty()) throw UsageError("--variant or --addition is required");
  const cg_variant v = parse_variant(o.variant);
  if (v == CG_EUCLID_PLUS || v == CG_EUCLID_MINUS) {
    auto [a, b] = radial_pair(o, false);
    check(cg_expand_euclidean(v == CG_EUCLID_PLUS ? CG_PLUS : CG_MINUS, o.d, o.beta, a, b, gamma, o.lmax, &s.h));
    return emit_series(o, sub, s.h);
  }
  const bool sphere = !(v == CG_H_PLUS || v == CG_H_MINUS || v == CG_LAPLACE_H);
  auto [a, b] = radial_pair(o, sphere);
  Wave w;
  check(cg_wave_for_variant(v, o.d, o.R, o.beta, &w.h));
  if (o.d == 2)
    check(cg_expand_fourier(v, w.h, a, b, gamma, o.lmax, o.relaxed, &s.h));
  else
    check(cg_expand_green(v, w.h, a, b, gamma, o.lmax, o.relaxed, &s.h));
  return emit_series(o, sub, s.h);
}

int cmd_special(const Opts& o, const CLI::App* sub) {
  static const std::map<std::string, cg_special_case> cases{
      {"NU_EQ_MU_HALFINT", CG_NU_EQ_MU_HALFINT}, {"NU_EQ_MU_INT", CG_NU_EQ_MU_INT}, {"LOGCOT", CG_LOGCOT},
      {"Q_K_MK", CG_Q_K_MK}, {"Q_MH_MMH", CG_Q_MH_MMH}, {"COSH_SINH_LEGENDRE", CG_COSH_SINH_LEGENDRE}};
  static const std::map<std::string, cg_trig_form> forms{
      {"cosh", CG_TRIG_COSH}, {"exp", CG_TRIG_EXP}, {"cos", CG_TRIG_COS}, {"sin", CG_TRIG_SIN}};
  const cg_special_case c = cases.at(o.special_case);
  cg_special_params p{};
  p.mu = o.mu;
  p.k = o.k;
  p.m = o.m;
  p.nu = {o.nu, o.nu_im};
  p.form = forms.at(o.form);
  // only the cosh/exp forms live on the hyperboloid
  const bool hyper = c == CG_COSH_SINH_LEGENDRE && (p.form == CG_TRIG_COSH || p.form == CG_TRIG_EXP);
  auto [a, b] = radial_pair(o, !hyper);
  Series s;
  check(cg_expand_special(c, &p, hyper ? CG_HYPERBOLOID : CG_HYPERSPHERE, a, b,
                          need(o.gamma, "--gamma", "0 <= gamma <= pi"), o.nmax, o.relaxed, &s.h));
  return emit_series(o, sub, s.h);
}

int cmd_verify(const Opts& o, const CLI::App* sub) {
  Checks c;
  const std::string what = o.check_name.empty() ? "default" : o.check_name;
  if (!o.suite.empty() && !o.check_name.empty()) throw UsageError("--suite and --check are exclusive");
  if (what == "default") {
    check(cg_check_default_suite(c.h));
  } else if (what == "mellin") {
    check(cg_check_mellin(c.h, o.alpha, {o.nu, o.nu_im}, o.mu));
  } else if (what == "asymptotic") {
    static const std::map<std::string, cg_asym_family> fam{{"legendre_conical", CG_ASYM_LEGENDRE_CONICAL},
                                                           {"ferrers_large_nu", CG_ASYM_FERRERS_LARGE_NU},
                                                           {"ferrers_conical", CG_ASYM_FERRERS_CONICAL}};
    check(cg_check_asymptotic(c.h, fam.at(o.family)));
  } else if (what == "connection") {
    check(cg_check_connection(c.h, o.seed, o.samples));
  } else {
    if (o.variant.empty()) throw UsageError("--variant is required for --check " + what);
    const cg_variant v = parse_variant(o.variant);
    if (what == "ode")
      check(cg_check_ode(c.h, v, o.d, o.beta));
    else if (what == "normalization")
      check(cg_check_normalization(c.h, v, o.d, o.R, o.beta));
    else if (what == "eps_ball")
      check(cg_check_eps_ball(c.h, v, o.d, o.R, o.beta, o.eps));
    else if (what == "flat_limit")
      check(cg_check_flat_limit(c.h, v, o.d, o.beta, o.r_phys, o.R_list.data(), o.R_list.size()));
    else if (what == "beta_zero")
      check(cg_check_beta_zero(c.h, v, o.d, o.R, need(o.rho, "--rho", "0 < rho < pi"), o.betas.data(),
                               o.betas.size()));
  }
  const size_t n = cg_checks_count(c.h);
  std::vector<cg_check_info> rows(n);
  for (size_t i = 0; i < n; ++i) check(cg_checks_get(c.h, i, &rows[i]));
  const char* names[] = {"PASS", "FAIL", "SKIP"};
  if (o.output == "csv") {
    std::cout << "check_id,status,measured,target,tolerance,notes\n";
    for (auto& r : rows)
      std::cout << csv_field(r.check_id) << ',' << names[r.status] << ',' << num(r.measured) << ',' << num(r.target)
                << ',' << num(r.tolerance) << ',' << csv_field(r.notes) << '\n';
  } else {
    json doc = header(sub);
    json arr = json::array();
    for (auto& r : rows) {
      json j;
      j["check_id"] = r.check_id;
      j["status"] = names[r.status];
      j["measured"] = jnum(r.measured);
      j["target"] = jnum(r.target);
      j["tolerance"] = jnum(r.tolerance);
      j["notes"] = r.notes;
      arr.push_back(j);
    }
    doc["checks"] = arr;
    doc["failures"] = cg_checks_failures(c.h);
    std::cout << doc.dump(2) << '\n';
  }
  return cg_checks_failures(c.h) ? 2 : 0;
}

int cmd_sweep(const Opts& o, const CLI::App* sub) {
  if (o.variant.empty()) throw UsageError("--variant is required");
  const cg_variant v = parse_variant(o.variant);
  std::vector<double> xs = o.values;
  if (xs.empty()) {
    const double a = need(o.from, "--from", "sweep start"), b = need(o.to, "--to", "sweep end");
    if (o.steps < 1) throw UsageError("--steps must be >= 1");
    for (int i = 0; i <= o.steps; ++i) xs.push_back(a + (b - a) * i / o.steps);
  }
  json arr = json::array();
  const bool csv = o.output != "json";
  if (csv) std::cout << o.param << ",value_re,value_im,abs_err_est,flags,error\n";
  for (double x : xs) {
    double R = o.R, beta = o.beta, rho = o.rho;
    if (o.param == "rho") rho = x;
    else if (o.param == "beta") beta = x;
    else R = x;
    cg_eval e{};
    std::string err;
    Wave w;
    cg_status s = cg_wave_for_variant(v, o.d, R, beta, &w.h);
    if (s == CG_OK) s = cg_green(v, w.h, need(rho, "--rho", "fixed rho for beta/R sweeps"), &e);
    if (s != CG_OK) err = std::string(cg_status_name(s)) + ": " + cg_last_error();
    if (csv) {
      std::cout << num(x) << ',';
      if (err.empty())
        std::cout << num(e.value.re) << ',' << num(e.value.im) << ',' << num(e.abs_err_est) << ','
                  << flag_string(e.flags) << ",\n";
      else
        std::cout << ",,,," << csv_field(err) << '\n';
    } else {
      json j;
      j[o.param] = jnum(x);
      j["value_re"] = err.empty() ? jnum(e.value.re) : json(nullptr);
      j["value_im"] = err.empty() ? jnum(e.value.im) : json(nullptr);
      j["abs_err_est"] = err.empty() ? jnum(e.abs_err_est) : json(nullptr);
      j["flags"] = flag_names(e.flags);
      j["error"] = err.empty() ? json(nullptr) : json(err);
      arr.push_back(j);
    }
  }
  if (!csv) {
    json doc = header(sub);
    doc["rows"] = arr;
    std::cout << doc.dump(2) << '\n';
  }
  return 0;
}

int cmd_poles(const Opts& o, const CLI::App* sub) {
  Wave w;
  check(cg_wave_create(CG_HYPERSPHERE, o.d, o.R, o.beta, CG_MINUS, &w.h));
  std::vector<double> p(o.count);
  check(cg_eigenvalue_poles(w.h, o.count, p.data()));
  if (o.output == "csv") {
    std::cout << "index,beta\n";
    for (int i = 0; i < o.count; ++i) std::cout << i << ',' << num(p[i]) << '\n';
    return 0;
  }
  json doc = header(sub);
  json arr = json::array();
  for (double x : p) arr.push_back(jnum(x));
  doc["poles"] = arr;
  std::cout << doc.dump(2) << '\n';
  return 0;
}

// Appends config-file keys as flags unless the command line already has them.
std::vector<std::string> merge_config(const std::vector<std::string>& argv) {
  std::string path;
  for (size_t i = 0; i + 1 < argv.size(); ++i)
    if (argv[i] == "--config") path = argv[i + 1];
  if (path.empty()) return argv;
  std::ifstream in(path);
  if (!in) throw UsageError("--config: cannot open " + path);
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError("--config: " + std::string(e.what()));
  }
  if (!cfg.is_object()) throw UsageError("--config: expected a JSON object");
  std::vector<std::string> out = argv;
  std::set<std::string> given;
  for (auto& a : argv)
    if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos : a.find('=') - 2));
  bool has_cmd = false;
  for (auto& a : argv)
    if (a == "eval" || a == "expand" || a == "verify" || a == "sweep" || a == "poles" || a == "special") has_cmd = true;
  if (!has_cmd) {
    if (!cfg.contains("command")) throw UsageError("no command on the command line or in --config");
    out.insert(out.begin(), cfg["command"].get<std::string>());
  }
  for (auto& [k, v] : cfg.items()) {
    if (k == "command" || given.count(k)) continue;
    auto scalar = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
    if (v.is_boolean()) {
      if (v.get<bool>()) out.push_back("--" + k);
    } else if (v.is_array()) {
      std::string s;
      for (auto& e : v) s += (s.empty() ? "" : ",") + scalar(e);
      out.push_back("--" + k);
      out.push_back(s);
    } else {
      out.push_back("--" + k);
      out.push_back(scalar(v));
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  Opts o;
  CLI::App app{"Helmholtz fundamental solutions on curved spaces", "curvgreen_cli"};
  app.set_version_flag("--version", std::string(cg_version()));
  app.require_subcommand(1);

  auto common = [&](CLI::App* s) {
    s->add_option("--output", o.output, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--tol", o.tol, "relative accuracy target in (0, 1)")
        ->envname("CURVGREEN_TOL")
        ->check(CLI::Range(1e-300, 0.999));
    s->add_option("--config", o.config, "JSON file with default flag values");
  };
  auto wave = [&](CLI::App* s) {
    s->add_option("--d", o.d, "dimension")->check(CLI::Range(1, 1000))->capture_default_str();
    s->add_option("--R", o.R, "radius of curvature")->check(CLI::PositiveNumber)->capture_default_str();
    s->add_option("--beta", o.beta, "wavenumber")->check(CLI::PositiveNumber)->capture_default_str();
    s->add_option("--variant", o.variant, "Green's function variant")->check(CLI::IsMember(variant_names()));
  };
  auto geometry = [&](CLI::App* s) {
    s->add_option("--r", o.r, "first radial coordinate (hyperbolic or flat)");
    s->add_option("--r-prime", o.r_prime, "second radial coordinate (hyperbolic or flat)");
    s->add_option("--theta", o.theta, "first polar angle (sphere)")->check(CLI::Range(0.0, M_PI));
    s->add_option("--theta-prime", o.theta_prime, "second polar angle (sphere)")->check(CLI::Range(0.0, M_PI));
    s->add_option("--gamma", o.gamma, "separation angle")->check(CLI::Range(0.0, M_PI));
    s->add_flag("--relaxed", o.relaxed, "evaluate outside the convergence domain");
  };
  auto degree = [&](CLI::App* s) {
    s->add_option("--nu", o.nu, "degree, real part")->capture_default_str();
    s->add_option("--nu-im", o.nu_im, "degree, imaginary part")->capture_default_str();
    s->add_option("--mu", o.mu, "order")->capture_default_str();
  };

  auto* eval = app.add_subcommand("eval", "evaluate a Green's function");
  common(eval);
  wave(eval);
  eval->add_option("--manifold", o.manifold, "hyperboloid, hypersphere or euclidean")
      ->check(CLI::IsMember({"hyperboloid", "hypersphere", "euclidean"}));
  eval->add_option("--sign", o.sign, "plus or minus")->check(CLI::IsMember({"plus", "minus"}))->default_val("plus");
  eval->add_option("--rho", o.rho, "geodesic angle (distance for euclidean)")->check(CLI::PositiveNumber);
  eval->get_option("--variant")->excludes("--manifold");

  auto* expand = app.add_subcommand("expand", "Gegenbauer / Fourier / addition-theorem series");
  common(expand);
  wave(expand);
  geometry(expand);
  degree(expand);
  expand->add_option("--lmax", o.lmax, "truncation for Green's expansions")->check(CLI::Range(0, 100000))
      ->capture_default_str();
  expand->add_option("--nmax", o.nmax, "truncation for addition theorems")->check(CLI::Range(0, 100000))
      ->capture_default_str();
  expand->add_option("--addition", o.addition, "addition theorem kind")
      ->check(CLI::IsMember({"P", "Q", "PmPp", "PmQp", "PmPm", "PmQm", "PmPmmx", "QmPmmx"}));

  auto* special = app.add_subcommand("special", "special-case addition formulas");
  common(special);
  geometry(special);
  degree(special);
  special->add_option("--case", o.special_case, "special case")
      ->required()
      ->check(CLI::IsMember({"NU_EQ_MU_HALFINT", "NU_EQ_MU_INT", "LOGCOT", "Q_K_MK", "Q_MH_MMH", "COSH_SINH_LEGENDRE"}));
  special->add_option("--k", o.k, "order for Q_K_MK")->check(CLI::Range(1, 100000))->capture_default_str();
  special->add_option("--m", o.m, "order for Q_MH_MMH")->check(CLI::Range(0, 100000))->capture_default_str();
  special->add_option("--form", o.form, "cosh, exp, cos or sin")
      ->check(CLI::IsMember({"cosh", "exp", "cos", "sin"}))
      ->capture_default_str();
  special->add_option("--nmax", o.nmax, "truncation")->check(CLI::Range(0, 100000))->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run verification checks");
  common(verify);
  wave(verify);
  degree(verify);
  verify->add_option("--suite", o.suite, "named suite")->check(CLI::IsMember({"default"}));
  verify->add_option("--check", o.check_name, "single check")
      ->check(CLI::IsMember({"ode", "normalization", "eps_ball", "flat_limit", "beta_zero", "mellin", "asymptotic",
                             "connection"}));
  verify->add_option("--eps", o.eps, "ball radius")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--r-phys", o.r_phys, "physical distance for flat limits")->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--R-list", o.R_list, "radii for flat limits")->delimiter(',')->capture_default_str();
  verify->add_option("--betas", o.betas, "decreasing betas for beta -> 0")->delimiter(',')->capture_default_str();
  verify->add_option("--rho", o.rho, "geodesic angle");
  verify->add_option("--alpha", o.alpha, "Mellin exponent")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--family", o.family, "asymptotic family")
      ->check(CLI::IsMember({"legendre_conical", "ferrers_large_nu", "ferrers_conical"}))
      ->capture_default_str();
  verify->add_option("--seed", o.seed, "random seed")->capture_default_str();
  verify->add_option("--samples", o.samples, "random samples")->check(CLI::Range(1, 1000000))->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "evaluate a variant along a parameter");
  common(sweep);
  wave(sweep);
  sweep->add_option("--param", o.param, "rho, beta or R")->check(CLI::IsMember({"rho", "beta", "R"}))
      ->capture_default_str();
  sweep->add_option("--values", o.values, "explicit values")->delimiter(',');
  sweep->add_option("--from", o.from, "first value");
  sweep->add_option("--to", o.to, "last value");
  sweep->add_option("--steps", o.steps, "intervals")->check(CLI::Range(1, 1000000))->capture_default_str();
  sweep->add_option("--rho", o.rho, "fixed geodesic angle for beta / R sweeps");

  auto* poles = app.add_subcommand("poles", "eigenvalue poles of the sphere MINUS problem");
  common(poles);
  poles->add_option("--d", o.d, "dimension")->check(CLI::Range(2, 1000))->capture_default_str();
  poles->add_option("--R", o.R, "radius")->check(CLI::PositiveNumber)->capture_default_str();
  poles->add_option("--count", o.count, "number of poles")->check(CLI::Range(1, 100000))->capture_default_str();

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = merge_config(args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  }

  if (o.tol > 0 && cg_set_target(o.tol) != CG_OK) {
    std::cerr << "usage error: --tol " << cg_last_error() << '\n';
    return 1;
  }
  const CLI::App* sub = app.get_subcommands().front();
  if (o.output.empty()) o.output = (sub == sweep) ? "csv" : "json";
  try {
    if (sub == eval) return cmd_eval(o, sub);
    if (sub == expand) return cmd_expand(o, sub);
    if (sub == special) return cmd_special(o, sub);
    if (sub == verify) return cmd_verify(o, sub);
    if (sub == sweep) return cmd_sweep(o, sub);
    if (sub == poles) return cmd_poles(o, sub);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const LibError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
