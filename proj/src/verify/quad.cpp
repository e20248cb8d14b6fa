#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "curvgreen/verify.hpp"

namespace cg {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
using G7 = boost::math::quadrature::gauss<double, 7>;

constexpr int kMaxDepth = 60;
constexpr int kMaxIntervals = 4000;

struct Piece {
  double a, b;
  cplx k;
  double err;
  double l1;
  int depth;
  long seq;  // tie-breaker so the split order never depends on the heap layout
};

struct ByErr {
  bool operator()(const Piece& x, const Piece& y) const {
    if (x.err != y.err) return x.err < y.err;
    return x.seq > y.seq;
  }
};

Piece rule(const std::function<cplx(double)>& g, double a, double b, int depth, long seq) {
  const auto& xk = GK::abscissa();
  const auto& wk = GK::weights();
  const auto& wg = G7::weights();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  cplx f0 = g(c);
  cplx kr = f0 * wk[0], ga = f0 * wg[0];
  double l1 = std::abs(f0) * wk[0];
  for (size_t i = 1; i < xk.size(); ++i) {
    cplx fp = g(c + h * xk[i]), fm = g(c - h * xk[i]);
    kr += (fp + fm) * wk[i];
    l1 += (std::abs(fp) + std::abs(fm)) * wk[i];
    if (i % 2 == 0) ga += (fp + fm) * wg[i / 2];
  }
  Piece p{a, b, kr * h, std::abs((kr - ga) * h), l1 * std::abs(h), depth, seq};
  return p;
}

}  // namespace

EvalResult quad(const std::function<cplx(double)>& f, double a, double b, double tol, QuadHint hint) {
  if (!(tol > 0)) throw Error(ErrorCode::Domain, "tol must be positive");
  if (!(a < b)) throw Error(ErrorCode::Domain, "need a < b");
  // Graded substitution x = a + (b - a) t^k (or from b) removes the endpoint
  // behaviour named by the hint.
  double k = 1.0;
  bool right = false;
  switch (hint.kind) {
    case Singularity::None: break;
    case Singularity::LeftAlg:
    case Singularity::RightAlg:
      if (!(hint.p < 1)) throw Error(ErrorCode::Domain, "algebraic exponent must be < 1 for an integrable endpoint");
      k = hint.p > 0 ? 1.0 / (1.0 - hint.p) : 1.0;
      right = (hint.kind == Singularity::RightAlg);
      break;
    case Singularity::LeftLog:
    case Singularity::RightLog:
      k = 3.0;
      right = (hint.kind == Singularity::RightLog);
      break;
  }
  const double L = b - a;
  std::function<cplx(double)> g;
  if (k == 1.0) {
    g = f;
  } else if (!right) {
    g = [&](double t) { return f(a + L * std::pow(t, k)) * (L * k * std::pow(t, k - 1)); };
  } else {
    g = [&](double t) { return f(b - L * std::pow(t, k)) * (L * k * std::pow(t, k - 1)); };
  }
  const double lo = (k == 1.0) ? a : 0.0, hi = (k == 1.0) ? b : 1.0;

  std::priority_queue<Piece, std::vector<Piece>, ByErr> heap;
  long seq = 0;
  Piece first = rule(g, lo, hi, 0, seq++);
  double err = first.err, l1 = first.l1;
  heap.push(first);
  int evals = 15;
  const double eps = std::numeric_limits<double>::epsilon();
  bool stuck = false;
  while (err > std::max(tol, 50 * eps * l1)) {
    if (static_cast<int>(heap.size()) >= kMaxIntervals) {
      stuck = true;
      break;
    }
    Piece p = heap.top();
    if (p.depth >= kMaxDepth) {
      stuck = true;
      break;
    }
    heap.pop();
    double m = 0.5 * (p.a + p.b);
    Piece x = rule(g, p.a, m, p.depth + 1, seq++), y = rule(g, m, p.b, p.depth + 1, seq++);
    evals += 30;
    err += x.err + y.err - p.err;
    l1 += x.l1 + y.l1 - p.l1;
    heap.push(x);
    heap.push(y);
  }
  // final sum left to right, independent of the heap layout
  cplx sum = 0.0;
  double esum = 0.0;
  std::vector<Piece> all;
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const Piece& x, const Piece& y) { return x.a < y.a; });
  for (const auto& p : all) {
    sum += p.k;
    esum += p.err;
  }
  if (stuck || !std::isfinite(sum.real()) || !std::isfinite(sum.imag()))
    throw Error(ErrorCode::NoConvergence, "quadrature error estimate " + std::to_string(esum) + " above tolerance");
  EvalResult r;
  r.value = sum;
  r.abs_err_est = esum;
  r.terms_used = evals;
  return r;
}

EvalResult quad(const std::function<double(double)>& f, double a, double b, double tol, QuadHint hint) {
  return quad(std::function<cplx(double)>([&](double x) { return cplx(f(x), 0.0); }), a, b, tol, hint);
}

}  // namespace cg
