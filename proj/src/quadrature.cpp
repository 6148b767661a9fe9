#include "zetaband/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <cstdio>
#include <queue>
#include <string>

#include "zetaband/errors.hpp"

namespace zetaband::quad {

namespace {

constexpr std::size_t kMaxSplits = 20000;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

void check(const Result& r, double abs_tol, double rel_tol, const char* who) {
  if (!std::isfinite(r.value)) throw ConvergenceError(std::string(who) + ": non-finite integral");
  if (r.error > std::max(abs_tol, rel_tol * std::fabs(r.value)))
    throw ConvergenceError(std::string(who) + ": error estimate " + fmt(r.error) + " above tolerance for value " + fmt(r.value));
}

}  // namespace

Result integrate_panels(const Integrand& f, const std::vector<double>& breaks, double abs_tol, double rel_tol) {
  return integrate_panels_local([&](std::size_t k, double u) { return f(breaks[k] + u); }, breaks, abs_tol, rel_tol);
}

Result integrate_panels_local(const LocalIntegrand& f, const std::vector<double>& breaks, double abs_tol,
                              double rel_tol) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  struct Piece {
    std::size_t panel;
    double lo, hi, value, error;  // lo, hi relative to breaks[panel]
    bool operator<(const Piece& o) const { return error < o.error; }
  };
  auto rule = [&](std::size_t k, double lo, double hi) {
    double err = 0.0;
    const double v = GK::integrate([&](double u) { return f(k, u); }, lo, hi, 0, 0.0, &err);
    // At depth 0 Boost leaves the estimate in [-1, 1] units; rescale to [lo, hi].
    return Piece{k, lo, hi, v, err * 0.5 * (hi - lo)};
  };
  // Global-error bisection: always split the piece with the largest error estimate.
  std::priority_queue<Piece> heap;
  Result r;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    const Piece p = rule(i, 0.0, breaks[i + 1] - breaks[i]);
    r.value += p.value;
    r.error += p.error;
    heap.push(p);
  }
  const std::size_t limit = heap.size() + kMaxSplits;
  for (std::size_t splits = 0; !heap.empty() && splits < limit; ++splits) {
    if (r.error <= std::max(abs_tol, rel_tol * std::fabs(r.value))) break;
    const Piece worst = heap.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) break;
    heap.pop();
    const Piece left = rule(worst.panel, worst.lo, mid), right = rule(worst.panel, mid, worst.hi);
    r.value += left.value + right.value - worst.value;
    r.error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  r.value = 0.0;
  r.error = 0.0;
  for (; !heap.empty(); heap.pop()) {
    r.value += heap.top().value;
    r.error += heap.top().error;
  }
  check(r, abs_tol, rel_tol, "integrate_panels");
  return r;
}

Result integrate_uniform(const Integrand& f, double lo, double hi, std::size_t n, double abs_tol, double rel_tol) {
  if (n == 0) n = 1;
  std::vector<double> breaks(n + 1);
  for (std::size_t i = 0; i <= n; ++i) breaks[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
  breaks.back() = hi;
  return integrate_panels(f, breaks, abs_tol, rel_tol);
}

Result integrate_to_infinity(const Integrand& f, double lo, double rel_tol) {
  boost::math::quadrature::exp_sinh<double> rule;
  Result r;
  double l1 = 0.0;
  r.value = rule.integrate([&](double u) { return f(lo + u); }, rel_tol, &r.error, &l1);
  check(r, 1e-300, std::max(rel_tol * 10, 1e-14), "integrate_to_infinity");
  return r;
}

}  // namespace zetaband::quad
