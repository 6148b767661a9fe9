#pragma once

#include <functional>
#include <vector>

namespace zetaband::quad {

using Integrand = std::function<double(double)>;

struct Result {
  double value = 0.0;
  double error = 0.0;  // sum of per-panel error estimates
};

// 61-point Gauss-Kronrod on the panels of the sorted breakpoint list, refined by
// bisecting the worst panel until the summed error estimate meets the tolerance. Throws ConvergenceError if the summed estimate exceeds
// max(abs_tol, rel_tol * |value|).
Result integrate_panels(const Integrand& f, const std::vector<double>& breaks, double abs_tol = 1e-13,
                        double rel_tol = 1e-12);

// f(k, u) is the integrand at breaks[k] + u. Nodes are placed in the local
// coordinate u, so rapidly oscillating integrands can keep their phase exact.
using LocalIntegrand = std::function<double(std::size_t, double)>;
Result integrate_panels_local(const LocalIntegrand& f, const std::vector<double>& breaks, double abs_tol = 1e-13,
                              double rel_tol = 1e-12);

// [lo, hi] split into n equal panels.
Result integrate_uniform(const Integrand& f, double lo, double hi, std::size_t n, double abs_tol = 1e-13,
                         double rel_tol = 1e-12);

// Smooth integrand on [lo, inf) (double-exponential rule).
Result integrate_to_infinity(const Integrand& f, double lo, double rel_tol = 1e-12);

}  // namespace zetaband::quad
