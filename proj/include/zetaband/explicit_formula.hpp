#pragma once

#include <functional>

#include "zetaband/extremal.hpp"
#include "zetaband/height.hpp"
#include "zetaband/special.hpp"

namespace zetaband::explicit_formula {

enum class Role { Generic, Minorant, Majorant };

// An even test function real on the reals, its continuation to the strip,
// and its transform supported in [-delta, delta].
struct TestFunctionBundle {
  std::function<double(double)> eval_real;
  std::function<Complex(Complex)> eval_complex;
  std::function<double(double)> hat;
  double delta = 0.0;
  double a = 0.0;  // decay scale in the envelope |h(x)| <= K / (x^2 + a^2)
  double K = 0.0;  // twice the sampled sup of |(x^2 + a^2) h(x)|
  double eval_at_half_i = 0.0;
  Role role = Role::Generic;
  double type_bound() const;  // 2 pi delta
};

TestFunctionBundle minorant_bundle(const extremal::ApproxParams& p);
TestFunctionBundle majorant_bundle(const extremal::ApproxParams& p);
TestFunctionBundle zero_bundle(double delta, double a = 1.0);

// Samples |(x^2 + a^2) h(x)| on a dense grid and doubles the maximum.
double envelope_constant(const std::function<double(double)>& h, double a, double delta);

// (M_t h)(x) = h(x - t) / 2 + h(x + t) / 2 + h(x).
double m_t_apply(const TestFunctionBundle& h, double t, double x);
Complex m_t_apply(const TestFunctionBundle& h, double t, Complex z);
// Transform of M_t h: h_hat(y) (1 + cos(2 pi t y)).
double m_t_hat(const TestFunctionBundle& h, double t, double y);

struct TermValue {
  double value = 0.0;
  double error = 0.0;  // certified or estimated absolute error
};

// (1/2pi) int (M_t h)(u) Re psi((1 + 2iu)/4) du through the transform: psi's
// integral representation turns it into a finite integral over [0, 4 pi delta].
TermValue archimedean_term(const TestFunctionBundle& h, double t);

// Same integral by direct quadrature on [-U, U] plus a tail bound from the
// K / (x^2 + a^2) envelope. Much looser; kept as an independent route.
TermValue archimedean_term_direct(const TestFunctionBundle& h, double t, double half_width);

// 2 (M_t h)(i/2) = 2 Re h(t + i/2) + 2 h(i/2).
double pole_term(const TestFunctionBundle& h, double t);

// -(log pi / 2 pi) (M_t h)^(0) = -(log pi / pi) h_hat(0).
double log_pi_term(const TestFunctionBundle& h);

struct PrimeConfig {
  double max_terms = 1e8;  // largest admissible e^{2 pi delta}
};

// -(2/pi) sum_{2 <= n <= e^{2 pi delta}} Lambda(n)/sqrt(n) h_hat(log n / 2 pi) cos^2(t log n / 2).
// Throws RangeError when e^{2 pi delta} exceeds the budget.
double prime_term(const TestFunctionBundle& h, double t, const PrimeConfig& config = {});

struct GwBreakdown {
  double archimedean = 0.0;
  double pole = 0.0;
  double log_pi = 0.0;
  double prime_sum = 0.0;
  double total = 0.0;
  double certificate = 0.0;  // quadrature error of the archimedean term plus rounding slack
};

// For Role::Minorant the prime sum is nonnegative (h_hat <= 0); a negative value throws ConvergenceError.
GwBreakdown gw_rhs(const TestFunctionBundle& h, double t, const PrimeConfig& config = {});

// Leading forms of the archimedean and pole terms as the bandwidth grows.
double minorant_archimedean_leading(double a, double delta, double t);
double majorant_archimedean_leading(double a, double delta, double t);
double pole_leading(double a, double delta);

// 2 sum_{n <= e^{2 pi delta}} Lambda(n) log n / n^{a + 1/2}.
double majorant_prime_envelope(double a, double delta, const PrimeConfig& config = {});

double theorem3_upper_coeff(double sigma);
double theorem3_lower_coeff(double sigma);

// Main term +-coefficient * log log t * (log t)^{2 - 2 sigma}; error shape
// (log t)^{2 - 2 sigma} / ((sigma - 1/2)(1 - sigma)^2).
// Range: 1/2 + lambda0 / log log t <= sigma <= 1 - c / sqrt(log log t), t >= 3.
BoundReport theorem3_upper(double sigma, const Height& t, const RangeOptions& opts = {});
BoundReport theorem3_lower(double sigma, const Height& t, const RangeOptions& opts = {});

// Empty when (sigma, t) satisfies the range above; otherwise names the failing inequality.
std::string theorem3_range_violation(double sigma, const Height& t, double c);

enum class BoundSide { Lower, Upper };

// a = sigma - 1/2 and pi delta = log log t.
extremal::ApproxParams bandwidth_choice(double sigma, double t);

struct AssembledBound {
  GwBreakdown rhs;
  extremal::ApproxParams params;
  double value = 0.0;        // rhs.total: the numeric value of sum_gamma M_t h(gamma)
  double certificate = 0.0;  // rhs.certificate
};

// Right-hand side of the explicit formula for M_t L (Lower) or M_t U (Upper)
// with the bandwidth choice above. No range check is applied here; the caller
// decides whether (sigma, t) is meaningful.
AssembledBound assemble_bound_numeric(double sigma, double t, BoundSide side, const PrimeConfig& config = {});

}  // namespace zetaband::explicit_formula
