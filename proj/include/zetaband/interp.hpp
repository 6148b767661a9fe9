#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "zetaband/height.hpp"

namespace zetaband::interp {

struct Envelope {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
};

// Bounds -beta0 <= phi <= alpha0 and -beta2 <= phi'' <= alpha2 on (t0, inf),
// with sup constants estimated on a grid.
struct EnvelopeSet {
  Envelope alpha0, beta0, alpha2, beta2;
  double t0 = 0.0;
  double M0 = 0.0, N0 = 0.0, M2 = 0.0, N2 = 0.0;  // sups of |alpha_i'|, |beta_i'|
  double L = 0.0;                                  // sup 2 (alpha2 + beta2)(alpha0 + beta0) / (3 alpha2 beta2)
};

// Grid sup over [t0, t_max] with `points` samples (geometric spacing if asked),
// inflated by 10%. The sup is an estimate, not a bound: the grid may miss a narrow peak.
EnvelopeSet make_envelope_set(Envelope alpha0, Envelope beta0, Envelope alpha2, Envelope beta2, double t0,
                              double t_max, std::size_t points = 20001, bool geometric = false);

struct OptimalParameters {
  double nu = 0.0;
  double A = 0.0;
};

// nu = sqrt(2 (a2 + b2)(a0 + b0) / (a2 b2)), A = b2 / (a2 + b2). Throws RangeError for t <= t0.
OptimalParameters optimal_parameters(const EnvelopeSet& env, double t);

// (a0 + b0)/nu + nu (A^2 a2 + (1 - A)^2 b2) / 2 at the given (nu, A).
double averaged_main_term(const EnvelopeSet& env, double t, double nu, double A);

// sqrt(2 a2 b2 (a0 + b0) / (a2 + b2)).
double derivative_main_term(const EnvelopeSet& env, double t);

// Full bound on |phi'(t)|. Throws RangeError unless t > t0 + sqrt(3 L).
double derivative_bound(const EnvelopeSet& env, double t);

// The three quadratics entering the constants; all positive on (1/2, 1).
double quad_r(double sigma);  // -s^2 + 5s - 2
double quad_q(double sigma);  // -s^2 + 3s - 1
double quad_s(double sigma);  // -s^2 + s + 1

// Throw RangeError outside (1/2, 1).
double c_sigma(double sigma);
double b_sigma(double sigma);
// (-s^2 + 3s - 1) / (s (1 - s)).
double realpart_coeff(double sigma);

// Range: 1/2 + (lambda0 + c) / log log t <= sigma <= 1 - c / sqrt(log log t), t >= 3.
std::string theorem12_range_violation(double sigma, const Height& t, double c);

// |zeta'/zeta|: B_sigma / (sigma (1 - sigma)) (log t)^{2 - 2 sigma}.
BoundReport theorem1_bound(double sigma, const Height& t, const RangeOptions& opts = {});
// |Im zeta'/zeta|: C_sigma / (sigma (1 - sigma)) (log t)^{2 - 2 sigma}.
// Both share the error shape (log t)^{2 - 2 sigma} / ((sigma - 1/2)(1 - sigma)^2 log log t).
BoundReport theorem2_bound(double sigma, const Height& t, const RangeOptions& opts = {});

// Main-term envelopes for phi(t) = -log|zeta(sigma + it)| at fixed sigma:
// alpha2 = upper coefficient * l_{-1}, beta2 = lower coefficient * l_{-1},
// alpha0 = beta0 = R / (2 sigma (1 - sigma)) * l_1.
struct ZetaEnvelopeCoefficients {
  double alpha2, beta2, alpha0, beta0;
};
ZetaEnvelopeCoefficients zeta_envelope_coefficients(double sigma);

// log of derivative_main_term for the zeta envelopes, evaluated in log space.
double zeta_derivative_main_log(double sigma, const Height& t);

// derivative_main_term / l_{0,sigma}: t-independent, and equal to C_sigma / (sigma (1 - sigma)).
double zeta_leading_coefficient(double sigma, const Height& t);

// Smallest t at which 1/2 + lambda0 / log log t <= sigma, as log t.
double zeta_envelope_log_t0(double sigma);

// EnvelopeSet for the zeta envelopes in the variable t. Requires t0 to fit in a double.
EnvelopeSet zeta_envelope_set(double sigma, double t_max_factor = 1e6);

}  // namespace zetaband::interp
