#include "zetaband/interp.hpp"

#include <algorithm>
#include <cmath>

#include "zetaband/errors.hpp"
#include "zetaband/explicit_formula.hpp"
#include "zetaband/special.hpp"

namespace zetaband::interp {

namespace {

constexpr double kSupMargin = 1.1;

double lambda0() {
  static const double v = special::solve_lambda0();
  return v;
}

void require_open_unit_half(double sigma) {
  if (!(sigma > 0.5 && sigma < 1.0)) throw RangeError("sigma must lie in (1/2, 1)");
}

double l_ratio(const EnvelopeSet& e, double t) {
  const double a0 = e.alpha0.value(t), b0 = e.beta0.value(t), a2 = e.alpha2.value(t), b2 = e.beta2.value(t);
  return 2.0 * (a2 + b2) * (a0 + b0) / (3.0 * a2 * b2);
}

void require_after_t0(const EnvelopeSet& env, double t) {
  if (!(t > env.t0)) throw RangeError("t must exceed t0");
}

// c * (log t)^p (log log t)^{-n} and its t-derivative.
Envelope ell_envelope(double c, double sigma, int n) {
  const double p = 2.0 - 2.0 * sigma;
  Envelope e;
  e.value = [=](double t) {
    const double lt = std::log(t), ll = std::log(lt);
    return c * std::pow(lt, p) * std::pow(ll, -n);
  };
  e.derivative = [=](double t) {
    const double lt = std::log(t), ll = std::log(lt);
    return c * std::pow(lt, p - 1.0) * std::pow(ll, -n) / t * (p - n / ll);
  };
  return e;
}

}  // namespace

EnvelopeSet make_envelope_set(Envelope alpha0, Envelope beta0, Envelope alpha2, Envelope beta2, double t0,
                              double t_max, std::size_t points, bool geometric) {
  if (!(t_max > t0)) throw DomainError("envelope grid needs t_max > t0");
  if (geometric && !(t0 > 0.0)) throw DomainError("geometric envelope grid needs t0 > 0");
  EnvelopeSet e{std::move(alpha0), std::move(beta0), std::move(alpha2), std::move(beta2), t0};
  points = std::max<std::size_t>(points, 2);
  for (std::size_t i = 0; i < points; ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(points - 1);
    double t = geometric ? t0 * std::pow(t_max / t0, u) : t0 + (t_max - t0) * u;
    // Sups run over the open interval (t0, inf).
    if (i == 0) t = geometric ? t0 * (1.0 + 1e-12) : t0 + 1e-12 * std::max(1.0, std::fabs(t0));
    for (const Envelope* f : {&e.alpha0, &e.beta0, &e.alpha2, &e.beta2})
      if (!(f->value(t) > 0.0)) throw DomainError("envelope functions must be positive on the grid");
    e.M0 = std::max(e.M0, std::fabs(e.alpha0.derivative(t)));
    e.N0 = std::max(e.N0, std::fabs(e.beta0.derivative(t)));
    e.M2 = std::max(e.M2, std::fabs(e.alpha2.derivative(t)));
    e.N2 = std::max(e.N2, std::fabs(e.beta2.derivative(t)));
    e.L = std::max(e.L, l_ratio(e, t));
  }
  e.M0 *= kSupMargin;
  e.N0 *= kSupMargin;
  e.M2 *= kSupMargin;
  e.N2 *= kSupMargin;
  e.L *= kSupMargin;
  return e;
}

OptimalParameters optimal_parameters(const EnvelopeSet& env, double t) {
  require_after_t0(env, t);
  const double a0 = env.alpha0.value(t), b0 = env.beta0.value(t), a2 = env.alpha2.value(t), b2 = env.beta2.value(t);
  return {std::sqrt(2.0 * (a2 + b2) * (a0 + b0) / (a2 * b2)), b2 / (a2 + b2)};
}

double averaged_main_term(const EnvelopeSet& env, double t, double nu, double A) {
  const double a0 = env.alpha0.value(t), b0 = env.beta0.value(t), a2 = env.alpha2.value(t), b2 = env.beta2.value(t);
  return (a0 + b0) / nu + 0.5 * nu * (A * A * a2 + (1.0 - A) * (1.0 - A) * b2);
}

double derivative_main_term(const EnvelopeSet& env, double t) {
  require_after_t0(env, t);
  const double a0 = env.alpha0.value(t), b0 = env.beta0.value(t), a2 = env.alpha2.value(t), b2 = env.beta2.value(t);
  return std::sqrt(2.0 * a2 * b2 * (a0 + b0) / (a2 + b2));
}

double derivative_bound(const EnvelopeSet& env, double t) {
  if (!(t > env.t0 + std::sqrt(3.0 * env.L))) throw RangeError("derivative bound needs t > t0 + sqrt(3 L)");
  return derivative_main_term(env, t) + env.M0 + env.N0 + (env.M2 + env.N2) * env.L;
}

double quad_r(double s) { return -s * s + 5.0 * s - 2.0; }
double quad_q(double s) { return -s * s + 3.0 * s - 1.0; }
double quad_s(double s) { return -s * s + s + 1.0; }

double c_sigma(double sigma) {
  require_open_unit_half(sigma);
  const double r = quad_r(sigma), q = quad_q(sigma), s = quad_s(sigma);
  if (!(r > 0.0 && q > 0.0 && s > 0.0)) throw DomainError("constant quadratics must be positive on (1/2, 1)");
  return std::sqrt(2.0 * r * q * s / (sigma * (2.0 - sigma)));
}

double b_sigma(double sigma) {
  require_open_unit_half(sigma);
  const double s = sigma;
  const double quartic = 3.0 * s * s * s * s - 17.0 * s * s * s + 19.0 * s * s + 4.0 * s - 4.0;
  return std::sqrt(quartic * quad_q(s) / (s * (2.0 - s)));
}

double realpart_coeff(double sigma) {
  require_open_unit_half(sigma);
  return quad_q(sigma) / (sigma * (1.0 - sigma));
}

std::string theorem12_range_violation(double sigma, const Height& t, double c) {
  if (!(t.log_t() >= std::log(3.0))) return "t >= 3";
  const double ll = t.loglog_t();
  if (!(ll > 0.0)) return "log log t > 0";
  if (!(sigma >= 0.5 + (lambda0() + c) / ll)) return "sigma >= 1/2 + (lambda0 + c) / log log t";
  if (!(sigma <= 1.0 - c / std::sqrt(ll))) return "sigma <= 1 - c / sqrt(log log t)";
  return {};
}

namespace {

BoundReport theorem12_report(double sigma, const Height& t, const RangeOptions& opts, double constant) {
  BoundReport r;
  r.sigma = sigma;
  r.log_t = t.log_t();
  r.range_message = theorem12_range_violation(sigma, t, opts.c);
  r.range_ok = r.range_message.empty();
  if (!r.range_ok && opts.enforce) throw RangeError("(sigma, t) outside the admissible range: requires " + r.range_message);
  r.main_coefficient = constant / (sigma * (1.0 - sigma));
  r.log_abs_main = std::log(r.main_coefficient) + log_ell(0, sigma, t);
  r.main_value = std::exp(r.log_abs_main);
  r.log_error_shape = log_ell(1, sigma, t) - std::log((sigma - 0.5) * (1.0 - sigma) * (1.0 - sigma));
  r.error_shape_value = std::exp(r.log_error_shape);
  return r;
}

}  // namespace

BoundReport theorem1_bound(double sigma, const Height& t, const RangeOptions& opts) {
  return theorem12_report(sigma, t, opts, b_sigma(sigma));
}

BoundReport theorem2_bound(double sigma, const Height& t, const RangeOptions& opts) {
  return theorem12_report(sigma, t, opts, c_sigma(sigma));
}

ZetaEnvelopeCoefficients zeta_envelope_coefficients(double sigma) {
  require_open_unit_half(sigma);
  const double a0 = quad_r(sigma) / (2.0 * sigma * (1.0 - sigma));
  return {explicit_formula::theorem3_upper_coeff(sigma), explicit_formula::theorem3_lower_coeff(sigma), a0, a0};
}

double zeta_derivative_main_log(double sigma, const Height& t) {
  const auto c = zeta_envelope_coefficients(sigma);
  // alpha2 beta2 / (alpha2 + beta2) carries l_{-1}; alpha0 + beta0 carries l_1.
  const double log_a2 = std::log(c.alpha2) + log_ell(-1, sigma, t);
  const double log_b2 = std::log(c.beta2) + log_ell(-1, sigma, t);
  const double log_sum2 = std::log(c.alpha2 + c.beta2) + log_ell(-1, sigma, t);
  const double log_sum0 = std::log(c.alpha0 + c.beta0) + log_ell(1, sigma, t);
  return 0.5 * (std::log(2.0) + log_a2 + log_b2 + log_sum0 - log_sum2);
}

double zeta_leading_coefficient(double sigma, const Height& t) {
  return std::exp(zeta_derivative_main_log(sigma, t) - log_ell(0, sigma, t));
}

double zeta_envelope_log_t0(double sigma) {
  require_open_unit_half(sigma);
  return std::exp(lambda0() / (sigma - 0.5));
}

EnvelopeSet zeta_envelope_set(double sigma, double t_max_factor) {
  const double log_t0 = zeta_envelope_log_t0(sigma);
  if (log_t0 > 700.0) throw RangeError("t0 for this sigma does not fit in a double; use the log-space evaluators");
  const auto c = zeta_envelope_coefficients(sigma);
  const double t0 = std::exp(log_t0);
  return make_envelope_set(ell_envelope(c.alpha0, sigma, 1), ell_envelope(c.beta0, sigma, 1),
                           ell_envelope(c.alpha2, sigma, -1), ell_envelope(c.beta2, sigma, -1), t0, t0 * t_max_factor,
                           20001, true);
}

}  // namespace zetaband::interp
