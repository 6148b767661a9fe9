#include "zetaband/explicit_formula.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zetaband/errors.hpp"
#include "zetaband/quadrature.hpp"

namespace zetaband::explicit_formula {

namespace {

constexpr double kPi = std::numbers::pi;

double expint_e1(double x) { return -std::expint(-x); }

// e^{-x}/x - e^{-x/4}/(1 - e^{-x}); Taylor series below 1/4, where the two terms cancel.
double digamma_kernel(double x) {
  static constexpr double c[] = {-1.25,
                                 0.5104166666666666,
                                 -0.15885416666666666,
                                 0.041590711805555555,
                                 -0.008536783854166667,
                                 0.0013893894417576057,
                                 -0.00019324166434151786,
                                 2.479838315772001e-05,
                                 -2.886767530357186e-06,
                                 2.75593539878601e-07,
                                 -2.173278931721254e-08,
                                 2.0875467532309572e-09,
                                 -2.446701928702672e-10,
                                 1.147156230323023e-11,
                                 1.3650498742067662e-12,
                                 4.778960124005505e-14};
  if (x < 0.25) {
    double s = 0.0;
    for (int k = 15; k >= 0; --k) s = s * x + c[k];
    return s;
  }
  return std::exp(-x) / x - std::exp(-0.25 * x) / -std::expm1(-x);
}

}  // namespace

double TestFunctionBundle::type_bound() const { return 2.0 * kPi * delta; }

double envelope_constant(const std::function<double(double)>& h, double a, double delta) {
  const double fine = std::min(a, 1.0 / delta) / 32.0;
  const double reach = 200.0 * std::max(a, 1.0 / delta);
  double sup = 0.0;
  for (double x = 0.0; x <= reach; x += fine) sup = std::max(sup, std::fabs((x * x + a * a) * h(x)));
  return 2.0 * sup;
}

TestFunctionBundle minorant_bundle(const extremal::ApproxParams& p) {
  TestFunctionBundle b;
  b.eval_real = [p](double x) { return extremal::minorant_eval(p, x); };
  b.eval_complex = [p](Complex z) { return extremal::minorant_eval(p, z); };
  b.hat = [p](double y) { return extremal::minorant_hat(p, y); };
  b.delta = p.delta;
  b.a = p.a;
  b.K = envelope_constant(b.eval_real, p.a, p.delta);
  b.eval_at_half_i = b.eval_complex(Complex(0.0, 0.5)).real();
  b.role = Role::Minorant;
  return b;
}

TestFunctionBundle majorant_bundle(const extremal::ApproxParams& p) {
  TestFunctionBundle b;
  b.eval_real = [p](double x) { return extremal::majorant_eval(p, x); };
  b.eval_complex = [p](Complex z) { return extremal::majorant_eval(p, z); };
  b.hat = [p](double y) { return extremal::majorant_hat(p, y); };
  b.delta = p.delta;
  b.a = p.a;
  b.K = envelope_constant(b.eval_real, p.a, p.delta);
  b.eval_at_half_i = b.eval_complex(Complex(0.0, 0.5)).real();
  b.role = Role::Majorant;
  return b;
}

TestFunctionBundle zero_bundle(double delta, double a) {
  TestFunctionBundle b;
  b.eval_real = [](double) { return 0.0; };
  b.eval_complex = [](Complex) { return Complex(0.0, 0.0); };
  b.hat = [](double) { return 0.0; };
  b.delta = delta;
  b.a = a;
  return b;
}

double m_t_apply(const TestFunctionBundle& h, double t, double x) {
  return 0.5 * h.eval_real(x - t) + 0.5 * h.eval_real(x + t) + h.eval_real(x);
}

Complex m_t_apply(const TestFunctionBundle& h, double t, Complex z) {
  return 0.5 * h.eval_complex(z - t) + 0.5 * h.eval_complex(z + t) + h.eval_complex(z);
}

double m_t_hat(const TestFunctionBundle& h, double t, double y) { return h.hat(y) * (1.0 + std::cos(2.0 * kPi * t * y)); }

TermValue archimedean_term(const TestFunctionBundle& h, double t) {
  // Re psi(1/4 + iu/2) = int_0^inf (e^{-x}/x - e^{-x/4} cos(ux/2) / (1 - e^{-x})) dx, and
  // int g(u) cos(ux/2) du = g_hat(x / 4pi), which vanishes for x > 4 pi delta.
  const double g0 = m_t_hat(h, t, 0.0);
  const double top = 4.0 * kPi * h.delta;
  // Panels of width 2 pi / t put cos(t x / 2) at phase k pi on panel k, so the
  // phase is rebuilt from the local coordinate without cancellation.
  const bool aligned = t > 8.0 * kPi;
  const double width = aligned ? 2.0 * kPi / t : 0.25;
  const auto panels = static_cast<std::size_t>(std::ceil(top / width));
  std::vector<double> breaks(panels + 1);
  for (std::size_t k = 0; k <= panels; ++k) breaks[k] = std::min(top, static_cast<double>(k) * width);
  auto integrand = [&](std::size_t k, double u) {
    const double x = breaks[k] + u;
    if (x <= 0.0) return 0.0;
    const double one_minus = -std::expm1(-x);
    const double e4 = std::exp(-0.25 * x);
    double c = 0.0;
    if (aligned)
      c = (k % 2 == 0 ? 1.0 : -1.0) * std::cos(0.5 * t * u);
    else
      c = std::cos(0.5 * t * x);
    const double gy = h.hat(x / (4.0 * kPi)) * (1.0 + c);
    return g0 * digamma_kernel(x) + e4 * (g0 - gy) / one_minus;
  };
  const auto r = quad::integrate_panels_local(integrand, breaks, 1e-13, 1e-12);
  const double scale = 1.0 / (2.0 * kPi);
  return {scale * (r.value + g0 * expint_e1(top)), scale * r.error};
}

TermValue archimedean_term_direct(const TestFunctionBundle& h, double t, double half_width) {
  const double U = half_width;
  if (!(U >= std::max(2.0 * t, 8.0) + 1.0)) throw DomainError("direct archimedean route needs half_width >= max(2t, 8) + 1");
  auto integrand = [&](double u) {
    return m_t_apply(h, t, u) * special::digamma(Complex(0.25, 0.5 * u)).real();
  };
  const double width = std::min(h.a, 1.0 / h.delta) / 2.0;
  const auto panels = static_cast<std::size_t>(std::ceil(U / width));
  // Even integrand: (1/2pi) int_{-U}^{U} = (1/pi) int_0^U.
  const auto r = quad::integrate_uniform(integrand, 0.0, U, panels, 1e-12, 1e-10);
  const double V = U - t;
  const double tail = 2.0 * h.K / kPi * ((std::log(V) + 2.0) / V + t / (2.0 * V * V));
  return {r.value / kPi, r.error / kPi + tail};
}

double pole_term(const TestFunctionBundle& h, double t) {
  const Complex shifted = h.eval_complex(Complex(t, 0.5));
  const Complex centre = h.eval_complex(Complex(0.0, 0.5));
  return 2.0 * shifted.real() + 2.0 * centre.real();
}

double log_pi_term(const TestFunctionBundle& h) { return -std::log(kPi) / kPi * h.hat(0.0); }

double prime_term(const TestFunctionBundle& h, double t, const PrimeConfig& config) {
  const double log_top = 2.0 * kPi * h.delta;
  if (log_top > std::log(config.max_terms))
    throw RangeError("prime sum needs n up to e^{2 pi delta} = e^" + std::to_string(log_top) + ", above the budget");
  const auto n_max = static_cast<std::size_t>(std::floor(std::exp(log_top)));
  if (n_max < 2) return 0.0;
  const auto lambda = special::von_mangoldt_table(n_max);
  double sum = 0.0;
  for (std::size_t n = 2; n <= n_max; ++n) {
    if (lambda[n] == 0.0) continue;
    const double ln = std::log(static_cast<double>(n));
    const double c = std::cos(0.5 * t * ln);
    sum += lambda[n] / std::sqrt(static_cast<double>(n)) * h.hat(ln / (2.0 * kPi)) * c * c;
  }
  return -2.0 / kPi * sum;
}

GwBreakdown gw_rhs(const TestFunctionBundle& h, double t, const PrimeConfig& config) {
  GwBreakdown g;
  const auto arch = archimedean_term(h, t);
  g.archimedean = arch.value;
  g.pole = pole_term(h, t);
  g.log_pi = log_pi_term(h);
  g.prime_sum = prime_term(h, t, config);
  if (h.role == Role::Minorant && g.prime_sum < 0.0)
    throw ConvergenceError("minorant prime sum came out negative: " + std::to_string(g.prime_sum));
  g.total = g.archimedean + g.pole + g.log_pi + g.prime_sum;
  const double magnitude = std::fabs(g.archimedean) + std::fabs(g.pole) + std::fabs(g.log_pi) + std::fabs(g.prime_sum);
  g.certificate = arch.error + 1e-12 * magnitude;
  return g;
}

double minorant_archimedean_leading(double a, double delta, double t) {
  const double s = std::sinh(kPi * a * delta);
  return -kPi * delta * std::log(t) / (2.0 * s * s);
}

double majorant_archimedean_leading(double a, double delta, double t) {
  const double c = std::cosh(kPi * a * delta);
  return kPi * delta * std::log(t) / (2.0 * c * c);
}

double pole_leading(double a, double delta) {
  return 4.0 * kPi * a * delta * std::exp((1.0 - 2.0 * a) * kPi * delta) / (a * a - 0.25);
}

double majorant_prime_envelope(double a, double delta, const PrimeConfig& config) {
  const double log_top = 2.0 * kPi * delta;
  if (log_top > std::log(config.max_terms)) throw RangeError("prime envelope above the budget");
  const auto n_max = static_cast<std::size_t>(std::floor(std::exp(log_top)));
  if (n_max < 2) return 0.0;
  const auto lambda = special::von_mangoldt_table(n_max);
  double sum = 0.0;
  for (std::size_t n = 2; n <= n_max; ++n) {
    if (lambda[n] == 0.0) continue;
    const double nn = static_cast<double>(n);
    sum += lambda[n] * std::log(nn) * std::pow(nn, -(a + 0.5));
  }
  return 2.0 * sum;
}

double theorem3_upper_coeff(double sigma) { return (-2.0 * sigma * sigma + 2.0 * sigma + 2.0) / (sigma * (1.0 - sigma)); }

double theorem3_lower_coeff(double sigma) { return (-2.0 * sigma * sigma + 6.0 * sigma - 2.0) / (sigma * (1.0 - sigma)); }

std::string theorem3_range_violation(double sigma, const Height& t, double c) {
  if (!(t.log_t() >= std::log(3.0))) return "t >= 3";
  const double ll = t.loglog_t();
  if (!(ll > 0.0)) return "log log t > 0";
  const double lambda0 = special::solve_lambda0();
  if (!(sigma >= 0.5 + lambda0 / ll)) return "sigma >= 1/2 + lambda0 / log log t";
  if (!(sigma <= 1.0 - c / std::sqrt(ll))) return "sigma <= 1 - c / sqrt(log log t)";
  return {};
}

namespace {

BoundReport theorem3_report(double sigma, const Height& t, const RangeOptions& opts, double coeff, double sign) {
  if (!(sigma > 0.5 && sigma < 1.0)) throw DomainError("sigma must lie in (1/2, 1)");
  BoundReport r;
  r.sigma = sigma;
  r.log_t = t.log_t();
  r.range_message = theorem3_range_violation(sigma, t, opts.c);
  r.range_ok = r.range_message.empty();
  if (!r.range_ok && opts.enforce) throw RangeError("(sigma, t) outside the admissible range: requires " + r.range_message);
  r.main_coefficient = sign * coeff;
  r.log_abs_main = std::log(coeff) + log_ell(-1, sigma, t);
  r.main_value = sign * std::exp(r.log_abs_main);
  r.log_error_shape = log_ell(0, sigma, t) - std::log((sigma - 0.5) * (1.0 - sigma) * (1.0 - sigma));
  r.error_shape_value = std::exp(r.log_error_shape);
  return r;
}

}  // namespace

BoundReport theorem3_upper(double sigma, const Height& t, const RangeOptions& opts) {
  return theorem3_report(sigma, t, opts, theorem3_upper_coeff(sigma), 1.0);
}

BoundReport theorem3_lower(double sigma, const Height& t, const RangeOptions& opts) {
  return theorem3_report(sigma, t, opts, theorem3_lower_coeff(sigma), -1.0);
}

extremal::ApproxParams bandwidth_choice(double sigma, double t) {
  if (!(sigma > 0.5)) throw DomainError("sigma must exceed 1/2");
  if (!(t > std::exp(1.0))) throw DomainError("t must exceed e so that log log t > 0");
  return extremal::ApproxParams::make(sigma - 0.5, std::log(std::log(t)) / kPi);
}

AssembledBound assemble_bound_numeric(double sigma, double t, BoundSide side, const PrimeConfig& config) {
  AssembledBound out;
  out.params = bandwidth_choice(sigma, t);
  const auto h = side == BoundSide::Lower ? minorant_bundle(out.params) : majorant_bundle(out.params);
  out.rhs = gw_rhs(h, t, config);
  out.value = out.rhs.total;
  out.certificate = out.rhs.certificate;
  return out;
}

}  // namespace zetaband::explicit_formula
