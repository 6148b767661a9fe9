#include "zetaband/extremal.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <boost/math/tools/roots.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zetaband/errors.hpp"

namespace zetaband::extremal {

namespace {

constexpr double kPi = std::numbers::pi;

// lambda * coth(lambda), even in lambda, = 1 at 0.
double lambda_coth(double l) {
  if (l < 1e-4) {
    const double l2 = l * l;
    return 1.0 + l2 / 3.0 - l2 * l2 / 45.0;
  }
  return l / std::tanh(l);
}

double inv_sinh2(double l) {
  if (l > 30.0) {
    const double e = std::exp(-2.0 * l);
    return 4.0 * e / ((1.0 - e) * (1.0 - e));
  }
  const double s = std::sinh(l);
  return 1.0 / (s * s);
}

double inv_cosh2(double l) {
  if (l > 30.0) {
    const double e = std::exp(-2.0 * l);
    return 4.0 * e / ((1.0 + e) * (1.0 + e));
  }
  const double c = std::cosh(l);
  return 1.0 / (c * c);
}

double lambda0() {
  static const double value = special::solve_lambda0();
  return value;
}

void require_positive_lambda(const ApproxParams& p) {
  if (!(p.lambda > 0.0) || !std::isfinite(p.lambda)) throw DomainError("lambda must be finite and positive");
}

// Truncated Taylor series in w = z - z0.
constexpr int kJetOrder = 20;
using Jet = std::array<Complex, kJetOrder>;

Jet jet_const(Complex c) {
  Jet j{};
  j[0] = c;
  return j;
}

Jet operator+(const Jet& x, const Jet& y) {
  Jet r;
  for (int i = 0; i < kJetOrder; ++i) r[i] = x[i] + y[i];
  return r;
}

Jet operator-(const Jet& x, const Jet& y) {
  Jet r;
  for (int i = 0; i < kJetOrder; ++i) r[i] = x[i] - y[i];
  return r;
}

Jet operator*(Complex c, const Jet& x) {
  Jet r;
  for (int i = 0; i < kJetOrder; ++i) r[i] = c * x[i];
  return r;
}

Jet operator*(const Jet& x, const Jet& y) {
  Jet r{};
  for (int i = 0; i < kJetOrder; ++i)
    for (int j = 0; i + j < kJetOrder; ++j) r[i + j] += x[i] * y[j];
  return r;
}

// sin and cos of g * (z0 + w) as jets.
void trig_jets(double g, Complex z0, Jet& s, Jet& c) {
  const Complex s0 = std::sin(g * z0), c0 = std::cos(g * z0);
  Jet sw{}, cw{};
  double term = 1.0;  // g^k / k!
  for (int k = 0; k < kJetOrder; ++k) {
    const int phase = k % 4;
    if (phase == 0) cw[k] = term;
    if (phase == 1) sw[k] = term;
    if (phase == 2) cw[k] = -term;
    if (phase == 3) sw[k] = -term;
    term *= g / (k + 1);
  }
  s = s0 * cw + c0 * sw;
  c = c0 * cw - s0 * sw;
}

// numerator / (z^2 + a^2)^2 for a numerator jet with a double zero at z0 = +-ia.
Complex divide_double_zero(const Jet& num, Complex z0, Complex w) {
  Complex acc = 0.0;
  for (int k = kJetOrder - 1; k >= 2; --k) acc = acc * w + num[k];
  const Complex d = w + 2.0 * z0;
  return acc / (d * d);
}

bool near_singularity(double a, Complex z, Complex& z0) {
  const Complex q = z * z + a * a;
  if (std::abs(q) >= 1e-2 * a * a) return false;
  z0 = Complex(0.0, z.imag() >= 0.0 ? a : -a);
  return true;
}

Jet z_jet(Complex z0) {
  Jet j{};
  j[0] = z0;
  j[1] = 1.0;
  return j;
}

// Transform of w(x) = (C x^2 + D a^2) / (x^2 + a^2)^2.
double w_hat(double C, double D, double a, double y) {
  const double ay = std::fabs(y);
  return kPi * kPi * ((C + D) / (2.0 * kPi * a) + (D - C) * ay) * std::exp(-2.0 * kPi * a * ay);
}

// d/dy of w_hat when C = 0.
double w_hat_prime_c0(double D, double a, double y) {
  return -2.0 * kPi * kPi * kPi * a * D * y * std::exp(-2.0 * kPi * a * std::fabs(y));
}

// Transform of x^2 * D a^2 / (x^2 + a^2)^2.
double r_hat(double D, double a, double y) {
  const double ay = std::fabs(y);
  return D * kPi * a * std::exp(-2.0 * kPi * a * ay) * (0.5 - kPi * a * ay);
}

}  // namespace

ApproxParams ApproxParams::make(double a, double delta) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("a must be finite and positive");
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("delta must be finite and positive");
  return {a, delta, kPi * a * delta};
}

ApproxParams ApproxParams::from_lambda(double a, double lambda) { return make(a, lambda / (kPi * a)); }

const char* branch_name(MajorantBranch b) {
  return b == MajorantBranch::AboveLambda0 ? "above_lambda0" : "below_lambda0";
}

double eval_f(double a, double x) {
  const double x2 = x * x, a2 = a * a, d = x2 + a2;
  return (x2 - a2) / (d * d);
}

double eval_f_prime(double a, double x) {
  const double x2 = x * x, a2 = a * a, d = x2 + a2;
  return 2.0 * x * (3.0 * a2 - x2) / (d * d * d);
}

Complex eval_f(double a, Complex z) {
  const Complex z2 = z * z, d = z2 + a * a;
  return (z2 - a * a) / (d * d);
}

double f_hat(double a, double y) {
  const double ay = std::fabs(y);
  return -2.0 * kPi * kPi * ay * std::exp(-2.0 * kPi * a * ay);
}

KernelHats poisson_kernel_hats(double a, double y) {
  const double ay = std::fabs(y);
  const double e = std::exp(-2.0 * kPi * a * ay);
  return {kPi / a * e, kPi * kPi * (ay + 1.0 / (2.0 * kPi * a)) * e};
}

MinorantCoeffs minorant_coeffs(const ApproxParams& p) {
  require_positive_lambda(p);
  const double lc = lambda_coth(p.lambda), is = inv_sinh2(p.lambda);
  return {(2.0 * lc - 1.0) * is, (2.0 * lc + 1.0) * is};
}

MajorantCoeffs majorant_coeffs_above(double l) {
  const double lt = l * std::tanh(l), ic = inv_cosh2(l);
  return {(2.0 * lt - 1.0) * ic, (2.0 * lt + 1.0) * ic, 0.0, MajorantBranch::AboveLambda0};
}

MajorantCoeffs majorant_coeffs_below(double l) {
  const double th = std::tanh(l);
  const double ratio = (2.0 * l + th) / (std::sinh(l) + l / std::cosh(l));
  const double E = (1.0 - 2.0 * l * th) / (2.0 * l * l + l * th);
  return {0.0, 0.5 * ratio * ratio, E, MajorantBranch::BelowLambda0};
}

MajorantCoeffs majorant_coeffs(const ApproxParams& p, double lambda0) {
  require_positive_lambda(p);
  return p.lambda >= lambda0 ? majorant_coeffs_above(p.lambda) : majorant_coeffs_below(p.lambda);
}

MajorantCoeffs majorant_coeffs(const ApproxParams& p) { return majorant_coeffs(p, lambda0()); }

double minorant_eval(const ApproxParams& p, double x) {
  const auto c = minorant_coeffs(p);
  const double x2 = x * x, a2 = p.a * p.a, d = x2 + a2;
  const double s = std::sin(kPi * p.delta * x);
  return (x2 - a2 - (c.A * x2 + c.B * a2) * s * s) / (d * d);
}

double majorant_eval(const ApproxParams& p, double x) {
  const auto c = majorant_coeffs(p);
  const double x2 = x * x, a2 = p.a * p.a, d = x2 + a2;
  const double th = kPi * p.delta * x;
  const double b = std::cos(th) - c.E * th * std::sin(th);
  return (x2 - a2 + (c.C * x2 + c.D * a2) * b * b) / (d * d);
}

Complex minorant_eval(const ApproxParams& p, Complex z) {
  const auto c = minorant_coeffs(p);
  const double a2 = p.a * p.a, g = kPi * p.delta;
  Complex z0;
  if (near_singularity(p.a, z, z0)) {
    Jet s, co;
    trig_jets(g, z0, s, co);
    const Jet zj = z_jet(z0), z2 = zj * zj;
    const Jet num = z2 - jet_const(a2) - ((Complex(c.A) * z2 + jet_const(c.B * a2)) * (s * s));
    return special::require_finite(divide_double_zero(num, z0, z - z0), "minorant_eval");
  }
  const Complex z2 = z * z, d = z2 + a2, s = std::sin(g * z);
  return special::require_finite((z2 - a2 - (c.A * z2 + c.B * a2) * s * s) / (d * d), "minorant_eval");
}

Complex majorant_eval(const ApproxParams& p, Complex z) {
  const auto c = majorant_coeffs(p);
  const double a2 = p.a * p.a, g = kPi * p.delta;
  Complex z0;
  if (near_singularity(p.a, z, z0)) {
    Jet s, co;
    trig_jets(g, z0, s, co);
    const Jet zj = z_jet(z0), z2 = zj * zj;
    const Jet b = co - Complex(c.E * g) * (zj * s);
    const Jet num = z2 - jet_const(a2) + ((Complex(c.C) * z2 + jet_const(c.D * a2)) * (b * b));
    return special::require_finite(divide_double_zero(num, z0, z - z0), "majorant_eval");
  }
  const Complex z2 = z * z, d = z2 + a2;
  const Complex b = std::cos(g * z) - c.E * g * z * std::sin(g * z);
  return special::require_finite((z2 - a2 + (c.C * z2 + c.D * a2) * b * b) / (d * d), "majorant_eval");
}

double minorant_prime(const ApproxParams& p, double x) {
  const auto c = minorant_coeffs(p);
  const double x2 = x * x, a2 = p.a * p.a, d = x2 + a2, g = kPi * p.delta;
  const double s = std::sin(g * x), co = std::cos(g * x);
  const double n = x2 - a2 - (c.A * x2 + c.B * a2) * s * s;
  const double dn = 2.0 * x - 2.0 * c.A * x * s * s - (c.A * x2 + c.B * a2) * 2.0 * s * co * g;
  return dn / (d * d) - 4.0 * x * n / (d * d * d);
}

double majorant_prime(const ApproxParams& p, double x) {
  const auto c = majorant_coeffs(p);
  const double x2 = x * x, a2 = p.a * p.a, d = x2 + a2, g = kPi * p.delta;
  const double s = std::sin(g * x), co = std::cos(g * x);
  const double b = co - c.E * g * x * s;
  const double db = -g * (1.0 + c.E) * s - c.E * g * g * x * co;
  const double n = x2 - a2 + (c.C * x2 + c.D * a2) * b * b;
  const double dn = 2.0 * x + 2.0 * c.C * x * b * b + (c.C * x2 + c.D * a2) * 2.0 * b * db;
  return dn / (d * d) - 4.0 * x * n / (d * d * d);
}

double minorant_mass(const ApproxParams& p) {
  require_positive_lambda(p);
  return -kPi * kPi * p.delta * inv_sinh2(p.lambda);
}

double majorant_mass_above(const ApproxParams& p) {
  require_positive_lambda(p);
  return kPi * kPi * p.delta * inv_cosh2(p.lambda);
}

double majorant_mass_below(const ApproxParams& p) {
  require_positive_lambda(p);
  const double l = p.lambda, D = majorant_coeffs_below(l).D;
  const double is = inv_sinh2(l);
  return -kPi * kPi * p.delta * is + D * kPi * kPi * p.delta * (2.0 * l + std::sinh(2.0 * l)) / (4.0 * l) * is;
}

double majorant_mass(const ApproxParams& p) {
  require_positive_lambda(p);
  return p.lambda >= lambda0() ? majorant_mass_above(p) : majorant_mass_below(p);
}

double minorant_hat_unclipped(const ApproxParams& p, double y) {
  const auto c = minorant_coeffs(p);
  const double a = p.a, h = p.delta;
  const double w0 = w_hat(c.A, c.B, a, y), wm = w_hat(c.A, c.B, a, y - h), wp = w_hat(c.A, c.B, a, y + h);
  return f_hat(a, y) - 0.25 * (2.0 * w0 - wm - wp);
}

double majorant_hat_unclipped(const ApproxParams& p, double y) {
  const auto c = majorant_coeffs(p);
  const double a = p.a, h = p.delta;
  double v = f_hat(a, y) + 0.25 * (2.0 * w_hat(c.C, c.D, a, y) + w_hat(c.C, c.D, a, y - h) + w_hat(c.C, c.D, a, y + h));
  if (c.E != 0.0) {
    // E > 0 only occurs with C = 0.
    v -= 0.25 * c.E * h * (w_hat_prime_c0(c.D, a, y - h) - w_hat_prime_c0(c.D, a, y + h));
    v += 0.25 * c.E * c.E * kPi * kPi * h * h * (2.0 * r_hat(c.D, a, y) - r_hat(c.D, a, y - h) - r_hat(c.D, a, y + h));
  }
  return v;
}

double minorant_hat(const ApproxParams& p, double y) {
  return std::fabs(y) >= p.delta ? 0.0 : minorant_hat_unclipped(p, y);
}

double majorant_hat(const ApproxParams& p, double y) {
  return std::fabs(y) >= p.delta ? 0.0 : majorant_hat_unclipped(p, y);
}

HatQuadrature majorant_hat_quadrature(const ApproxParams& p, double y, double tol) {
  // U cos(2 pi y x) split into smooth rational amplitudes times pure harmonics:
  // U = f + w (1/2 + E^2 th^2 / 2) + w (1/2 - E^2 th^2 / 2) cos(2 pi delta x) - w E th sin(2 pi delta x),
  // th = pi delta x, w = (C x^2 + D a^2) / (x^2 + a^2)^2.
  const auto c = majorant_coeffs(p);
  const double a = p.a, a2 = a * a, g = kPi * p.delta;
  auto w = [&](double x) {
    const double d = x * x + a2;
    return (c.C * x * x + c.D * a2) / (d * d);
  };
  auto even0 = [&](double x) { return eval_f(a, x) + w(x) * (0.5 + 0.5 * c.E * c.E * g * g * x * x); };
  auto even1 = [&](double x) { return w(x) * (0.5 - 0.5 * c.E * c.E * g * g * x * x); };
  auto odd1 = [&](double x) { return -w(x) * c.E * g * x; };

  HatQuadrature acc{0.0, 0.0};
  auto cos_part = [&](const std::function<double(double)>& s, double omega, double weight) {
    omega = std::fabs(omega);
    double v = 0.0, rel = 0.0;
    if (omega < 1e-14) {
      boost::math::quadrature::exp_sinh<double> rule;
      double err = 0.0, l1 = 0.0;
      v = rule.integrate(s, tol, &err, &l1);
      acc.error += std::fabs(weight) * err;
    } else {
      boost::math::quadrature::ooura_fourier_cos<double> rule(tol);
      std::tie(v, rel) = rule.integrate(s, omega);
      acc.error += std::fabs(weight * v) * rel;
    }
    acc.value += weight * v;
  };
  auto sin_part = [&](const std::function<double(double)>& s, double omega, double weight) {
    if (std::fabs(omega) < 1e-14) return;
    const double sign = omega < 0 ? -1.0 : 1.0;
    boost::math::quadrature::ooura_fourier_sin<double> rule(tol);
    auto [v, rel] = rule.integrate(s, std::fabs(omega));
    acc.value += sign * weight * v;
    acc.error += std::fabs(weight * v) * rel;
  };
  const double wy = 2.0 * kPi * y, wd = 2.0 * kPi * p.delta;
  // Integrals over (0, inf) doubled by evenness.
  cos_part(even0, wy, 2.0);
  cos_part(even1, wd + wy, 1.0);
  cos_part(even1, wd - wy, 1.0);
  if (c.E != 0.0) {
    sin_part(odd1, wd + wy, 1.0);
    sin_part(odd1, wd - wy, 1.0);
  }
  if (!std::isfinite(acc.value)) throw ConvergenceError("majorant_hat_quadrature: non-finite result");
  return acc;
}

double structure_function(double E, double u) { return std::cos(kPi * u) - E * kPi * u * std::sin(kPi * u); }

const char* node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Lattice: return "lattice";
    case NodeKind::HalfLattice: return "half_lattice";
    case NodeKind::BFunctionZeros: return "b_zeros";
  }
  return "?";
}

double littmann_weight(double E, double xi) { return 1.0 - E / (kPi * kPi * E * E * xi * xi + 1.0 + E); }

double default_node_window(const ApproxParams& p) { return std::max(50.0 / p.delta, 10.0 / p.a); }

NodeSet minorant_nodes(const ApproxParams& p, double window) {
  if (!(window > 0.0)) throw DomainError("node window must be positive");
  NodeSet ns;
  ns.kind = NodeKind::Lattice;
  ns.delta = p.delta;
  const long n = static_cast<long>(std::floor(window * p.delta));
  for (long k = -n; k <= n; ++k) {
    ns.nodes.push_back(static_cast<double>(k) / p.delta);
    ns.weights.push_back(1.0);
  }
  ns.first_excluded_index = static_cast<std::size_t>(n + 1);
  return ns;
}

NodeSet majorant_nodes(const ApproxParams& p, const MajorantCoeffs& c, double window) {
  if (!(window > 0.0)) throw DomainError("node window must be positive");
  NodeSet ns;
  ns.delta = p.delta;
  ns.E = c.E;
  std::vector<double> positive;
  if (c.E == 0.0) {
    ns.kind = NodeKind::HalfLattice;
    const double span = window * p.delta;
    const std::size_t count = span >= 0.5 ? static_cast<std::size_t>(std::floor(span - 0.5)) + 1 : 0;
    for (std::size_t k = 0; k < count; ++k) positive.push_back((static_cast<double>(k) + 0.5) / p.delta);
    ns.first_excluded_index = count;
  } else {
    if (!(c.E > 0.0)) throw DomainError("structure function needs E >= 0");
    ns.kind = NodeKind::BFunctionZeros;
    const std::size_t count = static_cast<std::size_t>(std::floor(window * p.delta));
    const double E = c.E;
    for (std::size_t k = 0; k < count; ++k) {
      // On (k, k + 1/2): B(k + d) = (-1)^k (cos(pi d) - E pi (k + d) sin(pi d)), strictly decreasing in d.
      const double kk = static_cast<double>(k);
      auto phi = [&](double d) { return std::cos(kPi * d) - E * kPi * (kk + d) * std::sin(kPi * d); };
      const double lo_val = phi(0.0), hi_val = phi(0.5);
      if (!(lo_val > 0.0 && hi_val < 0.0))
        throw ConvergenceError("structure function zero not bracketed in (" + std::to_string(k) + ", " +
                               std::to_string(k) + ".5)");
      std::uintmax_t iters = 200;
      auto tol = boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 2);
      auto [lo, hi] = boost::math::tools::toms748_solve(phi, 0.0, 0.5, lo_val, hi_val, tol, iters);
      const double d = 0.5 * (lo + hi);
      positive.push_back((kk + d) / p.delta);
    }
    ns.first_excluded_index = count;
  }
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) ns.nodes.push_back(-*it);
  ns.nodes.insert(ns.nodes.end(), positive.begin(), positive.end());
  for (double x : ns.nodes) ns.weights.push_back(ns.kind == NodeKind::BFunctionZeros ? littmann_weight(c.E, x * p.delta) : 1.0);
  return ns;
}

NodeTail f_node_tail(double a, double x_min) {
  const double a2 = a * a;
  return {1.0, 3.0 * a2 + a2 * a2 / (x_min * x_min)};
}

NodeSum weighted_node_sum(const std::function<double(double)>& F, const NodeTail& tail, const NodeSet& ns, double tol) {
  NodeSum out;
  const double delta = ns.delta;
  if (!(delta > 0.0)) throw DomainError("node set carries no bandwidth");
  // Outermost nodes first so that small terms accumulate before large ones.
  const std::size_t n = ns.nodes.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n / 2; ++i) {
    sum += ns.weights[i] * F(ns.nodes[i]);
    sum += ns.weights[n - 1 - i] * F(ns.nodes[n - 1 - i]);
  }
  if (n % 2 == 1) sum += ns.weights[n / 2] * F(ns.nodes[n / 2]);
  out.value = sum / delta;
  out.nodes_used = n;
  out.window = n ? ns.nodes.back() : 0.0;

  const double K = static_cast<double>(ns.first_excluded_index);
  if (K < 1.0) throw ConvergenceError("node window excludes every node; no tail model applies");
  // Sum over k >= K of 1/k^4.
  const double z4 = 1.0 / (K * K * K * K) + 1.0 / (3.0 * K * K * K);
  double s2 = 0.0, s2_err = 0.0, weight_slack = 0.0;
  switch (ns.kind) {
    case NodeKind::Lattice: s2 = special::trigamma(Complex(K, 0.0)).real(); break;
    case NodeKind::HalfLattice: s2 = special::trigamma(Complex(K + 0.5, 0.0)).real(); break;
    case NodeKind::BFunctionZeros: {
      // xi_k = k + d_k with 0 < d_k < 1 / (pi^2 E k).
      const double hi = special::trigamma(Complex(K, 0.0)).real();
      const double width = 2.0 / (kPi * kPi * ns.E) * z4;
      s2 = hi - 0.5 * width;
      s2_err = 0.5 * width;
      weight_slack = std::fabs(tail.m) * delta / (kPi * kPi * ns.E);
      break;
    }
  }
  // Both signs of xi contribute.
  out.value += 2.0 * tail.m * delta * s2;
  out.tail_bound = 2.0 * std::fabs(tail.m) * delta * s2_err + 2.0 * (weight_slack + tail.k4 * delta * delta * delta) * z4;
  if (out.tail_bound > tol)
    throw ConvergenceError("node-sum tail bound " + std::to_string(out.tail_bound) + " above tolerance");
  return out;
}

namespace {

template <class MakeNodes>
NodeSum grow_window(const ApproxParams& p, const std::function<double(double)>& F, MakeNodes make, double tol) {
  double window = default_node_window(p);
  for (int attempt = 0; attempt < 14; ++attempt, window *= 2.0) {
    const NodeSet ns = make(window);
    const double x_min = static_cast<double>(ns.first_excluded_index) / p.delta;
    try {
      return weighted_node_sum(F, f_node_tail(p.a, x_min), ns, tol);
    } catch (const ConvergenceError&) {
    }
  }
  throw ConvergenceError("node sum did not reach tolerance within the window budget");
}

}  // namespace

NodeSum majorant_node_sum(const ApproxParams& p, double tol) {
  const auto c = majorant_coeffs(p);
  return grow_window(
      p, [&](double x) { return majorant_eval(p, x); }, [&](double w) { return majorant_nodes(p, c, w); }, tol);
}

NodeSum minorant_node_sum(const ApproxParams& p, double tol) {
  return grow_window(
      p, [&](double x) { return minorant_eval(p, x); }, [&](double w) { return minorant_nodes(p, w); }, tol);
}

ViolationReport verify_extremal(const ApproxParams& p, Side side, const GridSpec& grid) {
  ViolationReport r;
  r.max_violation = -std::numeric_limits<double>::infinity();
  const std::size_t n = std::max<std::size_t>(grid.points, 1);
  const auto mc = minorant_coeffs(p);
  const auto uc = majorant_coeffs(p);
  const double a2 = p.a * p.a, g = kPi * p.delta;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = n == 1 ? 0.0 : -grid.half_width + 2.0 * grid.half_width * static_cast<double>(i) / static_cast<double>(n - 1);
    const double x2 = x * x, d = x2 + a2;
    const double f = (x2 - a2) / (d * d);
    double v;
    if (side == Side::Minorant) {
      const double s = std::sin(g * x);
      v = (x2 - a2 - (mc.A * x2 + mc.B * a2) * s * s) / (d * d) - f;
    } else {
      const double b = std::cos(g * x) - uc.E * g * x * std::sin(g * x);
      v = f - (x2 - a2 + (uc.C * x2 + uc.D * a2) * b * b) / (d * d);
    }
    v *= d;
    if (v > r.max_violation) {
      r.max_violation = v;
      r.argmax = x;
    }
  }
  r.points = n;
  return r;
}

}  // namespace zetaband::extremal
