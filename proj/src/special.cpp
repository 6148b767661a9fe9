#include "zetaband/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "zetaband/errors.hpp"

namespace zetaband::special {

namespace {

constexpr double kPi = std::numbers::pi;

// B_{2k}/(2k)! for k = 1..40.
constexpr std::array<double, 40> kBernoulliOverFactorial = {
    8.3333333333333333333e-2,   -1.3888888888888888889e-3,  3.3068783068783068783e-5,
    -8.2671957671957671958e-7,  2.0876756987868098979e-8,   -5.2841901386874931848e-10,
    1.3382536530684678833e-11,  -3.3896802963225828668e-13, 8.5860620562778445641e-15,
    -2.174868698558061873e-16,  5.5090028283602295152e-18,  -1.3954464685812523341e-19,
    3.5347070396294674717e-21,  -8.9535174270375468504e-23, 2.2679524523376830603e-24,
    -5.7447906688722024453e-26, 1.4551724756148649019e-27,  -3.6859949406653101782e-29,
    9.336734257095044672e-31,   -2.3650224157006299346e-32, 5.9906717624821343047e-34,
    -1.5174548844682902617e-35, 3.8437581254541882322e-37,  -9.7363530726466910353e-39,
    2.4662470442006809571e-40,  -6.2470767418207436931e-42, 1.5824030244644914298e-43,
    -4.0082736859489359685e-45, 1.0153075855569556312e-46,  -2.5718041582418717499e-48,
    6.5144560352338149316e-50,  -1.6501309906896524555e-51, 4.1798306285394758949e-53,
    -1.058763466770290877e-54,  2.6818791912607706661e-56,  -6.7932793511074212095e-58,
    1.7207577616681404905e-59,  -4.3587303293488938434e-61, 1.1040792903684666751e-62,
    -2.7966655133781345072e-64,
};

// B_{2k} for k = 1..10, used by the Stirling-type series.
constexpr std::array<double, 10> kBernoulli = {
    1.0 / 6.0,       -1.0 / 30.0,  1.0 / 42.0,          -1.0 / 30.0,      5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0,    -3617.0 / 510.0,     43867.0 / 798.0, -174611.0 / 330.0,
};

// |s| above which the asymptotic series are used without shifting.
constexpr double kAsymptoticRadius = 10.0;

bool is_gamma_pole(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

Complex digamma_asymptotic(Complex s) {
  const Complex inv = 1.0 / s;
  const Complex inv2 = inv * inv;
  Complex sum = 0.0;
  Complex pow = inv2;
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    sum += kBernoulli[k] / (2.0 * static_cast<double>(k + 1)) * pow;
    pow *= inv2;
  }
  return std::log(s) - 0.5 * inv - sum;
}

Complex trigamma_asymptotic(Complex s) {
  const Complex inv = 1.0 / s;
  const Complex inv2 = inv * inv;
  Complex sum = 0.0;
  Complex pow = inv2 * inv;
  for (double b : kBernoulli) {
    sum += b * pow;
    pow *= inv2;
  }
  return inv + 0.5 * inv2 + sum;
}

Complex log_gamma_asymptotic(Complex s) {
  const Complex inv = 1.0 / s;
  const Complex inv2 = inv * inv;
  Complex sum = 0.0;
  Complex pow = inv;
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    const double n = 2.0 * static_cast<double>(k + 1);
    sum += kBernoulli[k] / (n * (n - 1.0)) * pow;
    pow *= inv2;
  }
  return (s - 0.5) * std::log(s) - s + 0.5 * std::log(2.0 * kPi) + sum;
}

// cot(z) and 1/sin^2(z) through e^{+-2iz}, which stays bounded for large |Im z|.
Complex cot_stable(Complex z) {
  const Complex i(0.0, 1.0);
  if (z.imag() >= 0.0) {
    const Complex w = std::exp(2.0 * i * z);
    return i * (w + 1.0) / (w - 1.0);
  }
  const Complex w = std::exp(-2.0 * i * z);
  return i * (1.0 + w) / (1.0 - w);
}

Complex inv_sin_squared(Complex z) {
  const Complex i(0.0, 1.0);
  const Complex w = std::exp((z.imag() >= 0.0 ? 2.0 : -2.0) * i * z);
  return -4.0 * w / ((1.0 - w) * (1.0 - w));
}

bool needs_shift(Complex s) { return s.real() < kAsymptoticRadius && std::abs(s) < 2.0 * kAsymptoticRadius; }

void check_zeta_argument(Complex s, const ZetaConfig& config) {
  require_finite(s, "zeta argument");
  if (s == Complex(1.0, 0.0)) throw DomainError("zeta has a pole at s = 1");
  if (std::abs(s.imag()) > config.max_height) {
    throw RangeError("|Im s| = " + std::to_string(std::abs(s.imag())) + " exceeds supported height " +
                     std::to_string(config.max_height));
  }
  if (config.bernoulli_terms < 1 || config.bernoulli_terms > 38) {
    throw DomainError("bernoulli_terms must lie in [1, 38]");
  }
  if (!(config.n_scale >= 1.0)) throw DomainError("n_scale must be at least 1");
  if (s.real() + 2.0 * config.bernoulli_terms + 1.0 <= 0.0) {
    throw RangeError("Re s too negative for the configured Euler-Maclaurin depth");
  }
}

std::size_t main_terms(Complex s, const ZetaConfig& config) {
  const double m = config.bernoulli_terms;
  const double n = std::ceil(config.n_scale * (std::abs(s) + 2.0 * m) / (2.0 * kPi));
  return std::max<std::size_t>(config.min_terms, static_cast<std::size_t>(n));
}

}  // namespace

Complex require_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(what) + " is not finite");
  }
  return z;
}

Complex digamma(Complex s) {
  require_finite(s, "digamma argument");
  if (is_gamma_pole(s)) throw DomainError("digamma has a pole at a non-positive integer");
  if (s.real() < 0.5) {
    // psi(s) = psi(1 - s) - pi cot(pi s)
    return digamma(1.0 - s) - kPi * cot_stable(kPi * s);
  }
  Complex shift = 0.0;
  while (needs_shift(s)) {
    shift += 1.0 / s;
    s += 1.0;
  }
  return digamma_asymptotic(s) - shift;
}

Complex trigamma(Complex s) {
  require_finite(s, "trigamma argument");
  if (is_gamma_pole(s)) throw DomainError("trigamma has a pole at a non-positive integer");
  if (s.real() < 0.5) {
    // psi'(s) = pi^2 / sin^2(pi s) - psi'(1 - s)
    return kPi * kPi * inv_sin_squared(kPi * s) - trigamma(1.0 - s);
  }
  Complex shift = 0.0;
  while (needs_shift(s)) {
    shift += 1.0 / (s * s);
    s += 1.0;
  }
  return trigamma_asymptotic(s) + shift;
}

Complex log_gamma(Complex s) {
  require_finite(s, "log_gamma argument");
  if (!(s.real() > 0.0)) throw DomainError("log_gamma is only provided on Re s > 0");
  Complex shift = 0.0;
  while (needs_shift(s)) {
    shift += std::log(s);
    s += 1.0;
  }
  return log_gamma_asymptotic(s) - shift;
}

double von_mangoldt(std::uint64_t n) {
  if (n < 2) return 0.0;
  std::uint64_t p = 0;
  if (n % 2 == 0) {
    p = 2;
  } else {
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
      if (n % d == 0) {
        p = d;
        break;
      }
    }
    if (p == 0) return std::log(static_cast<double>(n));
  }
  while (n % p == 0) n /= p;
  return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

std::vector<double> von_mangoldt_table(std::size_t n_max) {
  std::vector<double> lambda(n_max + 1, 0.0);
  std::vector<bool> composite(n_max + 1, false);
  for (std::size_t p = 2; p <= n_max; ++p) {
    if (composite[p]) continue;
    if (p <= n_max / p) {
      for (std::size_t q = p * p; q <= n_max; q += p) composite[q] = true;
    }
    const double lp = std::log(static_cast<double>(p));
    for (std::size_t pk = p; pk <= n_max; pk *= p) {
      lambda[pk] = lp;
      if (pk > n_max / p) break;
    }
  }
  return lambda;
}

ZetaEval zeta_with_derivatives(Complex s, const ZetaConfig& config) {
  check_zeta_argument(s, config);
  const int m = config.bernoulli_terms;
  const std::size_t n_terms = main_terms(s, config);
  const double sigma = s.real();
  const double t = s.imag();

  Complex sum0 = 0.0;
  Complex sum1 = 0.0;
  Complex sum2 = 0.0;
  for (std::size_t n = 1; n < n_terms; ++n) {
    const double ln = std::log(static_cast<double>(n));
    const Complex term = std::polar(std::exp(-sigma * ln), -t * ln);
    sum0 += term;
    sum1 -= ln * term;
    sum2 += ln * ln * term;
  }

  const double big_n = static_cast<double>(n_terms);
  const double log_n = std::log(big_n);
  const Complex n_pow = std::polar(std::exp(-sigma * log_n), -t * log_n);  // N^{-s}

  // N^{1-s}/(s-1)
  const Complex inv = 1.0 / (s - 1.0);
  const Complex head = big_n * n_pow;
  sum0 += head * inv;
  sum1 += head * (-log_n * inv - inv * inv);
  sum2 += head * (log_n * log_n * inv + 2.0 * log_n * inv * inv + 2.0 * inv * inv * inv);

  // N^{-s}/2
  sum0 += 0.5 * n_pow;
  sum1 += -0.5 * log_n * n_pow;
  sum2 += 0.5 * log_n * log_n * n_pow;

  // Bernoulli corrections c_k P_k(s) N^{1-s-2k}, P_k(s) = s (s+1) ... (s+2k-2).
  Complex p = s;
  Complex dp = 1.0;
  Complex ddp = 0.0;
  Complex power = n_pow / big_n;  // N^{-s-1}
  const double inv_n2 = 1.0 / (big_n * big_n);
  for (int k = 1; k <= m; ++k) {
    const double c = kBernoulliOverFactorial[static_cast<std::size_t>(k - 1)];
    sum0 += c * power * p;
    sum1 += c * power * (dp - log_n * p);
    sum2 += c * power * (ddp - 2.0 * log_n * dp + log_n * log_n * p);
    // advance P_k -> P_{k+1} = P_k (s + 2k - 1)(s + 2k)
    for (int j = 2 * k - 1; j <= 2 * k; ++j) {
      const Complex f = s + static_cast<double>(j);
      ddp = ddp * f + 2.0 * dp;
      dp = dp * f + p;
      p = p * f;
    }
    power *= inv_n2;
  }
  const double next = std::abs(kBernoulliOverFactorial[static_cast<std::size_t>(m)] * power * p);
  const double sp = sigma + 2.0 * m + 1.0;
  const double tail = next * std::abs(s + 2.0 * m + 1.0) / sp;

  ZetaEval out;
  out.zeta = require_finite(sum0, "zeta value");
  out.zeta1 = require_finite(sum1, "zeta' value");
  out.zeta2 = require_finite(sum2, "zeta'' value");
  out.terms_used = n_terms;
  out.tail_estimate = tail;
  return out;
}

Complex zeta(Complex s, const ZetaConfig& config) {
  check_zeta_argument(s, config);
  const int m = config.bernoulli_terms;
  const std::size_t n_terms = main_terms(s, config);
  const double sigma = s.real();
  const double t = s.imag();

  Complex sum = 0.0;
  for (std::size_t n = 1; n < n_terms; ++n) {
    const double ln = std::log(static_cast<double>(n));
    sum += std::polar(std::exp(-sigma * ln), -t * ln);
  }
  const double big_n = static_cast<double>(n_terms);
  const double log_n = std::log(big_n);
  const Complex n_pow = std::polar(std::exp(-sigma * log_n), -t * log_n);
  sum += big_n * n_pow / (s - 1.0) + 0.5 * n_pow;

  Complex p = s;
  Complex power = n_pow / big_n;
  const double inv_n2 = 1.0 / (big_n * big_n);
  for (int k = 1; k <= m; ++k) {
    sum += kBernoulliOverFactorial[static_cast<std::size_t>(k - 1)] * power * p;
    p *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    power *= inv_n2;
  }
  return require_finite(sum, "zeta value");
}

namespace {

void check_not_near_zero(const ZetaEval& z) {
  const double scale = std::max(1.0, std::abs(z.zeta1));
  if (std::abs(z.zeta) < 1e-12 * scale) {
    throw NearZeroError("|zeta(s)| below 1e-12 relative threshold: s is too close to a zero of zeta");
  }
}

}  // namespace

Complex log_deriv(Complex s, const ZetaConfig& config) {
  const ZetaEval z = zeta_with_derivatives(s, config);
  check_not_near_zero(z);
  return z.zeta1 / z.zeta;
}

Complex log_deriv_prime(Complex s, const ZetaConfig& config) {
  const ZetaEval z = zeta_with_derivatives(s, config);
  check_not_near_zero(z);
  const Complex q = z.zeta1 / z.zeta;
  return z.zeta2 / z.zeta - q * q;
}

double solve_lambda0() {
  double lo = 0.5;
  double hi = 1.0;
  // 2x tanh x - 1 is increasing on [0.5, 1], negative at 0.5 and positive at 1.
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (2.0 * mid * std::tanh(mid) - 1.0 < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double rlo = std::abs(2.0 * lo * std::tanh(lo) - 1.0);
  const double rhi = std::abs(2.0 * hi * std::tanh(hi) - 1.0);
  return rlo <= rhi ? lo : hi;
}

double hardy_theta(double t) {
  if (!std::isfinite(t)) throw DomainError("hardy_theta argument is not finite");
  if (t < 0.0) return -hardy_theta(-t);
  return log_gamma(Complex(0.25, 0.5 * t)).imag() - 0.5 * t * std::log(kPi);
}

double hardy_theta_prime(double t) {
  if (!std::isfinite(t)) throw DomainError("hardy_theta_prime argument is not finite");
  return 0.5 * digamma(Complex(0.25, 0.5 * t)).real() - 0.5 * std::log(kPi);
}

double smooth_zero_count(double T) { return hardy_theta(T) / kPi + 1.0; }

HardyZ hardy_z(double t, const ZetaConfig& config) {
  const ZetaEval z = zeta_with_derivatives(Complex(0.5, t), config);
  const Complex rot = std::polar(1.0, hardy_theta(t));
  return HardyZ{(rot * z.zeta).real(), -(rot * z.zeta1).imag()};
}

}  // namespace zetaband::special
