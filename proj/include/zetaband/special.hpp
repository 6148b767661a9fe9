#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace zetaband {

using Complex = std::complex<double>;

namespace special {

// Throws DomainError unless both components are finite.
Complex require_finite(Complex z, const char* what);

// Gamma'/Gamma. Reflection for Re s < 1/2, upward recurrence until the
// Stirling series is accurate, then the asymptotic expansion.
Complex digamma(Complex s);

// (Gamma'/Gamma)'.
Complex trigamma(Complex s);

// log Gamma(s), continuous branch on Re s > 0 (the branch used by the Hardy theta function).
Complex log_gamma(Complex s);

// Lambda(n): log p when n = p^k, zero otherwise.
double von_mangoldt(std::uint64_t n);

// Lambda(n) for 0 <= n <= n_max by sieving; entry 0 is zero.
std::vector<double> von_mangoldt_table(std::size_t n_max);

// Euler-Maclaurin precision policy. The main sum uses
// N = ceil(n_scale * (|s| + 2m) / (2 pi)) terms plus m Bernoulli corrections,
// which makes successive corrections shrink by about 1/n_scale^2.
struct ZetaConfig {
  int bernoulli_terms = 30;  // m, at most 38
  double n_scale = 2.0;
  std::size_t min_terms = 10;
  double max_height = 1e6;
};

struct ZetaEval {
  Complex zeta;
  Complex zeta1;  // d/ds
  Complex zeta2;  // d^2/ds^2
  std::size_t terms_used = 0;
  double tail_estimate = 0.0;  // bound on the Euler-Maclaurin remainder of zeta itself
};

ZetaEval zeta_with_derivatives(Complex s, const ZetaConfig& config = {});

// zeta only; same policy, cheaper inner loop.
Complex zeta(Complex s, const ZetaConfig& config = {});

// zeta'/zeta. Throws NearZeroError when |zeta(s)| < 1e-12 * max(1, |zeta'(s)|),
// i.e. when s lies within about 1e-12 of a zero.
Complex log_deriv(Complex s, const ZetaConfig& config = {});

// (zeta'/zeta)' = zeta''/zeta - (zeta'/zeta)^2, same near-zero policy.
Complex log_deriv_prime(Complex s, const ZetaConfig& config = {});

// Root of 2 x tanh(x) = 1 by bisection on [0.5, 1].
double solve_lambda0();

// Hardy's theta(t) = arg Gamma(1/4 + it/2) - (t/2) log pi, continuous in t.
double hardy_theta(double t);
double hardy_theta_prime(double t);

// Smooth zero-counting function theta(T)/pi + 1 (the count is this plus S(T)).
double smooth_zero_count(double T);

struct HardyZ {
  double value;
  double derivative;
};

// Z(t) = e^{i theta(t)} zeta(1/2 + it) and Z'(t).
HardyZ hardy_z(double t, const ZetaConfig& config = {});

}  // namespace special
}  // namespace zetaband
