#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>

#include "oracle.hpp"
#include "reference_values.hpp"
#include "zetaband/errors.hpp"
#include "zetaband/special.hpp"

using namespace zetaband;
using zetaband::Complex;

namespace {

double rel(Complex got, Complex want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

}  // namespace

TEST_CASE("lambda0 solves 2 x tanh x = 1") {
  const double l0 = special::solve_lambda0();
  CHECK(std::fabs(2.0 * l0 * std::tanh(l0) - 1.0) < 1e-14);
  CHECK(l0 == doctest::Approx(ref::kLambda0).epsilon(1e-15));
  CHECK(l0 > 0.771);
  CHECK(l0 < 0.772);
}

TEST_CASE("digamma against reference values and the harmonic numbers") {
  CHECK(rel(special::digamma({0.25, 5.0}), {ref::kDigammaRe_025_5, ref::kDigammaIm_025_5}) < 1e-14);
  CHECK(rel(special::digamma({-2.5, 0.5}), {ref::kDigammaRe_m25_05, ref::kDigammaIm_m25_05}) < 1e-13);
  for (int n : {1, 2, 7, 30, 100})
    CHECK(special::digamma(Complex(n, 0.0)).real() == doctest::Approx(oracle::digamma_integer(n)).epsilon(1e-14));
  CHECK_THROWS_AS(special::digamma(Complex(-3.0, 0.0)), DomainError);
}

TEST_CASE("trigamma against the defining series") {
  CHECK(rel(special::trigamma({1.5, 2.0}), {ref::kTrigammaRe_15_2, ref::kTrigammaIm_15_2}) < 1e-14);
  for (Complex s : {Complex(0.3, 0.0), Complex(2.0, 10.0), Complex(1.375, 250.0), Complex(0.5, -3.0)})
    CHECK(rel(special::trigamma(s), oracle::trigamma_series(s)) < 1e-11);
}

TEST_CASE("trigamma is the derivative of digamma") {
  for (Complex s : {Complex(0.75, 3.0), Complex(1.2, 40.0), Complex(-1.5, 0.25)}) {
    auto re = [&](double x) { return special::digamma(s + x).real(); };
    CHECK(special::trigamma(s).real() == doctest::Approx(oracle::derivative(re, 0.0)).epsilon(1e-9));
  }
}

TEST_CASE("log_gamma matches the reference and the Lanczos oracle") {
  CHECK(rel(special::log_gamma({3.0, 4.0}), {ref::kLogGammaRe_3_4, ref::kLogGammaIm_3_4}) < 1e-14);
  for (Complex s : {Complex(0.7, 0.2), Complex(5.5, -2.0), Complex(1.0, 12.0)}) {
    const Complex g = std::exp(special::log_gamma(s));
    CHECK(rel(g, oracle::lanczos_gamma(s)) < 1e-12);
  }
}

TEST_CASE("von Mangoldt function") {
  CHECK(special::von_mangoldt(1) == 0.0);
  CHECK(special::von_mangoldt(2) == doctest::Approx(std::log(2.0)));
  CHECK(special::von_mangoldt(8) == doctest::Approx(std::log(2.0)));
  CHECK(special::von_mangoldt(6) == 0.0);
  CHECK(special::von_mangoldt(49) == doctest::Approx(std::log(7.0)));
  const auto table = special::von_mangoldt_table(5000);
  const auto brute = oracle::mangoldt(5000);
  for (std::size_t n = 0; n <= 5000; ++n) {
    CHECK(table[n] == doctest::Approx(brute[n]));
    if (n % 97 == 0) CHECK(special::von_mangoldt(n) == doctest::Approx(brute[n]));
  }
}

TEST_CASE("zeta and derivatives against reference values") {
  struct Case {
    Complex s, z, z1, ld, ldp;
  };
  const Case cases[] = {
      {{2.0, 0.0},
       {ref::kZetaRe_s2_0, ref::kZetaIm_s2_0},
       {ref::kZeta1Re_s2_0, ref::kZeta1Im_s2_0},
       {ref::kLogDerivRe_s2_0, ref::kLogDerivIm_s2_0},
       {ref::kLogDerivPrimeRe_s2_0, ref::kLogDerivPrimeIm_s2_0}},
      {{0.75, 100.0},
       {ref::kZetaRe_s075_100, ref::kZetaIm_s075_100},
       {ref::kZeta1Re_s075_100, ref::kZeta1Im_s075_100},
       {ref::kLogDerivRe_s075_100, ref::kLogDerivIm_s075_100},
       {ref::kLogDerivPrimeRe_s075_100, ref::kLogDerivPrimeIm_s075_100}},
      {{0.9, 1000.0},
       {ref::kZetaRe_s09_1000, ref::kZetaIm_s09_1000},
       {ref::kZeta1Re_s09_1000, ref::kZeta1Im_s09_1000},
       {ref::kLogDerivRe_s09_1000, ref::kLogDerivIm_s09_1000},
       {ref::kLogDerivPrimeRe_s09_1000, ref::kLogDerivPrimeIm_s09_1000}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.s);
    // Phases t log n carry an absolute rounding error of about eps * t.
    const double phase = std::max(1.0, std::fabs(c.s.imag()) / 100.0);
    const auto e = special::zeta_with_derivatives(c.s);
    CHECK(rel(e.zeta, c.z) < 1e-13 * phase);
    CHECK(rel(e.zeta1, c.z1) < 1e-12 * phase);
    CHECK(rel(special::zeta(c.s), c.z) < 1e-13 * phase);
    CHECK(rel(special::log_deriv(c.s), c.ld) < 1e-12 * phase);
    CHECK(rel(special::log_deriv_prime(c.s), c.ldp) < 1e-11 * phase);
  }
}

TEST_CASE("log derivative at 3 against its Dirichlet series") {
  const auto series = oracle::log_deriv_dirichlet(3.0, 200000);
  const double got = special::log_deriv(Complex(3.0, 0.0)).real();
  CHECK(std::fabs(got - series.value) <= series.tail + 1e-14);
  CHECK(series.tail < 1e-8);
}

TEST_CASE("zeta satisfies the functional equation") {
  for (Complex s : {Complex(0.75, 20.0), Complex(0.3, 55.5), Complex(0.6, 140.0), Complex(0.9, 7.0)}) {
    CAPTURE(s);
    const Complex lhs = special::zeta(s);
    const Complex rhs = oracle::chi(s) * special::zeta(1.0 - s);
    CHECK(std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)) < 1e-8);
  }
}

TEST_CASE("zeta derivatives agree with finite differences") {
  const Complex s(0.8, 300.0);
  const auto e = special::zeta_with_derivatives(s);
  auto re1 = [&](double x) { return special::zeta_with_derivatives(s + x).zeta1.real(); };
  auto re0 = [&](double x) { return special::zeta(s + x).real(); };
  CHECK(e.zeta1.real() == doctest::Approx(oracle::derivative(re0, 0.0)).epsilon(1e-8));
  CHECK(e.zeta2.real() == doctest::Approx(oracle::derivative(re1, 0.0)).epsilon(1e-8));
}

TEST_CASE("zeta domain and range errors") {
  CHECK_THROWS_AS(special::zeta(Complex(1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(special::zeta(Complex(0.5, 2e6)), RangeError);
  CHECK_THROWS_AS(special::zeta(Complex(NAN, 1.0)), DomainError);
  // At the first zero the log-derivative is refused.
  CHECK_THROWS_AS(special::log_deriv(Complex(0.5, 14.134725141734693790)), NearZeroError);
  CHECK_NOTHROW(special::log_deriv(Complex(0.5, 14.2)));
}

TEST_CASE("Hardy theta and Z") {
  CHECK(special::hardy_theta(100.0) == doctest::Approx(ref::kHardyTheta_100).epsilon(1e-14));
  CHECK(special::hardy_z(100.0).value == doctest::Approx(ref::kHardyZ_100).epsilon(1e-12));
  CHECK(special::hardy_z(1000.0).value == doctest::Approx(ref::kHardyZ_1000).epsilon(1e-11));
  CHECK(special::smooth_zero_count(1000.0) == doctest::Approx(ref::kSmoothCount_1000).epsilon(1e-14));
  CHECK(std::fabs(special::hardy_z(14.134725141734693790).value) < 1e-12);
  auto th = [](double t) { return special::hardy_theta(t); };
  CHECK(special::hardy_theta_prime(500.0) == doctest::Approx(oracle::derivative(th, 500.0, 1.0)).epsilon(1e-10));
  auto z = [](double t) { return special::hardy_z(t).value; };
  CHECK(special::hardy_z(77.0).derivative == doctest::Approx(oracle::derivative(z, 77.0, 1e-3)).epsilon(1e-8));
}
