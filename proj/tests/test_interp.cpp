#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "reference_values.hpp"
#include "zetaband/errors.hpp"
#include "zetaband/height.hpp"
#include "zetaband/interp.hpp"
#include "zetaband/special.hpp"

using namespace zetaband;
using namespace zetaband::interp;

namespace {

Envelope constant(double c) { return {[c](double) { return c; }, [](double) { return 0.0; }}; }

EnvelopeSet constant_set(double a0, double b0, double a2, double b2) {
  return make_envelope_set(constant(a0), constant(b0), constant(a2), constant(b2), 0.0, 10.0, 101);
}

// phi(t) = sum c_k sin(k t + p_k) with integer frequencies: 2 pi periodic, so
// sups over one period are sups over the line.
struct TrigPoly {
  std::vector<double> c, p;
  double value(double t) const {
    double s = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * std::sin((k + 1) * t + p[k]);
    return s;
  }
  double d1(double t) const {
    double s = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * (k + 1) * std::cos((k + 1) * t + p[k]);
    return s;
  }
  double d2(double t) const {
    double s = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) s -= c[k] * (k + 1) * (k + 1) * std::sin((k + 1) * t + p[k]);
    return s;
  }
  // Lipschitz constants of phi and phi'' for the grid-sup slack.
  double lip0() const {
    double s = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) s += std::fabs(c[k]) * (k + 1);
    return s;
  }
  double lip2() const {
    double s = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) s += std::fabs(c[k]) * std::pow(k + 1, 3);
    return s;
  }
};

}  // namespace

TEST_CASE("constant envelopes") {
  const auto e = constant_set(1, 1, 1, 1);
  CHECK(e.L == doctest::Approx(8.0 / 3.0 * 1.1).epsilon(1e-15));
  CHECK(e.M0 == 0.0);
  CHECK(e.N2 == 0.0);
  const double t = std::sqrt(3.0 * e.L) + 1.0;
  CHECK(derivative_bound(e, t) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  const auto o = optimal_parameters(e, t);
  CHECK(o.A == 0.5);
  CHECK(o.nu == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
  // phi = sin meets these envelopes; |cos| <= 1 <= sqrt 2.
  for (double s = t; s < t + 7.0; s += 0.01) CHECK(std::fabs(std::cos(s)) <= derivative_bound(e, t));
  CHECK_THROWS_AS(derivative_bound(e, 0.5 * std::sqrt(3.0 * e.L)), RangeError);
  CHECK_THROWS_AS(optimal_parameters(e, 0.0), RangeError);
  CHECK_THROWS_AS(make_envelope_set(constant(1), constant(-1), constant(1), constant(1), 0.0, 1.0), DomainError);
}

TEST_CASE("symmetric second-order envelopes average with A = 1/2") {
  const auto e = constant_set(0.3, 2.0, 1.7, 1.7);
  CHECK(optimal_parameters(e, 5.0).A == 0.5);
}

TEST_CASE("optimal parameters reproduce the square-root main term") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.05, 20.0);
  for (int i = 0; i < 200; ++i) {
    const auto e = constant_set(u(rng), u(rng), u(rng), u(rng));
    const auto o = optimal_parameters(e, 5.0);
    CHECK(averaged_main_term(e, 5.0, o.nu, o.A) == doctest::Approx(derivative_main_term(e, 5.0)).epsilon(1e-12));
  }
}

TEST_CASE("optimal parameters minimize on a brute-force grid") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.1, 5.0);
  for (int i = 0; i < 10; ++i) {
    const auto e = constant_set(u(rng), u(rng), u(rng), u(rng));
    const auto o = optimal_parameters(e, 5.0);
    const double best = averaged_main_term(e, 5.0, o.nu, o.A);
    double grid_min = INFINITY, at_nu = 0.0, at_A = 0.0;
    for (int j = 0; j <= 2000; ++j) {
      const double nu = o.nu * (0.5 + j / 2000.0);
      for (int k = 0; k <= 2000; ++k) {
        const double A = k / 2000.0;
        const double v = averaged_main_term(e, 5.0, nu, A);
        if (v < grid_min) {
          grid_min = v;
          at_nu = nu;
          at_A = A;
        }
      }
    }
    CHECK(grid_min >= best * (1.0 - 1e-12));
    CHECK(grid_min - best <= 1e-6 * best);
    CHECK(std::fabs(at_A - o.A) <= 1e-3);
    CHECK(std::fabs(at_nu - o.nu) <= 2e-3 * o.nu);
  }
}

TEST_CASE("derivative bound holds for generated trigonometric polynomials") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coef(-1.0, 1.0), phase(0.0, 2.0 * std::numbers::pi);
  std::uniform_int_distribution<int> degree(1, 6);
  const int grid = 20000;
  const double h = 2.0 * std::numbers::pi / grid;
  double worst_ratio = 0.0;
  for (int n = 0; n < 50; ++n) {
    TrigPoly phi;
    const int d = degree(rng);
    for (int k = 0; k < d; ++k) {
      // Higher harmonics damped so phi'' stays comparable to phi.
      phi.c.push_back(coef(rng) / std::pow(k + 1, 2));
      phi.p.push_back(phase(rng));
    }
    double hi0 = -INFINITY, lo0 = INFINITY, hi2 = -INFINITY, lo2 = INFINITY;
    for (int i = 0; i < grid; ++i) {
      const double t = i * h;
      hi0 = std::max(hi0, phi.value(t));
      lo0 = std::min(lo0, phi.value(t));
      hi2 = std::max(hi2, phi.d2(t));
      lo2 = std::min(lo2, phi.d2(t));
    }
    // Grid sups miss the true sups by at most Lipschitz * h / 2.
    const double s0 = phi.lip0() * h, s2 = phi.lip2() * h;
    const auto e = constant_set(hi0 + s0, -lo0 + s0, hi2 + s2, -lo2 + s2);
    const double t_start = std::sqrt(3.0 * e.L) + 1e-9;
    const double bound = derivative_bound(e, t_start + 1.0);
    double worst = 0.0;
    for (int i = 0; i < grid; ++i) {
      const double t = t_start + 1.0 + i * h;
      const double d1 = std::fabs(phi.d1(t));
      worst = std::max(worst, d1);
      if (!(d1 <= derivative_bound(e, t))) FAIL("bound violated for polynomial " << n << " at t = " << t);
    }
    worst_ratio = std::max(worst_ratio, worst / bound);
  }
  MESSAGE("largest max|phi'| / bound over the generated set: " << worst_ratio);
  CHECK(worst_ratio > 0.3);
}

TEST_CASE("bound constants") {
  CHECK(c_sigma(0.75) == doctest::Approx(1.4381).epsilon(1e-4));
  CHECK(b_sigma(0.75) == doctest::Approx(1.5940).epsilon(1e-4));
  CHECK(c_sigma(0.6) == doctest::Approx(ref::kCsigma_6).epsilon(1e-14));
  CHECK(c_sigma(0.75) == doctest::Approx(ref::kCsigma_75).epsilon(1e-14));
  CHECK(c_sigma(0.9) == doctest::Approx(ref::kCsigma_9).epsilon(1e-14));
  CHECK(b_sigma(0.6) == doctest::Approx(ref::kBsigma_6).epsilon(1e-14));
  CHECK(b_sigma(0.75) == doctest::Approx(ref::kBsigma_75).epsilon(1e-14));
  CHECK(b_sigma(0.9) == doctest::Approx(ref::kBsigma_9).epsilon(1e-14));
  for (int i = 1; i <= 100; ++i) {
    const double s = 0.5 + 0.5 * i / 101.0;
    CAPTURE(s);
    const double b = b_sigma(s), c = c_sigma(s), q = -s * s + 3 * s - 1;
    CHECK(std::fabs(b * b - (q * q + c * c)) <= 1e-12 * b * b);
    CHECK(realpart_coeff(s) * s * (1 - s) == doctest::Approx(q).epsilon(1e-15));
    CHECK(quad_r(s) > 0.0);
    CHECK(quad_q(s) > 0.0);
    CHECK(quad_s(s) > 0.0);
  }
  // Finite limits at the endpoints.
  const double at_half = std::sqrt(2.0 * 0.25 * 0.25 * 1.25 / 0.75);
  CHECK(c_sigma(0.5 + 1e-12) == doctest::Approx(at_half).epsilon(1e-10));
  CHECK(c_sigma(1.0 - 1e-12) == doctest::Approx(std::sqrt(2.0 * 2.0 * 1.0 * 1.0)).epsilon(1e-10));
  CHECK_THROWS_AS(c_sigma(0.5), RangeError);
  CHECK_THROWS_AS(b_sigma(1.0), RangeError);
  CHECK_THROWS_AS(realpart_coeff(0.2), RangeError);
}

TEST_CASE("C_sigma from the derivative bound applied to the zeta envelopes") {
  for (double s : {0.6, 0.7, 0.75, 0.8, 0.9}) {
    const double w = s * (1.0 - s);
    const double a2 = (-2 * s * s + 2 * s + 2) / w, b2 = (-2 * s * s + 6 * s - 2) / w;
    const double a0 = (-s * s + 5 * s - 2) / (2 * w);
    const double from_envelopes = std::sqrt(2.0 * a2 * b2 * 2.0 * a0 / (a2 + b2));
    CHECK(c_sigma(s) / w == doctest::Approx(from_envelopes).epsilon(1e-12));
    for (double log10_t : {10.0, 100.0}) {
      const auto h = Height::from_log_t(log10_t * std::log(10.0));
      CHECK(std::fabs(zeta_leading_coefficient(s, h) / (c_sigma(s) / w) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("zeta envelope set at a representable height") {
  const double s = 0.75;
  const auto e = zeta_envelope_set(s);
  const double t = 1e10;
  REQUIRE(t > e.t0);
  const double main = derivative_main_term(e, t);
  CHECK(main == doctest::Approx(std::exp(zeta_derivative_main_log(s, Height::from_t(t)))).epsilon(1e-12));
  CHECK(main / ell(0, s, Height::from_t(t)) == doctest::Approx(c_sigma(s) / (s * (1 - s))).epsilon(1e-12));
  CHECK(e.L > 0.0);
  CHECK_THROWS_AS(zeta_envelope_set(0.51), RangeError);
}

TEST_CASE("log-derivative bound reports") {
  // (0.75, 1e6) sits below the lower range edge 0.798; the report is still produced.
  const auto h = Height::from_t(1e6);
  const RangeOptions lenient{0.01, false};
  CHECK_THROWS_AS(theorem1_bound(0.75, h), RangeError);
  const auto r = theorem1_bound(0.75, h, lenient);
  CHECK(r.main_value == doctest::Approx(b_sigma(0.75) / 0.1875 * std::sqrt(std::log(1e6))).epsilon(1e-14));
  CHECK_FALSE(r.range_ok);
  CHECK(theorem1_bound(0.75, Height::from_t(1e30)).range_ok);
  CHECK(r.error_shape_value ==
        doctest::Approx(std::sqrt(std::log(1e6)) / (0.25 * 0.0625 * std::log(std::log(1e6)))).epsilon(1e-14));
  CHECK(theorem2_bound(0.75, h, lenient).main_value == doctest::Approx(c_sigma(0.75) / 0.1875 * std::sqrt(std::log(1e6))).epsilon(1e-14));
  // Lower boundary is inclusive.
  const auto hb = Height::from_loglog_t(4.0);
  const double edge = 0.5 + (special::solve_lambda0() + 0.01) / 4.0;
  CHECK(theorem1_bound(edge, hb).range_ok);
  CHECK_THROWS_AS(theorem1_bound(std::nextafter(edge, 0.0), hb), RangeError);
  const auto off = theorem1_bound(std::nextafter(edge, 0.0), hb, {0.01, false});
  CHECK_FALSE(off.range_ok);
  CHECK(off.range_message.find("lambda0") != std::string::npos);
  CHECK_FALSE(theorem12_range_violation(0.999, hb, 0.01).empty());
  // Huge heights stay in log space.
  const auto huge = Height::from_loglog_t(500.0);
  const auto big = theorem2_bound(0.75, huge);
  CHECK(big.log_abs_main == doctest::Approx(std::log(c_sigma(0.75) / 0.1875) + 0.5 * 500.0).epsilon(1e-14));
  CHECK(big.main_value == doctest::Approx(std::exp(big.log_abs_main)).epsilon(1e-13));
  CHECK(std::isinf(huge.t()));
}

TEST_CASE("ell factors") {
  const auto h = Height::from_t(1e8);
  const double lt = std::log(1e8), ll = std::log(lt);
  CHECK(ell(0, 0.7, h) == doctest::Approx(std::pow(lt, 0.6)).epsilon(1e-14));
  CHECK(ell(1, 0.7, h) == doctest::Approx(std::pow(lt, 0.6) / ll).epsilon(1e-14));
  CHECK(ell(-1, 0.7, h) == doctest::Approx(std::pow(lt, 0.6) * ll).epsilon(1e-14));
  CHECK(Height::from_loglog_t(ll).t() == doctest::Approx(1e8).epsilon(1e-13));
}
