#include "zetaband/zero_sums.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "zetaband/errors.hpp"
#include "zetaband/extremal.hpp"
#include "zetaband/quadrature.hpp"

namespace zetaband::zero_sums {

namespace {

constexpr double kFirstZero = 14.134725141734693790;

constexpr double kFirstHundred[] = {
#include "first_zeros.inc"
};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

void check_sanity(const ZeroOrdinates& z, std::size_t first_line) {
  if (z.height >= 15.0 && std::fabs(z.gammas.front() - kFirstZero) > 1e-3)
    throw ParseError("table does not begin at the first zero (14.1347...)", first_line);
  const double expected = special::smooth_zero_count(z.height);
  if (std::fabs(static_cast<double>(z.count) - expected) > 2.0)
    throw ParseError("zero count " + std::to_string(z.count) + " inconsistent with the smooth count " +
                         std::to_string(expected) + " at height " + std::to_string(z.height),
                     0);
}

double density(double x) { return special::hardy_theta_prime(x) / std::numbers::pi; }

void require_coverage(double t, const ZeroOrdinates& zeros, const SumOptions& opts) {
  if (zeros.count == 0) throw RangeError("empty zero table");
  if (t + opts.window > zeros.height)
    throw RangeError("t + window = " + std::to_string(t + opts.window) + " exceeds the table height " +
                     std::to_string(zeros.height));
}

// Smooth-density estimate of sum_{gamma > H} g(gamma), and the deviation bound for decreasing g.
void add_density_tail(const std::function<double(double)>& g, double H, double s_bound, ZeroSum& out) {
  const auto r = quad::integrate_to_infinity([&](double x) { return g(x) * density(x); }, H, 1e-10);
  out.smooth_tail = r.value;
  out.value += r.value;
  out.tail_bound += 2.0 * s_bound * std::fabs(g(H)) + r.error;
}

}  // namespace

ZeroOrdinates parse_zeros(std::istream& in) {
  ZeroOrdinates z;
  std::string line;
  std::size_t lineno = 0, first_line = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
      throw ParseError("unparsable ordinate '" + std::string(s) + "' at line " + std::to_string(lineno), lineno);
    if (!(v > 0.0)) throw ParseError("non-positive ordinate at line " + std::to_string(lineno), lineno);
    if (!z.gammas.empty() && !(v > z.gammas.back()))
      throw ParseError("ordinates not strictly increasing at line " + std::to_string(lineno), lineno);
    if (z.gammas.empty()) first_line = lineno;
    z.gammas.push_back(v);
  }
  if (in.bad()) throw IoError("read error while parsing zero table");
  if (z.gammas.empty()) throw ParseError("zero table contains no ordinates", lineno);
  z.count = z.gammas.size();
  z.height = z.gammas.back();
  check_sanity(z, first_line);
  return z;
}

ZeroOrdinates parse_zeros_string(const std::string& text) {
  std::istringstream in(text);
  return parse_zeros(in);
}

ZeroOrdinates load_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open zero table '" + path + "'");
  return parse_zeros(in);
}

void serialize_zeros(const ZeroOrdinates& zeros, std::ostream& out) {
  char buf[64];
  for (double g : zeros.gammas) {
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, g);
    out.write(buf, ptr - buf);
    out.put('\n');
  }
}

const ZeroOrdinates& first_hundred_zeros() {
  static const ZeroOrdinates z = [] {
    ZeroOrdinates r;
    r.gammas.assign(std::begin(kFirstHundred), std::end(kFirstHundred));
    r.count = r.gammas.size();
    r.height = r.gammas.back();
    return r;
  }();
  return z;
}

ZeroSum sum_f_over_zeros(double sigma, double t, const ZeroOrdinates& zeros, const SumOptions& opts) {
  const double a = sigma - 0.5;
  if (!(a > 0.0)) throw DomainError("sigma must exceed 1/2");
  require_coverage(t, zeros, opts);
  ZeroSum out;
  // Smallest terms first.
  for (auto it = zeros.gammas.rbegin(); it != zeros.gammas.rend(); ++it)
    out.value += extremal::eval_f(a, *it - t) + extremal::eval_f(a, *it + t);
  out.terms = zeros.count;
  // Decreasing beyond H since H - t exceeds sqrt(3) a.
  add_density_tail([&](double x) { return extremal::eval_f(a, x - t) + extremal::eval_f(a, x + t); }, zeros.height,
                   opts.s_bound, out);
  return out;
}

RepresentationCheck representation_residual(double sigma, double t, const ZeroOrdinates& zeros, const SumOptions& opts) {
  const auto sum = sum_f_over_zeros(sigma, t, zeros, opts);
  const Complex s(sigma, t);
  RepresentationCheck r;
  r.lhs = special::log_deriv_prime(s).real();
  r.zero_sum = sum.value;
  r.gamma_term = 0.25 * special::trigamma(0.5 * s + 1.0).real();
  const Complex sm1 = s - 1.0;
  r.pole_term = (1.0 / (sm1 * sm1)).real();
  r.residual = r.lhs - (r.zero_sum - r.gamma_term + r.pole_term);
  r.tail_bound = sum.tail_bound;
  return r;
}

ZeroSum gw_lhs(const explicit_formula::TestFunctionBundle& h, double t, const ZeroOrdinates& zeros,
               const SumOptions& opts) {
  require_coverage(t, zeros, opts);
  ZeroSum out;
  for (auto it = zeros.gammas.rbegin(); it != zeros.gammas.rend(); ++it)
    out.value += 2.0 * explicit_formula::m_t_apply(h, t, *it);
  out.terms = zeros.count;
  if (h.K == 0.0) return out;
  const double H = zeros.height;
  auto envelope = [&](double x) { return 4.0 * h.K / ((x - t) * (x - t)); };
  const auto r = quad::integrate_to_infinity([&](double x) { return envelope(x) * density(x); }, H, 1e-10);
  out.tail_bound = r.value + r.error + 2.0 * opts.s_bound * envelope(H);
  return out;
}

Correction zero_sum_correction(double sigma, double t, const ZeroOrdinates* zeros, const SumOptions& opts) {
  const double a = sigma - 0.5;
  if (!(a > 0.0)) throw DomainError("sigma must exceed 1/2");
  const ZeroOrdinates& z = zeros ? *zeros : first_hundred_zeros();
  Correction c;
  c.from_table = zeros != nullptr;
  ZeroSum sum;
  for (auto it = z.gammas.rbegin(); it != z.gammas.rend(); ++it) sum.value += 2.0 * extremal::eval_f(a, *it);
  add_density_tail([&](double x) { return 2.0 * extremal::eval_f(a, x); }, z.height, opts.s_bound, sum);
  const Complex s(sigma, t);
  const Complex sm1 = s - 1.0;
  c.value = sum.value + 0.25 * special::trigamma(0.5 * s + 1.0).real() - (1.0 / (sm1 * sm1)).real();
  c.half_width = sum.tail_bound;
  return c;
}

}  // namespace zetaband::zero_sums
