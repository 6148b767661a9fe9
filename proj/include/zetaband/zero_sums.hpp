#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "zetaband/explicit_formula.hpp"

namespace zetaband::zero_sums {

// Ascending positive ordinates gamma of zeros 1/2 + i gamma, complete up to height.
struct ZeroOrdinates {
  std::vector<double> gammas;
  double height = 0.0;  // last ordinate
  std::size_t count = 0;
};

// One decimal ordinate per line; blank lines and lines starting with '#' are skipped.
// Throws ParseError (with 1-based line number) on an unparsable or non-increasing
// line, on an empty table, on a table that does not begin at the first zero, or
// when count strays more than 2 from the smooth zero count at the table height.
ZeroOrdinates parse_zeros(std::istream& in);
ZeroOrdinates parse_zeros_string(const std::string& text);

// Throws IoError when the file cannot be opened.
ZeroOrdinates load_zeros(const std::string& path);

// Shortest round-trip decimal per line; parse_zeros reads it back bit-exactly.
void serialize_zeros(const ZeroOrdinates& zeros, std::ostream& out);

// The first 100 ordinates, embedded.
const ZeroOrdinates& first_hundred_zeros();

struct SumOptions {
  double window = 100.0;  // t + window must not exceed the table height
  double s_bound = 2.0;   // assumed bound on |S(T)| for T beyond the table
};

// Sums beyond the table height H use the smooth density theta'(x)/pi. For g
// decreasing on [H, inf), |sum_{gamma > H} g(gamma) - int_H^inf g theta'/pi| <= 2 s_bound g(H).
struct ZeroSum {
  double value = 0.0;
  double tail_bound = 0.0;
  double smooth_tail = 0.0;  // the part of value that is a smooth-density estimate
  std::size_t terms = 0;
};

// Sum over all zeros (both signs of gamma) of f_a(gamma - t), a = sigma - 1/2.
// Throws RangeError when t + window exceeds the table height.
ZeroSum sum_f_over_zeros(double sigma, double t, const ZeroOrdinates& zeros, const SumOptions& opts = {});

struct RepresentationCheck {
  double residual = 0.0;  // lhs - (zero_sum - gamma_term + pole_term)
  double tail_bound = 0.0;
  double lhs = 0.0;        // Re (zeta'/zeta)'(s)
  double zero_sum = 0.0;   // sum_gamma f_a(gamma - t)
  double gamma_term = 0.0; // Re psi'(s/2 + 1) / 4
  double pole_term = 0.0;  // Re 1 / (s - 1)^2
};

RepresentationCheck representation_residual(double sigma, double t, const ZeroOrdinates& zeros,
                                            const SumOptions& opts = {});

// Sum over all zeros of (M_t h)(gamma), truncated at the table height. The
// tail bound uses |M_t h(x)| <= 2K / (x - t)^2 for x > t.
ZeroSum gw_lhs(const explicit_formula::TestFunctionBundle& h, double t, const ZeroOrdinates& zeros,
               const SumOptions& opts = {});

// corr = sum_gamma f_a(gamma) + Re psi'(s/2 + 1)/4 - Re 1/(s - 1)^2, so that
// Re (zeta'/zeta)'(s) = sum_gamma (M_t f_a)(gamma) - corr.
struct Correction {
  double value = 0.0;
  double half_width = 0.0;   // the true value lies in [value - half_width, value + half_width]
  bool from_table = false;   // false: embedded first 100 zeros plus density tail
};

Correction zero_sum_correction(double sigma, double t, const ZeroOrdinates* zeros, const SumOptions& opts = {});

}  // namespace zetaband::zero_sums
