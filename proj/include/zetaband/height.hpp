#pragma once

#include <string>

namespace zetaband {

// A height t > e held as log t, so that t = exp(exp(u)) never overflows.
class Height {
 public:
  static Height from_t(double t);
  static Height from_log_t(double log_t);
  static Height from_loglog_t(double loglog_t);

  double log_t() const { return log_t_; }
  double loglog_t() const;
  // t itself; +inf once it no longer fits in a double.
  double t() const;

 private:
  explicit Height(double log_t) : log_t_(log_t) {}
  double log_t_;
};

// log of l_{n,sigma}(t) = (log t)^{2 - 2 sigma} (log log t)^{-n}.
double log_ell(int n, double sigma, const Height& h);
double ell(int n, double sigma, const Height& h);

// Main term and unscaled error-term shape of an asymptotic bound. The error
// shape carries no constant: only its t- and sigma-dependence is meaningful.
struct BoundReport {
  double sigma = 0.0;
  double log_t = 0.0;
  double main_coefficient = 0.0;
  double main_value = 0.0;       // signed; may be +-inf when only the log is representable
  double log_abs_main = 0.0;     // log |main_value|
  double error_shape_value = 0.0;
  double log_error_shape = 0.0;
  bool range_ok = false;
  std::string range_message;     // empty when range_ok
};

struct RangeOptions {
  double c = 0.01;
  // When set, an out-of-range (sigma, t) throws RangeError instead of
  // returning a report with range_ok = false.
  bool enforce = true;
};

}  // namespace zetaband
