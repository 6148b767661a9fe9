#include "zetaband/height.hpp"

#include <cmath>

#include "zetaband/errors.hpp"

namespace zetaband {

Height Height::from_t(double t) {
  if (!(t > 1.0) || !std::isfinite(t)) throw DomainError("height must be finite and exceed 1");
  return Height(std::log(t));
}

Height Height::from_log_t(double log_t) {
  if (!(log_t > 0.0) || !std::isfinite(log_t)) throw DomainError("log t must be finite and positive");
  return Height(log_t);
}

Height Height::from_loglog_t(double loglog_t) {
  if (!std::isfinite(loglog_t) || loglog_t > 709.0) throw DomainError("log log t out of representable range");
  return Height(std::exp(loglog_t));
}

double Height::loglog_t() const { return std::log(log_t_); }

double Height::t() const { return std::exp(log_t_); }

double log_ell(int n, double sigma, const Height& h) {
  const double ll = h.loglog_t();
  if (n != 0 && !(ll > 0.0)) throw DomainError("log log t must be positive for l_{n,sigma}");
  return (2.0 - 2.0 * sigma) * ll - static_cast<double>(n) * (n != 0 ? std::log(ll) : 0.0);
}

double ell(int n, double sigma, const Height& h) { return std::exp(log_ell(n, sigma, h)); }

}  // namespace zetaband
