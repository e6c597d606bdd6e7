#include "homcount/log_value.hpp"

#include <gmp.h>

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace homcount {

LogValue LogValue::from_ln(double ln) {
  if (std::isnan(ln) || ln == std::numeric_limits<double>::infinity()) {
    throw std::domain_error("LogValue: non-finite logarithm");
  }
  if (ln == -std::numeric_limits<double>::infinity()) return zero();
  return LogValue(ln);
}

LogValue LogValue::from_log10(double log10) { return from_ln(log10 * std::numbers::ln10); }

LogValue LogValue::of(double x) {
  if (!(x >= 0.0) || std::isinf(x)) throw std::domain_error("LogValue::of: expected finite x >= 0");
  if (x == 0.0) return zero();
  return LogValue(std::log(x));
}

double LogValue::ln() const { return zero_ ? -std::numeric_limits<double>::infinity() : ln_; }

double LogValue::log10() const {
  return zero_ ? -std::numeric_limits<double>::infinity() : ln_ / std::numbers::ln10;
}

double LogValue::to_double() const { return zero_ ? 0.0 : std::exp(ln_); }

LogValue operator*(LogValue a, LogValue b) {
  if (a.zero_ || b.zero_) return LogValue::zero();
  return LogValue(a.ln_ + b.ln_);
}

LogValue operator/(LogValue a, LogValue b) {
  if (b.zero_) throw std::domain_error("LogValue: division by zero");
  if (a.zero_) return a;
  return LogValue(a.ln_ - b.ln_);
}

LogValue operator+(LogValue a, LogValue b) {
  if (a.zero_) return b;
  if (b.zero_) return a;
  const double hi = std::max(a.ln_, b.ln_);
  const double lo = std::min(a.ln_, b.ln_);
  return LogValue(hi + std::log1p(std::exp(lo - hi)));
}

LogValue LogValue::pow(double e) const {
  if (zero_) {
    if (e <= 0.0) throw std::domain_error("LogValue: ZERO raised to a non-positive power");
    return zero();
  }
  return LogValue(ln_ * e);
}

std::partial_ordering operator<=>(LogValue a, LogValue b) {
  if (a.zero_ || b.zero_) {
    return static_cast<int>(!a.zero_) <=> static_cast<int>(!b.zero_);
  }
  return a.ln_ <=> b.ln_;
}

LogValue LogValue::ceiled() const {
  if (zero_) return *this;
  if (ln_ <= 0.0) return one();
  constexpr double kExactLimit = 9007199254740992.0;  // 2^53
  const double x = std::exp(ln_);
  if (x >= kExactLimit) return *this;
  return of(std::ceil(x * (1.0 - 1e-12)));
}

std::string LogValue::to_log10_string() const { return zero_ ? "-inf" : format_log10(log10()); }

LogValue log_diff_clamped(LogValue a, LogValue b) {
  if (b.is_zero()) return a;
  if (!(a > b)) return LogValue::zero();
  const double d = b.ln() - a.ln();
  return LogValue::from_ln(a.ln() + std::log1p(-std::exp(d)));
}

LogValue lognat_of(const BigNat& x) {
  if (x.is_zero()) return LogValue::zero();
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, x.mpz().get_mpz_t());
  return LogValue::from_ln(std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2);
}

LogValue pow_log(LogValue base, Rational e) { return base.pow(e.to_double()); }

bool ceil_le(LogValue lb, const BigNat& exact, double tol) {
  if (lb.is_zero()) return true;
  if (exact.is_zero()) return false;
  // lb in (0,1] ceils to 1, which any positive integer dominates.
  if (lb.log10() <= 0.0) return true;
  return lb.log10() <= lognat_of(exact).log10() + tol;
}

std::string format_log10(double v) {
  if (v == -std::numeric_limits<double>::infinity()) return "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace homcount
