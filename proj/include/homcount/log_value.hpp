#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "homcount/bignat.hpp"
#include "homcount/rational.hpp"

namespace homcount {

/// Nonnegative extended real kept as its natural logarithm, with a
/// distinguished ZERO. Products are sums of logs; ZERO absorbs.
class LogValue {
 public:
  /// ZERO.
  constexpr LogValue() = default;

  static constexpr LogValue zero() { return LogValue(); }
  static LogValue one() { return from_ln(0.0); }
  static LogValue from_ln(double ln);
  static LogValue from_log10(double log10);
  /// Throws std::domain_error for negative or non-finite x.
  static LogValue of(double x);

  bool is_zero() const { return zero_; }
  /// -inf for ZERO.
  double ln() const;
  double log10() const;
  /// exp(ln); overflows to +inf for huge values.
  double to_double() const;

  friend LogValue operator*(LogValue a, LogValue b);
  /// Throws std::domain_error when b is ZERO.
  friend LogValue operator/(LogValue a, LogValue b);
  /// Log-sum-exp.
  friend LogValue operator+(LogValue a, LogValue b);
  LogValue& operator*=(LogValue b) { return *this = *this * b; }
  LogValue& operator+=(LogValue b) { return *this = *this + b; }

  /// x^e for real e; ZERO^e is ZERO for e > 0, and rejected for e <= 0.
  LogValue pow(double e) const;

  friend bool operator==(LogValue a, LogValue b) { return a.zero_ == b.zero_ && (a.zero_ || a.ln_ == b.ln_); }
  friend std::partial_ordering operator<=>(LogValue a, LogValue b);

  /// Value of ceil(x) under the reporting convention: ZERO stays ZERO,
  /// anything in (0,1] becomes 1, values below 2^53 are rounded up to the
  /// next integer after absorbing a 1e-12 relative error, larger ones are
  /// returned unchanged.
  LogValue ceiled() const;

  /// Decimal log10 text, "-inf" for ZERO.
  std::string to_log10_string() const;

 private:
  constexpr explicit LogValue(double ln) : ln_(ln), zero_(false) {}
  double ln_ = 0.0;
  bool zero_ = true;
};

/// max(a - b, 0) in the log domain.
LogValue log_diff_clamped(LogValue a, LogValue b);

LogValue lognat_of(const BigNat& x);
/// Throws std::domain_error for ZERO base with e <= 0.
LogValue pow_log(LogValue base, Rational e);

/// Compares a real-valued lower bound against an exact count under the
/// ceiling convention: ceil(lb) <= exact, with slack `tol` in log10.
bool ceil_le(LogValue lb, const BigNat& exact, double tol);

/// log10 formatting shared by reports and CSVs (17 significant digits).
std::string format_log10(double v);

}  // namespace homcount
