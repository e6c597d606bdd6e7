#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace homcount {

/// Arbitrary-precision nonnegative integer backed by GMP.
///
/// Subtraction that would go negative throws std::domain_error rather than
/// wrapping.
class BigNat {
 public:
  BigNat() = default;
  BigNat(std::uint64_t v);  // NOLINT(google-explicit-constructor)
  explicit BigNat(const mpz_class& v);

  static BigNat parse(std::string_view decimal);
  static BigNat pow(const BigNat& base, std::uint64_t exponent);
  static BigNat pow(std::uint64_t base, std::uint64_t exponent);

  std::string to_string() const { return value_.get_str(); }
  bool is_zero() const { return sgn(value_) == 0; }
  std::optional<std::uint64_t> to_u64() const;
  /// Number of decimal digits (1 for zero).
  std::size_t digits() const;
  const mpz_class& mpz() const { return value_; }

  BigNat& operator+=(const BigNat& o) {
    value_ += o.value_;
    return *this;
  }
  BigNat& operator*=(const BigNat& o) {
    value_ *= o.value_;
    return *this;
  }
  BigNat& operator-=(const BigNat& o);
  /// Adds c * o, the accumulate step of every weighted sum in this library.
  BigNat& add_product(const BigNat& c, const BigNat& o);

  friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
  friend BigNat operator*(BigNat a, const BigNat& b) { return a *= b; }
  friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }

  friend bool operator==(const BigNat& a, const BigNat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class value_;
};

}  // namespace homcount
