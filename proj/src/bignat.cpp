#include "homcount/bignat.hpp"

#include <stdexcept>

namespace homcount {

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "GMP ui conversions assume LP64");

BigNat::BigNat(std::uint64_t v) : value_(static_cast<unsigned long>(v)) {}

BigNat::BigNat(const mpz_class& v) : value_(v) {
  if (sgn(value_) < 0) throw std::domain_error("BigNat cannot hold a negative value");
}

BigNat BigNat::parse(std::string_view decimal) {
  if (decimal.empty() || decimal.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("not a natural number: '" + std::string(decimal) + "'");
  }
  return BigNat(mpz_class(std::string(decimal), 10));
}

BigNat BigNat::pow(const BigNat& base, std::uint64_t exponent) {
  BigNat out;
  mpz_pow_ui(out.value_.get_mpz_t(), base.value_.get_mpz_t(), exponent);
  return out;
}

BigNat BigNat::pow(std::uint64_t base, std::uint64_t exponent) {
  BigNat out;
  mpz_ui_pow_ui(out.value_.get_mpz_t(), base, exponent);
  return out;
}

std::optional<std::uint64_t> BigNat::to_u64() const {
  if (!value_.fits_ulong_p()) return std::nullopt;
  return value_.get_ui();
}

std::size_t BigNat::digits() const { return is_zero() ? 1 : value_.get_str().size(); }

BigNat& BigNat::operator-=(const BigNat& o) {
  if (cmp(value_, o.value_) < 0) throw std::domain_error("BigNat subtraction would go negative");
  value_ -= o.value_;
  return *this;
}

BigNat& BigNat::add_product(const BigNat& c, const BigNat& o) {
  mpz_addmul(value_.get_mpz_t(), c.value_.get_mpz_t(), o.value_.get_mpz_t());
  return *this;
}

}  // namespace homcount
