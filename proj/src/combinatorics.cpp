#include "homcount/combinatorics.hpp"

#include <gmp.h>

#include <mutex>
#include <stdexcept>

namespace homcount {

BigNat binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return BigNat(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return BigNat(out);
}

BigNat factorial(std::uint64_t n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return BigNat(out);
}

BigNat falling_factorial(std::uint64_t m, std::uint64_t k) {
  if (k > m) return BigNat(0);
  BigNat out(1);
  for (std::uint64_t i = 0; i < k; ++i) out *= BigNat(m - i);
  return out;
}

StirlingTable::StirlingTable(std::size_t capacity) { grow_to(capacity); }

std::size_t StirlingTable::capacity() const {
  std::shared_lock lock(mutex_);
  return rows_.size() - 1;
}

void StirlingTable::grow_to(std::size_t n) {
  if (rows_.empty()) rows_.push_back({BigNat(1)});
  while (rows_.size() <= n) {
    const auto r = rows_.size();
    const auto& prev = rows_.back();
    std::vector<BigNat> row(r + 1);
    for (std::size_t k = 1; k <= r; ++k) {
      if (k < prev.size()) row[k] = BigNat(k) * prev[k];
      row[k] += prev[k - 1];
    }
    rows_.push_back(std::move(row));
  }
}

BigNat StirlingTable::get(std::size_t n, std::size_t k) {
  if (k > n) return BigNat(0);
  {
    std::shared_lock lock(mutex_);
    if (n < rows_.size()) return rows_[n][k];
  }
  std::unique_lock lock(mutex_);
  grow_to(n);
  return rows_[n][k];
}

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

BigNat stirling2(std::size_t n, std::size_t k) { return stirling_table().get(n, k); }

BigNat stirling2_closed_form(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw std::invalid_argument("stirling2_closed_form requires 1 <= k <= n");
  mpz_class sum = 0;
  for (std::size_t j = 0; j <= k; ++j) {
    mpz_class term = binomial(k, j).mpz() * BigNat::pow(j, n).mpz();
    if ((k - j) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  mpz_class quotient;
  mpz_divexact(quotient.get_mpz_t(), sum.get_mpz_t(), factorial(k).mpz().get_mpz_t());
  return BigNat(quotient);
}

}  // namespace homcount
