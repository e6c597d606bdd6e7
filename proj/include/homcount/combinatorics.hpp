#pragma once

#include <cstddef>
#include <cstdint>
#include <shared_mutex>
#include <vector>

#include "homcount/bignat.hpp"

namespace homcount {

/// C(n, k); zero when k > n.
BigNat binomial(std::uint64_t n, std::uint64_t k);
BigNat factorial(std::uint64_t n);
/// m (m-1) ... (m-k+1); zero when k > m.
BigNat falling_factorial(std::uint64_t m, std::uint64_t k);

/// Memoized Stirling numbers of the second kind, filled row by row with
/// S(n,k) = k S(n-1,k) + S(n-1,k-1). Reads take a shared lock; growth is
/// single-writer.
class StirlingTable {
 public:
  explicit StirlingTable(std::size_t capacity = 64);

  /// S(n, k), zero for k outside 1..n (and S(0,0) = 1).
  BigNat get(std::size_t n, std::size_t k);
  std::size_t capacity() const;

 private:
  void grow_to(std::size_t n);

  mutable std::shared_mutex mutex_;
  std::vector<std::vector<BigNat>> rows_;
};

/// Process-wide table used by the free functions below.
StirlingTable& stirling_table();

BigNat stirling2(std::size_t n, std::size_t k);

/// (1/k!) sum_j (-1)^(k-j) C(k,j) j^n. Requires 1 <= k <= n, else throws
/// std::invalid_argument.
BigNat stirling2_closed_form(std::size_t n, std::size_t k);

}  // namespace homcount
