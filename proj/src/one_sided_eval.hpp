#pragma once

#include <span>
#include <vector>

#include "homcount/bignat.hpp"
#include "homcount/bitset.hpp"
#include "homcount/kernels.hpp"

namespace homcount::detail {

using u128 = unsigned __int128;

struct Overflow {};

inline u128 checked_mul(u128 a, u128 b) {
  u128 r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

inline u128 checked_add(u128 a, u128 b) {
  u128 r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}

inline BigNat checked_mul(const BigNat& a, const BigNat& b) { return a * b; }
inline BigNat checked_add(const BigNat& a, const BigNat& b) { return a + b; }

inline BigNat to_bignat(u128 v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  const auto lo = static_cast<std::uint64_t>(v);
  return BigNat::pow(2, 64) * BigNat(hi) + BigNat(lo);
}
inline BigNat to_bignat(const BigNat& v) { return v; }

inline bool is_zero(u128 v) { return v == 0; }
inline bool is_zero(const BigNat& v) { return v.is_zero(); }

/// Walks an elimination plan. Holds the running intersections for the
/// opposite side; each instance is single-threaded.
template <typename Num>
class OneSidedEvaluator {
 public:
  OneSidedEvaluator(const OneSidedPattern& pattern, std::span<const Bitset> rows)
      : pattern_(pattern),
        rows_(rows),
        inter_(pattern.opposite_count),
        active_(pattern.opposite_count, false),
        saved_(pattern.adj.size()),
        saved_active_(pattern.adj.size()) {
    for (std::size_t a = 0; a < pattern.adj.size(); ++a) {
      saved_[a].resize(pattern.adj[a].size());
      saved_active_[a].resize(pattern.adj[a].size());
    }
  }

  Num sum(const EliminationNode& node) {
    Num total(0);
    for (std::size_t x = 0; x < rows_.size(); ++x) {
      Num term = at(node, x);
      if (!is_zero(term)) total = checked_add(total, term);
    }
    return total;
  }

  /// Contribution of node.vertex fixed to x.
  Num at(const EliminationNode& node, std::size_t x) {
    const auto a = node.vertex;
    const auto& nbrs = pattern_.adj[a];
    bool empty = false;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const auto b = nbrs[i];
      saved_active_[a][i] = active_[b];
      if (active_[b]) {
        saved_[a][i] = inter_[b];
        inter_[b] &= rows_[x];
      } else {
        inter_[b] = rows_[x];
        active_[b] = true;
      }
      if (inter_[b].none()) empty = true;
    }
    Num result(0);
    if (!empty) {
      Num prod(1);
      for (const auto b : node.completes) prod = checked_mul(prod, Num(inter_[b].count()));
      for (const auto& child : node.children) {
        if (is_zero(prod)) break;
        prod = checked_mul(prod, sum(child));
      }
      result = prod;
    }
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const auto b = nbrs[i];
      if (saved_active_[a][i]) inter_[b] = saved_[a][i];
      active_[b] = saved_active_[a][i];
    }
    return result;
  }

 private:
  const OneSidedPattern& pattern_;
  std::span<const Bitset> rows_;
  std::vector<Bitset> inter_;
  std::vector<bool> active_;
  std::vector<std::vector<Bitset>> saved_;
  std::vector<std::vector<bool>> saved_active_;
};

struct BruteOrder {
  std::vector<std::size_t> order;
  /// earlier[i] = positions j < i in `order` adjacent to order[i].
  std::vector<std::vector<std::size_t>> earlier;
};

BruteOrder brute_order(const SimpleGraph& f);

/// Counts completions of the partial map images[0..pos).
std::uint64_t brute_extend(const BruteOrder& bo, const SimpleGraph& g, std::vector<std::size_t>& images,
                           std::vector<Bitset>& scratch, std::size_t pos);

void subset_descend(std::span<const Bitset> rows, std::size_t from, std::size_t k, std::size_t k_max,
                    std::vector<Bitset>& buf, SubsetHistogram& hist);

SubsetHistogram subset_intersection_histogram_omp(std::span<const Bitset> rows, std::size_t k_max);
std::vector<std::uint64_t> pair_intersection_histogram_omp(std::span<const Bitset> rows);
std::vector<std::uint64_t> eta_weight_histogram_omp(std::span<const Bitset> rows);
BigNat one_sided_sum_omp(const OneSidedPattern& pattern, const EliminationNode& root, std::span<const Bitset> rows);
std::uint64_t brute_force_count_omp(const SimpleGraph& f, const SimpleGraph& g);

}  // namespace homcount::detail
