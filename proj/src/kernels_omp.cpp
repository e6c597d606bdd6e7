#include <omp.h>

#include "homcount/kernels.hpp"
#include "one_sided_eval.hpp"

namespace homcount::detail {

namespace {

void add_into(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
  for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
}

std::size_t universe_of(std::span<const Bitset> rows) { return rows.empty() ? 0 : rows.front().size(); }

}  // namespace

SubsetHistogram subset_intersection_histogram_omp(std::span<const Bitset> rows, std::size_t k_max) {
  const auto universe = universe_of(rows);
  SubsetHistogram hist(k_max + 1, std::vector<std::uint64_t>(universe + 1, 0));
  if (k_max == 0) return hist;
  const auto n = static_cast<std::int64_t>(rows.size());
#pragma omp parallel
  {
    SubsetHistogram local(k_max + 1, std::vector<std::uint64_t>(universe + 1, 0));
    std::vector<Bitset> buf(k_max + 1, Bitset(universe));
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      buf[1] = rows[static_cast<std::size_t>(i)];
      const auto c = buf[1].count();
      if (c == 0) continue;
      ++local[1][c];
      if (k_max > 1) subset_descend(rows, static_cast<std::size_t>(i) + 1, 2, k_max, buf, local);
    }
#pragma omp critical
    for (std::size_t k = 0; k <= k_max; ++k) add_into(hist[k], local[k]);
  }
  return hist;
}

std::vector<std::uint64_t> pair_intersection_histogram_omp(std::span<const Bitset> rows) {
  std::vector<std::uint64_t> hist(universe_of(rows) + 1, 0);
  const auto n = static_cast<std::int64_t>(rows.size());
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(hist.size(), 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < rows.size(); ++v) {
        ++local[intersection_count(rows[static_cast<std::size_t>(u)], rows[v])];
      }
    }
#pragma omp critical
    add_into(hist, local);
  }
  return hist;
}

std::vector<std::uint64_t> eta_weight_histogram_omp(std::span<const Bitset> rows) {
  std::vector<std::uint64_t> hist(universe_of(rows) + 1, 0);
  std::vector<std::size_t> degree(rows.size());
  for (std::size_t w = 0; w < rows.size(); ++w) degree[w] = rows[w].count();
  const auto n = static_cast<std::int64_t>(rows.size());
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(hist.size(), 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t v = 0; v < n; ++v) {
      for (std::size_t w = 0; w < rows.size(); ++w) {
        const auto c = intersection_count(rows[static_cast<std::size_t>(v)], rows[w]);
        if (c > 0) local[c] += degree[w] - c;
      }
    }
#pragma omp critical
    add_into(hist, local);
  }
  return hist;
}

namespace {

template <typename Num>
BigNat one_sided_parallel(const OneSidedPattern& pattern, const EliminationNode& root, std::span<const Bitset> rows,
                          bool& overflowed) {
  BigNat total(0);
  const auto n = static_cast<std::int64_t>(rows.size());
#pragma omp parallel
  {
    OneSidedEvaluator<Num> eval(pattern, rows);
    Num local(0);
    bool local_overflow = false;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t x = 0; x < n; ++x) {
      if (local_overflow) continue;
      try {
        local = checked_add(local, eval.at(root, static_cast<std::size_t>(x)));
      } catch (const Overflow&) {
        local_overflow = true;
      }
    }
#pragma omp critical
    {
      if (local_overflow) overflowed = true;
      total += to_bignat(local);
    }
  }
  return total;
}

}  // namespace

BigNat one_sided_sum_omp(const OneSidedPattern& pattern, const EliminationNode& root, std::span<const Bitset> rows) {
  bool overflowed = false;
  auto total = one_sided_parallel<u128>(pattern, root, rows, overflowed);
  if (!overflowed) return total;
  return one_sided_parallel<BigNat>(pattern, root, rows, overflowed);
}

std::uint64_t brute_force_count_omp(const SimpleGraph& f, const SimpleGraph& g) {
  const auto bo = brute_order(f);
  if (bo.order.empty()) return 1;
  std::uint64_t total = 0;
  const auto n = static_cast<std::int64_t>(g.vertex_count());
#pragma omp parallel reduction(+ : total)
  {
    std::vector<std::size_t> images(f.vertex_count(), 0);
    std::vector<Bitset> scratch(f.vertex_count(), Bitset(g.vertex_count()));
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t x = 0; x < n; ++x) {
      images[0] = static_cast<std::size_t>(x);
      total += brute_extend(bo, g, images, scratch, 1);
    }
  }
  return total;
}

}  // namespace homcount::detail
