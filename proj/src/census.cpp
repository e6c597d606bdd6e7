#include "homcount/census.hpp"

#include <algorithm>
#include <stdexcept>

#include "homcount/errors.hpp"

namespace homcount {

const BigNat& BicliqueCensus::at(std::size_t k, std::size_t l) const {
  if (k > k_max || l > l_max) {
    throw std::out_of_range("census covers k <= " + std::to_string(k_max) + ", l <= " + std::to_string(l_max));
  }
  return table[k][l];
}

namespace {

double binomial_double(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

double subsets_up_to(std::size_t n, std::size_t k_max) {
  double total = 0.0;
  for (std::size_t k = 1; k <= std::min(n, k_max); ++k) total += binomial_double(n, k);
  return total;
}

/// Cost of enumerating the subsets of `rows` (one side) up to size k_max.
/// Nodes with a nonempty running intersection all lie inside some
/// neighbourhood on the far side, which bounds the search tree.
double side_cost(std::span<const Bitset> rows, std::span<const Bitset> far_rows, std::size_t k_max) {
  double nonempty = 0.0;
  for (const auto& row : far_rows) nonempty += subsets_up_to(row.count(), k_max);
  const double nodes = std::min(subsets_up_to(rows.size(), k_max), nonempty);
  const double words = rows.empty() ? 1.0 : static_cast<double>(std::max<std::size_t>(1, rows.front().word_count()));
  return std::max(nodes, 1.0) * static_cast<double>(std::max<std::size_t>(rows.size(), 1)) * words;
}

std::vector<Bitset> left_rows(const BipartiteGraph& g) {
  std::vector<Bitset> rows;
  rows.reserve(g.n1());
  for (std::size_t u = 0; u < g.n1(); ++u) rows.push_back(g.left_neighbors(u));
  return rows;
}

std::vector<Bitset> right_rows(const BipartiteGraph& g) {
  std::vector<Bitset> rows;
  rows.reserve(g.n2());
  for (std::size_t v = 0; v < g.n2(); ++v) rows.push_back(g.right_neighbors(v));
  return rows;
}

std::vector<Bitset> simple_rows(const SimpleGraph& g) {
  std::vector<Bitset> rows;
  rows.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) rows.push_back(g.neighbors(v));
  return rows;
}

BigNat weighted_power_sum(const std::vector<std::uint64_t>& hist, std::size_t exponent) {
  BigNat total(0);
  for (std::size_t c = 1; c < hist.size(); ++c) {
    if (hist[c] != 0) total.add_product(BigNat(hist[c]), BigNat::pow(c, exponent));
  }
  return total;
}

void add_hist(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
  if (into.size() < from.size()) into.resize(from.size(), 0);
  for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
}

}  // namespace

double census_cost(const BipartiteGraph& g, std::size_t k_max, std::size_t l_max) {
  const auto left = left_rows(g);
  const auto right = right_rows(g);
  return std::min(side_cost(left, right, k_max), side_cost(right, left, l_max));
}

bool census_feasible(const BipartiteGraph& g, std::size_t k_max, std::size_t l_max, double budget) {
  return census_cost(g, k_max, l_max) <= budget;
}

BicliqueCensus biclique_census(const BipartiteGraph& g, std::size_t k_max, std::size_t l_max,
                               const CensusOptions& options) {
  const auto left = left_rows(g);
  const auto right = right_rows(g);
  const double cost_left = side_cost(left, right, k_max);
  const double cost_right = side_cost(right, left, l_max);
  const double cost = std::min(cost_left, cost_right);
  if (cost > options.budget) throw BudgetExceeded("biclique census", cost, options.budget);

  BicliqueCensus census;
  census.k_max = k_max;
  census.l_max = l_max;
  census.table.assign(k_max + 1, std::vector<BigNat>(l_max + 1, BigNat(0)));

  const bool use_left = cost_left <= cost_right;
  const auto hist = subset_intersection_histogram(use_left ? left : right, use_left ? k_max : l_max, options.exec);
  const std::size_t own_max = use_left ? k_max : l_max;
  const std::size_t far_max = use_left ? l_max : k_max;
  for (std::size_t s = 1; s <= own_max; ++s) {
    for (std::size_t c = 1; c < hist[s].size(); ++c) {
      if (hist[s][c] == 0) continue;
      const BigNat count(hist[s][c]);
      for (std::size_t t = 1; t <= std::min(c, far_max); ++t) {
        auto& cell = use_left ? census.table[s][t] : census.table[t][s];
        cell.add_product(count, binomial(c, t));
      }
    }
  }
  return census;
}

BigNat exact_kpq_count(std::size_t p, std::size_t q, const BicliqueCensus& census, StirlingTable& stirling) {
  const auto need = std::max(p, q);
  if (census.k_max < need || census.l_max < need) {
    throw std::invalid_argument("census must cover k, l <= " + std::to_string(need));
  }
  BigNat total(0);
  for (std::size_t k = 1; k <= p; ++k) {
    const auto ck = factorial(k) * stirling.get(p, k);
    for (std::size_t l = 1; l <= q; ++l) {
      const auto pair = census.table[k][l] + census.table[l][k];
      if (pair.is_zero()) continue;
      total.add_product(ck * factorial(l) * stirling.get(q, l), pair);
    }
  }
  return total;
}

EtaValue eta(const BipartiteGraph& g, std::size_t p, std::size_t q, Exec exec) {
  if (p < 2 || q < 2) throw std::invalid_argument("eta requires p, q >= 2");
  // Counting w first: a pair (v, w) with c = |N(v) ∩ N(w)| > 0 is reached
  // from every u in N(w) \ N(v), i.e. d(w) - c times.
  auto hist = eta_weight_histogram(left_rows(g), exec);
  add_hist(hist, eta_weight_histogram(right_rows(g), exec));
  return {p, q, weighted_power_sum(hist, std::max(p, q) - 1)};
}

BigNat hom_k2q_neighborhood(const BipartiteGraph& g, std::size_t q, Exec exec) {
  if (q < 1) throw std::invalid_argument("hom_k2q_neighborhood requires q >= 1");
  auto hist = pair_intersection_histogram(left_rows(g), exec);
  add_hist(hist, pair_intersection_histogram(right_rows(g), exec));
  return weighted_power_sum(hist, q);
}

BigNat hom_k2q_neighborhood(const SimpleGraph& g, std::size_t q, Exec exec) {
  if (q < 1) throw std::invalid_argument("hom_k2q_neighborhood requires q >= 1");
  return weighted_power_sum(pair_intersection_histogram(simple_rows(g), exec), q);
}

bool is_c4_free(const BipartiteGraph& g) {
  for (std::size_t u = 0; u < g.n1(); ++u) {
    for (std::size_t v = u + 1; v < g.n1(); ++v) {
      if (intersection_count(g.left_neighbors(u), g.left_neighbors(v)) >= 2) return false;
    }
  }
  return true;
}

bool is_c4_free(const SimpleGraph& g) {
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
      if (intersection_count(g.neighbors(u), g.neighbors(v)) >= 2) return false;
    }
  }
  return true;
}

namespace {

/// Largest m with 4m - n <= 0 or (4m - n)^2 <= rhs.
std::uint64_t largest_m(std::uint64_t n, __int128 rhs) {
  std::uint64_t lo = 0;
  std::uint64_t hi = n * n + 1;
  auto ok = [&](std::uint64_t m) {
    const __int128 t = 4 * static_cast<__int128>(m) - static_cast<__int128>(n);
    return t <= 0 || t * t <= rhs;
  };
  while (lo < hi) {
    const auto mid = lo + (hi - lo + 1) / 2;
    if (ok(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace

std::uint64_t max_edges_c4free(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("max_edges_c4free requires n >= 1");
  const auto nn = static_cast<__int128>(n);
  return largest_m(n, nn * nn * (4 * nn - 3));
}

std::uint64_t max_edges_c4free_bipartite(std::uint64_t n1, std::uint64_t n2) {
  const auto n = n1 + n2;
  if (n == 0) throw std::invalid_argument("max_edges_c4free_bipartite requires n1 + n2 >= 1");
  const auto nn = static_cast<__int128>(n);
  // n^2 (4n - 3 - 2 n1 n2 / n) = 4n^3 - 3n^2 - 2 n n1 n2
  return largest_m(n, 4 * nn * nn * nn - 3 * nn * nn - 2 * nn * static_cast<__int128>(n1) * n2);
}

}  // namespace homcount
