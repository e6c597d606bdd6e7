#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "homcount/bignat.hpp"
#include "homcount/combinatorics.hpp"
#include "homcount/graph.hpp"
#include "homcount/kernels.hpp"

namespace homcount {

inline constexpr double kDefaultBudget = 1e8;

/// N[k][l] = number of pairs (A ⊆ U, B ⊆ V), |A| = k, |B| = l, with every
/// A-B pair adjacent. Row and column 0 are zero.
struct BicliqueCensus {
  std::size_t k_max = 0;
  std::size_t l_max = 0;
  std::vector<std::vector<BigNat>> table;

  /// Zero beyond the covered range is not assumed: throws std::out_of_range.
  const BigNat& at(std::size_t k, std::size_t l) const;
};

struct CensusOptions {
  double budget = kDefaultBudget;
  Exec exec = Exec::parallel;
};

/// Predicted intersection steps for the cheaper enumeration side.
double census_cost(const BipartiteGraph& g, std::size_t k_max, std::size_t l_max);
bool census_feasible(const BipartiteGraph& g, std::size_t k_max, std::size_t l_max, double budget = kDefaultBudget);

/// Throws BudgetExceeded when census_cost exceeds options.budget.
BicliqueCensus biclique_census(const BipartiteGraph& g, std::size_t k_max, std::size_t l_max,
                               const CensusOptions& options = {});

/// hom(K_{p,q}, G) from the census. Requires coverage k, l <= max(p, q).
BigNat exact_kpq_count(std::size_t p, std::size_t q, const BicliqueCensus& census,
                       StirlingTable& stirling = stirling_table());

struct EtaValue {
  std::size_t p = 0;
  std::size_t q = 0;
  BigNat value;
};

/// Sum over ordered pairs (u, v), u = v allowed, {u, v} not an edge, and
/// over w ~ u with c = |N(v) ∩ N(w)| > 0, of c^(max(p,q)-1).
/// Throws std::invalid_argument unless p, q >= 2.
EtaValue eta(const BipartiteGraph& g, std::size_t p, std::size_t q, Exec exec = Exec::parallel);

/// sum over ordered (u, v) of |N(u) ∩ N(v)|^q, i.e. hom(K_{2,q}, G).
BigNat hom_k2q_neighborhood(const BipartiteGraph& g, std::size_t q, Exec exec = Exec::parallel);
BigNat hom_k2q_neighborhood(const SimpleGraph& g, std::size_t q, Exec exec = Exec::parallel);

/// No two left vertices share two right neighbours.
bool is_c4_free(const BipartiteGraph& g);
bool is_c4_free(const SimpleGraph& g);

/// floor(n (1 + sqrt(4n - 3)) / 4), evaluated in integers.
std::uint64_t max_edges_c4free(std::uint64_t n);
/// floor(n (1 + sqrt(4n - 3 - 2 n1 n2 / n)) / 4) with n = n1 + n2.
std::uint64_t max_edges_c4free_bipartite(std::uint64_t n1, std::uint64_t n2);

}  // namespace homcount
