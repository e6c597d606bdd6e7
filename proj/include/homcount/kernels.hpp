#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "homcount/bignat.hpp"
#include "homcount/bitset.hpp"
#include "homcount/graph.hpp"

namespace homcount {

/// Every hot loop exists twice: a plain serial reference and an OpenMP
/// version. Both must return identical results.
enum class Exec : std::uint8_t { serial, parallel };

/// hist[k][c] = number of k-subsets of `rows` (1 <= k <= k_max) whose common
/// intersection has exactly c > 0 members. Subsets with an empty running
/// intersection are pruned and never recorded. hist[0] is unused.
using SubsetHistogram = std::vector<std::vector<std::uint64_t>>;
SubsetHistogram subset_intersection_histogram(std::span<const Bitset> rows, std::size_t k_max, Exec exec);

/// hist[c] = number of ordered pairs (u, v), u = v included, with
/// |rows[u] ∩ rows[v]| = c.
std::vector<std::uint64_t> pair_intersection_histogram(std::span<const Bitset> rows, Exec exec);

/// hist[c] = sum over ordered pairs (v, w) with |rows[v] ∩ rows[w]| = c > 0
/// of |rows[w]| - c.
std::vector<std::uint64_t> eta_weight_histogram(std::span<const Bitset> rows, Exec exec);

/// Variable-elimination plan for summing over maps of one side of a
/// connected bipartite pattern. Each node fixes one pattern vertex; the
/// unfixed rest splits into groups sharing no opposite-side neighbour, and
/// each group becomes an independent child.
struct EliminationNode {
  std::size_t vertex = 0;
  /// Opposite-side vertices whose neighbours are all fixed once `vertex` is.
  std::vector<std::size_t> completes;
  std::vector<EliminationNode> children;
};

struct OneSidedPattern {
  /// adj[a] = opposite-side neighbours of enumerated vertex a.
  std::vector<std::vector<std::size_t>> adj;
  std::size_t opposite_count = 0;
};

/// Plans the enumerated side of a connected pattern (every vertex has at
/// least one neighbour).
EliminationNode plan_elimination(const OneSidedPattern& pattern);

/// Predicted assignment steps when each fixed vertex ranges over `images`
/// choices: steps(node) = images * (1 + sum steps(child)). Saturates at 1e300.
double elimination_cost(const EliminationNode& root, std::size_t images);

/// sum over maps phi of the enumerated side into rows' index set of
/// prod_b |∩_{a ~ b} rows[phi(a)]|.
BigNat one_sided_sum(const OneSidedPattern& pattern, const EliminationNode& root, std::span<const Bitset> rows,
                     Exec exec);

/// Number of homomorphisms f -> g by backtracking over all vertex maps.
std::uint64_t brute_force_count(const SimpleGraph& f, const SimpleGraph& g, Exec exec);

}  // namespace homcount
