#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "homcount/bignat.hpp"
#include "homcount/census.hpp"
#include "homcount/graph.hpp"
#include "homcount/graph_io.hpp"
#include "homcount/kernels.hpp"
#include "homcount/log_value.hpp"

namespace homcount {

enum class CountMethod : std::uint8_t { brute, one_sided, census_formula, closed_form, identity };
std::string_view to_string(CountMethod m);

struct HomCountResult {
  BigNat value;
  CountMethod method = CountMethod::identity;
  double cost_estimate = 0.0;
  std::vector<std::string> flags;
};

struct CountOptions {
  double budget = kDefaultBudget;
  Exec exec = Exec::parallel;
};

/// |V(G)|^|V(F)| * max(1, |E(F)|).
double brute_force_cost(const SimpleGraph& f, const SimpleGraph& g);
/// Throws BudgetExceeded past options.budget.
BigNat brute_force_hom(const SimpleGraph& f, const SimpleGraph& g, const CountOptions& options = {});

/// Assignment steps the one-sided counter would take; +inf for
/// non-bipartite f.
double one_sided_cost(const SimpleGraph& f, const BipartiteGraph& g);
/// Component-wise: both side orientations are summed, components multiply.
/// Throws BudgetExceeded past options.budget.
BigNat one_sided_exact_hom(const BipartiteGraph& f, const BipartiteGraph& g, const CountOptions& options = {});
/// Non-bipartite f gives 0 with flag "non_bipartite_source".
HomCountResult one_sided_exact_hom(const SimpleGraph& f, const BipartiteGraph& g, const CountOptions& options = {});

/// n1^p n2^q + n1^q n2^p.
BigNat hom_kpq_complete_target(std::size_t p, std::size_t q, std::size_t n1, std::size_t n2);
/// n (2^p + 2^q - 2), or 2^(p+q+1) when n = 4.
BigNat hom_kpq_cycle(std::size_t p, std::size_t q, std::size_t n);
/// Path on `vertices` vertices: (vertices - 2)(2^p + 2^q - 2) + 2.
BigNat hom_kpq_path(std::size_t p, std::size_t q, std::size_t vertices);
/// Target is the tensor product of paths with the given vertex counts.
BigNat hom_kpq_path_product(std::size_t p, std::size_t q, std::span<const std::size_t> vertices);
/// sum_w (d(w)^p + d(w)^q) - 2(n - 1). Throws std::invalid_argument if t is
/// not a tree.
BigNat hom_kpq_tree(std::size_t p, std::size_t q, const SimpleGraph& t);
BigNat hom_kpq_tree(std::size_t p, std::size_t q, const BipartiteGraph& t);

/// sum_v d(v)^m, with 0^0 = 1.
BigNat star_count(std::size_t m, const SimpleGraph& g);
BigNat star_count(std::size_t m, const BipartiteGraph& g);

/// Dispatch: identity (empty / edgeless source), closed form, census
/// formula, one-sided, brute force.
HomCountResult count_hom(const SimpleGraph& f, const SimpleGraph& g, const CountOptions& options = {});
HomCountResult count_hom(const AnyGraph& f, const AnyGraph& g, const CountOptions& options = {});

/// hom(F, G) / |V(G)|^|V(F)|.
LogValue hom_density(const SimpleGraph& f, const SimpleGraph& g, const CountOptions& options = {});

}  // namespace homcount
