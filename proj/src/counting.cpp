#include "homcount/counting.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "homcount/errors.hpp"

namespace homcount {

std::string_view to_string(CountMethod m) {
  switch (m) {
    case CountMethod::brute:
      return "brute";
    case CountMethod::one_sided:
      return "one_sided";
    case CountMethod::census_formula:
      return "census_formula";
    case CountMethod::closed_form:
      return "closed_form";
    case CountMethod::identity:
      return "identity";
  }
  return "unknown";
}

double brute_force_cost(const SimpleGraph& f, const SimpleGraph& g) {
  const double maps = std::pow(static_cast<double>(g.vertex_count()), static_cast<double>(f.vertex_count()));
  return maps * static_cast<double>(std::max<std::size_t>(1, f.edge_count()));
}

BigNat brute_force_hom(const SimpleGraph& f, const SimpleGraph& g, const CountOptions& options) {
  const double cost = brute_force_cost(f, g);
  if (cost > options.budget) throw BudgetExceeded("brute-force homomorphism count", cost, options.budget);
  return BigNat(brute_force_count(f, g, options.exec));
}

namespace {

std::vector<Bitset> g_left_rows(const BipartiteGraph& g) {
  std::vector<Bitset> rows;
  for (std::size_t u = 0; u < g.n1(); ++u) rows.push_back(g.left_neighbors(u));
  return rows;
}

std::vector<Bitset> g_right_rows(const BipartiteGraph& g) {
  std::vector<Bitset> rows;
  for (std::size_t v = 0; v < g.n2(); ++v) rows.push_back(g.right_neighbors(v));
  return rows;
}

/// One connected piece of the source with both sides nonempty.
struct PatternPiece {
  OneSidedPattern from_left;   // enumerate the left side, right side counted
  OneSidedPattern from_right;  // enumerate the right side, left side counted
  EliminationNode plan_left;
  EliminationNode plan_right;
};

PatternPiece make_piece(const BipartiteGraph& comp) {
  PatternPiece piece;
  piece.from_left.opposite_count = comp.n2();
  for (std::size_t a = 0; a < comp.n1(); ++a) piece.from_left.adj.push_back(comp.left_neighbors(a).members());
  piece.from_right.opposite_count = comp.n1();
  for (std::size_t b = 0; b < comp.n2(); ++b) piece.from_right.adj.push_back(comp.right_neighbors(b).members());
  piece.plan_left = plan_elimination(piece.from_left);
  piece.plan_right = plan_elimination(piece.from_right);
  return piece;
}

struct Choice {
  const OneSidedPattern* pattern;
  const EliminationNode* plan;
  bool rows_left;  // enumerate into G's left side
  double cost;
};

/// The two ways to evaluate one orientation; picks the cheaper, preferring
/// the smaller enumerated side on ties.
Choice pick(const PatternPiece& piece, bool f_left_to_g_left, const BipartiteGraph& g) {
  const std::size_t left_images = f_left_to_g_left ? g.n1() : g.n2();
  const std::size_t right_images = f_left_to_g_left ? g.n2() : g.n1();
  Choice a{&piece.from_left, &piece.plan_left, f_left_to_g_left, elimination_cost(piece.plan_left, left_images)};
  Choice b{&piece.from_right, &piece.plan_right, !f_left_to_g_left,
           elimination_cost(piece.plan_right, right_images)};
  if (a.cost != b.cost) return a.cost < b.cost ? a : b;
  return piece.from_left.adj.size() <= piece.from_right.adj.size() ? a : b;
}

std::vector<BipartiteGraph> bipartite_components(const SimpleGraph& f, std::size_t& singletons, bool& bipartite) {
  std::vector<BipartiteGraph> out;
  singletons = 0;
  bipartite = true;
  for (const auto& comp : connected_components(f)) {
    if (comp.size() == 1) {
      ++singletons;
      continue;
    }
    auto part = bipartition_of(induced_subgraph(f, comp));
    if (!part) {
      bipartite = false;
      return {};
    }
    out.push_back(std::move(part->graph));
  }
  return out;
}

double pieces_cost(const std::vector<PatternPiece>& pieces, const BipartiteGraph& g) {
  double total = 0.0;
  for (const auto& piece : pieces) total += pick(piece, true, g).cost + pick(piece, false, g).cost;
  return total;
}

BigNat evaluate_pieces(const std::vector<PatternPiece>& pieces, std::size_t singletons, const BipartiteGraph& g,
                       Exec exec) {
  const auto left = g_left_rows(g);
  const auto right = g_right_rows(g);
  BigNat total = BigNat::pow(g.vertex_count(), singletons);
  for (const auto& piece : pieces) {
    BigNat sum(0);
    for (const bool orientation : {true, false}) {
      const auto c = pick(piece, orientation, g);
      sum += one_sided_sum(*c.pattern, *c.plan, c.rows_left ? std::span<const Bitset>(left) : right, exec);
    }
    total *= sum;
    if (total.is_zero()) break;
  }
  return total;
}

}  // namespace

double one_sided_cost(const SimpleGraph& f, const BipartiteGraph& g) {
  std::size_t singletons = 0;
  bool bipartite = true;
  const auto comps = bipartite_components(f, singletons, bipartite);
  if (!bipartite) return std::numeric_limits<double>::infinity();
  std::vector<PatternPiece> pieces;
  for (const auto& c : comps) pieces.push_back(make_piece(c));
  return pieces_cost(pieces, g);
}

BigNat one_sided_exact_hom(const BipartiteGraph& f, const BipartiteGraph& g, const CountOptions& options) {
  auto result = one_sided_exact_hom(f.to_simple(), g, options);
  return result.value;
}

HomCountResult one_sided_exact_hom(const SimpleGraph& f, const BipartiteGraph& g, const CountOptions& options) {
  HomCountResult result;
  result.method = CountMethod::one_sided;
  std::size_t singletons = 0;
  bool bipartite = true;
  const auto comps = bipartite_components(f, singletons, bipartite);
  if (!bipartite) {
    result.value = BigNat(0);
    result.flags.emplace_back("non_bipartite_source");
    return result;
  }
  std::vector<PatternPiece> pieces;
  for (const auto& c : comps) pieces.push_back(make_piece(c));
  result.cost_estimate = pieces_cost(pieces, g);
  if (result.cost_estimate > options.budget) {
    throw BudgetExceeded("one-sided homomorphism count", result.cost_estimate, options.budget);
  }
  result.value = evaluate_pieces(pieces, singletons, g, options.exec);
  return result;
}

BigNat hom_kpq_complete_target(std::size_t p, std::size_t q, std::size_t n1, std::size_t n2) {
  return BigNat::pow(n1, p) * BigNat::pow(n2, q) + BigNat::pow(n1, q) * BigNat::pow(n2, p);
}

BigNat hom_kpq_cycle(std::size_t p, std::size_t q, std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle length must be at least 3");
  if (n == 4) return BigNat::pow(2, p + q + 1);
  return BigNat(n) * (BigNat::pow(2, p) + BigNat::pow(2, q) - BigNat(2));
}

BigNat hom_kpq_path(std::size_t p, std::size_t q, std::size_t vertices) {
  if (vertices < 2) throw std::invalid_argument("path must have at least 2 vertices");
  return BigNat(vertices - 2) * (BigNat::pow(2, p) + BigNat::pow(2, q) - BigNat(2)) + BigNat(2);
}

BigNat hom_kpq_path_product(std::size_t p, std::size_t q, std::span<const std::size_t> vertices) {
  BigNat out(1);
  for (const auto l : vertices) out *= hom_kpq_path(p, q, l);
  return out;
}

BigNat hom_kpq_tree(std::size_t p, std::size_t q, const SimpleGraph& t) {
  if (!is_tree(t)) throw std::invalid_argument("hom_kpq_tree: target is not a tree");
  return star_count(p, t) + star_count(q, t) - BigNat(2 * (t.vertex_count() - 1));
}

BigNat hom_kpq_tree(std::size_t p, std::size_t q, const BipartiteGraph& t) {
  return hom_kpq_tree(p, q, t.to_simple());
}

BigNat star_count(std::size_t m, const SimpleGraph& g) {
  BigNat total(0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) total += BigNat::pow(g.degree(v), m);
  return total;
}

BigNat star_count(std::size_t m, const BipartiteGraph& g) {
  BigNat total(0);
  for (std::size_t u = 0; u < g.n1(); ++u) total += BigNat::pow(g.left_degree(u), m);
  for (std::size_t v = 0; v < g.n2(); ++v) total += BigNat::pow(g.right_degree(v), m);
  return total;
}

HomCountResult count_hom(const SimpleGraph& f, const SimpleGraph& g, const CountOptions& options) {
  HomCountResult result;
  if (f.edge_count() == 0) {
    result.method = CountMethod::identity;
    result.value = BigNat::pow(g.vertex_count(), f.vertex_count());
    return result;
  }

  if (const auto shape = complete_bipartite_shape(f)) {
    const auto [p, q] = *shape;
    result.method = CountMethod::closed_form;
    if (const auto target = complete_bipartite_shape(g)) {
      result.value = hom_kpq_complete_target(p, q, target->first, target->second);
      return result;
    }
    if (is_cycle(g)) {
      result.value = hom_kpq_cycle(p, q, g.vertex_count());
      return result;
    }
    if (is_tree(g)) {
      result.value = hom_kpq_tree(p, q, g);
      return result;
    }
    if (auto part = bipartition_of(g)) {
      const auto need = std::max(p, q);
      const double cost = census_cost(part->graph, need, need);
      if (cost <= options.budget) {
        const auto census = biclique_census(part->graph, need, need, {options.budget, options.exec});
        result.method = CountMethod::census_formula;
        result.value = exact_kpq_count(p, q, census);
        result.cost_estimate = cost;
        return result;
      }
    }
  }

  if (auto part = bipartition_of(g)) {
    if (!bipartition_of(f)) {
      result.method = CountMethod::identity;
      result.value = BigNat(0);
      result.flags.emplace_back("non_bipartite_source");
      return result;
    }
    const double cost = one_sided_cost(f, part->graph);
    if (cost <= options.budget) return one_sided_exact_hom(f, part->graph, options);
  }

  result.method = CountMethod::brute;
  result.cost_estimate = brute_force_cost(f, g);
  result.value = brute_force_hom(f, g, options);
  return result;
}

HomCountResult count_hom(const AnyGraph& f, const AnyGraph& g, const CountOptions& options) {
  return count_hom(as_simple(f), as_simple(g), options);
}

LogValue hom_density(const SimpleGraph& f, const SimpleGraph& g, const CountOptions& options) {
  const auto count = count_hom(f, g, options);
  if (g.vertex_count() == 0) {
    if (f.vertex_count() == 0) return LogValue::one();
    throw std::invalid_argument("hom_density: empty target");
  }
  return lognat_of(count.value) / lognat_of(BigNat::pow(g.vertex_count(), f.vertex_count()));
}

}  // namespace homcount
