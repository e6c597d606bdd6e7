#include <algorithm>
#include <numeric>
#include <queue>

#include "homcount/kernels.hpp"
#include "one_sided_eval.hpp"

namespace homcount {

namespace detail {

void subset_descend(std::span<const Bitset> rows, std::size_t from, std::size_t k, std::size_t k_max,
                    std::vector<Bitset>& buf, SubsetHistogram& hist) {
  for (std::size_t j = from; j < rows.size(); ++j) {
    const auto c = intersect_into(buf[k - 1], rows[j], buf[k]);
    if (c == 0) continue;
    ++hist[k][c];
    if (k < k_max) subset_descend(rows, j + 1, k + 1, k_max, buf, hist);
  }
}

BruteOrder brute_order(const SimpleGraph& f) {
  const auto n = f.vertex_count();
  BruteOrder bo;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::queue<std::size_t> queue;
    queue.push(s);
    seen[s] = true;
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop();
      pos[v] = bo.order.size();
      bo.order.push_back(v);
      f.neighbors(v).for_each([&](std::size_t w) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push(w);
        }
      });
    }
  }
  bo.earlier.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    f.neighbors(bo.order[i]).for_each([&](std::size_t w) {
      if (pos[w] < i) bo.earlier[i].push_back(pos[w]);
    });
  }
  return bo;
}

std::uint64_t brute_extend(const BruteOrder& bo, const SimpleGraph& g, std::vector<std::size_t>& images,
                           std::vector<Bitset>& scratch, std::size_t pos) {
  if (pos == bo.order.size()) return 1;
  const auto& earlier = bo.earlier[pos];
  std::uint64_t total = 0;
  if (earlier.empty()) {
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
      images[pos] = x;
      total += brute_extend(bo, g, images, scratch, pos + 1);
    }
    return total;
  }
  auto& cand = scratch[pos];
  cand = g.neighbors(images[earlier[0]]);
  for (std::size_t i = 1; i < earlier.size(); ++i) cand &= g.neighbors(images[earlier[i]]);
  cand.for_each([&](std::size_t x) {
    images[pos] = x;
    total += brute_extend(bo, g, images, scratch, pos + 1);
  });
  return total;
}

}  // namespace detail

namespace {

std::size_t max_row_size(std::span<const Bitset> rows) {
  return rows.empty() ? 0 : rows.front().size();
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

EliminationNode build_plan(const OneSidedPattern& pattern, const std::vector<std::vector<std::size_t>>& opposite,
                           std::vector<std::size_t> comp, std::vector<bool>& fixed) {
  std::size_t best = comp.front();
  std::size_t best_degree = 0;
  bool first = true;
  for (const auto a : comp) {
    std::vector<bool> coupled(pattern.adj.size(), false);
    std::size_t degree = 0;
    for (const auto b : pattern.adj[a]) {
      for (const auto a2 : opposite[b]) {
        if (a2 != a && !fixed[a2] && !coupled[a2]) {
          coupled[a2] = true;
          ++degree;
        }
      }
    }
    if (first || degree > best_degree) {
      best = a;
      best_degree = degree;
      first = false;
    }
  }

  EliminationNode node;
  node.vertex = best;
  fixed[best] = true;
  for (const auto b : pattern.adj[best]) {
    if (std::all_of(opposite[b].begin(), opposite[b].end(), [&](std::size_t a) { return fixed[a]; })) {
      node.completes.push_back(b);
    }
  }

  std::vector<std::size_t> rest;
  for (const auto a : comp) {
    if (a != best) rest.push_back(a);
  }
  DisjointSets sets(pattern.adj.size());
  for (std::size_t b = 0; b < opposite.size(); ++b) {
    std::size_t anchor = pattern.adj.size();
    for (const auto a : opposite[b]) {
      if (fixed[a]) continue;
      if (anchor == pattern.adj.size()) {
        anchor = a;
      } else {
        sets.unite(a, anchor);
      }
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> group_of(pattern.adj.size(), pattern.adj.size());
  for (const auto a : rest) {
    const auto root = sets.find(a);
    if (group_of[root] == pattern.adj.size()) {
      group_of[root] = groups.size();
      groups.emplace_back();
    }
    groups[group_of[root]].push_back(a);
  }
  for (auto& group : groups) {
    auto saved = fixed;
    node.children.push_back(build_plan(pattern, opposite, std::move(group), fixed));
    fixed = std::move(saved);
  }
  return node;
}

}  // namespace

EliminationNode plan_elimination(const OneSidedPattern& pattern) {
  if (pattern.adj.empty()) throw std::invalid_argument("plan_elimination: empty pattern");
  std::vector<std::vector<std::size_t>> opposite(pattern.opposite_count);
  for (std::size_t a = 0; a < pattern.adj.size(); ++a) {
    for (const auto b : pattern.adj[a]) opposite[b].push_back(a);
  }
  std::vector<std::size_t> all(pattern.adj.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<bool> fixed(pattern.adj.size(), false);
  return build_plan(pattern, opposite, std::move(all), fixed);
}

double elimination_cost(const EliminationNode& root, std::size_t images) {
  double inner = 1.0;
  for (const auto& child : root.children) inner += elimination_cost(child, images);
  return std::min(1e300, static_cast<double>(images) * inner);
}

SubsetHistogram subset_intersection_histogram(std::span<const Bitset> rows, std::size_t k_max, Exec exec) {
  if (exec == Exec::parallel) return detail::subset_intersection_histogram_omp(rows, k_max);
  const auto universe = max_row_size(rows);
  SubsetHistogram hist(k_max + 1, std::vector<std::uint64_t>(universe + 1, 0));
  if (k_max == 0) return hist;
  std::vector<Bitset> buf(k_max + 1, Bitset(universe));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    buf[1] = rows[i];
    const auto c = buf[1].count();
    if (c == 0) continue;
    ++hist[1][c];
    if (k_max > 1) detail::subset_descend(rows, i + 1, 2, k_max, buf, hist);
  }
  return hist;
}

std::vector<std::uint64_t> pair_intersection_histogram(std::span<const Bitset> rows, Exec exec) {
  if (exec == Exec::parallel) return detail::pair_intersection_histogram_omp(rows);
  std::vector<std::uint64_t> hist(max_row_size(rows) + 1, 0);
  for (std::size_t u = 0; u < rows.size(); ++u) {
    for (std::size_t v = 0; v < rows.size(); ++v) ++hist[intersection_count(rows[u], rows[v])];
  }
  return hist;
}

std::vector<std::uint64_t> eta_weight_histogram(std::span<const Bitset> rows, Exec exec) {
  if (exec == Exec::parallel) return detail::eta_weight_histogram_omp(rows);
  std::vector<std::uint64_t> hist(max_row_size(rows) + 1, 0);
  std::vector<std::size_t> degree(rows.size());
  for (std::size_t w = 0; w < rows.size(); ++w) degree[w] = rows[w].count();
  for (std::size_t v = 0; v < rows.size(); ++v) {
    for (std::size_t w = 0; w < rows.size(); ++w) {
      const auto c = intersection_count(rows[v], rows[w]);
      if (c > 0) hist[c] += degree[w] - c;
    }
  }
  return hist;
}

BigNat one_sided_sum(const OneSidedPattern& pattern, const EliminationNode& root, std::span<const Bitset> rows,
                     Exec exec) {
  if (exec == Exec::parallel) return detail::one_sided_sum_omp(pattern, root, rows);
  try {
    detail::OneSidedEvaluator<detail::u128> eval(pattern, rows);
    return detail::to_bignat(eval.sum(root));
  } catch (const detail::Overflow&) {
    detail::OneSidedEvaluator<BigNat> eval(pattern, rows);
    return eval.sum(root);
  }
}

std::uint64_t brute_force_count(const SimpleGraph& f, const SimpleGraph& g, Exec exec) {
  if (exec == Exec::parallel) return detail::brute_force_count_omp(f, g);
  const auto bo = detail::brute_order(f);
  std::vector<std::size_t> images(f.vertex_count(), 0);
  std::vector<Bitset> scratch(f.vertex_count(), Bitset(g.vertex_count()));
  return detail::brute_extend(bo, g, images, scratch, 0);
}

}  // namespace homcount
