#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "homcount/bitset.hpp"
#include "homcount/rational.hpp"

namespace homcount {

/// Unordered pair of vertex ids. In a BipartiteGraph, `a` is a left index and
/// `b` a right index.
struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1 (no loops, no multi-edges).
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n);
  /// Throws std::invalid_argument on loops, out-of-range endpoints or duplicates.
  SimpleGraph(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i].test(j); }
  const Bitset& neighbors(std::size_t i) const { return adj_[i]; }
  std::size_t degree(std::size_t i) const { return adj_[i].count(); }
  std::size_t max_degree() const;

  /// Edges with a < b, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<Bitset> adj_;
  std::size_t edge_count_ = 0;
};

/// Bipartite graph with left set U = {0..n1-1} and right set V = {0..n2-1}.
///
/// Both adjacency directions are stored; they always describe the same edge set.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::size_t n1, std::size_t n2);
  /// Edge (a, b) joins left a and right b. Throws std::invalid_argument on
  /// out-of-range endpoints or duplicates.
  BipartiteGraph(std::size_t n1, std::size_t n2, std::span<const Edge> edges);

  std::size_t n1() const { return left_.size(); }
  std::size_t n2() const { return right_.size(); }
  std::size_t vertex_count() const { return n1() + n2(); }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(std::size_t u, std::size_t v) const { return left_[u].test(v); }
  /// Right neighbors of left vertex u (bitset over 0..n2-1).
  const Bitset& left_neighbors(std::size_t u) const { return left_[u]; }
  /// Left neighbors of right vertex v (bitset over 0..n1-1).
  const Bitset& right_neighbors(std::size_t v) const { return right_[v]; }
  std::size_t left_degree(std::size_t u) const { return left_[u].count(); }
  std::size_t right_degree(std::size_t v) const { return right_[v].count(); }

  std::vector<Edge> edges() const;
  std::size_t isolated_count() const;
  bool has_isolated_vertices() const { return isolated_count() > 0; }

  /// Left vertices become 0..n1-1, right vertices n1..n1+n2-1.
  SimpleGraph to_simple() const;
  /// Swaps the roles of the two sides.
  BipartiteGraph transposed() const;

  static BipartiteGraph complete(std::size_t n1, std::size_t n2);

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  std::vector<Bitset> left_;
  std::vector<Bitset> right_;
  std::size_t edge_count_ = 0;
};

struct DegreeProfile {
  std::vector<std::size_t> left_degrees;
  std::vector<std::size_t> right_degrees;
  std::size_t edge_count = 0;
};

enum class Side : std::uint8_t { left, right };

/// A proper 2-coloring of a simple graph together with the induced
/// BipartiteGraph. `left`/`right` list original vertex ids in increasing order;
/// `index[v]` is v's position within its side.
struct Bipartition {
  BipartiteGraph graph;
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  std::vector<Side> side;
  std::vector<std::size_t> index;
};

/// 2-colors each component starting from its lowest vertex (colored left).
/// Isolated vertices go left. Returns nullopt for non-bipartite graphs.
std::optional<Bipartition> bipartition_of(const SimpleGraph& g);

/// |E| / (n1 n2); throws std::invalid_argument when a side is empty.
Rational edge_density(const BipartiteGraph& g);

DegreeProfile degree_profile(const BipartiteGraph& g);

/// Categorical product: (i1,i2) ~ (j1,j2) iff i1 ~ j1 and i2 ~ j2.
/// Vertex (i1, i2) has id i1 * |V(g2)| + i2.
SimpleGraph tensor_product(const SimpleGraph& g1, const SimpleGraph& g2);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> connected_components(const SimpleGraph& g);
SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const std::size_t> vertices);
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

bool is_connected(const SimpleGraph& g);
bool is_tree(const SimpleGraph& g);
/// Connected and 2-regular.
bool is_cycle(const SimpleGraph& g);
/// Returns (p, q) with p <= q if g is K_{p,q} (p, q >= 1).
std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_shape(const SimpleGraph& g);

namespace families {
SimpleGraph edgeless(std::size_t n);
SimpleGraph path(std::size_t vertices);
SimpleGraph cycle(std::size_t n);
SimpleGraph complete(std::size_t n);
/// K_{p,q} with the p-side first.
SimpleGraph complete_bipartite(std::size_t p, std::size_t q);
SimpleGraph star(std::size_t leaves);
}  // namespace families

}  // namespace homcount
