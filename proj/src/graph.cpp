#include "homcount/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace homcount {

SimpleGraph::SimpleGraph(std::size_t n) : adj_(n, Bitset(n)) {}

SimpleGraph::SimpleGraph(std::size_t n, std::span<const Edge> edges) : SimpleGraph(n) {
  for (const auto& e : edges) {
    if (e.a >= n || e.b >= n) {
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(e.a) + ", " +
                                  std::to_string(e.b) + ")");
    }
    if (e.a == e.b) throw std::invalid_argument("loop at vertex " + std::to_string(e.a));
    if (adj_[e.a].test(e.b)) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.a) + ", " +
                                  std::to_string(e.b) + ")");
    }
    adj_[e.a].set(e.b);
    adj_[e.b].set(e.a);
    ++edge_count_;
  }
}

std::size_t SimpleGraph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t i = 0; i < vertex_count(); ++i) best = std::max(best, degree(i));
  return best;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < vertex_count(); ++i) {
    adj_[i].for_each([&](std::size_t j) {
      if (i < j) out.push_back({i, j});
    });
  }
  return out;
}

BipartiteGraph::BipartiteGraph(std::size_t n1, std::size_t n2)
    : left_(n1, Bitset(n2)), right_(n2, Bitset(n1)) {}

BipartiteGraph::BipartiteGraph(std::size_t n1, std::size_t n2, std::span<const Edge> edges)
    : BipartiteGraph(n1, n2) {
  for (const auto& e : edges) {
    if (e.a >= n1 || e.b >= n2) {
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(e.a) + ", " +
                                  std::to_string(e.b) + ")");
    }
    if (left_[e.a].test(e.b)) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.a) + ", " +
                                  std::to_string(e.b) + ")");
    }
    left_[e.a].set(e.b);
    right_[e.b].set(e.a);
    ++edge_count_;
  }
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < n1(); ++u) {
    left_[u].for_each([&](std::size_t v) { out.push_back({u, v}); });
  }
  return out;
}

std::size_t BipartiteGraph::isolated_count() const {
  std::size_t count = 0;
  for (const auto& s : left_) count += s.none() ? 1 : 0;
  for (const auto& s : right_) count += s.none() ? 1 : 0;
  return count;
}

SimpleGraph BipartiteGraph::to_simple() const {
  auto es = edges();
  for (auto& e : es) e.b += n1();
  return SimpleGraph(vertex_count(), es);
}

BipartiteGraph BipartiteGraph::transposed() const {
  auto es = edges();
  for (auto& e : es) std::swap(e.a, e.b);
  return BipartiteGraph(n2(), n1(), es);
}

BipartiteGraph BipartiteGraph::complete(std::size_t n1, std::size_t n2) {
  BipartiteGraph g(n1, n2);
  for (auto& s : g.left_) s.fill();
  for (auto& s : g.right_) s.fill();
  g.edge_count_ = n1 * n2;
  return g;
}

std::optional<Bipartition> bipartition_of(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (std::size_t start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::queue<std::size_t> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const auto x = frontier.front();
      frontier.pop();
      bool clash = false;
      g.neighbors(x).for_each([&](std::size_t y) {
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          frontier.push(y);
        } else if (color[y] == color[x]) {
          clash = true;
        }
      });
      if (clash) return std::nullopt;
    }
  }

  Bipartition out;
  out.side.resize(n);
  out.index.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (color[v] == 0) {
      out.side[v] = Side::left;
      out.index[v] = out.left.size();
      out.left.push_back(v);
    } else {
      out.side[v] = Side::right;
      out.index[v] = out.right.size();
      out.right.push_back(v);
    }
  }
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    const auto l = out.side[e.a] == Side::left ? e.a : e.b;
    const auto r = out.side[e.a] == Side::left ? e.b : e.a;
    es.push_back({out.index[l], out.index[r]});
  }
  out.graph = BipartiteGraph(out.left.size(), out.right.size(), es);
  return out;
}

Rational edge_density(const BipartiteGraph& g) {
  if (g.n1() == 0 || g.n2() == 0) {
    throw std::invalid_argument("edge_density: both sides must be nonempty");
  }
  return Rational(static_cast<std::int64_t>(g.edge_count()),
                  static_cast<std::int64_t>(g.n1() * g.n2()));
}

DegreeProfile degree_profile(const BipartiteGraph& g) {
  DegreeProfile p;
  p.left_degrees.resize(g.n1());
  p.right_degrees.resize(g.n2());
  for (std::size_t u = 0; u < g.n1(); ++u) p.left_degrees[u] = g.left_degree(u);
  for (std::size_t v = 0; v < g.n2(); ++v) p.right_degrees[v] = g.right_degree(v);
  p.edge_count = g.edge_count();
  return p;
}

SimpleGraph tensor_product(const SimpleGraph& g1, const SimpleGraph& g2) {
  const std::size_t n2 = g2.vertex_count();
  std::vector<Edge> es;
  const auto e1 = g1.edges();
  const auto e2 = g2.edges();
  for (const auto& x : e1) {
    for (const auto& y : e2) {
      // Each pair of undirected edges yields two product edges.
      es.push_back({x.a * n2 + y.a, x.b * n2 + y.b});
      es.push_back({x.a * n2 + y.b, x.b * n2 + y.a});
    }
  }
  return SimpleGraph(g1.vertex_count() * n2, es);
}

std::vector<std::vector<std::size_t>> connected_components(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp{start};
    seen[start] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      g.neighbors(comp[head]).for_each([&](std::size_t y) {
        if (!seen[y]) {
          seen[y] = true;
          comp.push_back(y);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const std::size_t> vertices) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) es.push_back({i, j});
    }
  }
  return SimpleGraph(vertices.size(), es);
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  auto es = a.edges();
  const auto off = a.vertex_count();
  for (const auto& e : b.edges()) es.push_back({e.a + off, e.b + off});
  return SimpleGraph(a.vertex_count() + b.vertex_count(), es);
}

bool is_connected(const SimpleGraph& g) { return connected_components(g).size() <= 1; }

bool is_tree(const SimpleGraph& g) {
  return g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

bool is_cycle(const SimpleGraph& g) {
  if (g.vertex_count() < 3 || g.edge_count() != g.vertex_count()) return false;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (g.degree(i) != 2) return false;
  }
  return is_connected(g);
}

std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_shape(const SimpleGraph& g) {
  if (g.vertex_count() < 2 || !is_connected(g)) return std::nullopt;
  const auto parts = bipartition_of(g);
  if (!parts) return std::nullopt;
  const auto p = parts->left.size();
  const auto q = parts->right.size();
  if (g.edge_count() != p * q) return std::nullopt;
  return std::pair{std::min(p, q), std::max(p, q)};
}

namespace families {

SimpleGraph edgeless(std::size_t n) { return SimpleGraph(n); }

SimpleGraph path(std::size_t vertices) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < vertices; ++i) es.push_back({i, i + 1});
  return SimpleGraph(vertices, es);
}

SimpleGraph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return SimpleGraph(n, es);
}

SimpleGraph complete(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) es.push_back({i, j});
  }
  return SimpleGraph(n, es);
}

SimpleGraph complete_bipartite(std::size_t p, std::size_t q) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) es.push_back({i, p + j});
  }
  return SimpleGraph(p + q, es);
}

SimpleGraph star(std::size_t leaves) { return complete_bipartite(1, leaves); }

}  // namespace families
}  // namespace homcount
