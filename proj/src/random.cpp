#include "homcount/random.hpp"

#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <vector>

namespace homcount {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  // Lemire's multiply-shift with rejection of the biased low region.
  std::uint64_t x = rng();
  auto m = static_cast<unsigned __int128>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = rng();
      m = static_cast<unsigned __int128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                          std::initializer_list<std::uint64_t> indices) {
  std::uint64_t fnv = 0xcbf29ce484222325ULL;
  for (const char c : tag) {
    fnv ^= static_cast<unsigned char>(c);
    fnv *= 0x100000001b3ULL;
  }
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ fnv);
  for (const auto i : indices) h = splitmix64(h ^ i);
  return h;
}

std::size_t edges_for_density(std::size_t n1, std::size_t n2, Rational delta) {
  if (delta < Rational(0) || delta > Rational(1)) {
    throw std::invalid_argument("density must lie in [0, 1], got " + delta.to_string());
  }
  const auto total = static_cast<__int128>(n1) * static_cast<__int128>(n2);
  const auto twice = 2 * static_cast<__int128>(delta.num) * total + delta.den;
  return static_cast<std::size_t>(twice / (2 * static_cast<__int128>(delta.den)));
}

BipartiteGraph random_bipartite_edges(std::size_t n1, std::size_t n2, std::size_t m, std::uint64_t seed) {
  const std::size_t total = n1 * n2;
  if (m > total) throw std::invalid_argument("more edges requested than candidate pairs");
  Rng rng(seed);
  std::vector<std::uint64_t> slots(total);
  std::iota(slots.begin(), slots.end(), std::uint64_t{0});
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto j = i + uniform_below(rng, total - i);
    std::swap(slots[i], slots[j]);
    edges.push_back({slots[i] / n2, slots[i] % n2});
  }
  return BipartiteGraph(n1, n2, edges);
}

BipartiteGraph random_bipartite(std::size_t n1, std::size_t n2, Rational delta, std::uint64_t seed) {
  return random_bipartite_edges(n1, n2, edges_for_density(n1, n2, delta), seed);
}

SimpleGraph random_tree(std::size_t n, std::uint64_t seed) {
  if (n <= 1) return SimpleGraph(n);
  if (n == 2) {
    const Edge e{0, 1};
    return SimpleGraph(2, std::span(&e, 1));
  }
  Rng rng(seed);
  std::vector<std::size_t> code(n - 2);
  for (auto& c : code) c = uniform_below(rng, n);

  std::vector<std::size_t> degree(n, 1);
  for (const auto c : code) ++degree[c];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (const auto c : code) {
    const auto leaf = leaves.top();
    leaves.pop();
    edges.push_back({std::min(leaf, c), std::max(leaf, c)});
    if (--degree[c] == 1) leaves.push(c);
  }
  const auto a = leaves.top();
  leaves.pop();
  const auto b = leaves.top();
  edges.push_back({std::min(a, b), std::max(a, b)});
  return SimpleGraph(n, edges);
}

}  // namespace homcount
