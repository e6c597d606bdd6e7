#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

#include "homcount/graph.hpp"
#include "homcount/rational.hpp"

namespace homcount {

using Rng = std::mt19937_64;

/// Unbiased draw from 0..bound-1 (bound > 0). Unlike
/// std::uniform_int_distribution the result sequence is fixed by the
/// engine output alone, so it is identical across standard libraries.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Stable seed derivation: splitmix64 over (master, FNV-1a(tag), indices...).
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                          std::initializer_list<std::uint64_t> indices);

/// round(delta * n1 * n2), ties rounded up.
std::size_t edges_for_density(std::size_t n1, std::size_t n2, Rational delta);

/// Uniform m-subset of the n1*n2 candidate edges. Candidate index e maps to
/// (e / n2, e % n2); the subset is the first m slots of a partial
/// Fisher-Yates shuffle of 0..n1*n2-1 driven by Rng(seed) and uniform_below.
BipartiteGraph random_bipartite_edges(std::size_t n1, std::size_t n2, std::size_t m, std::uint64_t seed);

/// random_bipartite_edges with m = edges_for_density(n1, n2, delta).
BipartiteGraph random_bipartite(std::size_t n1, std::size_t n2, Rational delta, std::uint64_t seed);

/// Uniform labelled tree on n vertices via a random Pruefer sequence.
SimpleGraph random_tree(std::size_t n, std::uint64_t seed);

}  // namespace homcount
