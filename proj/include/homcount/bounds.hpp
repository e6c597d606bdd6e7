#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homcount/bignat.hpp"
#include "homcount/census.hpp"
#include "homcount/graph.hpp"
#include "homcount/log_value.hpp"
#include "homcount/rational.hpp"

namespace homcount {

struct CombinatorialLb {
  BigNat value;
  /// Set when G is C4-free, where the bound is exact.
  bool equality_certified = false;
};

/// sum_w (d(w)^p + d(w)^q) - 2|E|.
CombinatorialLb combinatorial_lb(std::size_t p, std::size_t q, const BipartiteGraph& g);

/// max(2^p n^(1-p) m^p + 2^q n^(1-q) m^q - 2m, 0).
LogValue jensen_regular_lb(std::size_t p, std::size_t q, std::size_t n, std::size_t m);

/// delta^(pq) (n1^p n2^q + n1^q n2^p).
LogValue entropy_lb_basic(std::size_t p, std::size_t q, std::size_t n1, std::size_t n2, Rational delta);

/// (2 delta)^(pq) (n1 + n2)^(p + q - 2pq) (n1 n2)^(pq).
LogValue sidorenko_lb(std::size_t p, std::size_t q, std::size_t n1, std::size_t n2, Rational delta);

/// Shannon entropies (nats) of the per-edge normalized degree profiles.
struct DegreeEntropies {
  double x = 0.0;
  double y = 0.0;
};
/// Throws std::invalid_argument when there are no edges.
DegreeEntropies degree_entropies(const DegreeProfile& profile);

/// Sum of the two three-way maxima, via log-sum-exp. ZERO at delta = 0.
LogValue entropy_lb_refined(std::size_t p, std::size_t q, std::size_t n1, std::size_t n2, Rational delta, double x,
                            double y);

enum class UbProvenance : std::uint8_t { census_formula, c4free_form, complete_target_fallback };
std::string_view to_string(UbProvenance p);

struct BoundOptions {
  double budget = kDefaultBudget;
  Exec exec = Exec::parallel;
};

/// Memo of hom(K_{p,q}, G) values computed from one census per coverage.
class KpqOracle {
 public:
  KpqOracle(const BipartiteGraph& g, const BoundOptions& options);
  /// nullopt when the census for max(p, q) exceeds the budget.
  std::optional<BigNat> exact(std::size_t p, std::size_t q);
  const BoundOptions& options() const { return options_; }

 private:
  const BipartiteGraph& g_;
  BoundOptions options_;
  std::map<std::size_t, std::optional<BicliqueCensus>> census_;
  std::map<std::pair<std::size_t, std::size_t>, std::optional<BigNat>> values_;
};

struct UpperBound {
  LogValue value;
  UbProvenance provenance = UbProvenance::census_formula;
};

/// |V(G)|^s prod_{uv in E(F)} hom(K_{d(u),d(v)}, G)^(1/(d(u) d(v))), s the
/// number of isolated vertices of F.
UpperBound upper_bound_general(const BipartiteGraph& f, const BipartiteGraph& g, const BoundOptions& options = {});
UpperBound upper_bound_general(const BipartiteGraph& f, const BipartiteGraph& g, KpqOracle& oracle);

/// A lower bound known in the log domain and, when every factor was an
/// integer, also exactly.
struct HybridValue {
  LogValue log;
  std::optional<BigNat> exact;
};

/// Product over the components of F: star components give sum_v d(v)^k
/// exactly; a component spanning K_{p,q} (p, q >= 2) gives
/// mu + (pq - |E|) eta_{p,q}(G), with mu the census count when affordable
/// and otherwise max(comb, ceil(refined)).
HybridValue general_lower_bound(const BipartiteGraph& f, const BipartiteGraph& g, const BoundOptions& options = {});
HybridValue general_lower_bound(const BipartiteGraph& f, const BipartiteGraph& g, KpqOracle& oracle);


}  // namespace homcount
