#include "homcount/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "homcount/counting.hpp"

namespace homcount {

std::string_view to_string(UbProvenance p) {
  switch (p) {
    case UbProvenance::census_formula:
      return "census_formula";
    case UbProvenance::c4free_form:
      return "c4free_form";
    case UbProvenance::complete_target_fallback:
      return "complete_target_fallback";
  }
  return "unknown";
}

CombinatorialLb combinatorial_lb(std::size_t p, std::size_t q, const BipartiteGraph& g) {
  if (p < 1 || q < 1) throw std::invalid_argument("combinatorial_lb requires p, q >= 1");
  BigNat sum(0);
  auto add = [&](std::size_t d) {
    sum += BigNat::pow(d, p);
    sum += BigNat::pow(d, q);
  };
  for (std::size_t u = 0; u < g.n1(); ++u) add(g.left_degree(u));
  for (std::size_t v = 0; v < g.n2(); ++v) add(g.right_degree(v));
  return {sum - BigNat(2 * g.edge_count()), is_c4_free(g)};
}

namespace {

LogValue ln_of(std::size_t v) { return LogValue::of(static_cast<double>(v)); }

LogValue rational_log(Rational r) {
  if (r.num < 0) throw std::invalid_argument("negative rational in a bound");
  if (r.num == 0) return LogValue::zero();
  return LogValue::from_ln(std::log(static_cast<double>(r.num)) - std::log(static_cast<double>(r.den)));
}

void check_density(Rational delta) {
  if (delta < Rational(0) || delta > Rational(1)) throw std::invalid_argument("density must lie in [0, 1]");
}

}  // namespace

LogValue jensen_regular_lb(std::size_t p, std::size_t q, std::size_t n, std::size_t m) {
  if (n == 0) throw std::invalid_argument("jensen_regular_lb requires n >= 1");
  if (m == 0) return LogValue::zero();
  // n (2m/n)^p = 2^p n^(1-p) m^p
  const auto avg = LogValue::of(2.0 * static_cast<double>(m) / static_cast<double>(n));
  const auto positive = ln_of(n) * avg.pow(static_cast<double>(p)) + ln_of(n) * avg.pow(static_cast<double>(q));
  return log_diff_clamped(positive, ln_of(2 * m));
}

LogValue entropy_lb_basic(std::size_t p, std::size_t q, std::size_t n1, std::size_t n2, Rational delta) {
  check_density(delta);
  const auto d = rational_log(delta);
  if (d.is_zero() || n1 == 0 || n2 == 0) return LogValue::zero();
  const auto pq = static_cast<double>(p * q);
  const auto a = ln_of(n1);
  const auto b = ln_of(n2);
  const auto dp = static_cast<double>(p);
  const auto dq = static_cast<double>(q);
  return d.pow(pq) * (a.pow(dp) * b.pow(dq) + a.pow(dq) * b.pow(dp));
}

LogValue sidorenko_lb(std::size_t p, std::size_t q, std::size_t n1, std::size_t n2, Rational delta) {
  check_density(delta);
  const auto d = rational_log(delta);
  if (d.is_zero() || n1 == 0 || n2 == 0) return LogValue::zero();
  const auto pq = static_cast<double>(p * q);
  const auto expo = static_cast<double>(p + q) - 2.0 * pq;
  return (LogValue::of(2.0) * d).pow(pq) * ln_of(n1 + n2).pow(expo) * (ln_of(n1) * ln_of(n2)).pow(pq);
}

DegreeEntropies degree_entropies(const DegreeProfile& profile) {
  if (profile.edge_count == 0) throw std::invalid_argument("degree_entropies: graph has no edges");
  const auto m = static_cast<double>(profile.edge_count);
  auto entropy = [m](const std::vector<std::size_t>& degrees) {
    double h = 0.0;
    for (const auto d : degrees) {
      if (d == 0) continue;
      const auto dd = static_cast<double>(d);
      h += dd / m * std::log(m / dd);
    }
    return h;
  };
  return {entropy(profile.left_degrees), entropy(profile.right_degrees)};
}

LogValue entropy_lb_refined(std::size_t p, std::size_t q, std::size_t n1, std::size_t n2, Rational delta, double x,
                            double y) {
  check_density(delta);
  if (delta.num == 0 || n1 == 0 || n2 == 0) return LogValue::zero();
  // L = ln(delta n1 n2) = ln |E|
  const double L = rational_log(delta).ln() + std::log(static_cast<double>(n1)) + std::log(static_cast<double>(n2));
  const auto P = static_cast<double>(p);
  const auto Q = static_cast<double>(q);
  const double m1 = std::max({P * Q * L - P * (Q - 1) * x - Q * (P - 1) * y, Q * L - (Q - 1) * x,
                              P * L - (P - 1) * y});
  const double m2 = std::max({P * Q * L - Q * (P - 1) * x - P * (Q - 1) * y, P * L - (P - 1) * x,
                              Q * L - (Q - 1) * y});
  return LogValue::from_ln(m1) + LogValue::from_ln(m2);
}

KpqOracle::KpqOracle(const BipartiteGraph& g, const BoundOptions& options) : g_(g), options_(options) {}

std::optional<BigNat> KpqOracle::exact(std::size_t p, std::size_t q) {
  if (p > q) std::swap(p, q);
  const auto key = std::make_pair(p, q);
  if (const auto it = values_.find(key); it != values_.end()) return it->second;
  const auto need = q;
  auto it = census_.find(need);
  if (it == census_.end()) {
    std::optional<BicliqueCensus> census;
    if (census_feasible(g_, need, need, options_.budget)) {
      census = biclique_census(g_, need, need, {options_.budget, options_.exec});
    }
    it = census_.emplace(need, std::move(census)).first;
  }
  std::optional<BigNat> value;
  if (it->second) value = exact_kpq_count(p, q, *it->second);
  values_.emplace(key, value);
  return value;
}

UpperBound upper_bound_general(const BipartiteGraph& f, const BipartiteGraph& g, const BoundOptions& options) {
  KpqOracle oracle(g, options);
  return upper_bound_general(f, g, oracle);
}

UpperBound upper_bound_general(const BipartiteGraph& f, const BipartiteGraph& g, KpqOracle& oracle) {
  UpperBound ub;
  ub.value = LogValue::one();
  const bool c4_free = is_c4_free(g);
  ub.provenance = c4_free ? UbProvenance::c4free_form : UbProvenance::census_formula;
  std::map<std::pair<std::size_t, std::size_t>, LogValue> per_edge;

  for (const auto& e : f.edges()) {
    const auto du = f.left_degree(e.a);
    const auto dv = f.right_degree(e.b);
    const auto key = std::minmax(du, dv);
    auto it = per_edge.find(key);
    if (it == per_edge.end()) {
      BigNat t;
      if (c4_free) {
        t = combinatorial_lb(du, dv, g).value;
      } else if (auto exact = oracle.exact(du, dv)) {
        t = *exact;
      } else {
        t = hom_kpq_complete_target(du, dv, g.n1(), g.n2());
        ub.provenance = UbProvenance::complete_target_fallback;
      }
      it = per_edge.emplace(key, lognat_of(t).pow(1.0 / static_cast<double>(du * dv))).first;
    }
    ub.value *= it->second;
  }
  ub.value *= lognat_of(BigNat::pow(g.vertex_count(), f.isolated_count()));
  return ub;
}

namespace {

constexpr double kExactDoubleLimit = 9007199254740992.0;  // 2^53

struct Factor {
  LogValue log;
  std::optional<BigNat> exact;
};

Factor exact_factor(BigNat v) {
  const auto l = lognat_of(v);
  return {l, std::move(v)};
}

}  // namespace

HybridValue general_lower_bound(const BipartiteGraph& f, const BipartiteGraph& g, const BoundOptions& options) {
  KpqOracle oracle(g, options);
  return general_lower_bound(f, g, oracle);
}

HybridValue general_lower_bound(const BipartiteGraph& f, const BipartiteGraph& g, KpqOracle& oracle) {
  const auto& options = oracle.options();
  const auto simple = f.to_simple();
  std::map<std::pair<std::size_t, std::size_t>, BigNat> eta_cache;
  std::optional<DegreeEntropies> entropies;
  if (g.edge_count() > 0) entropies = degree_entropies(degree_profile(g));
  const auto delta = g.n1() > 0 && g.n2() > 0 ? edge_density(g) : Rational(0);

  HybridValue out{LogValue::one(), BigNat(1)};
  for (const auto& comp : connected_components(simple)) {
    Factor factor;
    if (comp.size() == 1) {
      factor = exact_factor(BigNat(g.vertex_count()));
    } else {
      auto part = bipartition_of(induced_subgraph(simple, comp));
      const auto& b = part->graph;
      const auto p = b.n1();
      const auto q = b.n2();
      if (std::min(p, q) == 1) {
        factor = exact_factor(star_count(std::max(p, q), g));
      } else {
        const auto removed = p * q - b.edge_count();
        BigNat extra(0);
        if (removed > 0) {
          const auto key = std::minmax(p, q);
          auto it = eta_cache.find(key);
          if (it == eta_cache.end()) it = eta_cache.emplace(key, eta(g, p, q, options.exec).value).first;
          extra = BigNat(removed) * it->second;
        }
        if (auto exact = oracle.exact(p, q)) {
          factor = exact_factor(*exact + extra);
        } else {
          const auto comb = combinatorial_lb(p, q, g).value;
          LogValue refined = LogValue::zero();
          if (entropies) refined = entropy_lb_refined(p, q, g.n1(), g.n2(), delta, entropies->x, entropies->y).ceiled();
          if (refined > lognat_of(comb)) {
            if (refined.to_double() < kExactDoubleLimit) {
              factor = exact_factor(BigNat(static_cast<std::uint64_t>(refined.to_double())) + extra);
            } else {
              factor = {refined + lognat_of(extra), std::nullopt};
            }
          } else {
            factor = exact_factor(comb + extra);
          }
        }
      }
    }
    out.log *= factor.log;
    if (out.exact && factor.exact) {
      *out.exact *= *factor.exact;
      out.log = lognat_of(*out.exact);
    } else {
      out.exact.reset();
    }
  }
  return out;
}

}  // namespace homcount
