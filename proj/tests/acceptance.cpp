// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: acceptance [--only N]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "homcount/bounds.hpp"
#include "homcount/cli.hpp"
#include "homcount/counting.hpp"
#include "homcount/experiments.hpp"
#include "homcount/random.hpp"
#include "homcount/report.hpp"
#include "oracles.hpp"

using namespace homcount;

namespace {

constexpr double kTol = kLog10Tolerance;
constexpr std::uint64_t kSeed = 20250801;
constexpr double kOracleSeconds = 60.0;
constexpr double kClosedFormSeconds = 120.0;
constexpr double kExactPerInstanceSeconds = 1.0;
constexpr double kFigureSeconds = 600.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Counts checks and failures; prints the first few failures.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) std::cout << "    fail: " << what << '\n';
  }
  void note(const std::string& s) { std::cout << "    " << s << '\n'; }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
};

std::string str(const BigNat& x) { return x.to_string(); }
double log10_of(const BigNat& x) { return lognat_of(x).log10(); }

Rational tenths(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return Rational(static_cast<std::int64_t>(lo + uniform_below(rng, hi - lo + 1)), 10);
}

bool contains_c4(const BipartiteGraph& g) { return !oracle::c4_free(g); }

// 1
void oracle_equivalence(Tally& t) {
  const auto t0 = Clock::now();
  std::size_t graphs = 0;
  for (std::size_t n1 = 1; n1 <= 3; ++n1) {
    for (std::size_t n2 = 1; n2 <= 3; ++n2) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n1 * n2)); ++mask) {
        const auto g = oracle::from_mask(n1, n2, mask);
        const auto census = biclique_census(g, 3, 3, {kDefaultBudget, Exec::serial});
        ++graphs;
        for (std::size_t p = 1; p <= 3; ++p) {
          for (std::size_t q = 1; q <= 3; ++q) {
            const auto want = oracle::hom(families::complete_bipartite(p, q), g.to_simple());
            const auto got = exact_kpq_count(p, q, census);
            t.expect(got == BigNat(want), "exhaustive " + std::to_string(n1) + "x" + std::to_string(n2) + " mask " +
                                              std::to_string(mask) + " K" + std::to_string(p) + "," +
                                              std::to_string(q) + ": " + str(got) + " vs " + std::to_string(want));
          }
        }
      }
    }
  }
  Rng rng(kSeed);
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto n1 = 1 + uniform_below(rng, 5);
    const auto n2 = 1 + uniform_below(rng, 5);
    const auto g = random_bipartite(n1, n2, tenths(rng, 0, 10), derive_seed(kSeed, "oracle", {i}));
    const auto census = biclique_census(g, 3, 3);
    for (std::size_t p = 1; p <= 3; ++p) {
      for (std::size_t q = 1; q <= 3; ++q) {
        const auto want = oracle::hom(families::complete_bipartite(p, q), g.to_simple());
        t.expect(exact_kpq_count(p, q, census) == BigNat(want), "seeded instance " + std::to_string(i));
      }
    }
  }
  const double secs = seconds_since(t0);
  t.expect(secs < kOracleSeconds, "took " + std::to_string(secs) + " s");
  t.note(std::to_string(graphs) + " exhaustive graphs + 200 seeded, " + std::to_string(secs) + " s");
}

// 2
void closed_forms(Tally& t) {
  const auto t0 = Clock::now();
  auto kpq = [](std::size_t p, std::size_t q) { return families::complete_bipartite(p, q); };
  for (std::size_t p = 1; p <= 3; ++p) {
    for (std::size_t q = 1; q <= 3; ++q) {
      const auto tag = " K" + std::to_string(p) + "," + std::to_string(q);
      const auto c4 = oracle::hom(kpq(p, q), families::cycle(4));
      t.expect(c4 == oracle::ipow(2, p + q + 1), "C4 2^(p+q+1)" + tag);
      t.expect(hom_kpq_cycle(p, q, 4) == BigNat(c4), "C4 closed form" + tag);
      for (std::size_t n : {3, 5, 6, 7, 8}) {
        const auto want = oracle::hom(kpq(p, q), families::cycle(n));
        t.expect(want == n * ((1U << p) + (1U << q) - 2), "cycle formula vs brute C" + std::to_string(n) + tag);
        t.expect(hom_kpq_cycle(p, q, n) == BigNat(want), "cycle closed form C" + std::to_string(n) + tag);
      }
      for (std::size_t l = 2; l <= 7; ++l) {
        const auto want = oracle::hom(kpq(p, q), families::path(l));
        t.expect(want == (l - 2) * ((1U << p) + (1U << q) - 2) + 2, "path formula P" + std::to_string(l) + tag);
        t.expect(hom_kpq_path(p, q, l) == BigNat(want), "path closed form P" + std::to_string(l) + tag);
      }
      for (std::size_t n1 = 1; n1 <= 4; ++n1) {
        for (std::size_t n2 = 1; n2 <= 4; ++n2) {
          const auto want = oracle::hom(kpq(p, q), families::complete_bipartite(n1, n2));
          t.expect(want == oracle::ipow(n1, p) * oracle::ipow(n2, q) + oracle::ipow(n1, q) * oracle::ipow(n2, p),
                   "complete target formula" + tag);
          t.expect(hom_kpq_complete_target(p, q, n1, n2) == BigNat(want), "complete target closed form" + tag);
        }
      }
      const auto p3 = families::path(3);
      const auto prod = tensor_product(p3, p3);
      const auto one = oracle::hom(kpq(p, q), p3);
      const auto both = oracle::hom(kpq(p, q), prod);
      t.expect(both == one * one, "tensor multiplicativity on P3xP3" + tag);
      const std::vector<std::size_t> sides{3, 3};
      t.expect(hom_kpq_path_product(p, q, sides) == BigNat(both), "path product closed form" + tag);
    }
  }
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto n = 2 + i % 11;
    const auto tree = random_tree(n, derive_seed(kSeed, "tree", {i}));
    for (std::size_t p = 1; p <= 3; ++p) {
      for (std::size_t q = 1; q <= 3; ++q) {
        const auto want = oracle::hom(kpq(p, q), tree);
        t.expect(hom_kpq_tree(p, q, tree) == BigNat(want), "tree formula, tree " + std::to_string(i));
      }
    }
  }
  const double secs = seconds_since(t0);
  t.expect(secs < kClosedFormSeconds, "took " + std::to_string(secs) + " s");
  t.note(std::to_string(t.checks()) + " checks, " + std::to_string(secs) + " s");
}

// 3
void c4free_dichotomy(Tally& t) {
  const std::vector<std::pair<std::size_t, std::size_t>> shapes{{2, 2}, {2, 3}, {3, 3}};
  std::size_t free_graphs = 0;
  std::size_t c4_graphs = 0;
  auto check_graph = [&](const BipartiteGraph& g, const std::string& tag) {
    const bool free = is_c4_free(g);
    t.expect(free == oracle::c4_free(g), "is_c4_free disagrees with pair check " + tag);
    const auto census = biclique_census(g, 3, 3);
    for (const auto& [p, q] : shapes) {
      const auto comb = combinatorial_lb(p, q, g);
      const auto exact = exact_kpq_count(p, q, census);
      t.expect((comb.value == exact) == free, "equality <=> C4-free fails " + tag);
      t.expect(comb.value <= exact, "comb exceeds exact " + tag);
      t.expect(comb.equality_certified == free, "certificate flag " + tag);
    }
    (free ? free_graphs : c4_graphs) += 1;
  };
  for (std::size_t n1 = 1; n1 <= 4; ++n1) {
    for (std::size_t n2 = 1; n2 <= 4; ++n2) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n1 * n2)); ++mask) {
        check_graph(oracle::from_mask(n1, n2, mask),
                    std::to_string(n1) + "x" + std::to_string(n2) + " mask " + std::to_string(mask));
      }
    }
  }
  const auto exhaustive = free_graphs + c4_graphs;
  Rng rng(kSeed + 3);
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto n1 = 3 + uniform_below(rng, 28);
    const auto n2 = 3 + uniform_below(rng, 28);
    const auto seed = derive_seed(kSeed, "c4", {i});
    if (i % 2 == 0) {
      const auto g = oracle::random_c4_free(n1, n2, seed);
      check_graph(g, "stratified C4-free " + std::to_string(i));
    } else {
      BipartiteGraph g;
      std::uint64_t attempt = 0;
      do {
        g = random_bipartite(n1, n2, tenths(rng, 2, 9), seed + attempt++);
      } while (!contains_c4(g));
      check_graph(g, "stratified C4 " + std::to_string(i));
    }
  }
  t.note(std::to_string(exhaustive) + " exhaustive graphs; totals " + std::to_string(free_graphs) + " C4-free, " +
         std::to_string(c4_graphs) + " with C4");
}

// 4
void ordering_chain(Tally& t) {
  Rng rng(kSeed + 4);
  std::size_t redraws = 0;
  std::size_t diagonal = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    BipartiteGraph g;
    for (std::uint64_t attempt = 0;; ++attempt) {
      const auto n1 = 2 + uniform_below(rng, 199);
      const auto n2 = 2 + uniform_below(rng, 199);
      g = random_bipartite(n1, n2, tenths(rng, 1, 9), derive_seed(kSeed, "order", {i, attempt}));
      if (!g.has_isolated_vertices()) break;
      ++redraws;
    }
    const auto p = 1 + uniform_below(rng, 6);
    const auto q = i % 2 == 0 ? p : 1 + uniform_below(rng, 6);
    const auto delta = edge_density(g);
    const auto h = degree_entropies(degree_profile(g));
    const auto sid = sidorenko_lb(p, q, g.n1(), g.n2(), delta).log10();
    const auto basic = entropy_lb_basic(p, q, g.n1(), g.n2(), delta).log10();
    const auto refined = entropy_lb_refined(p, q, g.n1(), g.n2(), delta, h.x, h.y).log10();
    const auto tag = " instance " + std::to_string(i) + " (" + std::to_string(g.n1()) + "x" + std::to_string(g.n2()) +
                     ", p=" + std::to_string(p) + ", q=" + std::to_string(q) + ")";
    t.expect(sid <= basic + kTol, "sidorenko > basic" + tag);
    t.expect(basic <= refined + kTol, "basic > refined" + tag);
    if (p == q) {
      ++diagonal;
      const double gap = static_cast<double>((p - 1) * (p - 1)) * std::log10(2.0);
      t.expect(basic + kTol >= sid + gap, "basic < 2^((p-1)^2) sidorenko" + tag);
    }
  }
  t.note("500 instances, " + std::to_string(diagonal) + " with p = q, " + std::to_string(redraws) +
         " redraws for isolated vertices");
}

// 5
void sandwich(Tally& t) {
  const auto cfg = default_config("fig1");
  double slowest = 0.0;
  for (std::size_t i = 0; i < cfg.deltas.size(); ++i) {
    const auto delta = cfg.deltas[i];
    const auto seed = derive_seed(cfg.seed, "fig1", {i});
    const auto g = random_bipartite(100, 100, delta, seed);

    const auto t0 = Clock::now();
    const auto census = biclique_census(g, 3, 3);
    const auto exact = exact_kpq_count(3, 3, census);
    const double secs = seconds_since(t0);
    slowest = std::max(slowest, secs);
    const auto tag = " at delta " + delta.to_string();
    t.expect(secs < kExactPerInstanceSeconds, "exact took " + std::to_string(secs) + " s" + tag);

    const auto r = bound_report_kpq(3, 3, g, {100, 100, delta, seed, ""});
    t.expect(r.exact && *r.exact == exact, "report exact differs" + tag);
    for (const auto& problem : validate_report(r)) t.expect(false, problem + tag);
    t.expect(r.comb_lb && *r.comb_lb <= exact, "comb" + tag);
    for (const auto* lb : {&r.entropy_lb_basic, &r.entropy_lb_refined, &r.sidorenko_lb}) {
      t.expect(lb->has_value() && ceil_le(**lb, exact, kTol), "ceil(lb) > exact" + tag);
    }
    t.expect(r.general_lb && (r.general_lb->exact ? *r.general_lb->exact <= exact
                                                  : ceil_le(r.general_lb->log, exact, kTol)),
             "general lb" + tag);
    t.expect(r.upper_bound && (exact.is_zero() || log10_of(exact) <= r.upper_bound->value.log10() + kTol),
             "exact > ub" + tag);
  }
  t.note(std::to_string(cfg.deltas.size()) + " instances, slowest exact " + std::to_string(slowest) + " s");
}

// 6
void delta_extremes(Tally& t) {
  const std::vector<std::pair<std::size_t, std::size_t>> shapes{{1, 1}, {2, 2}, {2, 3}, {3, 3}, {3, 5}, {4, 4}};
  const std::vector<std::pair<std::size_t, std::size_t>> sizes{{5, 5}, {7, 12}, {30, 20}, {100, 100}};
  for (const auto& [p, q] : shapes) {
    for (const auto& [n1, n2] : sizes) {
      const auto tag = " K" + std::to_string(p) + "," + std::to_string(q) + " on " + std::to_string(n1) + "x" +
                       std::to_string(n2);
      const auto full = random_bipartite(n1, n2, Rational(1), 1);
      const auto r = bound_report_kpq(p, q, full, {});
      if (!r.exact) {
        t.expect(false, "no exact at delta 1" + tag);
        continue;
      }
      const double e = log10_of(*r.exact);
      t.expect(*r.exact == hom_kpq_complete_target(p, q, n1, n2), "exact at delta 1" + tag);
      t.expect(std::abs(r.entropy_lb_basic->log10() - e) <= kTol, "basic at delta 1" + tag);
      t.expect(std::abs(r.entropy_lb_refined->log10() - e) <= kTol, "refined at delta 1" + tag);
      t.expect(std::abs(r.upper_bound->value.log10() - e) <= kTol, "ub at delta 1" + tag);

      const auto empty = random_bipartite(n1, n2, Rational(0), 1);
      const auto z = bound_report_kpq(p, q, empty, {});
      t.expect(z.exact && z.exact->is_zero(), "exact at delta 0" + tag);
      t.expect(z.comb_lb && z.comb_lb->is_zero(), "comb at delta 0" + tag);
      t.expect(z.entropy_lb_basic->is_zero(), "basic at delta 0" + tag);
      t.expect(z.entropy_lb_refined->is_zero(), "refined at delta 0" + tag);
      t.expect(z.sidorenko_lb->is_zero(), "sidorenko at delta 0" + tag);
      t.expect(z.upper_bound->value.is_zero(), "ub at delta 0" + tag);
      t.expect(z.general_lb && z.general_lb->log.is_zero(), "general lb at delta 0" + tag);
    }
  }
  t.note(std::to_string(shapes.size() * sizes.size()) + " (shape, size) pairs at each extreme");
}

// 7
void eta_identity(Tally& t) {
  const auto p4 = bipartition_of(families::path(4))->graph;
  const auto k22 = hom_k2q_neighborhood(p4, 2);
  const auto e = eta(p4, 2, 2).value;
  const auto whole = oracle::hom(families::path(4), families::path(4));
  t.expect(k22 == BigNat(14), "hom(K22, P4) = " + str(k22));
  t.expect(e == BigNat(2), "eta(P4) = " + str(e));
  t.expect(whole == 16 && BigNat(whole) == k22 + e, "hom(P4, P4) = 14 + 2");

  Rng rng(kSeed + 7);
  std::size_t cases = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto n = 2 + uniform_below(rng, 7);
    const auto n1 = 1 + uniform_below(rng, n - 1);
    const auto g = random_bipartite(n1, n - n1, tenths(rng, 0, 10), derive_seed(kSeed, "eta", {i}));
    for (std::size_t q = 2; q <= 3; ++q) {
      const auto lhs = oracle::hom(oracle::kpq_minus_edge(2, q), g);
      const auto base = oracle::hom(families::complete_bipartite(2, q), g.to_simple());
      const auto et = eta(g, 2, q).value;
      t.expect(BigNat(lhs) == BigNat(base) + et, "graph " + std::to_string(i) + ", q=" + std::to_string(q) + ": " +
                                                     std::to_string(lhs) + " vs " + std::to_string(base) + " + " +
                                                     str(et));
      ++cases;
    }
  }
  t.note(std::to_string(cases) + " (graph, q) cases plus the P4 case");
}

// 8
void monotonicity(Tally& t) {
  Rng rng(kSeed + 8);
  auto exact = [&](const BipartiteGraph& f, const BipartiteGraph& g, const std::string& tag) {
    const auto v = count_hom(f.to_simple(), g.to_simple()).value;
    t.expect(v == BigNat(oracle::hom(f, g)), "count_hom disagrees with brute force " + tag);
    return v;
  };
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto f = random_bipartite(1 + uniform_below(rng, 3), 1 + uniform_below(rng, 3), tenths(rng, 3, 10),
                                    derive_seed(kSeed, "mono-f", {i}));
    const auto g2 = random_bipartite(2 + uniform_below(rng, 3), 2 + uniform_below(rng, 3), tenths(rng, 3, 10),
                                     derive_seed(kSeed, "mono-g", {i}));
    const auto g1 = oracle::random_subgraph(g2, derive_seed(kSeed, "mono-sub", {i}));
    const auto tag = "target pair " + std::to_string(i);
    t.expect(exact(f, g1, tag) <= exact(f, g2, tag), "hom(F,G1) > hom(F,G2) " + tag);
  }
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto f2 = random_bipartite(1 + uniform_below(rng, 3), 1 + uniform_below(rng, 3), tenths(rng, 3, 10),
                                     derive_seed(kSeed, "mono-f2", {i}));
    const auto f1 = oracle::random_subgraph(f2, derive_seed(kSeed, "mono-fsub", {i}));
    const auto g = random_bipartite(2 + uniform_below(rng, 3), 2 + uniform_below(rng, 3), tenths(rng, 2, 10),
                                    derive_seed(kSeed, "mono-g2", {i}));
    const auto tag = "source pair " + std::to_string(i);
    t.expect(exact(f1, g, tag) >= exact(f2, g, tag), "hom(F1,G) < hom(F2,G) " + tag);
  }
  t.note("100 nested target pairs, 100 nested source pairs");
}

// 9
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(cells);
  }
  return rows;
}

std::optional<double> number(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  if (cell == "-inf") return -INFINITY;
  std::size_t used = 0;
  const double v = std::stod(cell, &used);
  if (used != cell.size()) throw std::invalid_argument("bad cell " + cell);
  return v;
}

void figure_regeneration(Tally& t) {
  const std::vector<std::pair<std::string, std::size_t>> figures{{"fig1", 100}, {"fig2", 200}, {"fig3", 24}, {"fig4", 20}};
  for (const auto& [fig, expected_rows] : figures) {
    const auto t0 = Clock::now();
    std::ostringstream out;
    std::ostringstream err;
    const char* argv[] = {"homcount", "experiment", fig.c_str()};
    const int code = cli_dispatch(3, argv, out, err);
    const double secs = seconds_since(t0);
    t.expect(code == 0, fig + " exited " + std::to_string(code) + ": " + err.str());
    t.expect(secs < kFigureSeconds, fig + " took " + std::to_string(secs) + " s");
    if (code != 0) continue;

    const auto rows = parse_csv(out.str());
    t.expect(!rows.empty() && rows.front() == csv_header(fig), fig + " header");
    t.expect(rows.size() == expected_rows + 1, fig + " row count " + std::to_string(rows.size() - 1));
    const auto& header = rows.front();
    auto col = [&](const std::string& name) {
      return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
    };
    std::vector<std::pair<double, double>> keys;
    std::size_t violations = 0;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      const auto& row = rows[r];
      if (row.size() != header.size()) {
        t.expect(false, fig + " row " + std::to_string(r) + " width");
        continue;
      }
      auto get = [&](const std::string& name) { return number(row[col(name)]); };
      try {
        for (const auto& cell : row) (void)number(cell);
      } catch (const std::exception& e) {
        t.expect(false, fig + " row " + std::to_string(r) + ": " + e.what());
        continue;
      }
      auto le = [&](std::optional<double> a, std::optional<double> b) {
        if (!a || !b) return true;
        return *a <= *b + kTol;
      };
      bool ok = true;
      if (fig == "fig1" || fig == "fig2") {
        ok = ok && get("delta_nominal") && get("delta_realized") && get("seed");
        ok = ok && le(get("sidorenko_lb_log10"), get("basic_lb_log10"));
        ok = ok && le(get("basic_lb_log10"), get("refined_lb_log10"));
        for (const auto* lb : {"comb_lb_log10", "basic_lb_log10", "refined_lb_log10", "sidorenko_lb_log10"}) {
          ok = ok && get(lb) && le(get(lb), get("exact_log10"));
        }
        if (fig == "fig1") ok = ok && get("exact_log10");
        keys.emplace_back(fig == "fig2" ? *get("n") : 0.0, *get("delta_nominal"));
      } else {
        ok = ok && get("mean_general_lb_log10") && get("mean_ub_log10");
        ok = ok && le(get("mean_general_lb_log10"), get("mean_ub_log10"));
        if (fig == "fig3") {
          ok = ok && le(get("mean_general_lb_log10"), get("mean_exact_log10"));
          ok = ok && le(get("mean_exact_log10"), get("mean_ub_log10"));
        }
        keys.emplace_back(*get("n"), *get("delta"));
      }
      if (!ok) ++violations;
    }
    t.expect(violations == 0, fig + " rows failing re-validation: " + std::to_string(violations));
    t.expect(std::is_sorted(keys.begin(), keys.end()), fig + " rows not sorted by sweep variable");
    if (fig == "fig1" && rows.size() == 101) {
      const auto top = number(rows[100][col("exact_log10")]);
      t.expect(top && std::abs(*top - log10_of(hom_kpq_complete_target(3, 3, 100, 100))) <= kTol,
               "fig1 delta = 1 exact is not 2e12");
    }

    auto cfg = default_config(fig);
    cfg.exec = Exec::serial;
    std::ostringstream again;
    write_csv(run_experiment(cfg), again);
    t.expect(again.str() == out.str(), fig + " serial rerun differs from the parallel CLI run");
    t.note(fig + ": " + std::to_string(rows.size() - 1) + " rows in " + std::to_string(secs) + " s");
  }
}

// 10
void eta_tree_bound(Tally& t) {
  Rng rng(kSeed + 10);
  std::size_t largest = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto n = 2 + uniform_below(rng, 199);
    largest = std::max<std::size_t>(largest, n);
    const auto tree = random_tree(n, derive_seed(kSeed, "eta-tree", {i}));
    const auto b = bipartition_of(tree)->graph;
    const BigNat cap(2 * n * (n - 1));
    for (std::size_t p = 2; p <= 10; ++p) {
      const auto e = eta(b, p, p).value;
      t.expect(e <= cap, "tree " + std::to_string(i) + " (n=" + std::to_string(n) + "), p=" + std::to_string(p) +
                             ": eta " + str(e) + " > " + str(cap));
      if (n <= 40) t.expect(e == BigNat(oracle::eta(tree, p, p)), "eta disagrees with the literal sum");
    }
  }
  t.note("50 trees up to n=" + std::to_string(largest) + ", p = 2..10");
}

struct Criterion {
  const char* name;
  void (*run)(Tally&);
};

const Criterion kCriteria[] = {
    {"oracle equivalence (exact formula vs brute force)", oracle_equivalence},
    {"closed-form regressions", closed_forms},
    {"C4-free equality dichotomy", c4free_dichotomy},
    {"bound ordering chain", ordering_chain},
    {"sandwich on the K3,3 100x100 delta grid", sandwich},
    {"delta extremes", delta_extremes},
    {"eta identity for K_{2,q} minus an edge", eta_identity},
    {"monotonicity under nested graphs", monotonicity},
    {"figure regeneration", figure_regeneration},
    {"eta tree bound", eta_tree_bound},
};

}  // namespace

int main(int argc, char** argv) {
  std::size_t only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = static_cast<std::size_t>(std::stoul(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--only N]\n";
      return 2;
    }
  }
  const std::size_t count = sizeof(kCriteria) / sizeof(kCriteria[0]);
  if (only > count) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }
  int failed = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (only != 0 && only != i + 1) continue;
    Tally tally;
    const auto t0 = Clock::now();
    try {
      kCriteria[i].run(tally);
    } catch (const std::exception& e) {
      tally.expect(false, std::string("exception: ") + e.what());
    }
    const bool pass = tally.failures() == 0;
    failed += pass ? 0 : 1;
    std::printf("[%s] %zu %s: %zu checks, %zu failures (%.2f s)\n", pass ? "PASS" : "FAIL", i + 1, kCriteria[i].name,
                tally.checks(), tally.failures(), seconds_since(t0));
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
