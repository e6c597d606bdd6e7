#include "homcount/report.hpp"

#include "homcount/errors.hpp"

namespace homcount {

namespace {

bool has_flag(const std::vector<std::string>& flags, const std::string& f) {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

void add_flag(std::vector<std::string>& flags, const std::string& f) {
  if (!has_flag(flags, f)) flags.push_back(f);
}

}  // namespace

BoundReport bound_report(const BipartiteGraph& f, const BipartiteGraph& g, InstanceInfo instance,
                         const ReportOptions& options) {
  BoundReport r;
  instance.n1 = g.n1();
  instance.n2 = g.n2();
  if (g.n1() > 0 && g.n2() > 0) instance.delta = edge_density(g);
  r.instance = std::move(instance);
  const BoundOptions bopts{options.budget, options.exec};
  KpqOracle oracle(g, bopts);

  const auto p = f.n1();
  const auto q = f.n2();
  const bool is_complete = f.edge_count() == p * q && p > 0 && q > 0;

  if (options.compute_exact) {
    try {
      if (is_complete) {
        if (auto v = oracle.exact(p, q)) {
          r.exact = *v;
          r.exact_method = CountMethod::census_formula;
        }
      }
      if (!r.exact) {
        const auto res = count_hom(f.to_simple(), g.to_simple(), {options.budget, options.exec});
        r.exact = res.value;
        r.exact_method = res.method;
        for (const auto& fl : res.flags) add_flag(r.flags, fl);
      }
    } catch (const BudgetExceeded&) {
      add_flag(r.flags, "exact_budget_exceeded");
    }
  }

  if (p > 0 && q > 0 && g.n1() > 0 && g.n2() > 0) {
    const auto comb = combinatorial_lb(p, q, g);
    r.comb_lb = comb.value;
    if (comb.equality_certified) add_flag(r.flags, "c4_free");
    const auto delta = r.instance.delta;
    r.entropy_lb_basic = entropy_lb_basic(p, q, g.n1(), g.n2(), delta);
    r.sidorenko_lb = sidorenko_lb(p, q, g.n1(), g.n2(), delta);
    if (g.has_isolated_vertices()) add_flag(r.flags, "sidorenko_isolated_vertices_caveat");
    if (g.edge_count() > 0) {
      const auto h = degree_entropies(degree_profile(g));
      r.x_nats = h.x;
      r.y_nats = h.y;
      r.entropy_lb_refined = entropy_lb_refined(p, q, g.n1(), g.n2(), delta, h.x, h.y);
    } else {
      r.entropy_lb_refined = LogValue::zero();
    }
  }

  if (options.compute_upper) {
    r.upper_bound = upper_bound_general(f, g, oracle);
    if (r.upper_bound->provenance == UbProvenance::complete_target_fallback) {
      add_flag(r.flags, "upper_bound_fallback");
    }
  }
  if (options.compute_general) r.general_lb = general_lower_bound(f, g, oracle);
  return r;
}

BoundReport bound_report_kpq(std::size_t p, std::size_t q, const BipartiteGraph& g, InstanceInfo instance,
                             const ReportOptions& options) {
  if (instance.source.empty()) instance.source = "K" + std::to_string(p) + "," + std::to_string(q);
  return bound_report(BipartiteGraph::complete(p, q), g, std::move(instance), options);
}

std::vector<std::string> validate_report(const BoundReport& r, double tol) {
  std::vector<std::string> problems;
  if (r.exact) {
    const auto& exact = *r.exact;
    const auto exact_log = lognat_of(exact);
    if (r.comb_lb && *r.comb_lb > exact) problems.push_back("comb_lb exceeds exact");
    auto check = [&](const std::optional<LogValue>& lb, const char* name) {
      if (lb && !ceil_le(*lb, exact, tol)) problems.push_back(std::string(name) + " exceeds exact");
    };
    check(r.entropy_lb_basic, "entropy_lb_basic");
    check(r.entropy_lb_refined, "entropy_lb_refined");
    check(r.sidorenko_lb, "sidorenko_lb");
    if (r.general_lb) {
      if (r.general_lb->exact) {
        if (*r.general_lb->exact > exact) problems.push_back("general_lb exceeds exact");
      } else {
        check(r.general_lb->log, "general_lb");
      }
    }
    if (r.upper_bound && !exact.is_zero()) {
      if (r.upper_bound->value.is_zero() || exact_log.log10() > r.upper_bound->value.log10() + tol) {
        problems.push_back("exact exceeds upper_bound");
      }
    }
  }
  auto le = [tol](const std::optional<LogValue>& a, const std::optional<LogValue>& b) {
    if (!a || !b || a->is_zero()) return true;
    if (b->is_zero()) return false;
    return a->log10() <= b->log10() + tol;
  };
  if (r.general_lb && r.upper_bound && !le(r.general_lb->log, r.upper_bound->value)) {
    problems.push_back("general_lb exceeds upper_bound");
  }
  if (!le(r.sidorenko_lb, r.entropy_lb_basic)) problems.push_back("sidorenko_lb exceeds entropy_lb_basic");
  if (!le(r.entropy_lb_basic, r.entropy_lb_refined)) problems.push_back("entropy_lb_basic exceeds entropy_lb_refined");
  return problems;
}

namespace {

nlohmann::json log10_json(const std::optional<LogValue>& v) {
  if (!v) return nullptr;
  if (v->is_zero()) return "-inf";
  return v->log10();
}

}  // namespace

nlohmann::json to_json(const BoundReport& r) {
  using nlohmann::json;
  json instance = {
      {"n1", r.instance.n1},
      {"n2", r.instance.n2},
      {"delta", r.instance.delta.to_string()},
      {"delta_value", r.instance.delta.to_double()},
      {"seed", r.instance.seed ? json(*r.instance.seed) : json(nullptr)},
      {"source", r.instance.source},
  };
  json general = nullptr;
  if (r.general_lb) {
    general = {{"log10", log10_json(r.general_lb->log)},
               {"exact", r.general_lb->exact ? json(r.general_lb->exact->to_string()) : json(nullptr)}};
  }
  return {
      {"instance", instance},
      {"exact", r.exact ? json(r.exact->to_string()) : json(nullptr)},
      {"exact_method", r.exact_method ? json(std::string(to_string(*r.exact_method))) : json(nullptr)},
      {"comb_lb", r.comb_lb ? json(r.comb_lb->to_string()) : json(nullptr)},
      {"entropy_lb_basic_log10", log10_json(r.entropy_lb_basic)},
      {"entropy_lb_refined_log10", log10_json(r.entropy_lb_refined)},
      {"sidorenko_lb_log10", log10_json(r.sidorenko_lb)},
      {"upper_bound_log10", r.upper_bound ? log10_json(r.upper_bound->value) : json(nullptr)},
      {"upper_bound_provenance",
       r.upper_bound ? json(std::string(to_string(r.upper_bound->provenance))) : json(nullptr)},
      {"general_lb", general},
      {"x_nats", r.x_nats ? json(*r.x_nats) : json(nullptr)},
      {"y_nats", r.y_nats ? json(*r.y_nats) : json(nullptr)},
      {"flags", r.flags},
  };
}

}  // namespace homcount
