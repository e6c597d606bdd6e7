#include "homcount/experiments.hpp"

#include <omp.h>

#include <charconv>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "homcount/graph_io.hpp"
#include "homcount/random.hpp"
#include "homcount/report.hpp"

namespace homcount {

namespace {

std::vector<Rational> percent_grid() {
  std::vector<Rational> out;
  for (int k = 1; k <= 100; ++k) out.emplace_back(k, 100);
  return out;
}

std::vector<std::size_t> step_grid(std::size_t lo, std::size_t hi, std::size_t step) {
  std::vector<std::size_t> out;
  for (std::size_t n = lo; n <= hi; n += step) out.push_back(n);
  return out;
}

std::string ceiled_cell(const std::optional<LogValue>& v) {
  if (!v) return "";
  return v->ceiled().to_log10_string();
}

std::string nat_cell(const std::optional<BigNat>& v) {
  if (!v) return "";
  return lognat_of(*v).to_log10_string();
}

/// Runs task(i) for i in [0, count) across threads; results land by index,
/// and the first failure (lowest index) is rethrown.
template <typename Result, typename Task>
std::vector<Result> run_indexed(std::size_t count, Exec exec, Task task) {
  std::vector<Result> results(count);
  std::vector<std::string> errors(count);
  const auto n = static_cast<std::int64_t>(count);
  auto body = [&](std::int64_t i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      results[idx] = task(idx);
    } catch (const std::exception& e) {
      errors[idx] = e.what();
      if (errors[idx].empty()) errors[idx] = "unknown error";
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) body(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) body(i);
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw std::runtime_error(e);
  }
  return results;
}

void require_valid(const BoundReport& report, const std::string& where) {
  const auto problems = validate_report(report);
  if (problems.empty()) return;
  std::string msg = where + ": validation failed:";
  for (const auto& p : problems) msg += " " + p + ";";
  throw std::runtime_error(msg);
}

std::string describe(std::string_view fig, std::size_t n, Rational delta, std::size_t instance) {
  return std::string(fig) + " n=" + std::to_string(n) + " delta=" + delta.to_string() +
         " instance=" + std::to_string(instance);
}

void check_grid(const ExperimentConfig& c) {
  for (const auto& d : c.deltas) {
    if (d < Rational(0) || d > Rational(1)) throw std::invalid_argument("delta grid values must lie in [0, 1]");
  }
  if (c.instances < 1) throw std::invalid_argument("instances must be at least 1");
}

std::vector<std::string> lb_row_cells(const BoundReport& r, std::uint64_t seed, Rational nominal) {
  return {format_rational_decimal(nominal),
          format_rational_decimal(r.instance.delta),
          std::to_string(seed),
          nat_cell(r.exact),
          nat_cell(r.comb_lb),
          ceiled_cell(r.entropy_lb_basic),
          ceiled_cell(r.entropy_lb_refined),
          ceiled_cell(r.sidorenko_lb)};
}

std::string mean_cell(const std::vector<double>& values) {
  if (values.empty()) return "";
  double sum = 0.0;
  for (const auto v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  return format_log10(mean);
}

BipartiteGraph load_bipartite(const std::filesystem::path& path) { return as_bipartite(read_graph(path)); }

}  // namespace

ExperimentConfig default_config(std::string_view figure) {
  ExperimentConfig c;
  c.figure = std::string(figure);
  if (figure == "fig1") {
    c.deltas = percent_grid();
    c.ns = {100};
  } else if (figure == "fig2") {
    c.deltas = percent_grid();
    c.ns = {100, 1000};
  } else if (figure == "fig3") {
    c.deltas = {Rational(1, 4), Rational(3, 4)};
    c.ns = step_grid(10, 120, 10);
    c.instances = 100;
  } else if (figure == "fig4") {
    c.deltas = {Rational(1, 4), Rational(3, 4)};
    c.ns = step_grid(10, 100, 10);
    c.instances = 50;
  } else {
    throw std::invalid_argument("unknown figure '" + std::string(figure) + "' (expected fig1..fig4)");
  }
  return c;
}

std::vector<std::string> csv_header(std::string_view figure) {
  const std::vector<std::string> lbs = {"delta_nominal",  "delta_realized", "seed",
                                        "exact_log10",    "comb_lb_log10",  "basic_lb_log10",
                                        "refined_lb_log10", "sidorenko_lb_log10"};
  if (figure == "fig1") return lbs;
  if (figure == "fig2") {
    std::vector<std::string> h = {"n"};
    h.insert(h.end(), lbs.begin(), lbs.end());
    return h;
  }
  if (figure == "fig3") {
    return {"n", "delta", "mean_exact_log10", "mean_general_lb_log10", "mean_ub_log10", "instances"};
  }
  if (figure == "fig4") return {"n", "delta", "mean_general_lb_log10", "mean_ub_log10", "instances"};
  throw std::invalid_argument("unknown figure '" + std::string(figure) + "'");
}

CsvTable run_fig1(const ExperimentConfig& config) {
  check_grid(config);
  const std::size_t n = config.ns.empty() ? 100 : config.ns.front();
  CsvTable table{csv_header("fig1"), {}};
  ReportOptions opts{config.budget, Exec::serial, true, true, false};
  table.rows = run_indexed<std::vector<std::string>>(config.deltas.size(), config.exec, [&](std::size_t i) {
    const auto delta = config.deltas[i];
    const auto seed = derive_seed(config.seed, "fig1", {i});
    const auto g = random_bipartite(n, n, delta, seed);
    const auto report = bound_report_kpq(3, 3, g, {n, n, delta, seed, "K3,3"}, opts);
    require_valid(report, describe("fig1", n, delta, 0));
    return lb_row_cells(report, seed, delta);
  });
  return table;
}

CsvTable run_fig2(const ExperimentConfig& config) {
  check_grid(config);
  CsvTable table{csv_header("fig2"), {}};
  ReportOptions opts{config.budget, Exec::serial, false, false, false};
  const auto cells = config.ns.size() * config.deltas.size();
  table.rows = run_indexed<std::vector<std::string>>(cells, config.exec, [&](std::size_t idx) {
    const auto ni = idx / config.deltas.size();
    const auto di = idx % config.deltas.size();
    const auto n = config.ns[ni];
    const auto delta = config.deltas[di];
    const auto seed = derive_seed(config.seed, "fig2", {n, di});
    const auto g = random_bipartite(n, n, delta, seed);
    const auto report = bound_report_kpq(10, 10, g, {n, n, delta, seed, "K10,10"}, opts);
    require_valid(report, describe("fig2", n, delta, 0));
    auto row = lb_row_cells(report, seed, delta);
    row.insert(row.begin(), std::to_string(n));
    return row;
  });
  return table;
}

namespace {

struct InstanceLogs {
  std::optional<double> exact;
  double general = 0.0;
  double ub = 0.0;
};

template <typename Instance>
CsvTable run_cells(const ExperimentConfig& config, std::string_view fig, bool with_exact, Instance instance) {
  check_grid(config);
  CsvTable table{csv_header(fig), {}};
  const auto per_cell = config.instances;
  const auto tasks = config.ns.size() * config.deltas.size() * per_cell;
  const auto logs = run_indexed<InstanceLogs>(tasks, config.exec, [&](std::size_t idx) {
    const auto cell = idx / per_cell;
    const auto k = idx % per_cell;
    const auto ni = cell / config.deltas.size();
    const auto di = cell % config.deltas.size();
    return instance(config.ns[ni], di, config.deltas[di], k);
  });
  for (std::size_t cell = 0; cell < config.ns.size() * config.deltas.size(); ++cell) {
    const auto ni = cell / config.deltas.size();
    const auto di = cell % config.deltas.size();
    std::vector<double> exact;
    std::vector<double> general;
    std::vector<double> ub;
    bool all_exact = true;
    for (std::size_t k = 0; k < per_cell; ++k) {
      const auto& l = logs[cell * per_cell + k];
      if (l.exact) {
        exact.push_back(*l.exact);
      } else {
        all_exact = false;
      }
      general.push_back(l.general);
      ub.push_back(l.ub);
    }
    std::vector<std::string> row = {std::to_string(config.ns[ni]), format_rational_decimal(config.deltas[di])};
    if (with_exact) row.push_back(all_exact ? mean_cell(exact) : "");
    row.push_back(mean_cell(general));
    row.push_back(mean_cell(ub));
    row.push_back(std::to_string(per_cell));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace

CsvTable run_fig3(const ExperimentConfig& config) {
  const auto f = load_bipartite(config.data_dir / "fig3_source.graph");
  ReportOptions opts{config.budget, Exec::serial, true, true, true};
  return run_cells(config, "fig3", true, [&](std::size_t n, std::size_t di, Rational delta, std::size_t k) {
    const auto side = n / 2;
    const auto seed = derive_seed(config.seed, "fig3", {n, di, k});
    const auto g = random_bipartite(side, side, delta, seed);
    const auto report = bound_report(f, g, {side, side, delta, seed, "fig3_source"}, opts);
    require_valid(report, describe("fig3", n, delta, k));
    InstanceLogs logs;
    if (report.exact) logs.exact = lognat_of(*report.exact).log10();
    logs.general = report.general_lb->log.ceiled().log10();
    logs.ub = report.upper_bound->value.log10();
    return logs;
  });
}

CsvTable run_fig4(const ExperimentConfig& config) {
  const auto g = load_bipartite(config.data_dir / "fig4_tree.graph");
  if (!is_tree(g.to_simple())) throw std::runtime_error("fig4 target is not a tree");
  const auto nv = g.vertex_count();
  const BigNat eta_cap(2 * nv * (nv - 1));
  ReportOptions opts{config.budget, Exec::serial, false, true, true};
  return run_cells(config, "fig4", false, [&](std::size_t n, std::size_t di, Rational delta, std::size_t k) {
    const auto side = n / 2;
    const auto seed = derive_seed(config.seed, "fig4", {n, di, k});
    const auto f = random_bipartite(side, side, delta, seed);
    const auto report = bound_report(f, g, {g.n1(), g.n2(), edge_density(g), seed, "random F"}, opts);
    const auto where = describe("fig4", n, delta, k);
    require_valid(report, where);
    if (report.upper_bound->provenance != UbProvenance::c4free_form) {
      throw std::runtime_error(where + ": upper bound did not use the C4-free form");
    }
    const auto simple = f.to_simple();
    for (const auto& comp : connected_components(simple)) {
      const auto part = bipartition_of(induced_subgraph(simple, comp));
      const auto p = part->graph.n1();
      const auto q = part->graph.n2();
      if (p < 2 || q < 2) continue;
      if (eta(g, p, q, Exec::serial).value > eta_cap) {
        throw std::runtime_error(where + ": eta exceeds 2n(n-1) on the tree");
      }
    }
    InstanceLogs logs;
    logs.general = report.general_lb->log.ceiled().log10();
    logs.ub = report.upper_bound->value.log10();
    return logs;
  });
}

CsvTable run_experiment(const ExperimentConfig& config) {
  if (config.figure == "fig1") return run_fig1(config);
  if (config.figure == "fig2") return run_fig2(config);
  if (config.figure == "fig3") return run_fig3(config);
  if (config.figure == "fig4") return run_fig4(config);
  throw std::invalid_argument("unknown figure '" + config.figure + "'");
}

void write_csv(const CsvTable& table, std::ostream& out) {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

namespace {

Rational add(Rational a, Rational b) {
  const auto num = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
  const auto den = static_cast<__int128>(a.den) * b.den;
  const auto g = std::gcd(num < 0 ? -num : num, den);
  return {static_cast<std::int64_t>(num / g), static_cast<std::int64_t>(den / g)};
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::size_t parse_size(std::string_view tok) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw std::invalid_argument("expected a nonnegative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

std::vector<Rational> parse_delta_grid(std::string_view text) {
  std::vector<Rational> out;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw std::invalid_argument("grid range must be start:stop:step");
    const auto lo = Rational::parse(parts[0]);
    const auto hi = Rational::parse(parts[1]);
    const auto step = Rational::parse(parts[2]);
    if (!(step > Rational(0))) throw std::invalid_argument("grid step must be positive");
    for (auto d = lo; d <= hi; d = add(d, step)) out.push_back(d);
  } else {
    for (const auto tok : split(text, ',')) out.push_back(Rational::parse(tok));
  }
  if (out.empty()) throw std::invalid_argument("empty delta grid");
  return out;
}

std::vector<std::size_t> parse_n_grid(std::string_view text) {
  std::vector<std::size_t> out;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw std::invalid_argument("n range must be start:stop:step");
    const auto step = parse_size(parts[2]);
    if (step == 0) throw std::invalid_argument("n step must be positive");
    out = step_grid(parse_size(parts[0]), parse_size(parts[1]), step);
  } else {
    for (const auto tok : split(text, ',')) out.push_back(parse_size(tok));
  }
  if (out.empty()) throw std::invalid_argument("empty n grid");
  return out;
}

std::string format_rational_decimal(Rational r) {
  std::int64_t den = r.den;
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  const int places = std::max(twos, fives);
  if (den != 1 || places > 12) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", r.to_double());
    return buf;
  }
  __int128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const __int128 scaled = static_cast<__int128>(r.num) * (scale / r.den);
  const bool negative = scaled < 0;
  const auto mag = negative ? -scaled : scaled;
  auto whole = std::to_string(static_cast<std::int64_t>(mag / scale));
  std::string frac;
  if (places > 0) {
    frac = std::to_string(static_cast<std::int64_t>(mag % scale));
    frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
  }
  return (negative ? "-" : "") + whole + (frac.empty() ? "" : "." + frac);
}

}  // namespace homcount
