#include "homcount/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "homcount/census.hpp"
#include "homcount/combinatorics.hpp"
#include "homcount/counting.hpp"
#include "homcount/errors.hpp"
#include "homcount/experiments.hpp"
#include "homcount/graph_io.hpp"
#include "homcount/random.hpp"
#include "homcount/report.hpp"

namespace homcount {

namespace {

constexpr int kExitOther = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMissingFile = 3;
constexpr int kExitBudget = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t parse_index(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad " + what + " '" + text + "'");
  }
}

/// cycle:N, path:N (vertices), complete:N1,N2, or a graph file.
SimpleGraph target_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const auto kind = spec.substr(0, colon);
    const auto arg = spec.substr(colon + 1);
    if (kind == "cycle") return families::cycle(parse_index(arg, "cycle length"));
    if (kind == "path") return families::path(parse_index(arg, "path length"));
    if (kind == "complete") {
      const auto comma = arg.find(',');
      if (comma == std::string::npos) throw UsageError("complete target needs N1,N2");
      return families::complete_bipartite(parse_index(arg.substr(0, comma), "N1"),
                                          parse_index(arg.substr(comma + 1), "N2"));
    }
  }
  return as_simple(read_graph(spec));
}

void emit_value(std::ostream& out, bool json, const BigNat& value, std::string_view method) {
  if (json) {
    out << nlohmann::json{{"value", value.to_string()}, {"method", std::string(method)}}.dump() << '\n';
  } else {
    out << value.to_string() << '\n';
  }
}

std::vector<Rational> single_or_grid(const std::string& text) { return parse_delta_grid(text); }

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact homomorphism counts and bounds between bipartite graphs", "homcount"};
  app.require_subcommand(1);

  double budget = kDefaultBudget;
  bool as_json = false;
  bool as_csv = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "work budget (steps)")->check(CLI::PositiveNumber);
    sub->add_flag("--json", as_json, "JSON output");
    sub->add_flag("--csv", as_csv, "CSV output");
  };

  std::string source_path;
  std::string target_path;
  auto* count = app.add_subcommand("count", "hom(F, G) for graph files");
  count->add_option("--source", source_path, "source graph file")->required();
  count->add_option("--target", target_path, "target graph file")->required();
  add_common(count);

  std::size_t p = 0;
  std::size_t q = 0;
  std::string target_spec;
  auto* kpq = app.add_subcommand("kpq", "hom(K_{p,q}, G)");
  kpq->add_option("-p", p, "left side of K_{p,q}")->required()->check(CLI::PositiveNumber);
  kpq->add_option("-q", q, "right side of K_{p,q}")->required()->check(CLI::PositiveNumber);
  kpq->add_option("--target", target_spec, "cycle:N, path:N, complete:N1,N2 or a graph file")->required();
  add_common(kpq);

  std::size_t k_max = 2;
  std::size_t l_max = 2;
  auto* census = app.add_subcommand("census", "biclique census N[k][l]");
  census->add_option("--target", target_path, "bipartite graph file")->required();
  census->add_option("-k", k_max, "largest left subset size");
  census->add_option("-l", l_max, "largest right subset size");
  add_common(census);

  auto* eta_cmd = app.add_subcommand("eta", "eta_{p,q}(G)");
  eta_cmd->add_option("--target", target_path, "bipartite graph file")->required();
  eta_cmd->add_option("-p", p, "p >= 2")->required();
  eta_cmd->add_option("-q", q, "q >= 2")->required();
  add_common(eta_cmd);

  std::optional<std::uint64_t> seed;
  auto* bound = app.add_subcommand("bound", "bound report for (F or K_{p,q}, G)");
  bound->add_option("--target", target_path, "bipartite graph file")->required();
  bound->add_option("--source", source_path, "source graph file");
  bound->add_option("-p", p, "use K_{p,q} as source");
  bound->add_option("-q", q, "use K_{p,q} as source");
  bound->add_option("--seed", seed, "seed recorded in the report");
  add_common(bound);

  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t tree_n = 0;
  std::string delta_text;
  std::string out_path;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "random bipartite graph or random tree");
  gen->add_option("--n1", n1, "left side size");
  gen->add_option("--n2", n2, "right side size");
  gen->add_option("--delta", delta_text, "edge density, e.g. 1/2 or 0.5");
  gen->add_option("--tree", tree_n, "random labelled tree on N vertices (bipartite format)");
  gen->add_option("--seed", gen_seed, "seed");
  gen->add_option("--out", out_path, "output file (default stdout)");

  std::size_t sn = 0;
  std::size_t sk = 0;
  auto* stir = app.add_subcommand("stirling", "Stirling number of the second kind S(n, k)");
  stir->add_option("-n", sn, "n")->required();
  stir->add_option("-k", sk, "k")->required();

  std::string figure;
  std::uint64_t exp_seed = 0;
  std::string grid_text;
  std::string n_text;
  std::size_t instances = 0;
  auto* experiment = app.add_subcommand("experiment", "regenerate a figure's CSV");
  experiment->add_option("figure", figure, "fig1, fig2, fig3 or fig4")->required();
  experiment->add_option("--seed", exp_seed, "master seed");
  experiment->add_option("--out", out_path, "CSV path (default stdout)");
  experiment->add_option("--grid", grid_text, "delta grid: start:stop:step or a comma list");
  experiment->add_option("--delta", delta_text, "single delta or comma list");
  experiment->add_option("--n", n_text, "n grid: start:stop:step or a comma list");
  experiment->add_option("--instances", instances, "instances per cell")->check(CLI::PositiveNumber);
  experiment->add_option("--budget", budget, "work budget (steps)")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (as_json && as_csv) throw UsageError("--json and --csv are exclusive");
    const CountOptions copts{budget, Exec::parallel};

    if (count->parsed()) {
      const auto res = count_hom(read_graph(source_path), read_graph(target_path), copts);
      emit_value(out, as_json, res.value, to_string(res.method));
    } else if (kpq->parsed()) {
      const auto g = target_from_spec(target_spec);
      const auto res = count_hom(families::complete_bipartite(p, q), g, copts);
      emit_value(out, as_json, res.value, to_string(res.method));
    } else if (census->parsed()) {
      const auto g = as_bipartite(read_graph(target_path));
      const auto c = biclique_census(g, k_max, l_max, {budget, Exec::parallel});
      if (as_json) {
        nlohmann::json table = nlohmann::json::array();
        for (std::size_t k = 1; k <= k_max; ++k) {
          nlohmann::json row = nlohmann::json::array();
          for (std::size_t l = 1; l <= l_max; ++l) row.push_back(c.at(k, l).to_string());
          table.push_back(row);
        }
        out << nlohmann::json{{"k_max", k_max}, {"l_max", l_max}, {"N", table}}.dump() << '\n';
      } else {
        out << "k,l,count\n";
        for (std::size_t k = 1; k <= k_max; ++k) {
          for (std::size_t l = 1; l <= l_max; ++l) out << k << ',' << l << ',' << c.at(k, l).to_string() << '\n';
        }
      }
    } else if (eta_cmd->parsed()) {
      if (p < 2 || q < 2) throw UsageError("eta requires p, q >= 2");
      const auto g = as_bipartite(read_graph(target_path));
      emit_value(out, as_json, eta(g, p, q).value, "eta");
    } else if (bound->parsed()) {
      const auto g = as_bipartite(read_graph(target_path));
      const ReportOptions ropts{budget, Exec::parallel, true, true, true};
      InstanceInfo info{g.n1(), g.n2(), Rational(0), seed, ""};
      BoundReport report;
      if (!source_path.empty()) {
        if (p != 0 || q != 0) throw UsageError("give either --source or -p/-q");
        info.source = source_path;
        report = bound_report(as_bipartite(read_graph(source_path)), g, info, ropts);
      } else {
        if (p == 0 || q == 0) throw UsageError("bound needs --source or both -p and -q");
        report = bound_report_kpq(p, q, g, info, ropts);
      }
      out << to_json(report).dump(2) << '\n';
    } else if (gen->parsed()) {
      std::ostringstream text;
      if (tree_n > 0) {
        if (n1 != 0 || n2 != 0 || !delta_text.empty()) throw UsageError("--tree excludes --n1/--n2/--delta");
        const auto t = random_tree(tree_n, gen_seed);
        const auto part = bipartition_of(t);
        write_graph(part->graph, text);
      } else {
        if (delta_text.empty()) throw UsageError("gen needs --delta (or --tree)");
        write_graph(random_bipartite(n1, n2, Rational::parse(delta_text), gen_seed), text);
      }
      if (out_path.empty()) {
        out << text.str();
      } else {
        std::ofstream file(out_path);
        if (!file) throw FileNotFound(out_path);
        file << text.str();
      }
    } else if (stir->parsed()) {
      out << stirling2(sn, sk).to_string() << '\n';
    } else if (experiment->parsed()) {
      auto config = default_config(figure);
      if (experiment->count("--seed") > 0) config.seed = exp_seed;
      if (!grid_text.empty() && !delta_text.empty()) throw UsageError("--grid and --delta are exclusive");
      if (!grid_text.empty()) config.deltas = parse_delta_grid(grid_text);
      if (!delta_text.empty()) config.deltas = single_or_grid(delta_text);
      if (!n_text.empty()) config.ns = parse_n_grid(n_text);
      if (instances > 0) config.instances = instances;
      config.budget = budget;
      const auto table = run_experiment(config);
      if (out_path.empty()) {
        write_csv(table, out);
      } else {
        std::ofstream file(out_path);
        if (!file) throw FileNotFound(out_path);
        write_csv(table, file);
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FileNotFound& e) {
    err << "error: " << e.what() << '\n';
    return kExitMissingFile;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitOther;
  }
  return 0;
}

}  // namespace homcount
