#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "homcount/census.hpp"
#include "homcount/kernels.hpp"
#include "homcount/rational.hpp"

namespace homcount {

struct ExperimentConfig {
  std::string figure;
  std::uint64_t seed = 2025;
  std::vector<Rational> deltas;
  /// fig2: side size n1 = n2 = n. fig3/fig4: total order, sides n/2.
  std::vector<std::size_t> ns;
  std::size_t instances = 1;
  double budget = kDefaultBudget;
  Exec exec = Exec::parallel;
  std::filesystem::path data_dir = HOMCOUNT_DATA_DIR;
};

/// Defaults for fig1..fig4. Throws std::invalid_argument for other ids.
ExperimentConfig default_config(std::string_view figure);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable run_fig1(const ExperimentConfig& config);
CsvTable run_fig2(const ExperimentConfig& config);
CsvTable run_fig3(const ExperimentConfig& config);
CsvTable run_fig4(const ExperimentConfig& config);
CsvTable run_experiment(const ExperimentConfig& config);

void write_csv(const CsvTable& table, std::ostream& out);

/// Column names per figure.
std::vector<std::string> csv_header(std::string_view figure);

/// "0.01, 0.02, ..." from "a:b:step" or a comma list of rationals/decimals.
std::vector<Rational> parse_delta_grid(std::string_view text);
/// "10:120:10" or "100,1000".
std::vector<std::size_t> parse_n_grid(std::string_view text);

/// Decimal rendering of a rational, exact when it terminates within 12
/// places.
std::string format_rational_decimal(Rational r);

}  // namespace homcount
