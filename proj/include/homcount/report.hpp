#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "homcount/bounds.hpp"
#include "homcount/counting.hpp"

namespace homcount {

inline constexpr double kLog10Tolerance = 1e-9;

struct InstanceInfo {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  Rational delta;
  std::optional<std::uint64_t> seed;
  std::string source;
};

/// Every bound for one (F, G) pair. Absent fields stay nullopt. Lower
/// bounds are stored raw; the ceiling is applied by validate_report.
struct BoundReport {
  InstanceInfo instance;
  std::optional<BigNat> exact;
  std::optional<CountMethod> exact_method;
  std::optional<BigNat> comb_lb;
  std::optional<LogValue> entropy_lb_basic;
  std::optional<LogValue> entropy_lb_refined;
  std::optional<LogValue> sidorenko_lb;
  std::optional<UpperBound> upper_bound;
  std::optional<HybridValue> general_lb;
  std::optional<double> x_nats;
  std::optional<double> y_nats;
  std::vector<std::string> flags;
};

struct ReportOptions {
  double budget = kDefaultBudget;
  Exec exec = Exec::parallel;
  bool compute_exact = true;
  bool compute_upper = true;
  bool compute_general = true;
};

/// The K_{p,q} bounds use (p, q) = the side sizes of F, which F spans.
BoundReport bound_report(const BipartiteGraph& f, const BipartiteGraph& g, InstanceInfo instance,
                         const ReportOptions& options = {});
BoundReport bound_report_kpq(std::size_t p, std::size_t q, const BipartiteGraph& g, InstanceInfo instance,
                             const ReportOptions& options = {});

/// Sandwich (ceil(lb) <= exact <= ub) and ordering chain
/// (sidorenko <= basic <= refined). Returns one message per violation.
std::vector<std::string> validate_report(const BoundReport& report, double tol = kLog10Tolerance);

nlohmann::json to_json(const BoundReport& report);

}  // namespace homcount
