#pragma once

#include <stdexcept>
#include <string>

namespace homcount {

/// Malformed graph file; the message names the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Input file could not be opened.
class FileNotFound : public std::runtime_error {
 public:
  explicit FileNotFound(const std::string& path) : std::runtime_error("cannot open " + path) {}
};

/// A configured work budget would be exceeded. `estimate` is the predicted
/// step count that tripped the guard.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double estimate, double budget)
      : std::runtime_error(what + ": estimated " + format(estimate) + " steps exceeds budget " +
                           format(budget)),
        estimate_(estimate),
        budget_(budget) {}
  double estimate() const { return estimate_; }
  double budget() const { return budget_; }

 private:
  static std::string format(double x);
  double estimate_;
  double budget_;
};

}  // namespace homcount
