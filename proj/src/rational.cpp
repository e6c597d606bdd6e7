#include <charconv>
#include <cstdio>
#include <limits>

#include "homcount/errors.hpp"
#include "homcount/rational.hpp"

namespace homcount {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return {parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text)};
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto int_part = text.substr(0, dot);
    const auto frac_part = text.substr(dot + 1);
    if (frac_part.size() > 15) throw std::invalid_argument("too many decimals: '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const bool negative = !int_part.empty() && int_part.front() == '-';
    const auto whole = int_part.empty() || int_part == "-" ? 0 : parse_int(int_part, text);
    const auto frac = frac_part.empty() ? 0 : parse_int(frac_part, text);
    if (frac < 0) throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    const auto magnitude = (whole < 0 ? -whole : whole) * scale + frac;
    return {negative ? -magnitude : magnitude, scale};
  }
  return {parse_int(text, text), 1};
}

std::string BudgetExceeded::format(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

}  // namespace homcount
