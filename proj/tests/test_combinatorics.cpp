#include <cmath>
#include <thread>

#include "doctest.h"
#include "homcount/combinatorics.hpp"
#include "homcount/log_value.hpp"
#include "oracles.hpp"

using namespace homcount;

TEST_CASE("stirling small rows") {
  for (std::size_t n = 1; n <= 12; ++n) {
    CHECK(stirling2(n, 1) == BigNat(1));
    CHECK(stirling2(n, 2) == BigNat((std::uint64_t{1} << (n - 1)) - 1));
    CHECK(stirling2(n, n) == BigNat(1));
  }
  CHECK(stirling2(3, 5) == BigNat(0));
  CHECK(stirling2(4, 2) == BigNat(7));
  CHECK(stirling2(0, 0) == BigNat(1));
  CHECK(stirling2(5, 0) == BigNat(0));
}

TEST_CASE("stirling closed form") {
  CHECK(stirling2_closed_form(5, 3) == BigNat(25));
  CHECK(stirling2_closed_form(9, 9) == BigNat(1));
  CHECK(stirling2_closed_form(6, 1) == BigNat(1));
  CHECK_THROWS_AS(stirling2_closed_form(3, 5), std::invalid_argument);
  CHECK_THROWS_AS(stirling2_closed_form(3, 0), std::invalid_argument);
  for (std::size_t n = 1; n <= 40; ++n) {
    for (std::size_t k = 1; k <= n; ++k) REQUIRE(stirling2_closed_form(n, k) == stirling2(n, k));
  }
}

TEST_CASE("k! S(n,k) counts surjections") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      CHECK(factorial(k) * stirling2(n, k) == BigNat(oracle::surjections(n, k)));
    }
  }
}

TEST_CASE("sum_k S(n,k) m^(k falling) = m^n") {
  for (std::uint64_t n = 1; n <= 8; ++n) {
    for (std::uint64_t m = 0; m <= 8; ++m) {
      BigNat sum;
      for (std::size_t k = 1; k <= n; ++k) sum += stirling2(n, k) * falling_factorial(m, k);
      CHECK(sum == BigNat::pow(m, n));
    }
  }
}

TEST_CASE("stirling table grows beyond its initial capacity") {
  StirlingTable t(4);
  CHECK(t.get(70, 69) == binomial(70, 2));
  CHECK(t.capacity() >= 70);
  CHECK(t.get(100, 2) == BigNat::pow(BigNat(2), 99) - BigNat(1));
}

TEST_CASE("stirling table under concurrent readers") {
  StirlingTable t(2);
  std::vector<std::thread> threads;
  std::vector<int> ok(8, 0);
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&, i] {
      bool good = true;
      for (std::size_t n = 1; n < 60; ++n) good = good && t.get(n + static_cast<std::size_t>(i), 1) == BigNat(1);
      ok[static_cast<std::size_t>(i)] = good ? 1 : 0;
    });
  }
  for (auto& th : threads) th.join();
  for (auto v : ok) CHECK(v == 1);
}

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == BigNat(10));
  CHECK(binomial(17, 0) == BigNat(1));
  CHECK(binomial(3, 7) == BigNat(0));
  for (std::size_t n = 0; n <= 30; ++n) {
    for (std::size_t k = 0; k <= n + 1; ++k) REQUIRE(binomial(n, k) == BigNat(oracle::pascal(n, k)));
  }
  CHECK(factorial(0) == BigNat(1));
  CHECK(factorial(20) == BigNat(2432902008176640000ULL));
  CHECK(falling_factorial(3, 4) == BigNat(0));
  CHECK(falling_factorial(7, 3) == BigNat(210));
}

TEST_CASE("bignat arithmetic") {
  CHECK(BigNat::parse("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
  CHECK_THROWS_AS(BigNat(3) - BigNat(4), std::domain_error);
  CHECK_THROWS_AS(BigNat::parse("-1"), std::invalid_argument);
  BigNat acc(5);
  acc.add_product(BigNat(6), BigNat(7));
  CHECK(acc == BigNat(47));
  CHECK(BigNat(0).digits() == 1);
  CHECK(BigNat::pow(10, 30).digits() == 31);
  CHECK_FALSE(BigNat::pow(2, 64).to_u64());
  CHECK(BigNat(7) < BigNat(9));
}

TEST_CASE("lognat_of and pow_log") {
  CHECK(lognat_of(BigNat(1000)).log10() == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(lognat_of(BigNat(0)).is_zero());
  CHECK(pow_log(LogValue::from_log10(2.0), Rational(3, 2)).log10() == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(pow_log(LogValue::zero(), Rational(2)).is_zero());
  CHECK_THROWS_AS(pow_log(LogValue::zero(), Rational(0)), std::domain_error);
  CHECK_THROWS_AS(pow_log(LogValue::zero(), Rational(-1, 2)), std::domain_error);
}

TEST_CASE("lognat_of keeps 1e-12 relative accuracy on huge inputs") {
  const auto big = BigNat::pow(10, 600000);
  CHECK(std::abs(lognat_of(big).log10() - 600000.0) <= 1e-12 * 600000.0);
  const auto seven = BigNat::pow(7, 1000000);
  const double want = 1000000.0 * std::log10(7.0);
  CHECK(std::abs(lognat_of(seven).log10() - want) <= 1e-12 * want);
  const auto near = BigNat::pow(2, 4000) - BigNat(1);
  CHECK(std::abs(lognat_of(near).log10() - 4000 * std::log10(2.0)) <= 1e-12 * 4000);
}

TEST_CASE("log values") {
  const auto a = LogValue::of(3.0);
  const auto b = LogValue::of(5.0);
  CHECK((a * b).to_double() == doctest::Approx(15.0));
  CHECK((a + b).to_double() == doctest::Approx(8.0));
  CHECK((b / a).to_double() == doctest::Approx(5.0 / 3.0));
  CHECK((a + LogValue::zero()) == a);
  CHECK((a * LogValue::zero()).is_zero());
  CHECK_THROWS_AS(a / LogValue::zero(), std::domain_error);
  CHECK_THROWS_AS(LogValue::of(-1.0), std::domain_error);
  CHECK(LogValue::zero() < a);
  CHECK(log_diff_clamped(b, a).to_double() == doctest::Approx(2.0));
  CHECK(log_diff_clamped(a, b).is_zero());
  CHECK(log_diff_clamped(a, a).is_zero());
  CHECK(LogValue::zero().to_log10_string() == "-inf");
  CHECK(LogValue::of(100.0).to_log10_string() == "2");
}

TEST_CASE("ceiling convention") {
  CHECK(LogValue::zero().ceiled().is_zero());
  CHECK(LogValue::of(0.25).ceiled() == LogValue::one());
  CHECK(LogValue::of(2.3).ceiled().to_double() == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(LogValue::of(7.0).ceiled().to_double() == doctest::Approx(7.0).epsilon(1e-15));
  const auto huge = LogValue::from_log10(40.0);
  CHECK(huge.ceiled() == huge);
  CHECK(ceil_le(LogValue::of(6.5), BigNat(7), 1e-9));
  CHECK_FALSE(ceil_le(LogValue::of(7.5), BigNat(7), 1e-9));
  CHECK(ceil_le(LogValue::of(0.3), BigNat(1), 1e-9));
  CHECK_FALSE(ceil_le(LogValue::of(0.3), BigNat(0), 1e-9));
  CHECK(ceil_le(LogValue::zero(), BigNat(0), 1e-9));
}
