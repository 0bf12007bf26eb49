#include <catsort/exact.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>

#include "test_util.hpp"

using catsort::BinomialCache;
using catsort::ExactInt;
using catsort::ExactRatio;

TEST_CASE("binomial matches Pascal's triangle") {
  BinomialCache cache(40);
  const auto pascal = testutil::pascal(80);
  for (long m = 0; m <= 80; ++m)
    for (long k = 0; k <= m; ++k) REQUIRE(cache.binomial(m, k) == pascal[m][k]);
}

TEST_CASE("binomial outside the triangle is zero") {
  BinomialCache cache(10);
  REQUIRE(cache.binomial(5, -1) == 0);
  REQUIRE(cache.binomial(5, 6) == 0);
  REQUIRE(cache.binomial(0, 0) == 1);
}

TEST_CASE("binomial rejects negative m") {
  BinomialCache cache(10);
  REQUIRE_THROWS_AS(cache.binomial(-1, 0), std::domain_error);
}

TEST_CASE("catalan values") {
  BinomialCache cache(100);
  const long want[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (long n = 0; n <= 10; ++n) REQUIRE(cache.catalan(n) == want[n]);
  REQUIRE(cache.catalan(15) == 9694845);
  // catalan(n) = C(2n,n) - C(2n,n+1)
  for (long n = 0; n <= 100; ++n)
    REQUIRE(cache.catalan(n) == cache.binomial(2 * n, n) - cache.binomial(2 * n, n + 1));
}

TEST_CASE("capacity errors name the required size") {
  BinomialCache cache(10);
  REQUIRE(cache.n_max() == 10);
  REQUIRE(cache.binomial(20, 10) > 0);
  REQUIRE_THROWS_AS(cache.binomial(21, 10), catsort::capacity_error);
  try {
    cache.binomial(21, 10);
    FAIL("expected capacity_error");
  } catch (const catsort::capacity_error& e) {
    REQUIRE(e.required_n_max() == 11);
    REQUIRE(std::string(e.what()).find("n_max >= 11") != std::string::npos);
    REQUIRE(std::string(e.what()).find("n_max = 10") != std::string::npos);
  }
  REQUIRE_THROWS_AS(cache.catalan(11), catsort::capacity_error);
}

TEST_CASE("default capacity covers the full scan range") {
  BinomialCache cache;  // default 2000
  REQUIRE(cache.n_max() == 2000);
  const ExactInt big = cache.binomial(2000, 1000);
  REQUIRE(big.get_str().size() == 601);  // ~ 2.05e600
  REQUIRE(cache.catalan(1000) > 0);
}

TEST_CASE("log_binomial tracks the exact value") {
  BinomialCache cache(2000);
  for (long m : {10L, 100L, 999L, 2000L, 3555L, 4000L})
    for (long k : {0L, 1L, m / 3, m / 2}) {
      const double exact_log = testutil::log_of(cache.binomial(m, k));
      REQUIRE(std::fabs(cache.log_binomial(m, k) - exact_log) < 1e-8);
    }
  REQUIRE(std::isinf(cache.log_binomial(10, 11)));
  REQUIRE(cache.log_binomial(10, 11) < 0);
}

TEST_CASE("make_ratio canonicalizes") {
  const ExactRatio q = catsort::make_ratio(ExactInt(6), ExactInt(-8));
  REQUIRE(q.get_num() == -3);
  REQUIRE(q.get_den() == 4);
  REQUIRE(catsort::ratio_string(q) == "-3/4");
  REQUIRE(catsort::to_double(q) == -0.75);
  REQUIRE_THROWS_AS(catsort::make_ratio(ExactInt(1), ExactInt(0)), std::domain_error);
}
