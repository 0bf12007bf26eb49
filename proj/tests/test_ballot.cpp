#include <catsort/ballot.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "test_util.hpp"

using catsort::BinomialCache;
using catsort::ExactInt;

TEST_CASE("ballot counts match exhaustive path counts") {
  BinomialCache cache(40);
  for (long b = 0; b <= 40; ++b)
    for (long a = 0; a <= b; ++a)
      REQUIRE(catsort::ballot_count(cache, a, b) == testutil::count_above_diagonal_paths(a, b));
}

TEST_CASE("ballot count equals the binomial difference") {
  BinomialCache cache(60);
  for (long b = 0; b <= 60; ++b)
    for (long a = 0; a <= b; ++a)
      REQUIRE(catsort::ballot_count(cache, a, b) ==
              cache.binomial(a + b, a) - cache.binomial(a + b, a - 1));
}

TEST_CASE("ballot special columns") {
  BinomialCache cache(30);
  for (long b = 0; b <= 30; ++b) {
    REQUIRE(catsort::ballot_count(cache, 0, b) == 1);
    REQUIRE(catsort::ballot_count(cache, b, b) == cache.catalan(b));
  }
}

TEST_CASE("ballot domain errors") {
  BinomialCache cache(10);
  REQUIRE_THROWS_AS(catsort::ballot_count(cache, -1, 3), std::domain_error);
  REQUIRE_THROWS_AS(catsort::ballot_count(cache, 4, 3), std::domain_error);
}

TEST_CASE("log ballot tracks the exact value") {
  BinomialCache cache(1000);
  for (long b : {5L, 50L, 400L, 999L})
    for (long a : {0L, 1L, b / 2, b - 1, b}) {
      const ExactInt exact = catsort::ballot_count(cache, a, b);
      REQUIRE(std::fabs(catsort::log_ballot_count(cache, a, b) - testutil::log_of(exact)) < 1e-8);
    }
}

TEST_CASE("segment counts demand a valid window") {
  BinomialCache cache(20);
  REQUIRE_THROWS_AS(catsort::segment_counts(cache, 10, 10, 1), std::domain_error);  // h = n
  REQUIRE_THROWS_AS(catsort::segment_counts(cache, 10, 3, 3), std::domain_error);   // z >= h
  REQUIRE_THROWS_AS(catsort::segment_counts(cache, 10, 3, 0), std::domain_error);
  REQUIRE_NOTHROW(catsort::segment_counts(cache, 10, 9, 8));
}

TEST_CASE("path difference equals the segment count gap") {
  BinomialCache cache(60);
  for (long n = 3; n <= 30; ++n)
    for (long h = 2; h < n; ++h)
      for (long z = 1; z < h; ++z) {
        const auto seg = catsort::segment_counts(cache, n, h, z);
        const ExactInt diff = catsort::path_difference(cache, n, h, z);
        REQUIRE(diff == seg.vertical - seg.horizontal);
        // sign is decided by which side of the central height h sits on
        const long side = n + z - 2 * h;
        REQUIRE(sgn(diff) == ((side > 0) - (side < 0)));
      }
}

TEST_CASE("path difference vanishes exactly on the central line") {
  BinomialCache cache(50);
  for (long n = 4; n <= 24; ++n)
    for (long z = 1; z < n; ++z) {
      if ((n + z) % 2 != 0) continue;
      const long h = (n + z) / 2;
      if (h < 2 || h >= n || z >= h) continue;
      REQUIRE(catsort::path_difference(cache, n, h, z) == 0);
    }
}
