#include <catch2/catch_amalgamated.hpp>

#include <catsort/scan.hpp>
#include <catsort/enumeration.hpp>

#include <atomic>
#include <sstream>
#include <string>
#include <vector>

using namespace catsort;

namespace {
std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}
}  // namespace

TEST_CASE("scan is deterministic across modes and workers") {
  BinomialCache cache(64);
  ScanConfig base;
  base.n_from = 3;
  base.n_to = 40;

  ScanConfig exact = base;
  exact.mode = DeltaMode::exact;
  const auto exact_rows = run_scan(cache, exact);

  ScanConfig fanned = base;
  fanned.workers = 4;
  const auto rows1 = run_scan(cache, base);
  const auto rows4 = run_scan(cache, fanned);

  REQUIRE(rows1.size() == 38);
  REQUIRE(rows4.size() == 38);
  for (size_t i = 0; i < rows1.size(); ++i) {
    REQUIRE(rows1[i].n == long(i) + 3);
    REQUIRE(rows1[i].delta == exact_rows[i].delta);
    REQUIRE(rows1[i].delta == rows4[i].delta);
    REQUIRE(rows1[i].argmin.x == rows4[i].argmin.x);
    REQUIRE(rows1[i].argmin.y == rows4[i].argmin.y);
  }

  for (ScanFormat fmt : {ScanFormat::csv, ScanFormat::jsonl, ScanFormat::oeis_bfile})
    REQUIRE(format_scan(cache, rows1, fmt, OeisSequence::a335212) ==
            format_scan(cache, rows4, fmt, OeisSequence::a335212));
}

TEST_CASE("scan progress callback") {
  BinomialCache cache(32);
  ScanConfig cfg;
  cfg.n_from = 3;
  cfg.n_to = 20;
  cfg.workers = 3;
  std::atomic<long> calls{0};
  long last_done = -1, last_total = -1;
  run_scan(cache, cfg, [&](long done, long total) {
    ++calls;
    last_done = done;
    last_total = total;
  });
  REQUIRE(calls == 18);
  REQUIRE(last_done == 18);
  REQUIRE(last_total == 18);
}

TEST_CASE("scan config validation") {
  BinomialCache cache(32);
  ScanConfig cfg;
  cfg.n_from = 2;
  REQUIRE_THROWS_AS(run_scan(cache, cfg), std::domain_error);
  cfg.n_from = 10;
  cfg.n_to = 9;
  REQUIRE_THROWS_AS(run_scan(cache, cfg), std::domain_error);
  cfg.n_to = 33;  // past the cache
  REQUIRE_THROWS_AS(run_scan(cache, cfg), std::domain_error);
  cfg.n_to = 20;
  cfg.workers = 0;
  REQUIRE_THROWS_AS(run_scan(cache, cfg), std::domain_error);
}

TEST_CASE("csv format") {
  BinomialCache cache(16);
  ScanConfig cfg;
  cfg.n_from = 3;
  cfg.n_to = 5;
  const auto rows = run_scan(cache, cfg);
  const auto lines = split_lines(format_scan(cache, rows, ScanFormat::csv));
  REQUIRE(lines.size() == 4);
  REQUIRE(lines[0] == "n,delta_num,delta_den,argmin_a,argmin_b,delta_float,scaled_n54,log_n_delta");
  REQUIRE(lines[1].rfind("3,1,5,2,1,", 0) == 0);
  REQUIRE(lines[2].rfind("4,2,7,2,1,", 0) == 0);
  REQUIRE(lines[3].rfind("5,4,21,4,2,", 0) == 0);
  // %.17g round-trips the double exactly (mpq_get_d truncates toward zero)
  REQUIRE(lines[1].find("0.19999999999999998") != std::string::npos);
}

TEST_CASE("jsonl format") {
  BinomialCache cache(16);
  ScanConfig cfg;
  cfg.n_from = 3;
  cfg.n_to = 4;
  const auto rows = run_scan(cache, cfg);
  const auto lines = split_lines(format_scan(cache, rows, ScanFormat::jsonl));
  REQUIRE(lines.size() == 2);
  REQUIRE(lines[0].find("\"n\":3") != std::string::npos);
  REQUIRE(lines[0].find("\"delta_num\":\"1\"") != std::string::npos);
  REQUIRE(lines[0].find("\"delta_den\":\"5\"") != std::string::npos);
  REQUIRE(lines[0].find("\"argmin_a\":2") != std::string::npos);
  REQUIRE(lines[0].find("\"argmin_b\":1") != std::string::npos);
  REQUIRE(lines[1].find("\"n\":4") != std::string::npos);
}

TEST_CASE("oeis values and b-files") {
  BinomialCache cache(128);
  ScanConfig cfg;
  cfg.n_from = 3;
  cfg.n_to = 12;
  const auto rows = run_scan(cache, cfg);

  SECTION("frozen leading terms") {
    const long a212[] = {1, 4, 8, 8, 9, 110, 572, 2496, 5762, 3254};
    const long a213[] = {2, 5, 17, 62, 210, 660, 2145, 7150, 26512, 102379};
    for (size_t i = 0; i < rows.size(); ++i) {
      INFO("n=" << rows[i].n);
      REQUIRE(oeis_value(cache, rows[i], OeisSequence::a335212) == a212[i]);
      REQUIRE(oeis_value(cache, rows[i], OeisSequence::a335213) == a213[i]);
    }
  }

  SECTION("b-file layout") {
    const auto lines =
        split_lines(format_scan(cache, rows, ScanFormat::oeis_bfile, OeisSequence::a335212));
    REQUIRE(lines.size() == 10);
    REQUIRE(lines[0] == "3 1");
    REQUIRE(lines[9] == "12 3254");
    const auto alt =
        split_lines(format_scan(cache, rows, ScanFormat::oeis_bfile, OeisSequence::a335213));
    REQUIRE(alt[0] == "3 2");
    REQUIRE(alt[9] == "12 102379");
  }

  SECTION("delta times catalan matches the brute-force oracle") {
    for (const auto& row : rows) {
      DeltaRecord brute = oracle_delta(row.n);
      REQUIRE(row.delta == brute.delta);
      REQUIRE(delta_times_catalan(cache, row) ==
              brute.delta * ExactRatio(cache.catalan(row.n)));
    }
  }
}

TEST_CASE("both sequences stay integral through n=60") {
  BinomialCache cache(128);
  ScanConfig cfg;
  cfg.n_from = 3;
  cfg.n_to = 60;
  cfg.workers = 4;
  const auto rows = run_scan(cache, cfg);
  for (const auto& row : rows) {
    // both converters throw if the division leaves a remainder
    REQUIRE_NOTHROW(oeis_value(cache, row, OeisSequence::a335212));
    REQUIRE_NOTHROW(oeis_value(cache, row, OeisSequence::a335213));
  }
}
