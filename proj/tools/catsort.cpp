#include <catsort/enumeration.hpp>
#include <catsort/excursion.hpp>
#include <catsort/scan.hpp>
#include <catsort/sorting.hpp>
#include <catsort/verify.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

long cache_capacity_from_env() {
  const char* env = std::getenv("CATSORT_NMAX");
  if (!env || !*env) return 2000;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1)
    throw std::domain_error("CATSORT_NMAX must be a positive integer");
  return v;
}

std::string ratio_with_float(const catsort::ExactRatio& q) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", catsort::to_double(q));
  return catsort::ratio_string(q) + " \xE2\x89\x88 " + buf;  // "num/den ≈ float"
}

int print_report(const catsort::VerifyReport& report) {
  for (const auto& c : report.checks) {
    if (c.passed)
      std::cout << "PASS " << c.name << " (" << c.assertions << " assertions)"
                << (c.detail.empty() ? "" : " [" + c.detail + "]") << "\n";
    else
      std::cout << "FAIL " << c.name << ": " << c.detail << "\n";
  }
  std::cout << (report.all_passed() ? "suite passed" : "suite FAILED") << "\n";
  return report.all_passed() ? 0 : 1;
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << bytes;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact sorting probabilities of the two-row Catalan poset"};
  app.require_subcommand(1);

  long n = 0, h = 0, z = 0;
  long max_n = 0;
  long col = 1;
  int row = 1;

  auto* rn = app.add_subcommand("rn", "evaluate R_n(h,z) = P[L(2,h-z) < L(1,h)] exactly");
  rn->set_help_flag("--help");  // frees -h/--h for the height option
  rn->add_option("--n", n, "poset size")->required();
  rn->add_option("--h", h, "height (1..n)")->required();
  rn->add_option("--z", z, "offset (1..h-1)")->required();

  auto* dl = app.add_subcommand("delta", "minimum sorting margin over all incomparable pairs");
  dl->add_option("--n", n, "poset size")->required();
  bool exact_mode = false, screened_mode = false;
  dl->add_flag("--exact", exact_mode, "scan every pair with exact arithmetic");
  dl->add_flag("--screened", screened_mode, "float screening with exact re-verification (default)");

  auto* sc = app.add_subcommand("scan", "delta(P_n) over a range of n");
  catsort::ScanConfig scan_cfg;
  std::string scan_mode = "screened", scan_format = "csv", output_path;
  sc->add_option("--from", scan_cfg.n_from, "first n (>= 3)")->required();
  sc->add_option("--to", scan_cfg.n_to, "last n")->required();
  sc->add_option("--mode", scan_mode, "exact | screened")
      ->check(CLI::IsMember({"exact", "screened"}));
  sc->add_option("--workers", scan_cfg.workers, "worker threads (default 1)");
  sc->add_option("--format", scan_format, "csv | jsonl | oeis-bfile")
      ->check(CLI::IsMember({"csv", "jsonl", "oeis-bfile", "oeis_bfile"}));
  sc->add_option("--output", output_path, "output path ('-' for stdout, default)");
  bool quiet = false;
  sc->add_flag("--quiet", quiet, "suppress progress on stderr");

  auto* ex = app.add_subcommand("export-oeis", "write a b-file for A335212 or A335213");
  std::string sequence = "A335212";
  ex->add_option("--sequence", sequence, "A335212 (delta*Cat) or A335213 ((Cat-delta*Cat)/2)")
      ->check(CLI::IsMember({"A335212", "A335213"}));
  ex->add_option("--max-n", max_n, "last n (from 3)")->required();
  ex->add_option("--output", output_path, "output path ('-' for stdout, default)");
  ex->add_option("--workers", scan_cfg.workers, "worker threads (default 1)");

  auto* vf = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::vector<long> crossing_ns;
  vf->add_option("--suite", suite, "lemmas | oracle | limit | crossing")
      ->required()
      ->check(CLI::IsMember({"lemmas", "oracle", "limit", "crossing"}));
  vf->add_option("--max-n", max_n, "range bound (lemmas default 60, oracle default 10)");
  vf->add_option("--n", crossing_ns, "crossing suite: n values (default 1000)");

  auto* lm = app.add_subcommand("limit", "evaluate the excursion marginal CDF F(t,r)");
  catsort::ExcursionQuery query;
  catsort::QuadratureConfig quad;
  lm->add_option("--t", query.t, "interior time in (0,1)")->required();
  lm->add_option("--r", query.r, "level >= 0")->required();
  lm->add_option("--abs-tol", quad.abs_tol, "quadrature tolerance (default 1e-10)");
  lm->add_option("--max-depth", quad.max_depth, "bisection depth limit (default 40)");

  auto* ep = app.add_subcommand("expected", "exact expected position E[L(row,col)]");
  ep->add_option("--n", n, "poset size")->required();
  ep->add_option("--row", row, "1 or 2")->required();
  ep->add_option("--col", col, "1..n")->required();

  auto* cr = app.add_subcommand("crossing", "locate the near-balanced pair for one n");
  cr->add_option("--n", n, "poset size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const long capacity = cache_capacity_from_env();

    if (rn->parsed()) {
      catsort::BinomialCache cache(capacity);
      std::cout << ratio_with_float(catsort::sorting_probability(cache, n, h, z)) << "\n";
      return 0;
    }

    if (dl->parsed()) {
      if (exact_mode && screened_mode)
        throw std::domain_error("choose at most one of --exact / --screened");
      catsort::BinomialCache cache(capacity);
      const auto mode = exact_mode ? catsort::DeltaMode::exact : catsort::DeltaMode::screened;
      const catsort::DeltaRecord rec = catsort::delta(cache, n, mode);
      std::cout << catsort::ratio_string(rec.delta) << " at pair (1," << rec.argmin.x.col
                << "),(2," << rec.argmin.y.col << ")\n";
      char buf[160];
      std::snprintf(buf, sizeof(buf), "delta_float=%.17g scaled_n54=%.17g log_n_delta=%.17g",
                    rec.delta_float, rec.scaled_n54, rec.log_n_delta);
      std::cout << buf << "\n";
      return 0;
    }

    if (sc->parsed() || ex->parsed()) {
      if (ex->parsed()) {
        scan_cfg.n_from = 3;
        scan_cfg.n_to = max_n;
        scan_cfg.mode = catsort::DeltaMode::screened;
      } else {
        scan_cfg.mode =
            scan_mode == "exact" ? catsort::DeltaMode::exact : catsort::DeltaMode::screened;
      }
      catsort::BinomialCache cache(capacity);
      catsort::ScanProgress progress;
      if (sc->parsed() && !quiet)
        progress = [](long done, long total) {
          std::fprintf(stderr, "\rscan %ld/%ld", done, total);
          if (done == total) std::fprintf(stderr, "\n");
        };
      const auto records = catsort::run_scan(cache, scan_cfg, progress);
      std::string bytes;
      if (ex->parsed()) {
        const auto which = sequence == "A335212" ? catsort::OeisSequence::a335212
                                                 : catsort::OeisSequence::a335213;
        bytes = catsort::to_bfile(cache, records, which);
      } else {
        const auto format = scan_format == "csv"     ? catsort::ScanFormat::csv
                            : scan_format == "jsonl" ? catsort::ScanFormat::jsonl
                                                     : catsort::ScanFormat::oeis_bfile;
        bytes = catsort::format_scan(cache, records, format);
      }
      write_output(output_path, bytes);
      return 0;
    }

    if (vf->parsed()) {
      catsort::BinomialCache cache(capacity);
      if (suite == "lemmas") return print_report(catsort::verify_lemmas(cache, max_n ? max_n : 60));
      if (suite == "oracle") return print_report(catsort::verify_oracle(cache, max_n ? max_n : 10));
      if (suite == "limit") return print_report(catsort::verify_limit(cache));
      if (crossing_ns.empty()) crossing_ns.push_back(1000);
      return print_report(catsort::verify_crossing(cache, crossing_ns));
    }

    if (lm->parsed()) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", catsort::excursion_cdf(query, quad));
      std::cout << "F(" << query.t << "," << query.r << ") = " << buf << "\n";
      return 0;
    }

    if (ep->parsed()) {
      catsort::BinomialCache cache(capacity);
      std::cout << ratio_with_float(catsort::expected_position(cache, n, catsort::Cell{row, col}))
                << "\n";
      return 0;
    }

    if (cr->parsed()) {
      catsort::BinomialCache cache(capacity);
      const auto rec = catsort::find_crossing(cache, n);
      if (!rec) {
        std::cout << "no crossing in the z window for n=" << n << "\n";
        return 0;
      }
      std::cout << "z_star=" << rec->z_star << " h1=" << rec->h1 << "\n";
      std::cout << "R(h1,z_star)   = " << ratio_with_float(rec->r_at_h1) << "\n";
      std::cout << "R(h1+1,z_star) = " << ratio_with_float(rec->r_at_h1_plus) << "\n";
      return 0;
    }

    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const catsort::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << " (raise CATSORT_NMAX)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
