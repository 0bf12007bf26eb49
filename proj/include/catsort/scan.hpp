#pragma once

#include <catsort/sorting.hpp>

#include <atomic>
#include <cstdio>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace catsort {

enum class ScanFormat { csv, jsonl, oeis_bfile };

// A335212: delta(P_n) * catalan(n).  A335213: (1/2) (1 - delta(P_n)) * catalan(n).
enum class OeisSequence { a335212, a335213 };

struct ScanConfig {
  long n_from = 3;
  long n_to = 100;
  DeltaMode mode = DeltaMode::screened;
  int workers = 1;
  ScanFormat format = ScanFormat::csv;
};

using ScanProgress = std::function<void(long done, long total)>;

// One DeltaRecord per n in [n_from, n_to], ascending. Workers split the range
// by atomic claim; every slot is written by exactly one thread, so the result
// is identical whatever the worker count.
inline std::vector<DeltaRecord> run_scan(const BinomialCache& cache, const ScanConfig& cfg,
                                         const ScanProgress& progress = {}) {
  if (!(3 <= cfg.n_from && cfg.n_from <= cfg.n_to && cfg.n_to <= cache.n_max()))
    throw std::domain_error("scan: need 3 <= n_from <= n_to <= cache n_max");
  if (cfg.workers < 1) throw std::domain_error("scan: need workers >= 1");

  const long total = cfg.n_to - cfg.n_from + 1;
  std::vector<DeltaRecord> records(static_cast<size_t>(total));
  std::atomic<long> next{0}, done{0};
  std::mutex progress_mutex;

  auto work = [&]() {
    for (;;) {
      const long i = next.fetch_add(1);
      if (i >= total) return;
      records[static_cast<size_t>(i)] = delta(cache, cfg.n_from + i, cfg.mode);
      const long d = done.fetch_add(1) + 1;
      if (progress) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        progress(d, total);
      }
    }
  };

  const int nthreads = static_cast<int>(std::min<long>(cfg.workers, total));
  if (nthreads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nthreads));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return records;
}

namespace detail {
// 17 significant digits: enough to reproduce the double exactly, and a fixed
// width rule so scan output is byte-stable.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
inline std::string int_string(const ExactInt& v) { return v.get_str(); }
}  // namespace detail

inline std::string to_csv(const std::vector<DeltaRecord>& records) {
  std::string out = "n,delta_num,delta_den,argmin_a,argmin_b,delta_float,scaled_n54,log_n_delta\n";
  for (const auto& r : records) {
    out += std::to_string(r.n);
    out += ',';
    out += detail::int_string(r.delta.get_num());
    out += ',';
    out += detail::int_string(r.delta.get_den());
    out += ',';
    out += std::to_string(r.argmin.x.col);
    out += ',';
    out += std::to_string(r.argmin.y.col);
    out += ',';
    out += detail::format_double(r.delta_float);
    out += ',';
    out += detail::format_double(r.scaled_n54);
    out += ',';
    out += detail::format_double(r.log_n_delta);
    out += '\n';
  }
  return out;
}

inline std::string to_jsonl(const std::vector<DeltaRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += "{\"n\":" + std::to_string(r.n);
    out += ",\"delta_num\":\"" + detail::int_string(r.delta.get_num()) + "\"";
    out += ",\"delta_den\":\"" + detail::int_string(r.delta.get_den()) + "\"";
    out += ",\"argmin_a\":" + std::to_string(r.argmin.x.col);
    out += ",\"argmin_b\":" + std::to_string(r.argmin.y.col);
    out += ",\"delta_float\":" + detail::format_double(r.delta_float);
    out += ",\"scaled_n54\":" + detail::format_double(r.scaled_n54);
    out += ",\"log_n_delta\":" + detail::format_double(r.log_n_delta);
    out += "}\n";
  }
  return out;
}

// delta * catalan(n) recovered as an exact integer (the scan stores delta in
// lowest terms, so multiply back and divide out).
inline ExactInt delta_times_catalan(const BinomialCache& cache, const DeltaRecord& rec) {
  ExactInt num = rec.delta.get_num() * cache.catalan(rec.n);
  ExactInt out;
  ExactInt remainder;
  mpz_tdiv_qr(out.get_mpz_t(), remainder.get_mpz_t(), num.get_mpz_t(),
              rec.delta.get_den().get_mpz_t());
  if (remainder != 0)
    throw std::logic_error("delta denominator does not divide catalan(n)");
  return out;
}

inline ExactInt oeis_value(const BinomialCache& cache, const DeltaRecord& rec,
                           OeisSequence which) {
  ExactInt m = delta_times_catalan(cache, rec);
  if (which == OeisSequence::a335212) return m;
  ExactInt gap = cache.catalan(rec.n) - m;
  if (mpz_odd_p(gap.get_mpz_t()))
    throw std::logic_error("catalan(n) - delta*catalan(n) is odd; sequence value undefined");
  ExactInt out;
  mpz_divexact_ui(out.get_mpz_t(), gap.get_mpz_t(), 2);
  return out;
}

// OEIS b-file: "n value" per line, LF-terminated.
inline std::string to_bfile(const BinomialCache& cache, const std::vector<DeltaRecord>& records,
                            OeisSequence which) {
  std::string out;
  for (const auto& r : records) {
    out += std::to_string(r.n);
    out += ' ';
    out += detail::int_string(oeis_value(cache, r, which));
    out += '\n';
  }
  return out;
}

inline std::string format_scan(const BinomialCache& cache, const std::vector<DeltaRecord>& records,
                               ScanFormat format,
                               OeisSequence which = OeisSequence::a335212) {
  switch (format) {
    case ScanFormat::csv:
      return to_csv(records);
    case ScanFormat::jsonl:
      return to_jsonl(records);
    case ScanFormat::oeis_bfile:
      return to_bfile(cache, records, which);
  }
  throw std::logic_error("unknown scan format");
}

}  // namespace catsort
