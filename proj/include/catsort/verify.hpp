#pragma once

#include <catsort/ballot.hpp>
#include <catsort/enumeration.hpp>
#include <catsort/excursion.hpp>
#include <catsort/sorting.hpp>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace catsort {

struct Check {
  std::string name;
  bool passed = true;
  long assertions = 0;
  std::string detail;  // first counterexample, or a summary for informational checks
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

namespace detail {

inline void expect(Check& c, bool ok, long n, long i, long j) {
  ++c.assertions;
  if (!ok && c.passed) {
    c.passed = false;
    std::ostringstream os;
    os << "first failure at n=" << n << " (" << i << "," << j << ")";
    c.detail = os.str();
  }
}

inline void expect_msg(Check& c, bool ok, const std::string& msg) {
  ++c.assertions;
  if (!ok && c.passed) {
    c.passed = false;
    c.detail = msg;
  }
}

// Cumulative tables S[h][z] = count of extensions with L(2,h-z) < L(1,h),
// i.e. sorting_probability_count, for every valid (h,z) of one n.
inline std::vector<std::vector<ExactInt>> count_tables(const BinomialCache& cache, long n) {
  std::vector<std::vector<ExactInt>> s(static_cast<size_t>(n) + 1);
  for (long h = 2; h <= n; ++h) {
    auto& row = s[static_cast<size_t>(h)];
    row.reserve(static_cast<size_t>(h));
    row.push_back(ExactInt(0));  // z=0 sentinel
    ExactInt acc(0);
    for (long z = 1; z < h; ++z) {
      acc += edge_visit_count(cache, n, h - z, h);
      row.push_back(acc);
    }
  }
  return s;
}

inline int sign_of(long v) { return (v > 0) - (v < 0); }
inline int sign_of(const ExactInt& v) { return sgn(v); }

}  // namespace detail

// Exhaustive exact checks of the structural facts about R_n(h,z) and the
// visit counts, for every n up to max_n.
inline VerifyReport verify_lemmas(const BinomialCache& cache, long max_n) {
  VerifyReport report;
  report.suite = "lemmas";
  Check z_mono{"z monotonicity: R(h,z) strictly increasing in z"};
  Check trichotomy{"h direction: sign(R(h,z)-R(h+1,z)) = sign(n+z-2h)"};
  Check symmetry{"mirror symmetry: R(h,z) = R(n+z+1-h,z)"};
  Check argmin{"argmin over h at ceil((n+z)/2), tied with the next h iff n+z even"};
  Check chain{"visit count chain: double_edge <= edge <= vertex"};
  Check ratio{"vertex/double-edge ratio identity"};
  Check segments{"path_difference = vertical - horizontal segment counts = R drop"};
  Check normalization{"edge counts at height b sum to catalan(n)"};
  Check diag_norm{"vertex counts on each anti-diagonal sum to catalan(n)"};

  for (long n = 2; n <= max_n; ++n) {
    const ExactInt cat = cache.catalan(n);
    const auto s = detail::count_tables(cache, n);

    for (long h = 2; h <= n; ++h)
      for (long z = 1; z + 1 < h; ++z)
        detail::expect(z_mono, s[h][z + 1] > s[h][z], n, h, z);

    for (long h = 2; h < n; ++h)
      for (long z = 1; z < h; ++z) {
        ExactInt diff = s[h][z] - s[h + 1][z];
        detail::expect(trichotomy, detail::sign_of(diff) == detail::sign_of(n + z - 2 * h), n, h,
                       z);
      }

    for (long z = 1; z < n; ++z)
      for (long h = z + 1; 2 * h <= n + z + 1; ++h) {
        const long mirror = n + z + 1 - h;
        detail::expect(symmetry, s[h][z] == s[mirror][z], n, h, z);
        detail::expect(symmetry, symmetry_holds(cache, n, h, z), n, h, z);
      }

    for (long z = 1; z < n; ++z) {
      long best_h = z + 1;
      for (long h = z + 2; h <= n; ++h)
        if (s[h][z] < s[best_h][z]) best_h = h;
      const long expected = (n + z + 1) / 2;  // ceil((n+z)/2)
      detail::expect(argmin, best_h == expected, n, best_h, z);
      if (expected + 1 <= n) {
        const bool tied = s[expected][z] == s[expected + 1][z];
        detail::expect(argmin, tied == ((n + z) % 2 == 0), n, expected, z);
      }
    }

    for (long b = 1; b <= n; ++b) {
      ExactInt q_sum(0);
      for (long a = 0; a < b; ++a) {
        const ExactInt p = vertex_visit_count(cache, n, a, b);
        const ExactInt q = edge_visit_count(cache, n, a, b);
        q_sum += q;
        detail::expect(chain, q <= p, n, a, b);
        if (b + 1 <= n) {
          const ExactInt r = double_edge_visit_count(cache, n, a, b);
          detail::expect(chain, r <= q, n, a, b);
          const ExactInt lhs = r * (2 * n - a - b) * (b - a + 1) * (b - a + 1) * (a + b);
          const ExactInt rhs = p * (n - b) * (b - a) * (b - a + 2) * (b + 1);
          detail::expect(ratio, lhs == rhs, n, a, b);
        }
      }
      detail::expect(normalization, q_sum == cat, n, 0, b);
    }

    for (long diag = 0; diag <= 2 * n; ++diag) {
      ExactInt p_sum(0);
      for (long a = std::max<long>(0, diag - n); 2 * a <= diag; ++a)
        p_sum += vertex_visit_count(cache, n, a, diag - a);
      detail::expect(diag_norm, p_sum == cat, n, diag, 0);
    }

    for (long h = 2; h < n; ++h)
      for (long z = 1; z < h; ++z) {
        const SegmentCounts seg = segment_counts(cache, n, h, z);
        const ExactInt diff = path_difference(cache, n, h, z);
        detail::expect(segments, diff == seg.vertical - seg.horizontal, n, h, z);
        detail::expect(segments, diff == s[h][z] - s[h + 1][z], n, h, z);
      }
  }
  report.checks = {z_mono,        trichotomy, symmetry, argmin, chain,
                   ratio,         segments,   normalization, diag_norm};
  return report;
}

// Brute-force equivalence: every closed-form count against direct enumeration.
inline VerifyReport verify_oracle(const BinomialCache& cache, long max_n) {
  VerifyReport report;
  report.suite = "oracle";
  Check total{"enumeration size equals catalan(n)"};
  Check vertex{"vertex visit counts match enumeration"};
  Check edge{"up-edge visit counts match enumeration"};
  Check dedge{"double up-edge visit counts match enumeration"};
  Check pairs{"pair probabilities match enumeration"};
  Check late{"late-step counts match the z-sum"};
  Check visits{"multi-point visit queries match the formulas"};
  Check expect_pos{"expected positions match enumeration"};
  Check deltas{"delta (exact and screened) matches enumerated delta"};
  Check segs{"segment counts match three-point visit queries"};

  for (long n = 1; n <= max_n; ++n) {
    const ExactInt cat = cache.catalan(n);
    const EnumerationCounts counts = enumerate_counts(n, max_n > kEnumerationGuard);

    detail::expect(total, counts.total == cat, n, 0, 0);

    for (long b = 0; b <= n; ++b)
      for (long a = 0; a <= b; ++a) {
        detail::expect(vertex, counts.vertex[a][b] == vertex_visit_count(cache, n, a, b), n, a, b);
        if (a < b) detail::expect(edge, counts.edge[a][b] == edge_visit_count(cache, n, a, b), n, a, b);
        if (a < b && b + 1 <= n)
          detail::expect(dedge, counts.double_edge[a][b] == double_edge_visit_count(cache, n, a, b),
                         n, a, b);
      }

    for (long a = 1; a <= n; ++a)
      for (long b = 1; b <= n; ++b) {
        const PairProbability pp = pair_probability(cache, n, Cell{1, a}, Cell{2, b});
        const ExactRatio enumerated = make_ratio(counts.before[a][b], counts.total);
        detail::expect(pairs, pp.prob_x_before_y == enumerated, n, a, b);
      }

    for (long h = 2; h <= n; ++h)
      for (long z = 1; z < h; ++z) {
        const ExactInt want = sorting_probability_count(cache, n, h, z);
        detail::expect(late, oracle_late_step_count(n, h, z, max_n > kEnumerationGuard) == want, n,
                       h, z);
        detail::expect(late, counts.total - counts.before[h][h - z] == want, n, h, z);
      }

    for (long b = 1; b <= n; ++b)
      for (long a = 0; a < b; ++a) {
        const bool big = max_n > kEnumerationGuard;
        detail::expect(visits,
                       oracle_visit(n, {LatticePoint{a, b}}, big) == vertex_visit(cache, n, a, b),
                       n, a, b);
        detail::expect(visits,
                       oracle_visit(n, {LatticePoint{a, b - 1}, LatticePoint{a, b}}, big) ==
                           edge_visit(cache, n, a, b),
                       n, a, b);
        if (b + 1 <= n)
          detail::expect(visits,
                         oracle_visit(n, {LatticePoint{a, b - 1}, LatticePoint{a, b},
                                          LatticePoint{a, b + 1}}, big) ==
                             double_edge_visit(cache, n, a, b),
                         n, a, b);
      }

    for (long j = 1; j <= n; ++j) {
      detail::expect(expect_pos,
                     expected_position(cache, n, Cell{1, j}) ==
                         make_ratio(counts.time_row1[j], counts.total),
                     n, 1, j);
      detail::expect(expect_pos,
                     expected_position(cache, n, Cell{2, j}) ==
                         make_ratio(counts.time_row2[j], counts.total),
                     n, 2, j);
    }

    if (n >= 2) {
      const DeltaRecord want = oracle_delta(n, max_n > kEnumerationGuard);
      for (DeltaMode mode : {DeltaMode::exact, DeltaMode::screened}) {
        const DeltaRecord got = delta(cache, n, mode);
        detail::expect(deltas,
                       got.delta == want.delta && got.argmin.x == want.argmin.x &&
                           got.argmin.y == want.argmin.y &&
                           got.argmin.prob_x_before_y == want.argmin.prob_x_before_y,
                       n, got.argmin.x.col, got.argmin.y.col);
      }
    }

    for (long h = 2; h < n; ++h)
      for (long z = 1; z < h; ++z) {
        const long x = h + 1 - z;
        const SegmentCounts seg = segment_counts(cache, n, h, z);
        const bool big = max_n > kEnumerationGuard;
        const ExactRatio horiz = oracle_visit(
            n, {LatticePoint{x - 2, h}, LatticePoint{x - 1, h}, LatticePoint{x, h}}, big);
        const ExactRatio vert =
            oracle_visit(n, {LatticePoint{x - 1, h - 1}, LatticePoint{x - 1, h},
                             LatticePoint{x - 1, h + 1}}, big);
        detail::expect(segs, horiz == make_ratio(seg.horizontal, cat), n, h, z);
        detail::expect(segs, vert == make_ratio(seg.vertical, cat), n, h, z);
      }
  }
  report.checks = {total, vertex, edge, dedge, pairs, late, visits, expect_pos, deltas, segs};
  return report;
}

// Quadrature sanity plus the finite-n-vs-limit comparison.
inline VerifyReport verify_limit(const BinomialCache& cache, long n = 200, long z = 7,
                                 double gap_tol = 0.05) {
  VerifyReport report;
  report.suite = "limit";
  Check closed{"quadrature matches the closed form"};
  Check zero{"F(t,0) = 0"};
  Check norm{"F(t, 20 sqrt(t(1-t))) = 1 within 1e-8"};
  Check sym{"F(t,r) = F(1-t,r) within 1e-8"};
  Check mono{"F strictly increasing in r"};
  Check early{"F(t,r) -> 1 as t -> 0 at fixed r"};
  Check gap{"finite n curve tracks the limit curve"};

  const std::vector<double> ts = {0.1, 0.3, 0.5, 0.7, 0.9};
  const std::vector<double> rs = {0.05, 0.2, 0.5, 1.0, 2.0};
  for (double t : ts) {
    detail::expect_msg(closed, excursion_cdf(ExcursionQuery{t, 0.0}) == 0.0, "t grid");
    detail::expect_msg(zero, excursion_cdf(ExcursionQuery{t, 0.0}) == 0.0, "t grid");
    const double sigma = std::sqrt(t * (1.0 - t));
    detail::expect_msg(norm,
                       std::fabs(excursion_cdf(ExcursionQuery{t, 20.0 * sigma}) - 1.0) <= 1e-8,
                       "t=" + std::to_string(t));
    double prev = 0.0;
    for (double r : rs) {
      const double quad = excursion_cdf(ExcursionQuery{t, r});
      const double closed_form = excursion_cdf_closed_form(t, r);
      detail::expect_msg(closed, std::fabs(quad - closed_form) <= 1e-9,
                         "t=" + std::to_string(t) + " r=" + std::to_string(r));
      detail::expect_msg(mono, quad > prev, "t=" + std::to_string(t) + " r=" + std::to_string(r));
      prev = quad;
      detail::expect_msg(sym, std::fabs(quad - excursion_cdf(ExcursionQuery{1.0 - t, r})) <= 1e-8,
                         "t=" + std::to_string(t) + " r=" + std::to_string(r));
    }
  }
  detail::expect_msg(early, 1.0 - excursion_cdf(ExcursionQuery{0.001, 0.25}) <= 1e-6, "t=0.001");

  std::vector<double> grid;
  for (int i = 1; i <= 9; ++i) grid.push_back(0.1 * i);
  double max_gap = 0.0;
  for (const auto& row : compare_finite_to_limit(cache, n, z, grid))
    max_gap = std::max(max_gap, row.gap);
  {
    std::ostringstream os;
    os << "max gap " << max_gap << " over t in [0.1,0.9] at n=" << n << " z=" << z;
    detail::expect_msg(gap, max_gap <= gap_tol, os.str());
    if (gap.passed) gap.detail = os.str();
  }

  report.checks = {closed, zero, norm, sym, mono, early, gap};
  return report;
}

struct CrossingSummary {
  std::vector<CrossingRecord> records;
  double fitted_constant = 0.0;  // geometric mean of margin * n^(5/4)
};

// Bracketing checks for the curve-crossing pairs, the pinned n=1000 instance,
// and the margin scaling across a list of n.
inline VerifyReport verify_crossing(const BinomialCache& cache, const std::vector<long>& ns,
                                    CrossingSummary* summary = nullptr) {
  VerifyReport report;
  report.suite = "crossing";
  Check found{"crossing exists in the z window"};
  Check bracket{"R(h1+1,z*) <= 1/2 <= R(h1,z*) exactly"};
  Check pinned{"n=1000 crossing lands at z*=33, h1=439"};
  Check lifted{"n=1000: min over h of R(h,34) exceeds 1/2"};
  Check scaled{"crossing margin times n^(5/4) stays below 3"};

  std::vector<CrossingRecord> records;
  double log_sum = 0.0;
  long log_count = 0;
  std::ostringstream scale_notes;

  for (long n : ns) {
    const auto rec = find_crossing(cache, n);
    detail::expect(found, rec.has_value(), n, 0, 0);
    if (!rec) continue;
    records.push_back(*rec);

    const ExactRatio half = make_ratio(ExactInt(1), ExactInt(2));
    detail::expect(bracket, rec->r_at_h1_plus <= half && half <= rec->r_at_h1, n, rec->h1,
                   rec->z_star);

    if (n == 1000) {
      detail::expect(pinned, rec->z_star == 33 && rec->h1 == 439, n, rec->h1, rec->z_star);
      const ExactInt cat = cache.catalan(n);
      bool above = true;
      long bad_h = 0;
      const long z_next = rec->z_star + 1;
      for (long h = z_next + 1; h <= n; ++h) {
        if (2 * sorting_probability_count(cache, n, h, z_next) <= cat) {
          above = false;
          bad_h = h;
          break;
        }
      }
      detail::expect(lifted, above, n, bad_h, z_next);
    }

    ExactRatio margin_lo = rec->r_at_h1 + rec->r_at_h1 - 1;        // 2 R(h1) - 1 >= 0
    ExactRatio margin_hi = 1 - rec->r_at_h1_plus - rec->r_at_h1_plus;  // 1 - 2 R(h1+1) >= 0
    const ExactRatio margin = margin_lo < margin_hi ? margin_lo : margin_hi;
    const double scaled_margin = to_double(margin) * std::pow(double(n), 1.25);
    detail::expect(scaled, scaled_margin < 3.0, n, rec->h1, rec->z_star);
    if (scaled_margin > 0.0) {
      log_sum += std::log(scaled_margin);
      ++log_count;
    }
    scale_notes << " n=" << n << ":" << scaled_margin;
  }

  if (log_count > 0) {
    const double fitted = std::exp(log_sum / double(log_count));
    scale_notes << " fitted-constant=" << fitted;
    if (summary) {
      summary->records = records;
      summary->fitted_constant = fitted;
    }
  }
  if (scaled.passed) scaled.detail = scale_notes.str();

  report.checks = {found, bracket, scaled};
  bool pins = false;
  for (long n : ns) pins = pins || n == 1000;
  if (pins) {
    report.checks.push_back(pinned);
    report.checks.push_back(lifted);
  }
  return report;
}

// Endpoint bounds of the z window at a fixed n: the curve sits at or below
// 1/4 when z is smallest, and at or above 3/4 when z is largest. The large-z
// check is restricted to h > z (outside that the quantity is undefined).
inline Check check_endpoint_bounds(const BinomialCache& cache, long n) {
  Check c{"endpoint bounds: R <= 1/4 at z_lo, R >= 3/4 at z_hi over h in [n/10, 9n/10]"};
  const ExactInt cat = cache.catalan(n);
  const double sq = std::sqrt(double(n));
  const long z_lo = static_cast<long>(std::floor(sq / 10.0));
  const long z_hi = static_cast<long>(std::floor(10.0 * sq));
  const long h_lo = (n + 9) / 10;
  const long h_hi = (9 * n) / 10;
  if (z_lo < 1) {
    detail::expect_msg(c, false, "z_lo below 1; n too small for the endpoint check");
    return c;
  }
  for (long h = std::max(h_lo, z_lo + 1); h <= h_hi; ++h) {
    // 4 S <= cat  <=>  R <= 1/4
    detail::expect(c, 4 * sorting_probability_count(cache, n, h, z_lo) <= cat, n, h, z_lo);
  }
  for (long h = std::max(h_lo, z_hi + 1); h <= h_hi; ++h) {
    detail::expect(c, 4 * sorting_probability_count(cache, n, h, z_hi) >= 3 * cat, n, h, z_hi);
  }
  return c;
}

}  // namespace catsort
