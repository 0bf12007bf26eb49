#pragma once

#include <catsort/sorting.hpp>

#include <functional>
#include <vector>

namespace catsort {

// Brute-force enumeration of all catalan(n) linear extensions, used as an
// independent check of the closed-form counts. Cost grows like 4^n, so the
// guard keeps accidental calls from hanging; the ceiling is a hard wall.
inline constexpr long kEnumerationGuard = 12;
inline constexpr long kEnumerationCeiling = 16;

// One linear extension as step times: row1[j-1] is the time (1-based, in
// 1..2n) at which element (1,j) is placed, likewise row2 for (2,j).
struct Tableau {
  std::vector<long> row1, row2;
};

namespace detail {
inline void check_enumeration_size(long n, bool allow_large) {
  if (n < 1) throw std::domain_error("enumeration: need n >= 1");
  const long limit = allow_large ? kEnumerationCeiling : kEnumerationGuard;
  if (n > limit) throw std::domain_error("enumeration: n exceeds the brute-force guard");
}

template <typename Visit>
inline void walk_tableaux(long n, Visit&& visit) {
  std::vector<long> row1(static_cast<size_t>(n)), row2(static_cast<size_t>(n));
  // x right-steps and y up-steps taken so far; next step is time x+y+1
  std::function<void(long, long)> go = [&](long x, long y) {
    if (x == n && y == n) {
      visit(row1, row2);
      return;
    }
    if (y < n) {
      row1[static_cast<size_t>(y)] = x + y + 1;
      go(x, y + 1);
    }
    if (x < y) {
      row2[static_cast<size_t>(x)] = x + y + 1;
      go(x + 1, y);
    }
  };
  go(0, 0);
}
}  // namespace detail

inline std::vector<Tableau> enumerate_tableaux(long n, bool allow_large = false) {
  detail::check_enumeration_size(n, allow_large);
  std::vector<Tableau> out;
  detail::walk_tableaux(n, [&](const std::vector<long>& r1, const std::vector<long>& r2) {
    out.push_back(Tableau{r1, r2});
  });
  return out;
}

inline long tableau_time(const Tableau& t, Cell c) {
  const auto& row = (c.row == 1) ? t.row1 : t.row2;
  return row.at(static_cast<size_t>(c.col - 1));
}

// Everything the formula layer predicts, tallied in a single sweep over all
// extensions of one n:
//   vertex[a][b]      extensions whose path passes through the point (a,b)
//   edge[a][b]        ... through the up-step (a,b-1)->(a,b)
//   double_edge[a][b] ... through (a,b-1)->(a,b)->(a,b+1)
//   before[a][b]      extensions with L(1,a) < L(2,b)   (1-based a,b)
//   time_row1[j], time_row2[j]  sums of placement times  (1-based j)
struct EnumerationCounts {
  long n = 0;
  ExactInt total;
  std::vector<std::vector<ExactInt>> vertex, edge, double_edge;
  std::vector<std::vector<ExactInt>> before;
  std::vector<ExactInt> time_row1, time_row2;
};

inline EnumerationCounts enumerate_counts(long n, bool allow_large = false) {
  detail::check_enumeration_size(n, allow_large);
  EnumerationCounts c;
  c.n = n;
  c.total = 0;
  const size_t m = static_cast<size_t>(n) + 1;
  c.vertex.assign(m, std::vector<ExactInt>(m, ExactInt(0)));
  c.edge.assign(m, std::vector<ExactInt>(m, ExactInt(0)));
  c.double_edge.assign(m, std::vector<ExactInt>(m, ExactInt(0)));
  c.before.assign(m, std::vector<ExactInt>(m, ExactInt(0)));
  c.time_row1.assign(m, ExactInt(0));
  c.time_row2.assign(m, ExactInt(0));

  detail::walk_tableaux(n, [&](const std::vector<long>& r1, const std::vector<long>& r2) {
    c.total += 1;
    // reconstruct the path point sequence from the step times
    long x = 0, y = 0;
    c.vertex[0][0] += 1;
    for (long t = 1; t <= 2 * n; ++t) {
      const bool up = (y < n) && (r1[static_cast<size_t>(y)] == t);
      if (up) {
        c.edge[static_cast<size_t>(x)][static_cast<size_t>(y + 1)] += 1;
        if (y + 2 <= n && r1[static_cast<size_t>(y + 1)] == t + 1)
          c.double_edge[static_cast<size_t>(x)][static_cast<size_t>(y + 1)] += 1;
        ++y;
      } else {
        ++x;
      }
      c.vertex[static_cast<size_t>(x)][static_cast<size_t>(y)] += 1;
    }
    for (long a = 1; a <= n; ++a)
      for (long b = 1; b <= n; ++b)
        if (r1[static_cast<size_t>(a - 1)] < r2[static_cast<size_t>(b - 1)])
          c.before[static_cast<size_t>(a)][static_cast<size_t>(b)] += 1;
    for (long j = 1; j <= n; ++j) {
      c.time_row1[static_cast<size_t>(j)] += r1[static_cast<size_t>(j - 1)];
      c.time_row2[static_cast<size_t>(j)] += r2[static_cast<size_t>(j - 1)];
    }
  });
  return c;
}

// P[L(x) < L(y)] by direct enumeration.
inline ExactRatio oracle_pair_probability(long n, Cell x, Cell y, bool allow_large = false) {
  detail::require_cell(n, x);
  detail::require_cell(n, y);
  if (x == y) throw std::domain_error("pair probability: cells must be distinct");
  detail::check_enumeration_size(n, allow_large);
  ExactInt hits(0), total(0);
  detail::walk_tableaux(n, [&](const std::vector<long>& r1, const std::vector<long>& r2) {
    total += 1;
    auto time = [&](Cell c) {
      return (c.row == 1) ? r1[static_cast<size_t>(c.col - 1)] : r2[static_cast<size_t>(c.col - 1)];
    };
    if (time(x) < time(y)) hits += 1;
  });
  return make_ratio(hits, total);
}

// Fraction of paths passing through every listed point.
inline ExactRatio oracle_visit(long n, const std::vector<LatticePoint>& points,
                               bool allow_large = false) {
  detail::check_enumeration_size(n, allow_large);
  for (const auto& p : points)
    if (!(0 <= p.x && p.x <= p.y && p.y <= n))
      throw std::domain_error("oracle visit: points must satisfy 0 <= x <= y <= n");
  ExactInt hits(0), total(0);
  detail::walk_tableaux(n, [&](const std::vector<long>& r1, const std::vector<long>&) {
    total += 1;
    // replay the path from the row-1 times and tick off query points
    size_t matched = 0;
    long x = 0, y = 0;
    auto at_point = [&]() {
      for (const auto& p : points)
        if (p.x == x && p.y == y) ++matched;
    };
    at_point();
    for (long t = 1; t <= 2 * n; ++t) {
      if (y < n && r1[static_cast<size_t>(y)] == t)
        ++y;
      else
        ++x;
      at_point();
    }
    if (matched == points.size()) hits += 1;
  });
  return make_ratio(hits, total);
}

// Extensions in which the up-step to height h comes at or after time 2h-z,
// i.e. L(1,h) >= 2h-z. Matches sorting_probability_count.
inline ExactInt oracle_late_step_count(long n, long h, long z, bool allow_large = false) {
  detail::require_sorting_domain(n, h, z);
  detail::check_enumeration_size(n, allow_large);
  ExactInt hits(0);
  detail::walk_tableaux(n, [&](const std::vector<long>& r1, const std::vector<long>&) {
    if (r1[static_cast<size_t>(h - 1)] >= 2 * h - z) hits += 1;
  });
  return hits;
}

// delta by scanning the enumerated pair matrix; same tie-break as delta().
inline DeltaRecord oracle_delta(long n, bool allow_large = false) {
  if (n < 2) throw std::domain_error("delta: need n >= 2");
  const EnumerationCounts counts = enumerate_counts(n, allow_large);
  detail::BestMargin best;
  ExactInt m;
  for (long a = 2; a <= n; ++a)
    for (long b = 1; b < a; ++b) {
      m = 2 * counts.before[static_cast<size_t>(a)][static_cast<size_t>(b)];
      m -= counts.total;
      mpz_abs(m.get_mpz_t(), m.get_mpz_t());
      best.consider(m, a, b);
    }
  DeltaRecord rec;
  rec.n = n;
  rec.delta = make_ratio(best.margin, counts.total);
  rec.argmin.x = Cell{1, best.a};
  rec.argmin.y = Cell{2, best.b};
  rec.argmin.prob_x_before_y =
      make_ratio(counts.before[static_cast<size_t>(best.a)][static_cast<size_t>(best.b)],
                 counts.total);
  ExactRatio mm = rec.argmin.prob_x_before_y + rec.argmin.prob_x_before_y - 1;
  rec.argmin.margin = abs(mm);
  rec.delta_float = to_double(rec.delta);
  rec.scaled_n54 = rec.delta_float * std::pow(double(n), 1.25);
  rec.log_n_delta = std::log(rec.delta_float) / std::log(double(n));
  return rec;
}

}  // namespace catsort
