#pragma once

#include <catsort/visit.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

namespace catsort {

// Element of the two-row poset, identified with a cell of the (n,n) diagram:
// row 1 cells map to up-steps of the path, row 2 cells to right-steps.
// (1,a) and (2,b) are incomparable exactly when b < a.
struct Cell {
  int row = 1;   // 1 or 2
  long col = 1;  // 1..n
};

inline bool operator==(Cell lhs, Cell rhs) { return lhs.row == rhs.row && lhs.col == rhs.col; }
inline bool operator!=(Cell lhs, Cell rhs) { return !(lhs == rhs); }

struct PairProbability {
  Cell x, y;
  ExactRatio prob_x_before_y;
  ExactRatio margin;  // |P[x before y] - P[y before x]| = |2p - 1|
};

struct DeltaRecord {
  long n = 0;
  ExactRatio delta;
  PairProbability argmin;
  double delta_float = 0.0;
  double scaled_n54 = 0.0;   // delta * n^(5/4)
  double log_n_delta = 0.0;  // log(delta) / log(n)
};

struct CrossingRecord {
  long n = 0;
  long z_star = 0;
  long h1 = 0;
  ExactRatio r_at_h1;       // >= 1/2
  ExactRatio r_at_h1_plus;  // <= 1/2
};

enum class DeltaMode { exact, screened };

namespace detail {
inline void require_sorting_domain(long n, long h, long z) {
  if (!(1 <= z && z < h && h <= n))
    throw std::domain_error("sorting probability: need 1 <= z < h <= n");
}
}  // namespace detail

// Count, over catalan(n), of paths whose up-step to height h happens at
// column x >= h-z. Equivalently: the number of linear extensions in which
// element (2,h-z) comes before element (1,h).
inline ExactInt sorting_probability_count(const BinomialCache& cache, long n, long h, long z) {
  detail::require_sorting_domain(n, h, z);
  ExactInt total(0);
  for (long k = 1; k <= z; ++k) total += edge_visit_count(cache, n, h - k, h);
  return total;
}

// P[ L(2,h-z) < L(1,h) ] for a uniform linear extension L. Increasing in z;
// as a function of h it falls up to the central height and rises after it,
// with the exact mirror symmetry h <-> n+z+1-h.
inline ExactRatio sorting_probability(const BinomialCache& cache, long n, long h, long z) {
  return make_ratio(sorting_probability_count(cache, n, h, z), cache.catalan(n));
}

// Exact equality R(h,z) == R(n+z+1-h, z), checked on the left half.
inline bool symmetry_holds(const BinomialCache& cache, long n, long h, long z) {
  if (!(1 <= z && z + 1 <= h && 2 * h <= n + z + 1))
    throw std::domain_error("symmetry check: need z+1 <= h <= (n+z+1)/2");
  return sorting_probability_count(cache, n, h, z) ==
         sorting_probability_count(cache, n, n + z + 1 - h, z);
}

namespace detail {
inline void require_cell(long n, Cell c) {
  if (c.row != 1 && c.row != 2) throw std::domain_error("cell: row must be 1 or 2");
  if (c.col < 1 || c.col > n) throw std::domain_error("cell: column out of range");
}
inline bool cell_le(Cell u, Cell v) { return u.row <= v.row && u.col <= v.col; }
}  // namespace detail

// P[L(x) < L(y)] with exact margin. Comparable pairs short-circuit to 0 or 1.
inline PairProbability pair_probability(const BinomialCache& cache, long n, Cell x, Cell y) {
  detail::require_cell(n, x);
  detail::require_cell(n, y);
  if (x == y) throw std::domain_error("pair probability: cells must be distinct");
  PairProbability result;
  result.x = x;
  result.y = y;
  if (detail::cell_le(x, y)) {
    result.prob_x_before_y = 1;
  } else if (detail::cell_le(y, x)) {
    result.prob_x_before_y = 0;
  } else {
    const ExactInt cat = cache.catalan(n);
    if (x.row == 1) {
      // y = (2,b) with b < a: P[x first] = 1 - P[L(2,b) < L(1,a)]
      const long a = x.col, b = y.col;
      result.prob_x_before_y = make_ratio(cat - sorting_probability_count(cache, n, a, a - b), cat);
    } else {
      const long a = y.col, b = x.col;
      result.prob_x_before_y = make_ratio(sorting_probability_count(cache, n, a, a - b), cat);
    }
  }
  ExactRatio m = result.prob_x_before_y + result.prob_x_before_y - 1;
  result.margin = abs(m);
  return result;
}

namespace detail {
// Running minimum with the fixed tie-break: smaller margin, then smaller a,
// then smaller b. Order of feeding does not matter.
struct BestMargin {
  bool set = false;
  ExactInt margin;
  long a = 0, b = 0;

  void consider(const ExactInt& m, long a_, long b_) {
    if (!set || m < margin || (m == margin && (a_ < a || (a_ == a && b_ < b)))) {
      set = true;
      margin = m;
      a = a_;
      b = b_;
    }
  }
};
}  // namespace detail

// Minimum over all incomparable pairs {(1,a),(2,b)} of |2*P[L(1,a)<L(2,b)] - 1|.
//
// screened mode: one float pass in log space locates the minimum margin, then
// every pair within 1e-6 of the float minimum is re-verified exactly. The
// float error per margin is below 1e-8, so the exact minimizer (and every
// exact tie) always lands inside the window and the result matches exact mode
// bit for bit.
inline DeltaRecord delta(const BinomialCache& cache, long n, DeltaMode mode = DeltaMode::screened) {
  if (n < 2) throw std::domain_error("delta: need n >= 2");
  const ExactInt cat = cache.catalan(n);
  detail::BestMargin best;

  ExactInt s, m;
  auto consider_exact = [&](long h, long z) {
    m = 2 * s;
    m -= cat;
    mpz_abs(m.get_mpz_t(), m.get_mpz_t());
    best.consider(m, h, h - z);
  };

  if (mode == DeltaMode::exact) {
    for (long h = 2; h <= n; ++h) {
      s = 0;
      for (long z = 1; z < h; ++z) {
        s += edge_visit_count(cache, n, h - z, h);
        consider_exact(h, z);
      }
    }
  } else {
    const double log_cat = cache.log_binomial(2 * n, n) - std::log(double(n + 1));
    std::vector<double> lg(static_cast<size_t>(2 * n) + 2);
    for (size_t i = 1; i < lg.size(); ++i) lg[i] = std::log(double(i));
    auto log_edge_count = [&](long h, long z) {
      const long a = h - z, b = h;
      return cache.log_binomial(a + b - 1, a) + lg[static_cast<size_t>(b - a)] -
             lg[static_cast<size_t>(b)] + cache.log_binomial(2 * n - a - b, n - b) +
             lg[static_cast<size_t>(b - a + 1)] - lg[static_cast<size_t>(n - a + 1)];
    };

    double float_min = std::numeric_limits<double>::infinity();
    for (long h = 2; h <= n; ++h) {
      double rs = 0.0;
      for (long z = 1; z < h; ++z) {
        rs += std::exp(log_edge_count(h, z) - log_cat);
        float_min = std::min(float_min, std::fabs(2.0 * rs - 1.0));
      }
    }

    const double window = float_min + 1e-6;
    for (long h = 2; h <= n; ++h) {
      double rs = 0.0;
      long summed_z = 0;
      s = 0;
      for (long z = 1; z < h; ++z) {
        rs += std::exp(log_edge_count(h, z) - log_cat);
        if (std::fabs(2.0 * rs - 1.0) <= window) {
          for (long k = summed_z + 1; k <= z; ++k) s += edge_visit_count(cache, n, h - k, h);
          summed_z = z;
          consider_exact(h, z);
        }
      }
    }
  }

  DeltaRecord rec;
  rec.n = n;
  rec.delta = make_ratio(best.margin, cat);
  rec.argmin = pair_probability(cache, n, Cell{1, best.a}, Cell{2, best.b});
  rec.delta_float = to_double(rec.delta);
  rec.scaled_n54 = rec.delta_float * std::pow(double(n), 1.25);
  rec.log_n_delta = std::log(rec.delta_float) / std::log(double(n));
  return rec;
}

// Locate the near-balanced pair the curve-crossing construction produces:
// z_star is the largest z in [sqrt(n)/10, 10*sqrt(n)] whose midpoint value
// sits at or below 1/2, h1 the largest h <= floor(n/2) where the curve is
// back at or above 1/2. Empty result when the window contains no crossing.
inline std::optional<CrossingRecord> find_crossing(const BinomialCache& cache, long n) {
  if (n < 1) throw std::domain_error("find_crossing: need n >= 1");
  const long half = n / 2;
  const double sq = std::sqrt(double(n));
  const long z_lo = std::max<long>(1, static_cast<long>(std::ceil(sq / 10.0)));
  // the midpoint value R(half, z) only exists for z < half
  const long z_hi = std::min<long>(static_cast<long>(std::floor(10.0 * sq)), half - 1);
  if (z_lo > z_hi) return std::nullopt;

  const ExactInt cat = cache.catalan(n);
  long z_star = -1;
  {
    ExactInt s(0);
    for (long z = 1; z <= z_hi; ++z) {
      s += edge_visit_count(cache, n, half - z, half);
      if (z >= z_lo && 2 * s <= cat) z_star = z;
    }
  }
  if (z_star < 0) return std::nullopt;

  for (long h = half; h > z_star; --h) {
    ExactInt s = sorting_probability_count(cache, n, h, z_star);
    if (2 * s >= cat) {
      CrossingRecord rec;
      rec.n = n;
      rec.z_star = z_star;
      rec.h1 = h;
      rec.r_at_h1 = make_ratio(s, cat);
      rec.r_at_h1_plus = sorting_probability(cache, n, h + 1, z_star);
      return rec;
    }
  }
  return std::nullopt;
}

// E[L(cell)] via tail sums: summing P[L >= m] over m turns into summing the
// vertex visit probabilities over the region of lattice points the step has
// not yet left, one point per anti-diagonal.
inline ExactRatio expected_position(const BinomialCache& cache, long n, Cell cell) {
  detail::require_cell(n, cell);
  ExactInt total(0);
  if (cell.row == 1) {
    for (long y = 0; y <= cell.col - 1; ++y)
      for (long x = 0; x <= y; ++x) total += vertex_visit_count(cache, n, x, y);
  } else {
    for (long x = 0; x <= cell.col - 1; ++x)
      for (long y = x; y <= n; ++y) total += vertex_visit_count(cache, n, x, y);
  }
  return make_ratio(total, cache.catalan(n));
}

}  // namespace catsort
