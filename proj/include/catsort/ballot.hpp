#pragma once

#include <catsort/exact.hpp>

namespace catsort {

// A vertex of the path lattice. Path queries live weakly above the main
// diagonal, i.e. require x <= y.
struct LatticePoint {
  long x = 0;
  long y = 0;
};

inline bool operator==(LatticePoint lhs, LatticePoint rhs) { return lhs.x == rhs.x && lhs.y == rhs.y; }

// Monotone lattice paths (0,0) -> (a,b) staying weakly above the diagonal:
// C(a+b,a) - C(a+b,a-1), computed as C(a+b,a)*(b-a+1)/(b+1).
inline ExactInt ballot_count(const BinomialCache& cache, long a, long b) {
  if (a < 0 || b < a) throw std::domain_error("ballot_count: need 0 <= a <= b");
  ExactInt c = cache.binomial(a + b, a);
  c *= b - a + 1;
  ExactInt result;
  mpz_divexact_ui(result.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(b) + 1);
  return result;
}

// log of ballot_count, for the float screening pass
inline double log_ballot_count(const BinomialCache& cache, long a, long b) {
  if (a < 0 || b < a) throw std::domain_error("log_ballot_count: need 0 <= a <= b");
  return cache.log_binomial(a + b, a) + std::log(double(b - a + 1)) - std::log(double(b + 1));
}

namespace detail {
inline void require_segment_domain(long n, long h, long z) {
  if (!(1 <= h && h <= n - 1 && 1 <= z && z <= h - 1))
    throw std::domain_error("segment counts: need 1 <= h <= n-1 and 1 <= z <= h-1");
}
}  // namespace detail

// Full-path counts through two short runs near the corner that controls the
// rise/fall of the crossing curve between heights h and h+1. With x = h+1-z:
//   horizontal: paths containing the run (x-2,h) -> (x,h)      (two right-steps)
//   vertical:   paths containing the run (x-1,h-1) -> (x-1,h+1) (two up-steps)
struct SegmentCounts {
  ExactInt horizontal;
  ExactInt vertical;
};

inline SegmentCounts segment_counts(const BinomialCache& cache, long n, long h, long z) {
  detail::require_segment_domain(n, h, z);
  const long x = h + 1 - z;
  SegmentCounts s;
  s.horizontal = ballot_count(cache, x - 2, h) * ballot_count(cache, n - h, n - x);
  s.vertical = ballot_count(cache, x - 1, h - 1) * ballot_count(cache, n - h - 1, n - x + 1);
  return s;
}

// vertical - horizontal collapsed to one product:
//   C(x+h-2,x-1) * C(2n-x-h,n-h-1) * (h-x+1)(h-x+2)(h-x+3)(n-x-h+1)
//     / ( h(h+1)(n-h)(n-x+2) )
// The sign is the sign of n+z-2h; in particular the difference vanishes
// exactly when 2h = n+z.
inline ExactInt path_difference(const BinomialCache& cache, long n, long h, long z) {
  detail::require_segment_domain(n, h, z);
  const long x = h + 1 - z;
  ExactInt num = cache.binomial(x + h - 2, x - 1) * cache.binomial(2 * n - x - h, n - h - 1);
  num *= h - x + 1;
  num *= h - x + 2;
  num *= h - x + 3;
  num *= n - x - h + 1;
  ExactInt den(h);
  den *= h + 1;
  den *= n - h;
  den *= n - x + 2;
  ExactInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("path_difference: closed form did not divide exactly");
  return q;
}

}  // namespace catsort
