#pragma once

#include <gmpxx.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catsort {

// All quantities in this library are exact: big integers for counts,
// big rationals for probabilities. Floating point only ever appears as a
// rendering of an exact value, or inside the explicitly approximate
// screening / quadrature code paths.
using ExactInt = mpz_class;
using ExactRatio = mpq_class;

// Thrown when a binomial query needs a larger factorial table than the one
// built at construction time.
class capacity_error : public std::runtime_error {
 public:
  capacity_error(long required_n_max, long actual_n_max)
      : std::runtime_error("binomial cache capacity exceeded: query requires n_max >= " +
                           std::to_string(required_n_max) + " but the cache was built with n_max = " +
                           std::to_string(actual_n_max)),
        required_n_max_(required_n_max) {}

  long required_n_max() const { return required_n_max_; }

 private:
  long required_n_max_;
};

// Lowest terms, positive denominator.
inline ExactRatio make_ratio(const ExactInt& num, const ExactInt& den) {
  if (sgn(den) == 0) throw std::domain_error("make_ratio: zero denominator");
  ExactRatio q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const ExactRatio& q) { return q.get_d(); }

inline std::string ratio_string(const ExactRatio& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// One immutable factorial table, sized so that C(m,k) is available for every
// top index m <= 2*n_max. Built once; concurrent reads are safe afterwards.
// The parallel scan relies on exactly that: construct first, share freely.
class BinomialCache {
 public:
  explicit BinomialCache(long n_max = 2000) : n_max_(n_max) {
    if (n_max < 0) throw std::domain_error("BinomialCache: n_max must be >= 0");
    const long top = 2 * n_max;
    fact_.reserve(static_cast<size_t>(top) + 1);
    fact_.emplace_back(1);
    for (long m = 1; m <= top; ++m) fact_.push_back(fact_.back() * m);
    log_fact_.resize(static_cast<size_t>(top) + 1);
    for (long m = 0; m <= top; ++m) log_fact_[static_cast<size_t>(m)] = std::lgamma(double(m) + 1.0);
  }

  long n_max() const { return n_max_; }

  // Exact C(m,k); zero outside 0 <= k <= m.
  ExactInt binomial(long m, long k) const {
    if (m < 0) throw std::domain_error("binomial: m must be >= 0");
    check_capacity(m);
    if (k < 0 || k > m) return ExactInt(0);
    ExactInt den = fact_[static_cast<size_t>(k)] * fact_[static_cast<size_t>(m - k)];
    ExactInt result;
    mpz_divexact(result.get_mpz_t(), fact_[static_cast<size_t>(m)].get_mpz_t(), den.get_mpz_t());
    return result;
  }

  // C(2n,n)/(n+1)
  ExactInt catalan(long n) const {
    if (n < 0) throw std::domain_error("catalan: n must be >= 0");
    check_capacity(2 * n);
    ExactInt c = binomial(2 * n, n);
    ExactInt result;
    mpz_divexact_ui(result.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n) + 1);
    return result;
  }

  double log_factorial(long m) const {
    if (m < 0) throw std::domain_error("log_factorial: m must be >= 0");
    check_capacity(m);
    return log_fact_[static_cast<size_t>(m)];
  }

  // log C(m,k); -inf outside the triangle. Good to ~1e-11 absolute, which the
  // screening code budgets for.
  double log_binomial(long m, long k) const {
    if (m < 0) throw std::domain_error("log_binomial: m must be >= 0");
    check_capacity(m);
    if (k < 0 || k > m) return -std::numeric_limits<double>::infinity();
    return log_fact_[static_cast<size_t>(m)] - log_fact_[static_cast<size_t>(k)] -
           log_fact_[static_cast<size_t>(m - k)];
  }

 private:
  void check_capacity(long m) const {
    if (m > 2 * n_max_) throw capacity_error((m + 1) / 2, n_max_);
  }

  long n_max_;
  std::vector<ExactInt> fact_;
  std::vector<double> log_fact_;
};

}  // namespace catsort
