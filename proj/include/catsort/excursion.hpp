#pragma once

#include <catsort/sorting.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace catsort {

// Marginal law of the Brownian excursion at an interior time t: the value
// B(t) has density proportional to x^2 exp(-x^2 / (2 t(1-t))) on x >= 0.
// F(t,r) below is its CDF; the finite-n curve h -> R_n(h,z) converges to
// t -> F(t, z/sqrt(2n)) under h = floor(t n).
struct ExcursionQuery {
  double t = 0.5;
  double r = 0.0;
};

struct QuadratureConfig {
  double abs_tol = 1e-10;
  int max_depth = 40;
};

class tolerance_error : public std::runtime_error {
 public:
  tolerance_error(double requested, double achieved)
      : std::runtime_error(make_message(requested, achieved)), achieved_(achieved) {}
  double achieved_error() const { return achieved_; }

 private:
  static std::string make_message(double requested, double achieved) {
    std::ostringstream os;
    os << "quadrature did not converge: requested abs_tol " << requested
       << " but achieved error estimate " << achieved;
    return os.str();
  }
  double achieved_;
};

namespace detail {

struct SimpsonState {
  int max_depth;
  double achieved = 0.0;  // accumulated error bound over accepted intervals
  bool converged = true;
};

// Standard adaptive Simpson: accept a split when the two halves agree with
// the parent to 15*tol, add the Richardson term, halve tol on recursion.
template <typename F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth, SimpsonState& state) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * tol || depth >= state.max_depth) {
    if (std::fabs(delta) > 15.0 * tol) state.converged = false;
    state.achieved += std::fabs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, state) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, state);
}

inline void require_excursion_domain(double t, double r) {
  if (!(t > 0.0 && t < 1.0)) throw std::domain_error("excursion cdf: need 0 < t < 1");
  if (!(r >= 0.0) || !std::isfinite(r)) throw std::domain_error("excursion cdf: need finite r >= 0");
}

}  // namespace detail

// F(t,r) = (2 / sqrt(2 pi t^3 (1-t)^3)) * integral_0^r x^2 exp(-x^2/(2 t(1-t))) dx
inline double excursion_cdf(ExcursionQuery q, QuadratureConfig cfg = {}) {
  detail::require_excursion_domain(q.t, q.r);
  if (q.r == 0.0) return 0.0;
  const double variance = q.t * (1.0 - q.t);
  const double scale = 2.0 / std::sqrt(2.0 * M_PI * variance * variance * variance);
  const auto f = [variance](double x) { return x * x * std::exp(-x * x / (2.0 * variance)); };

  detail::SimpsonState state{cfg.max_depth};
  const double a = 0.0, b = q.r;
  const double fa = 0.0, fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double integral =
      detail::adaptive_simpson(f, a, b, fa, fm, fb, whole, cfg.abs_tol, 0, state);
  if (!state.converged) throw tolerance_error(cfg.abs_tol, state.achieved * scale);
  return scale * integral;
}

// Same quantity through the error function (the density is a chi distribution
// with three degrees of freedom, scaled by sqrt(t(1-t))). Used to cross-check
// the quadrature.
inline double excursion_cdf_closed_form(double t, double r) {
  detail::require_excursion_domain(t, r);
  const double u = r / std::sqrt(t * (1.0 - t));
  return std::erf(u / std::sqrt(2.0)) - std::sqrt(2.0 / M_PI) * u * std::exp(-0.5 * u * u);
}

struct LimitComparison {
  double t = 0.0;
  double r_value = 0.0;      // R_n(floor(t n), z)
  double limit_value = 0.0;  // F(t, z / sqrt(2n))
  double gap = 0.0;
};

inline std::vector<LimitComparison> compare_finite_to_limit(const BinomialCache& cache, long n,
                                                            long z, const std::vector<double>& grid,
                                                            QuadratureConfig cfg = {}) {
  std::vector<LimitComparison> out;
  out.reserve(grid.size());
  const double r = double(z) / std::sqrt(2.0 * double(n));
  for (double t : grid) {
    if (!(t > 0.0 && t < 1.0)) throw std::domain_error("limit comparison: grid t must lie in (0,1)");
    const long h = static_cast<long>(std::floor(t * double(n)));
    LimitComparison row;
    row.t = t;
    row.r_value = to_double(sorting_probability(cache, n, h, z));
    row.limit_value = excursion_cdf(ExcursionQuery{t, r}, cfg);
    row.gap = std::fabs(row.r_value - row.limit_value);
    out.push_back(row);
  }
  return out;
}

}  // namespace catsort
