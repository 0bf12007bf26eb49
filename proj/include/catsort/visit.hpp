#pragma once

#include <catsort/ballot.hpp>

namespace catsort {

enum class VisitKind { vertex, edge, double_edge };

// Probability that a uniform above-diagonal path visits a vertex, a vertical
// edge (the edge below (a,b)), or two consecutive vertical edges (centered at
// (a,b)).
struct VisitProbability {
  ExactRatio value;
  VisitKind kind = VisitKind::vertex;
  LatticePoint point;
  long n = 0;
};

// paths through (a,b)
inline ExactInt vertex_visit_count(const BinomialCache& cache, long n, long a, long b) {
  if (!(0 <= a && a <= b && b <= n))
    throw std::domain_error("vertex visit: need 0 <= a <= b <= n");
  return ballot_count(cache, a, b) * ballot_count(cache, n - b, n - a);
}

inline ExactRatio vertex_visit(const BinomialCache& cache, long n, long a, long b) {
  return make_ratio(vertex_visit_count(cache, n, a, b), cache.catalan(n));
}

// paths through the vertical edge (a,b-1) -> (a,b)
inline ExactInt edge_visit_count(const BinomialCache& cache, long n, long a, long b) {
  if (!(0 <= a && a <= b - 1 && b <= n))
    throw std::domain_error("edge visit: need 0 <= a <= b-1 and b <= n");
  return ballot_count(cache, a, b - 1) * ballot_count(cache, n - b, n - a);
}

inline ExactRatio edge_visit(const BinomialCache& cache, long n, long a, long b) {
  return make_ratio(edge_visit_count(cache, n, a, b), cache.catalan(n));
}

// paths through both (a,b-1) -> (a,b) and (a,b) -> (a,b+1)
inline ExactInt double_edge_visit_count(const BinomialCache& cache, long n, long a, long b) {
  if (!(0 <= a && a <= b - 1 && b + 1 <= n))
    throw std::domain_error("double edge visit: need 0 <= a <= b-1 and b+1 <= n");
  return ballot_count(cache, a, b - 1) * ballot_count(cache, n - b - 1, n - a);
}

inline ExactRatio double_edge_visit(const BinomialCache& cache, long n, long a, long b) {
  return make_ratio(double_edge_visit_count(cache, n, a, b), cache.catalan(n));
}

inline VisitProbability visit_probability(const BinomialCache& cache, long n, VisitKind kind,
                                          LatticePoint p) {
  VisitProbability v;
  v.kind = kind;
  v.point = p;
  v.n = n;
  switch (kind) {
    case VisitKind::vertex:
      v.value = vertex_visit(cache, n, p.x, p.y);
      break;
    case VisitKind::edge:
      v.value = edge_visit(cache, n, p.x, p.y);
      break;
    case VisitKind::double_edge:
      v.value = double_edge_visit(cache, n, p.x, p.y);
      break;
  }
  return v;
}

}  // namespace catsort
