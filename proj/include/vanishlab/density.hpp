#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vanishlab/polytope.hpp"

namespace vanishlab {

/// R_u: the ray from the origin through u (just the origin when u = 0).
/// Exact: lambda = k*u for some k >= 0, tested by cross-multiplication.
bool on_ray(const ExponentVector& lambda, const Point& u);

struct RayHit {
  std::int64_t m;
  ExponentVector lambda;  ///< a point of Supp(P^m) on R_u
};

enum class RayVerdict { Found, Inconclusive };

struct RaySearchReport {
  Point u;
  std::int64_t horizon;
  std::vector<RayHit> hits;  ///< sorted by m, then canonical term order
  RayVerdict verdict;
};

/// Scans Supp(P^m), m = 1..M, for lattice points on R_u.
/// Throws DomainError when u is not in Poly(P) or M < 1.
RaySearchReport ray_hits_support(const LaurentPoly& p, const Point& u, std::int64_t horizon);

/// The distinct m <= M with R_u ∩ Supp(P^m) nonempty.
std::vector<std::int64_t> repeated_hits(const LaurentPoly& p, const Point& u, std::int64_t horizon);

/// For P homogeneous of nonzero generalized degree: the m <= M with
/// m*u in Supp(P^m). Throws DomainError when P is not homogeneous, has
/// degree 0, or u is not in Poly(P).
std::vector<std::int64_t> homogeneous_density(const LaurentPoly& p, const Point& u,
                                              std::int64_t horizon);

enum class DkVerdict {
  HypothesisFails,  ///< some constant term of f^m is nonzero
  Consistent,       ///< all constant terms vanish and 0 is outside Poly(f)
  PredictsNonzero,  ///< all vanish up to M yet 0 lies in Poly(f)
};

struct DkReport {
  std::int64_t horizon;
  std::vector<Rational> constant_terms;  ///< [z^0] f^m for m = 1..M
  std::optional<std::int64_t> first_nonzero;
  bool origin_in_polytope;
  DkVerdict verdict;
};

DkReport dk_check(const LaurentPoly& f, std::int64_t horizon);

const char* to_string(RayVerdict v);
const char* to_string(DkVerdict v);

}  // namespace vanishlab
