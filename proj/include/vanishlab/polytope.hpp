#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "vanishlab/diff.hpp"
#include "vanishlab/poly.hpp"

namespace vanishlab {

using Point = std::vector<Rational>;

Point to_point(const ExponentVector& e);
Rational dot(const Point& a, const Point& b);

/// Convex hull of a finite, nonempty generator list in Q^n (V-representation).
/// Generators may be redundant; two polytopes are equal as sets iff each
/// generator of one is contained in the other.
class RationalPolytope {
 public:
  RationalPolytope(std::size_t arity, std::vector<Point> generators);

  std::size_t arity() const { return arity_; }
  const std::vector<Point>& generators() const { return generators_; }

 private:
  std::size_t arity_;
  std::vector<Point> generators_;
};

/// Functional c >= 0 with sum(c) = 1 and c.u <= -delta < 0 on every generator:
/// a proof that the polytope misses the closed nonnegative orthant.
struct SeparationCertificate {
  Point c;
  Rational delta;
};

/// A rational point of the polytope inside the nonnegative orthant, with the
/// convex weights (one per generator) that produce it.
struct OrthantWitness {
  Point point;
  std::vector<Rational> weights;
};

using OrthantMeet = std::variant<OrthantWitness, SeparationCertificate>;

/// Poly(P): generators are Supp(P). Throws DomainError for P = 0.
RationalPolytope newton_polytope(const LaurentPoly& p);
RationalPolytope newton_polytope(const DiffOp& op);

/// A - B with generators a_i - b_j ordered i-major (index i * |B| + j).
RationalPolytope minkowski_diff(const RationalPolytope& a, const RationalPolytope& b);

/// beta + m * sigma.
RationalPolytope scale_translate(const RationalPolytope& sigma, const Rational& m,
                                 const Point& beta);

/// Convex weights expressing w, or nullopt when w lies outside.
std::optional<std::vector<Rational>> contains_point(const RationalPolytope& sigma, const Point& w);

/// Decides sigma ∩ R>=0^n. A generator already in the orthant is returned as
/// the witness; otherwise the first basic feasible solution of the
/// feasibility LP. When disjoint, the certificate maximizes delta and, among
/// maximizers, the smallest component of c.
OrthantMeet orthant_meet(const RationalPolytope& sigma);

bool verify_certificate(const RationalPolytope& sigma, const SeparationCertificate& cert);
bool verify_witness(const RationalPolytope& sigma, const OrthantWitness& witness);

/// N = max(1, floor(c.beta / delta) + 1): (beta + m*sigma) misses the orthant
/// for every m >= N. Throws DomainError when the certificate does not verify.
std::int64_t moveaway_bound(const Point& beta, const RationalPolytope& sigma,
                            const SeparationCertificate& cert);

}  // namespace vanishlab
