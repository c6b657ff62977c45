#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vanishlab/diff.hpp"
#include "vanishlab/polytope.hpp"

namespace vanishlab {

enum class CaseStatus {
  Confirmed,        ///< hypotheses hold and every m in the verified range vanishes
  HypothesisFails,  ///< Lambda^m(P^m) != 0 for some m <= M
  CheckFailed,      ///< a claimed identity or vanishing did not hold
  Inconclusive,     ///< hypotheses hold to M but the criterion predicts a later failure
};

const char* to_string(CaseStatus s);

struct NamedCheck {
  std::string name;
  bool passed;
  bool hypothesis;  ///< part of the conjecture's hypothesis rather than a claim
};

struct Residual {
  std::int64_t m;
  std::string label;
  LaurentPoly value;
};

/// Outcome of one case checker. Everything is finite-horizon: "confirmed"
/// means verified for the listed m, never proved.
struct CaseVerdict {
  std::string case_name;
  std::int64_t horizon = 0;
  std::vector<NamedCheck> checks;
  /// Vanishing of Lambda^m(P^m g) is claimed for every m > bound.
  std::optional<Rational> bound;
  /// Range of m where the target was verified (empty when first > last).
  std::int64_t verified_first = 1;
  std::int64_t verified_last = 0;
  std::vector<Residual> residuals;
  std::vector<std::string> anomalies;
  std::optional<SeparationCertificate> certificate;
  std::optional<OrthantWitness> witness;
  /// Witness decomposed as u - v with u in Poly(P), v in Poly(Lambda).
  std::optional<std::pair<Point, Point>> witness_pair;
  std::optional<std::int64_t> moveaway;
  bool inconclusive = false;

  CaseStatus status() const;
  void check(std::string name, bool passed, bool hypothesis = false);
};

/// One variable: m1 = multiplicity of the root 0 of Lambda(xi), d = deg P,
/// d' = deg g; the bound is d' / (m1 - d).
CaseVerdict one_var_check(const DiffOp& op, const LaurentPoly& p, const LaurentPoly& g,
                          std::int64_t horizon);

/// e^{x Phi(d_y)} f(y) as a polynomial in (x, y). Phi and f are one-variable
/// polynomials; Phi must be zero or have order >= 1. The result is checked
/// to be annihilated by d_x - Phi(d_y).
LaurentPoly phi_flow(const LaurentPoly& phi, const LaurentPoly& f);

/// The operator d_x - Phi(d_y) on (x, y).
DiffOp phi_operator(const LaurentPoly& phi);

/// Lambda = d_x - Phi(d_y), P = phi_flow(Phi, f), g in (x, y).
CaseVerdict phi_case_check(const LaurentPoly& phi, const LaurentPoly& f, const LaurentPoly& g,
                           std::int64_t horizon);

struct BinomialGap {
  Integer lhs;  ///< C(2d, r)
  Integer rhs;  ///< 2^r C(d, r)
  /// The four-term leading-coefficient expression (only for r >= 2).
  std::optional<Integer> expression;

  bool holds() const { return lhs >= rhs && (!expression || *expression > 0); }
};

/// Requires d >= r >= 0.
BinomialGap binomial_gap_check(std::int64_t d, std::int64_t r);

/// P = z^alpha with alpha in N^n, general Lambda.
CaseVerdict monomial_case_check(const DiffOp& op, const ExponentVector& alpha,
                                const LaurentPoly& g, std::int64_t horizon);

/// Lambda = d^alpha, general polynomial P.
CaseVerdict monomial_operator_case_check(const ExponentVector& alpha, const LaurentPoly& p,
                                         const LaurentPoly& g, std::int64_t horizon);

/// Lambda = a d^alpha + b d^beta with |alpha| != |beta|, P homogeneous.
CaseVerdict two_monomial_check(const Rational& a, const ExponentVector& alpha, const Rational& b,
                               const ExponentVector& beta, const LaurentPoly& p,
                               const LaurentPoly& g, std::int64_t horizon);

/// P = a z^alpha + b z^beta with |alpha| != |beta|, Lambda homogeneous.
CaseVerdict homogeneous_two_monomial_P_check(const DiffOp& op, const Rational& a,
                                             const ExponentVector& alpha, const Rational& b,
                                             const ExponentVector& beta, const LaurentPoly& g,
                                             std::int64_t horizon);

}  // namespace vanishlab
