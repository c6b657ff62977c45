#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vanishlab/poly.hpp"
#include "vanishlab/series.hpp"

namespace vanishlab {

inline constexpr std::int64_t kDefaultHorizon = 8;

/// Constant-coefficient differential operator Lambda(d), stored as its symbol
/// Lambda(xi), a polynomial whose exponents all lie in N^n.
class DiffOp {
 public:
  explicit DiffOp(LaurentPoly symbol);
  /// d^mu scaled by c.
  static DiffOp monomial(const ExponentVector& mu, const Rational& c = Rational(1));

  std::size_t arity() const { return symbol_.arity(); }
  const LaurentPoly& symbol() const { return symbol_; }
  bool is_zero() const { return symbol_.is_zero(); }
  /// Supp(Lambda), the support of the symbol.
  std::vector<ExponentVector> support() const { return symbol_.support(); }

  /// Operator whose symbol is Lambda(xi)^m.
  DiffOp pow(std::int64_t m) const;

  friend bool operator==(const DiffOp&, const DiffOp&) = default;

 private:
  LaurentPoly symbol_;
};

/// Differentiation rule for monomials.
///  Polynomial: beta must lie in N^n; d^mu z^beta = 0 unless beta >= mu.
///  Laurent:    falling-factorial rule, valid for negative exponents.
/// On N^n exponents the two agree.
enum class DiffMode { Polynomial, Laurent };

/// d^mu applied to z^beta: a single term or zero.
LaurentPoly apply_monomial(const ExponentVector& mu, const ExponentVector& beta,
                           DiffMode mode = DiffMode::Polynomial);

LaurentPoly apply(const DiffOp& op, const LaurentPoly& p, DiffMode mode = DiffMode::Polynomial);

/// On truncated series the precision of each truncated variable drops by the
/// largest order of differentiation in that variable.
TruncSeries apply(const DiffOp& op, const TruncSeries& s, DiffMode mode = DiffMode::Laurent);

/// Lambda^m applied to p via the symbol power; m >= 1.
LaurentPoly apply_power(const DiffOp& op, std::int64_t m, const LaurentPoly& p,
                        DiffMode mode = DiffMode::Polynomial);
TruncSeries apply_power(const DiffOp& op, std::int64_t m, const TruncSeries& s,
                        DiffMode mode = DiffMode::Laurent);

struct ProfileStep {
  std::int64_t m;
  LaurentPoly hypothesis;  ///< Lambda^m(P^m)
  LaurentPoly target;      ///< Lambda^m(P^m g)
};

/// Finite-horizon record of the sequences Lambda^m(P^m) and Lambda^m(P^m g),
/// m = 1..M. It can only ever say "verified up to M".
struct VanishingProfile {
  std::int64_t horizon;
  std::vector<ProfileStep> steps;
  std::optional<std::int64_t> first_hypothesis_failure;
  std::optional<std::int64_t> first_target_failure;
  /// Smallest m0 such that the target vanishes for every m0 <= m <= M.
  std::optional<std::int64_t> target_vanishes_from;

  bool hypothesis_holds() const { return !first_hypothesis_failure.has_value(); }
};

/// Throws DomainError for P = 0 or M < 1.
VanishingProfile vanishing_profile(const DiffOp& op, const LaurentPoly& p, const LaurentPoly& g,
                                   std::int64_t horizon = kDefaultHorizon,
                                   DiffMode mode = DiffMode::Polynomial);

}  // namespace vanishlab
