#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "vanishlab/rational.hpp"

namespace vanishlab {

/// A point of Z^n, used as the exponent of a Laurent monomial z^alpha.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t arity) : entries_(arity, 0) {}
  explicit ExponentVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}
  ExponentVector(std::initializer_list<std::int64_t> entries) : entries_(entries) {}

  std::size_t arity() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::span<const std::int64_t> entries() const { return entries_; }

  /// |u|: the coordinate sum (may be negative).
  std::int64_t total() const;
  bool is_zero() const;
  /// True when every component is >= 0, i.e. the point lies in N^n.
  bool is_nonnegative() const;
  /// Componentwise partial order: *this >= other iff *this - other in N^n.
  bool dominates(const ExponentVector& other) const;

  ExponentVector operator+(const ExponentVector& other) const;
  ExponentVector operator-(const ExponentVector& other) const;
  ExponentVector operator-() const;
  ExponentVector scaled(std::int64_t k) const;
  ExponentVector with(std::size_t i, std::int64_t value) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// Graded-lex "greater first": higher coordinate sum first, ties broken by
/// lexicographic comparison with the first variable most significant.
struct GrlexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
/// Canonical form: no stored zero coefficients, terms iterated in descending
/// graded-lex order.
class LaurentPoly {
 public:
  using TermMap = std::map<ExponentVector, Rational, GrlexGreater>;

  explicit LaurentPoly(std::size_t arity) : arity_(arity) {}
  LaurentPoly(std::size_t arity, std::initializer_list<std::pair<ExponentVector, Rational>> terms);

  static LaurentPoly constant(std::size_t arity, const Rational& c);
  static LaurentPoly monomial(const ExponentVector& exponent, const Rational& c = Rational(1));
  static LaurentPoly variable(std::size_t arity, std::size_t index);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// [z^alpha]P, zero when absent.
  Rational coeff_at(const ExponentVector& alpha) const;
  Rational constant_term() const;
  /// Supp(P) in canonical order.
  std::vector<ExponentVector> support() const;

  /// Adds c*z^alpha in place, dropping the term if it cancels.
  void add_term(const ExponentVector& alpha, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;
  LaurentPoly scaled(const Rational& c) const;
  /// z^beta * P.
  LaurentPoly shifted(const ExponentVector& beta) const;
  /// P(z^{-1}): every exponent negated.
  LaurentPoly reflected() const;

  /// Sub-sum over exponents lying in N^n.
  LaurentPoly holomorphic_part() const;
  /// Keeps the terms whose exponent satisfies the predicate.
  template <class Pred>
  LaurentPoly filtered(Pred&& keep) const {
    LaurentPoly out(arity_);
    for (const auto& [e, c] : terms_)
      if (keep(e)) out.terms_.emplace_hint(out.terms_.end(), e, c);
    return out;
  }

  bool is_polynomial() const;  ///< every exponent in N^n
  /// All terms share one coordinate sum (generalized degree).
  bool is_homogeneous() const;
  /// Largest coordinate sum; requires a nonzero polynomial.
  std::int64_t total_degree() const;
  /// Largest / smallest exponent of variable i; require a nonzero polynomial.
  std::int64_t degree_in(std::size_t i) const;
  std::int64_t min_degree_in(std::size_t i) const;

  /// Replaces variable `var` by `replacement`; exponents of `var` must be >= 0.
  LaurentPoly substitute(std::size_t var, const LaurentPoly& replacement) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t arity_;
  TermMap terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

/// P^m with P^0 = 1, by repeated squaring.
LaurentPoly pow(const LaurentPoly& p, std::int64_t m);

void require_same_arity(std::size_t a, std::size_t b, const char* what);

}  // namespace vanishlab
