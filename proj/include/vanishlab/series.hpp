#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vanishlab/poly.hpp"

namespace vanishlab {

/// Truncation bound of one variable; std::nullopt means the variable is
/// carried exactly (no truncation).
using Precision = std::optional<std::int64_t>;

/// A Laurent polynomial standing in for a truncated (Laurent) power series.
///
/// Every variable either is exact or has a precision D: the coefficient of
/// z^alpha is known whenever alpha_v <= D_v for every truncated variable v,
/// and nothing is stored beyond that box. Arithmetic recomputes the largest
/// box that is still provably correct, so coefficients outside the known
/// region are never reported.
class TruncSeries {
 public:
  /// Wraps an exact Laurent polynomial (every variable exact).
  static TruncSeries exact(LaurentPoly body);

  /// `precision` has one entry per variable; the body is truncated to it.
  TruncSeries(LaurentPoly body, std::vector<Precision> precision);

  std::size_t arity() const { return body_.arity(); }
  const LaurentPoly& body() const { return body_; }
  const std::vector<Precision>& precision() const { return precision_; }
  Precision precision(std::size_t var) const { return precision_.at(var); }

  /// Whether the coefficient at alpha lies inside the known box.
  bool known(const ExponentVector& alpha) const;
  /// Throws DomainError when alpha is beyond the provable precision.
  Rational coeff_at(const ExponentVector& alpha) const;
  /// True when every known coefficient is zero.
  bool vanishes_to_precision() const { return body_.is_zero(); }

  /// Lowers the precision of each variable to at most the given bound.
  TruncSeries truncated(const std::vector<Precision>& bound) const;

  TruncSeries operator-() const;
  TruncSeries scaled(const Rational& c) const;

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  LaurentPoly body_;
  std::vector<Precision> precision_;
};

TruncSeries pow(const TruncSeries& s, std::int64_t m);

/// exp(s) = sum_k s^k / k!, truncated to the precision of s.
/// Requires at least one truncated variable, and every term of s must have
/// nonnegative exponents in the truncated variables with at least one of
/// them positive (in particular a zero constant term).
TruncSeries series_exp(const TruncSeries& s);

}  // namespace vanishlab
