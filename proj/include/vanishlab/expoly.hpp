#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "vanishlab/gaussian.hpp"

namespace vanishlab {

/// Finite exponential expansion sum_lambda c_lambda(z) e^{lambda z} in one
/// variable: distinct Gaussian-rational frequencies, nonzero polynomial
/// coefficients.
class ExpPoly {
 public:
  using TermMap = std::map<GaussianRational, GaussPoly>;

  ExpPoly() = default;
  /// c(z) e^{lambda z}
  static ExpPoly term(const GaussPoly& c, const GaussianRational& lambda);
  static ExpPoly polynomial(const GaussPoly& c) { return term(c, GaussianRational()); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  /// c_lambda(z), zero when the frequency is absent.
  GaussPoly coefficient(const GaussianRational& lambda) const;
  /// True when the only frequency is 0.
  bool is_polynomial() const;

  /// d/dz: (c' + lambda c) e^{lambda z} termwise.
  ExpPoly derivative() const;
  ExpPoly scaled(const GaussianRational& c) const;

  friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

 private:
  void add(const GaussianRational& lambda, const GaussPoly& c);
  TermMap terms_;
};

ExpPoly pow(const ExpPoly& e, std::int64_t m);

/// Lambda(D) applied to E, with the symbol Lambda(xi) given lowest degree
/// first and evaluated by Horner's rule in D.
ExpPoly expoly_apply(const GaussPoly& symbol, const ExpPoly& e);

/// First m <= M with Lambda^m(E^m) != 0. A hit rules E out as a solution of
/// the vanishing hypothesis; no hit proves nothing.
std::optional<std::int64_t> exp_hypothesis_probe(const GaussPoly& symbol, const ExpPoly& e,
                                                 std::int64_t horizon);

std::string to_string(const ExpPoly& e);

}  // namespace vanishlab
