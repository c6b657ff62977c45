#pragma once

#include <compare>
#include <string>
#include <vector>

#include "vanishlab/rational.hpp"

namespace vanishlab {

/// re + im*i over Q, i^2 = -1.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit embedding of Q
  GaussianRational(long r) : re(r) {}                  // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re, -im}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  /// Lexicographic on (re, im); only used to key maps.
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    return a.re < b.re || (a.re == b.re && a.im < b.im);
  }
};

std::string to_string(const GaussianRational& z);

/// Dense univariate polynomial over the Gaussian rationals, lowest degree
/// first, no trailing zeros.
class GaussPoly {
 public:
  GaussPoly() = default;
  explicit GaussPoly(std::vector<GaussianRational> coeffs);
  static GaussPoly constant(const GaussianRational& c);
  /// c * z^k
  static GaussPoly monomial(std::size_t k, const GaussianRational& c = GaussianRational(1));

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  GaussianRational coeff(std::size_t k) const;

  GaussPoly derivative() const;
  GaussPoly scaled(const GaussianRational& c) const;

  friend GaussPoly operator+(const GaussPoly& a, const GaussPoly& b);
  friend GaussPoly operator-(const GaussPoly& a, const GaussPoly& b);
  friend GaussPoly operator*(const GaussPoly& a, const GaussPoly& b);
  friend bool operator==(const GaussPoly&, const GaussPoly&) = default;

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

GaussPoly pow(const GaussPoly& p, long m);

}  // namespace vanishlab
