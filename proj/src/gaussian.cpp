#include "vanishlab/gaussian.hpp"

#include <algorithm>

namespace vanishlab {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational norm = o.re * o.re + o.im * o.im;
  if (norm == 0) throw DomainError("division by zero");
  *this *= o.conj();
  re /= norm;
  im /= norm;
  return *this;
}

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  std::string imag;
  Rational mag = z.im < 0 ? Rational(-z.im) : z.im;
  imag = mag == 1 ? "i" : to_string(mag) + "*i";
  if (z.re == 0) return (z.im < 0 ? "-" : "") + imag;
  return to_string(z.re) + (z.im < 0 ? "-" : "+") + imag;
}

GaussPoly::GaussPoly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

GaussPoly GaussPoly::constant(const GaussianRational& c) { return GaussPoly({c}); }

GaussPoly GaussPoly::monomial(std::size_t k, const GaussianRational& c) {
  std::vector<GaussianRational> v(k + 1);
  v[k] = c;
  return GaussPoly(std::move(v));
}

GaussianRational GaussPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : GaussianRational();
}

void GaussPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussPoly GaussPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<GaussianRational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    out[k - 1] = coeffs_[k] * GaussianRational(Rational(static_cast<long>(k)));
  return GaussPoly(std::move(out));
}

GaussPoly GaussPoly::scaled(const GaussianRational& c) const {
  std::vector<GaussianRational> out = coeffs_;
  for (auto& v : out) v *= c;
  return GaussPoly(std::move(out));
}

GaussPoly operator+(const GaussPoly& a, const GaussPoly& b) {
  std::vector<GaussianRational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
  return GaussPoly(std::move(out));
}

GaussPoly operator-(const GaussPoly& a, const GaussPoly& b) { return a + b.scaled(-1); }

GaussPoly operator*(const GaussPoly& a, const GaussPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return GaussPoly(std::move(out));
}

GaussPoly pow(const GaussPoly& p, long m) {
  if (m < 0) throw DomainError("pow: negative exponent");
  GaussPoly result = GaussPoly::constant(1);
  for (long i = 0; i < m; ++i) result = result * p;
  return result;
}

}  // namespace vanishlab
