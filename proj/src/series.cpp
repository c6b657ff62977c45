#include "vanishlab/series.hpp"

#include <algorithm>

namespace vanishlab {

namespace {

// Saturating arithmetic on Precision, nullopt being +infinity.
Precision add(Precision a, Precision b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

Precision min(Precision a, Precision b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

// Lower bound on the true exponents of variable v, counting the unknown tail
// (which starts above the precision).
Precision low_exponent(const TruncSeries& s, std::size_t v) {
  Precision low = s.precision(v) ? Precision(*s.precision(v) + 1) : std::nullopt;
  if (!s.body().is_zero()) low = min(low, s.body().min_degree_in(v));
  return low;
}

}  // namespace

TruncSeries TruncSeries::exact(LaurentPoly body) {
  auto n = body.arity();
  return TruncSeries(std::move(body), std::vector<Precision>(n));
}

TruncSeries::TruncSeries(LaurentPoly body, std::vector<Precision> precision)
    : body_(std::move(body)), precision_(std::move(precision)) {
  require_same_arity(body_.arity(), precision_.size(), "TruncSeries");
  body_ = body_.filtered([this](const ExponentVector& e) { return known(e); });
}

bool TruncSeries::known(const ExponentVector& alpha) const {
  require_same_arity(arity(), alpha.arity(), "TruncSeries::known");
  for (std::size_t v = 0; v < precision_.size(); ++v)
    if (precision_[v] && alpha[v] > *precision_[v]) return false;
  return true;
}

Rational TruncSeries::coeff_at(const ExponentVector& alpha) const {
  if (!known(alpha)) throw DomainError("coefficient requested beyond series precision");
  return body_.coeff_at(alpha);
}

TruncSeries TruncSeries::truncated(const std::vector<Precision>& bound) const {
  require_same_arity(arity(), bound.size(), "truncated");
  std::vector<Precision> p(arity());
  for (std::size_t v = 0; v < p.size(); ++v) p[v] = min(precision_[v], bound[v]);
  return TruncSeries(body_, std::move(p));
}

TruncSeries TruncSeries::operator-() const { return TruncSeries(-body_, precision_); }

TruncSeries TruncSeries::scaled(const Rational& c) const {
  return TruncSeries(body_.scaled(c), precision_);
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  require_same_arity(a.arity(), b.arity(), "series add");
  std::vector<Precision> p(a.arity());
  for (std::size_t v = 0; v < p.size(); ++v) p[v] = min(a.precision_[v], b.precision_[v]);
  return TruncSeries(a.body_ + b.body_, std::move(p));
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  require_same_arity(a.arity(), b.arity(), "series mul");
  // The coefficient at j picks up unknown terms of a only if
  // j_v > D_a(v) + low_b(v), and symmetrically for b.
  std::vector<Precision> p(a.arity());
  for (std::size_t v = 0; v < p.size(); ++v)
    p[v] = min(add(a.precision_[v], low_exponent(b, v)), add(b.precision_[v], low_exponent(a, v)));
  return TruncSeries(a.body_ * b.body_, std::move(p));
}

TruncSeries pow(const TruncSeries& s, std::int64_t m) {
  if (m < 0) throw DomainError("pow: negative exponent");
  TruncSeries result = TruncSeries::exact(LaurentPoly::constant(s.arity(), Rational(1)));
  for (std::int64_t i = 0; i < m; ++i) result = result * s;
  return result;
}

TruncSeries series_exp(const TruncSeries& s) {
  std::int64_t budget = 0;
  bool any_series = false;
  for (const auto& p : s.precision()) {
    if (!p) continue;
    any_series = true;
    budget += std::max<std::int64_t>(*p, 0);
  }
  if (!any_series) throw DomainError("series_exp: no truncated variable");
  for (const auto& [e, c] : s.body().terms()) {
    bool positive = false;
    for (std::size_t v = 0; v < e.arity(); ++v) {
      if (!s.precision(v)) continue;
      if (e[v] < 0) throw DomainError("series_exp: negative exponent in a series variable");
      if (e[v] > 0) positive = true;
    }
    if (!positive) throw DomainError("series_exp: argument has a nonzero constant term");
  }
  // Every term of s^k has series degree >= k, so k <= sum of precisions suffices.
  TruncSeries term = TruncSeries::exact(LaurentPoly::constant(s.arity(), Rational(1)));
  TruncSeries total = term;
  for (std::int64_t k = 1; k <= budget; ++k) {
    term = (term * s).scaled(Rational(1, k));
    if (term.body().is_zero()) break;
    total = total + term;
  }
  return total.truncated(s.precision());
}

}  // namespace vanishlab
