#include "vanishlab/poly.hpp"

#include <algorithm>
#include <string>

namespace vanishlab {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

}  // namespace

void require_same_arity(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw ArityError(std::string(what) + ": arity mismatch (" + std::to_string(a) + " vs " +
                     std::to_string(b) + ")");
}

// ---- ExponentVector ------------------------------------------------------

std::int64_t ExponentVector::total() const {
  std::int64_t s = 0;
  for (auto e : entries_) s = checked_add(s, e);
  return s;
}

bool ExponentVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
}

bool ExponentVector::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e >= 0; });
}

bool ExponentVector::dominates(const ExponentVector& other) const {
  require_same_arity(arity(), other.arity(), "dominates");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] < other.entries_[i]) return false;
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  require_same_arity(arity(), other.arity(), "exponent add");
  std::vector<std::int64_t> out(entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(entries_[i], other.entries_[i]);
  return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
  return *this + (-other);
}

ExponentVector ExponentVector::operator-() const { return scaled(-1); }

ExponentVector ExponentVector::scaled(std::int64_t k) const {
  std::vector<std::int64_t> out(entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_mul(entries_[i], k);
  return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::with(std::size_t i, std::int64_t value) const {
  auto copy = entries_;
  copy.at(i) = value;
  return ExponentVector(std::move(copy));
}

bool GrlexGreater::operator()(const ExponentVector& a, const ExponentVector& b) const {
  auto ta = a.total();
  auto tb = b.total();
  if (ta != tb) return ta > tb;
  return std::lexicographical_compare(b.entries().begin(), b.entries().end(), a.entries().begin(),
                                      a.entries().end());
}

// ---- LaurentPoly ---------------------------------------------------------

LaurentPoly::LaurentPoly(std::size_t arity,
                         std::initializer_list<std::pair<ExponentVector, Rational>> terms)
    : arity_(arity) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::constant(std::size_t arity, const Rational& c) {
  LaurentPoly p(arity);
  p.add_term(ExponentVector(arity), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const ExponentVector& exponent, const Rational& c) {
  LaurentPoly p(exponent.arity());
  p.add_term(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw std::out_of_range("variable index out of range");
  return monomial(ExponentVector(arity).with(index, 1));
}

Rational LaurentPoly::coeff_at(const ExponentVector& alpha) const {
  require_same_arity(arity_, alpha.arity(), "coeff_at");
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::constant_term() const { return coeff_at(ExponentVector(arity_)); }

std::vector<ExponentVector> LaurentPoly::support() const {
  std::vector<ExponentVector> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

void LaurentPoly::add_term(const ExponentVector& alpha, const Rational& c) {
  require_same_arity(arity_, alpha.arity(), "add_term");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_arity(arity_, other.arity_, "add");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  require_same_arity(arity_, other.arity_, "sub");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(Rational(-1)); }

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly out(arity_);
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, k * c);
  return out;
}

LaurentPoly LaurentPoly::shifted(const ExponentVector& beta) const {
  require_same_arity(arity_, beta.arity(), "shift");
  LaurentPoly out(arity_);
  // a common shift preserves graded-lex order
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + beta, c);
  return out;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly out(arity_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPoly LaurentPoly::holomorphic_part() const {
  return filtered([](const ExponentVector& e) { return e.is_nonnegative(); });
}

bool LaurentPoly::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.is_nonnegative(); });
}

bool LaurentPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.total() == terms_.rbegin()->first.total();
}

std::int64_t LaurentPoly::total_degree() const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial");
  return terms_.begin()->first.total();
}

std::int64_t LaurentPoly::degree_in(std::size_t i) const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial");
  std::int64_t best = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) best = std::max(best, e[i]);
  return best;
}

std::int64_t LaurentPoly::min_degree_in(std::size_t i) const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial");
  std::int64_t best = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) best = std::min(best, e[i]);
  return best;
}

LaurentPoly LaurentPoly::substitute(std::size_t var, const LaurentPoly& replacement) const {
  require_same_arity(arity_, replacement.arity_, "substitute");
  if (var >= arity_) throw std::out_of_range("substitute: variable index out of range");
  LaurentPoly out(arity_);
  std::vector<LaurentPoly> powers{LaurentPoly::constant(arity_, Rational(1))};
  for (const auto& [e, c] : terms_) {
    if (e[var] < 0) throw DomainError("substitute: negative exponent in substituted variable");
    while (static_cast<std::int64_t>(powers.size()) <= e[var])
      powers.push_back(powers.back() * replacement);
    LaurentPoly term = powers[static_cast<std::size_t>(e[var])].shifted(e.with(var, 0));
    out += term.scaled(c);
  }
  return out;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_arity(a.arity(), b.arity(), "mul");
  LaurentPoly out(a.arity());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly pow(const LaurentPoly& p, std::int64_t m) {
  if (m < 0) throw DomainError("pow: negative exponent");
  LaurentPoly result = LaurentPoly::constant(p.arity(), Rational(1));
  LaurentPoly base = p;
  while (m > 0) {
    if (m & 1) result *= base;
    m >>= 1;
    if (m > 0) base *= base;
  }
  return result;
}

}  // namespace vanishlab
