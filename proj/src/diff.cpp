#include "vanishlab/diff.hpp"

#include <algorithm>

namespace vanishlab {

DiffOp::DiffOp(LaurentPoly symbol) : symbol_(std::move(symbol)) {
  if (!symbol_.is_polynomial())
    throw DomainError("operator symbol must have exponents in N^n");
}

DiffOp DiffOp::monomial(const ExponentVector& mu, const Rational& c) {
  return DiffOp(LaurentPoly::monomial(mu, c));
}

DiffOp DiffOp::pow(std::int64_t m) const { return DiffOp(vanishlab::pow(symbol_, m)); }

LaurentPoly apply_monomial(const ExponentVector& mu, const ExponentVector& beta, DiffMode mode) {
  require_same_arity(mu.arity(), beta.arity(), "apply_monomial");
  if (!mu.is_nonnegative()) throw DomainError("differentiation order must lie in N^n");
  LaurentPoly out(beta.arity());
  if (mode == DiffMode::Polynomial) {
    if (!beta.is_nonnegative())
      throw DomainError("polynomial-mode differentiation of a negative exponent");
    if (!beta.dominates(mu)) return out;
  }
  Integer coeff = 1;
  for (std::size_t i = 0; i < mu.arity(); ++i) coeff *= falling_factorial(beta[i], mu[i]);
  out.add_term(beta - mu, Rational(coeff));
  return out;
}

LaurentPoly apply(const DiffOp& op, const LaurentPoly& p, DiffMode mode) {
  require_same_arity(op.arity(), p.arity(), "apply");
  LaurentPoly out(p.arity());
  for (const auto& [mu, c] : op.symbol().terms())
    for (const auto& [beta, b] : p.terms()) {
      auto term = apply_monomial(mu, beta, mode);
      if (!term.is_zero()) out += term.scaled(c * b);
    }
  return out;
}

TruncSeries apply(const DiffOp& op, const TruncSeries& s, DiffMode mode) {
  require_same_arity(op.arity(), s.arity(), "apply");
  std::vector<Precision> precision = s.precision();
  for (std::size_t v = 0; v < precision.size(); ++v) {
    if (!precision[v] || op.is_zero()) continue;
    std::int64_t drop = 0;
    for (const auto& [mu, c] : op.symbol().terms()) drop = std::max(drop, mu[v]);
    *precision[v] -= drop;
  }
  return TruncSeries(apply(op, s.body(), mode), std::move(precision));
}

LaurentPoly apply_power(const DiffOp& op, std::int64_t m, const LaurentPoly& p, DiffMode mode) {
  if (m < 1) throw DomainError("apply_power: m must be >= 1");
  return apply(op.pow(m), p, mode);
}

TruncSeries apply_power(const DiffOp& op, std::int64_t m, const TruncSeries& s, DiffMode mode) {
  if (m < 1) throw DomainError("apply_power: m must be >= 1");
  return apply(op.pow(m), s, mode);
}

VanishingProfile vanishing_profile(const DiffOp& op, const LaurentPoly& p, const LaurentPoly& g,
                                   std::int64_t horizon, DiffMode mode) {
  require_same_arity(op.arity(), p.arity(), "vanishing_profile");
  require_same_arity(p.arity(), g.arity(), "vanishing_profile");
  if (p.is_zero()) throw DomainError("vanishing_profile: P must be nonzero");
  if (horizon < 1) throw DomainError("vanishing_profile: horizon must be >= 1");

  VanishingProfile profile{horizon, {}, std::nullopt, std::nullopt, std::nullopt};
  LaurentPoly op_power = LaurentPoly::constant(op.arity(), Rational(1));
  LaurentPoly p_power = op_power;
  for (std::int64_t m = 1; m <= horizon; ++m) {
    op_power *= op.symbol();
    p_power *= p;
    DiffOp lm(op_power);
    ProfileStep step{m, apply(lm, p_power, mode), apply(lm, p_power * g, mode)};
    if (!step.hypothesis.is_zero() && !profile.first_hypothesis_failure)
      profile.first_hypothesis_failure = m;
    if (!step.target.is_zero()) {
      if (!profile.first_target_failure) profile.first_target_failure = m;
      profile.target_vanishes_from.reset();
    } else if (!profile.target_vanishes_from) {
      profile.target_vanishes_from = m;
    }
    profile.steps.push_back(std::move(step));
  }
  return profile;
}

}  // namespace vanishlab
