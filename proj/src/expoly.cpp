#include "vanishlab/expoly.hpp"

namespace vanishlab {

ExpPoly ExpPoly::term(const GaussPoly& c, const GaussianRational& lambda) {
  ExpPoly e;
  e.add(lambda, c);
  return e;
}

void ExpPoly::add(const GaussianRational& lambda, const GaussPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GaussPoly ExpPoly::coefficient(const GaussianRational& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? GaussPoly() : it->second;
}

bool ExpPoly::is_polynomial() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

ExpPoly ExpPoly::derivative() const {
  ExpPoly out;
  for (const auto& [lambda, c] : terms_) out.add(lambda, c.derivative() + c.scaled(lambda));
  return out;
}

ExpPoly ExpPoly::scaled(const GaussianRational& c) const {
  ExpPoly out;
  for (const auto& [lambda, p] : terms_) out.add(lambda, p.scaled(c));
  return out;
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly out = a;
  for (const auto& [lambda, c] : b.terms_) out.add(lambda, c);
  return out;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly out;
  for (const auto& [la, ca] : a.terms_)
    for (const auto& [lb, cb] : b.terms_) out.add(la + lb, ca * cb);
  return out;
}

ExpPoly pow(const ExpPoly& e, std::int64_t m) {
  if (m < 0) throw DomainError("pow: negative exponent");
  ExpPoly result = ExpPoly::polynomial(GaussPoly::constant(1));
  for (std::int64_t i = 0; i < m; ++i) result = result * e;
  return result;
}

ExpPoly expoly_apply(const GaussPoly& symbol, const ExpPoly& e) {
  ExpPoly result;
  const auto& a = symbol.coeffs();
  for (std::size_t k = a.size(); k-- > 0;) result = result.derivative() + e.scaled(a[k]);
  return result;
}

std::optional<std::int64_t> exp_hypothesis_probe(const GaussPoly& symbol, const ExpPoly& e,
                                                 std::int64_t horizon) {
  GaussPoly op_power = GaussPoly::constant(1);
  ExpPoly e_power = ExpPoly::polynomial(GaussPoly::constant(1));
  for (std::int64_t m = 1; m <= horizon; ++m) {
    op_power = op_power * symbol;
    e_power = e_power * e;
    if (!expoly_apply(op_power, e_power).is_zero()) return m;
  }
  return std::nullopt;
}

std::string to_string(const ExpPoly& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [lambda, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    out += "(";
    for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
      if (c.coeffs()[k].is_zero()) continue;
      if (out.back() != '(') out += " + ";
      out += "(" + to_string(c.coeffs()[k]) + ")";
      if (k > 0) out += "*z^" + std::to_string(k);
    }
    out += ")";
    if (!lambda.is_zero()) out += "*e^((" + to_string(lambda) + ")*z)";
  }
  return out;
}

}  // namespace vanishlab
