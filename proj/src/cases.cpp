#include "vanishlab/cases.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vanishlab {

const char* to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Confirmed: return "confirmed";
    case CaseStatus::HypothesisFails: return "hypothesis-fails";
    case CaseStatus::CheckFailed: return "check-failed";
    case CaseStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

CaseStatus CaseVerdict::status() const {
  for (const auto& c : checks)
    if (c.hypothesis && !c.passed) return CaseStatus::HypothesisFails;
  for (const auto& c : checks)
    if (!c.passed) return CaseStatus::CheckFailed;
  if (inconclusive) return CaseStatus::Inconclusive;
  return CaseStatus::Confirmed;
}

void CaseVerdict::check(std::string name, bool passed, bool hypothesis) {
  checks.push_back({std::move(name), passed, hypothesis});
}

namespace {

std::int64_t first_above(const Rational& bound) {
  Integer n = floor(bound) + 1;
  return n < 1 ? 1 : n.convert_to<std::int64_t>();
}

void require_polynomial(const LaurentPoly& p, const char* what) {
  if (!p.is_polynomial())
    throw DomainError(std::string(what) + " must be a polynomial (exponents in N^n)");
}

void record_hypothesis(CaseVerdict& v, const VanishingProfile& prof) {
  v.check("Lambda^m(P^m) = 0 for 1 <= m <= M", prof.hypothesis_holds(), true);
  if (auto m = prof.first_hypothesis_failure)
    v.residuals.push_back({*m, "Lambda^m(P^m)", prof.steps[*m - 1].hypothesis});
}

void record_target(CaseVerdict& v, const VanishingProfile& prof, std::int64_t first) {
  v.verified_first = first;
  v.verified_last = prof.horizon;
  bool ok = true;
  for (std::int64_t m = first; m <= prof.horizon; ++m) {
    const auto& t = prof.steps[m - 1].target;
    if (!t.is_zero()) {
      ok = false;
      v.residuals.push_back({m, "Lambda^m(P^m g)", t});
    }
  }
  v.check("Lambda^m(P^m g) = 0 for every m > bound up to M", ok);
}

LaurentPoly lift_to_y(const LaurentPoly& q) {
  LaurentPoly out(2);
  for (const auto& [e, c] : q.terms()) out.add_term(ExponentVector{0, e[0]}, c);
  return out;
}

LaurentPoly unit(std::size_t arity) { return LaurentPoly::constant(arity, Rational(1)); }

/// Decides Sigma = Poly(P) - Poly(Lambda) against the orthant and, on the
/// certificate branch, verifies the target beyond the move-away bound.
void sigma_criterion(CaseVerdict& v, const LaurentPoly& p, const DiffOp& op, const LaurentPoly& g,
                     const VanishingProfile& prof) {
  auto poly_p = newton_polytope(p);
  auto poly_op = newton_polytope(op);
  auto sigma = minkowski_diff(poly_p, poly_op);
  auto meet = orthant_meet(sigma);

  if (auto* cert = std::get_if<SeparationCertificate>(&meet)) {
    v.certificate = *cert;
    v.check("separation certificate verifies", verify_certificate(sigma, *cert));
    if (!prof.hypothesis_holds())
      v.anomalies.push_back(
          "Poly(P) - Poly(Lambda) misses the orthant, which forces Lambda^m(P^m) = 0, yet a "
          "nonzero value was found");
    std::int64_t n = 1;
    for (const auto& gamma : g.support())
      n = std::max(n, moveaway_bound(to_point(gamma), sigma, *cert));
    v.moveaway = n;
    v.bound = Rational(n - 1);
    record_target(v, prof, n);
    return;
  }

  const auto& w = std::get<OrthantWitness>(meet);
  v.witness = w;
  const std::size_t nb = poly_op.generators().size();
  Point u(p.arity(), Rational(0)), q(p.arity(), Rational(0));
  for (std::size_t k = 0; k < w.weights.size(); ++k) {
    if (w.weights[k] == 0) continue;
    const auto& pu = poly_p.generators()[k / nb];
    const auto& pv = poly_op.generators()[k % nb];
    for (std::size_t i = 0; i < u.size(); ++i) {
      u[i] += w.weights[k] * pu[i];
      q[i] += w.weights[k] * pv[i];
    }
  }
  bool dominates = true;
  for (std::size_t i = 0; i < u.size(); ++i) dominates = dominates && u[i] >= q[i];
  v.witness_pair = std::make_pair(u, q);
  v.check("witness decomposes as u - v with u >= v", dominates && verify_witness(sigma, w));
  if (prof.hypothesis_holds()) {
    v.inconclusive = true;
    v.anomalies.push_back(
        "Poly(P) - Poly(Lambda) meets the orthant, so Lambda^m(P^m) must be nonzero for some m "
        "beyond the horizon");
  }
}

CaseVerdict monomial_core(std::string name, const DiffOp& op, const LaurentPoly& p,
                          const LaurentPoly& f, const LaurentPoly& g, std::int64_t horizon) {
  CaseVerdict v;
  v.case_name = std::move(name);
  v.horizon = horizon;
  auto prof = vanishing_profile(op, p, g, horizon);
  record_hypothesis(v, prof);
  if (op.is_zero()) {
    v.bound = Rational(0);
    record_target(v, prof, 1);
    return v;
  }

  std::vector<LaurentPoly> f_powers{unit(f.arity())};
  bool agree = true;
  for (std::int64_t m = 1; m <= horizon; ++m) {
    f_powers.push_back(f_powers.back() * f);
    bool holo_zero = f_powers.back().holomorphic_part().is_zero();
    agree = agree && holo_zero == prof.steps[m - 1].hypothesis.is_zero();
  }
  v.check("holomorphic part of f^m vanishes iff Lambda^m(P^m) = 0", agree);
  if (!prof.hypothesis_holds()) return v;

  auto poly_f = newton_polytope(f);
  auto meet = orthant_meet(poly_f);
  if (auto* w = std::get_if<OrthantWitness>(&meet)) {
    v.witness = *w;
    v.inconclusive = true;
    v.anomalies.push_back(
        "Poly(f) meets the orthant, so some f^m must have a nonzero holomorphic part beyond the "
        "horizon");
    return v;
  }
  const auto& cert = std::get<SeparationCertificate>(meet);
  v.certificate = cert;
  v.check("separation certificate verifies", verify_certificate(poly_f, cert));
  std::int64_t n = 1;
  for (const auto& gamma : g.support()) n = std::max(n, moveaway_bound(to_point(gamma), poly_f, cert));
  v.moveaway = n;
  v.bound = Rational(n - 1);
  record_target(v, prof, n);

  bool holo_target = true;
  for (std::int64_t m = n; m <= horizon; ++m)
    for (const auto& gamma : g.support())
      holo_target = holo_target && f_powers[m].shifted(gamma).holomorphic_part().is_zero();
  v.check("holomorphic part of f^m z^gamma vanishes for m >= N", holo_target);
  return v;
}

void require_horizon(std::int64_t horizon) {
  if (horizon < 1) throw DomainError("horizon must be >= 1");
}

}  // namespace

// ---- one variable ----------------------------------------------------------

CaseVerdict one_var_check(const DiffOp& op, const LaurentPoly& p, const LaurentPoly& g,
                          std::int64_t horizon) {
  if (op.arity() != 1 || p.arity() != 1 || g.arity() != 1)
    throw DomainError("one_var_check: exactly one variable required");
  if (op.is_zero()) throw DomainError("one_var_check: Lambda must be nonzero");
  if (p.is_zero()) throw DomainError("one_var_check: P must be nonzero");
  require_polynomial(p, "P");
  require_polynomial(g, "g");
  require_horizon(horizon);

  CaseVerdict v;
  v.case_name = "one-var";
  v.horizon = horizon;
  auto prof = vanishing_profile(op, p, g, horizon);
  record_hypothesis(v, prof);

  const std::int64_t m1 = op.symbol().min_degree_in(0);
  const std::int64_t d = p.total_degree();
  const bool degree_ok = d <= m1 - 1;
  v.check("deg P <= m1 - 1", degree_ok);
  if (!degree_ok) {
    if (prof.hypothesis_holds())
      v.anomalies.push_back("Lambda(P) = 0 holds but deg P exceeds m1 - 1");
    return v;
  }
  Rational bound = g.is_zero() ? Rational(0) : Rational(g.total_degree(), m1 - d);
  v.bound = bound;
  record_target(v, prof, first_above(bound));
  return v;
}

// ---- Lambda = d_x - Phi(d_y) ---------------------------------------------

DiffOp phi_operator(const LaurentPoly& phi) {
  if (phi.arity() != 1) throw DomainError("Phi must be a one-variable polynomial");
  require_polynomial(phi, "Phi");
  return DiffOp(LaurentPoly::monomial(ExponentVector{1, 0}) - lift_to_y(phi));
}

LaurentPoly phi_flow(const LaurentPoly& phi, const LaurentPoly& f) {
  if (phi.arity() != 1 || f.arity() != 1) throw DomainError("phi_flow: one-variable inputs");
  require_polynomial(phi, "Phi");
  require_polynomial(f, "f");
  if (!phi.is_zero() && phi.min_degree_in(0) < 1)
    throw DomainError("phi_flow: Phi must have order >= 1");

  const DiffOp phi_y(lift_to_y(phi));
  LaurentPoly result(2);
  LaurentPoly term = lift_to_y(f);  // Phi(d_y)^k f
  for (std::int64_t k = 0; !term.is_zero(); ++k) {
    result += term.shifted(ExponentVector{k, 0}).scaled(Rational(1) / Rational(factorial(k)));
    term = apply(phi_y, term);
  }
  if (!apply(phi_operator(phi), result).is_zero())
    throw std::logic_error("phi_flow: result not annihilated by d_x - Phi(d_y)");
  return result;
}

CaseVerdict phi_case_check(const LaurentPoly& phi, const LaurentPoly& f, const LaurentPoly& g,
                           std::int64_t horizon) {
  if (g.arity() != 2) throw DomainError("phi_case_check: g must be a polynomial in (x, y)");
  if (f.is_zero()) throw DomainError("phi_case_check: f must be nonzero");
  require_polynomial(g, "g");
  require_horizon(horizon);

  CaseVerdict v;
  v.case_name = "phi";
  v.horizon = horizon;
  const DiffOp op = phi_operator(phi);
  const LaurentPoly p = phi_flow(phi, f);
  v.check("(d_x - Phi(d_y)) P = 0", apply(op, p).is_zero());
  auto prof = vanishing_profile(op, p, g, horizon);
  record_hypothesis(v, prof);

  if (phi.is_zero()) {
    Rational bound = g.is_zero() ? Rational(0) : Rational(g.degree_in(0));
    v.bound = bound;
    record_target(v, prof, first_above(bound));
    return v;
  }

  const std::int64_t order = phi.min_degree_in(0);
  if (order == 1) {
    // (x, y) -> (x, y + q1 x) removes the linear part of Phi.
    const Rational q1 = phi.coeff_at(ExponentVector{1});
    const LaurentPoly reduced = phi - LaurentPoly::monomial(ExponentVector{1}, q1);
    const LaurentPoly shear =
        LaurentPoly::variable(2, 1) - LaurentPoly::variable(2, 0).scaled(q1);
    const LaurentPoly p_new = p.substitute(1, shear);
    const LaurentPoly g_new = g.substitute(1, shear);
    v.check("sheared P is the flow of the reduced Phi", p_new == phi_flow(reduced, f));

    CaseVerdict inner = phi_case_check(reduced, f, g_new, horizon);
    for (const auto& c : inner.checks) v.check("sheared: " + c.name, c.passed, c.hypothesis);
    for (auto r : inner.residuals) {
      r.label = "sheared " + r.label;
      v.residuals.push_back(std::move(r));
    }
    v.anomalies.insert(v.anomalies.end(), inner.anomalies.begin(), inner.anomalies.end());
    v.inconclusive = inner.inconclusive;
    v.bound = inner.bound;
    if (inner.bound) record_target(v, prof, first_above(*inner.bound));
    return v;
  }

  if (!prof.hypothesis_holds()) return v;
  const std::int64_t deg_f = f.total_degree();
  const bool order_ok = order > deg_f;
  if (!order_ok && horizon < 2) {
    v.inconclusive = true;
    v.anomalies.push_back("o(Phi) <= deg f; Lambda^2(P^2) is outside the horizon");
    return v;
  }
  v.check("o(Phi) > deg f", order_ok);
  v.check("P = f(y)", p == lift_to_y(f));
  if (!order_ok) {
    v.anomalies.push_back("Lambda^2(P^2) = 0 with o(Phi) <= deg f");
    return v;
  }
  Rational bound = g.is_zero()
                       ? Rational(0)
                       : Rational(order * g.degree_in(0) + g.degree_in(1), order - deg_f);
  v.bound = bound;
  record_target(v, prof, first_above(bound));
  return v;
}

// ---- factorial inequalities -------------------------------------------------

BinomialGap binomial_gap_check(std::int64_t d, std::int64_t r) {
  if (r < 0 || d < r) throw DomainError("binomial_gap_check requires d >= r >= 0");
  BinomialGap out{binomial(2 * d, r), (Integer(1) << r) * binomial(d, r), std::nullopt};
  if (r >= 2) {
    const Integer fall_d = falling_factorial(d, r);               // d!/(d-r)!
    const Integer v = d < 2 * r ? Integer(0) : falling_factorial(d - r, r);  // (d-r)!/(d-2r)!
    const Integer mixed = falling_factorial(2 * d - r, r);        // (2d-r)!/(2d-2r)!
    const Integer top = falling_factorial(2 * d, 2 * r);          // (2d)!/(2d-2r)!
    out.expression = 2 * v * fall_d + 2 * fall_d * fall_d - 4 * fall_d * mixed + top;
  }
  return out;
}

// ---- monomial cases ---------------------------------------------------------

CaseVerdict monomial_case_check(const DiffOp& op, const ExponentVector& alpha,
                                const LaurentPoly& g, std::int64_t horizon) {
  require_same_arity(op.arity(), alpha.arity(), "monomial_case_check");
  require_same_arity(op.arity(), g.arity(), "monomial_case_check");
  if (!alpha.is_nonnegative()) throw DomainError("monomial_case_check: alpha must lie in N^n");
  require_polynomial(g, "g");
  require_horizon(horizon);
  const LaurentPoly p = LaurentPoly::monomial(alpha);
  // f(z) = Lambda(z^-1) z^alpha
  const LaurentPoly f = op.symbol().reflected().shifted(alpha);
  return monomial_core("monomial", op, p, f, g, horizon);
}

CaseVerdict monomial_operator_case_check(const ExponentVector& alpha, const LaurentPoly& p,
                                         const LaurentPoly& g, std::int64_t horizon) {
  require_same_arity(p.arity(), alpha.arity(), "monomial_operator_case_check");
  require_same_arity(p.arity(), g.arity(), "monomial_operator_case_check");
  if (!alpha.is_nonnegative()) throw DomainError("monomial case: alpha must lie in N^n");
  if (p.is_zero()) throw DomainError("monomial case: P must be nonzero");
  require_polynomial(p, "P");
  require_polynomial(g, "g");
  require_horizon(horizon);
  // f(z) = z^-alpha P(z)
  return monomial_core("monomial-operator", DiffOp::monomial(alpha), p, p.shifted(-alpha), g,
                       horizon);
}

// ---- two-monomial cases -----------------------------------------------------

namespace {

std::set<ExponentVector> binomial_lattice(const ExponentVector& alpha, const ExponentVector& beta,
                                          std::int64_t m) {
  std::set<ExponentVector> out;
  for (std::int64_t k = 0; k <= m; ++k) out.insert(alpha.scaled(k) + beta.scaled(m - k));
  return out;
}

std::set<ExponentVector> as_set(const std::vector<ExponentVector>& v) {
  return {v.begin(), v.end()};
}

CaseVerdict trivial_zero_operator(std::string name, const LaurentPoly& p, const LaurentPoly& g,
                                  std::int64_t horizon) {
  CaseVerdict v;
  v.case_name = std::move(name);
  v.horizon = horizon;
  auto prof = vanishing_profile(DiffOp(LaurentPoly(p.arity())), p, g, horizon);
  record_hypothesis(v, prof);
  v.bound = Rational(0);
  record_target(v, prof, 1);
  return v;
}

}  // namespace

CaseVerdict two_monomial_check(const Rational& a, const ExponentVector& alpha, const Rational& b,
                               const ExponentVector& beta, const LaurentPoly& p,
                               const LaurentPoly& g, std::int64_t horizon) {
  require_same_arity(alpha.arity(), beta.arity(), "two_monomial_check");
  require_same_arity(alpha.arity(), p.arity(), "two_monomial_check");
  require_same_arity(p.arity(), g.arity(), "two_monomial_check");
  if (!alpha.is_nonnegative() || !beta.is_nonnegative())
    throw DomainError("two_monomial_check: alpha and beta must lie in N^n");
  if (alpha.total() == beta.total()) throw DomainError("two_monomial_check: |alpha| = |beta|");
  if (p.is_zero() || !p.is_homogeneous())
    throw DomainError("two_monomial_check: P must be a nonzero homogeneous polynomial");
  require_polynomial(p, "P");
  require_polynomial(g, "g");
  require_horizon(horizon);

  if (a == 0 && b == 0) return trivial_zero_operator("two-monomial (Lambda = 0)", p, g, horizon);
  if (a == 0 || b == 0) {
    auto v = monomial_operator_case_check(a == 0 ? beta : alpha, p, g, horizon);
    v.case_name = "two-monomial -> monomial-operator";
    return v;
  }

  CaseVerdict v;
  v.case_name = "two-monomial";
  v.horizon = horizon;
  const DiffOp op(LaurentPoly(p.arity(), {{alpha, a}, {beta, b}}));

  bool support_formula = true;
  for (std::int64_t m = 1; m <= std::min<std::int64_t>(horizon, 5); ++m)
    support_formula = support_formula &&
                      as_set(op.pow(m).support()) == binomial_lattice(alpha, beta, m);
  v.check("Supp(Lambda^m) = {k alpha + l beta : k + l = m}", support_formula);

  auto prof = vanishing_profile(op, p, g, horizon);
  record_hypothesis(v, prof);
  if (prof.hypothesis_holds()) {
    const std::int64_t d = p.total_degree();
    bool separated = true, distinct = true;
    LaurentPoly p_power = unit(p.arity());
    for (std::int64_t m = 1; m <= horizon; ++m) {
      p_power *= p;
      std::set<std::int64_t> degrees;
      for (std::int64_t k = 0; k <= m; ++k) {
        const auto mu = alpha.scaled(k) + beta.scaled(m - k);
        separated = separated && apply(DiffOp::monomial(mu), p_power).is_zero();
        degrees.insert(m * d - mu.total());
      }
      distinct = distinct && degrees.size() == static_cast<std::size_t>(m + 1);
    }
    v.check("each d^(k alpha + l beta) P^m vanishes separately", separated);
    v.check("the terms of Lambda^m(P^m) have pairwise distinct degrees", distinct);
  }
  sigma_criterion(v, p, op, g, prof);
  return v;
}

CaseVerdict homogeneous_two_monomial_P_check(const DiffOp& op, const Rational& a,
                                             const ExponentVector& alpha, const Rational& b,
                                             const ExponentVector& beta, const LaurentPoly& g,
                                             std::int64_t horizon) {
  require_same_arity(alpha.arity(), beta.arity(), "homogeneous_two_monomial_P_check");
  require_same_arity(alpha.arity(), op.arity(), "homogeneous_two_monomial_P_check");
  require_same_arity(op.arity(), g.arity(), "homogeneous_two_monomial_P_check");
  if (!alpha.is_nonnegative() || !beta.is_nonnegative())
    throw DomainError("alpha and beta must lie in N^n");
  if (alpha.total() == beta.total()) throw DomainError("|alpha| = |beta|");
  if (op.is_zero() || !op.symbol().is_homogeneous())
    throw DomainError("Lambda must be nonzero with a homogeneous symbol");
  if (a == 0 && b == 0) throw DomainError("P = 0");
  require_polynomial(g, "g");
  require_horizon(horizon);

  if (a == 0 || b == 0) {
    auto v = monomial_case_check(op, a == 0 ? beta : alpha, g, horizon);
    v.case_name = "two-monomial-P -> monomial";
    return v;
  }

  CaseVerdict v;
  v.case_name = "two-monomial-P";
  v.horizon = horizon;
  const LaurentPoly p(op.arity(), {{alpha, a}, {beta, b}});

  bool support_formula = true;
  for (std::int64_t m = 1; m <= std::min<std::int64_t>(horizon, 5); ++m)
    support_formula = support_formula &&
                      as_set(pow(p, m).support()) == binomial_lattice(alpha, beta, m);
  v.check("Supp(P^m) = {k alpha + l beta : k + l = m}", support_formula);

  auto prof = vanishing_profile(op, p, g, horizon);
  record_hypothesis(v, prof);
  if (prof.hypothesis_holds()) {
    const std::int64_t e = op.symbol().total_degree();
    bool separated = true, distinct = true;
    for (std::int64_t m = 1; m <= horizon; ++m) {
      const DiffOp op_m = op.pow(m);
      std::set<std::int64_t> degrees;
      for (std::int64_t k = 0; k <= m; ++k) {
        const auto gamma = alpha.scaled(k) + beta.scaled(m - k);
        separated = separated && apply(op_m, LaurentPoly::monomial(gamma)).is_zero();
        degrees.insert(gamma.total() - m * e);
      }
      distinct = distinct && degrees.size() == static_cast<std::size_t>(m + 1);
    }
    v.check("each Lambda^m(z^(k alpha + l beta)) vanishes separately", separated);
    v.check("the terms of Lambda^m(P^m) have pairwise distinct degrees", distinct);
  }
  sigma_criterion(v, p, op, g, prof);
  return v;
}

}  // namespace vanishlab
