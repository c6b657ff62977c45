#include "vanishlab/density.hpp"

namespace vanishlab {

bool on_ray(const ExponentVector& lambda, const Point& u) {
  require_same_arity(lambda.arity(), u.size(), "on_ray");
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < u.size() && !pivot; ++i)
    if (u[i] != 0) pivot = i;
  if (!pivot) return lambda.is_zero();
  const Rational lp(lambda[*pivot]);
  // k = lambda_p / u_p must be >= 0, and lambda_i * u_p = lambda_p * u_i for all i
  if (lp * u[*pivot] < 0) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (Rational(lambda[i]) * u[*pivot] != lp * u[i]) return false;
  return true;
}

namespace {

void require_member(const LaurentPoly& p, const Point& u, std::int64_t horizon) {
  if (horizon < 1) throw DomainError("horizon must be >= 1");
  if (!contains_point(newton_polytope(p), u)) throw DomainError("u is not a point of Poly(P)");
}

}  // namespace

RaySearchReport ray_hits_support(const LaurentPoly& p, const Point& u, std::int64_t horizon) {
  require_member(p, u, horizon);
  RaySearchReport report{u, horizon, {}, RayVerdict::Inconclusive};
  LaurentPoly power = LaurentPoly::constant(p.arity(), Rational(1));
  for (std::int64_t m = 1; m <= horizon; ++m) {
    power *= p;
    for (const auto& lambda : power.support())
      if (on_ray(lambda, u)) report.hits.push_back({m, lambda});
  }
  if (!report.hits.empty()) report.verdict = RayVerdict::Found;
  return report;
}

std::vector<std::int64_t> repeated_hits(const LaurentPoly& p, const Point& u,
                                        std::int64_t horizon) {
  std::vector<std::int64_t> out;
  for (const auto& hit : ray_hits_support(p, u, horizon).hits)
    if (out.empty() || out.back() != hit.m) out.push_back(hit.m);
  return out;
}

std::vector<std::int64_t> homogeneous_density(const LaurentPoly& p, const Point& u,
                                              std::int64_t horizon) {
  if (p.is_zero() || !p.is_homogeneous()) throw DomainError("P must be homogeneous and nonzero");
  if (p.total_degree() == 0) throw DomainError("P must have nonzero degree");
  require_member(p, u, horizon);
  std::vector<std::int64_t> out;
  LaurentPoly power = LaurentPoly::constant(p.arity(), Rational(1));
  for (std::int64_t m = 1; m <= horizon; ++m) {
    power *= p;
    std::vector<std::int64_t> target(u.size());
    bool integral = true;
    for (std::size_t i = 0; i < u.size() && integral; ++i) {
      Rational v = u[i] * m;
      if (denominator(v) != 1) integral = false;
      else target[i] = numerator(v).convert_to<std::int64_t>();
    }
    if (integral && power.coeff_at(ExponentVector(std::move(target))) != 0) out.push_back(m);
  }
  return out;
}

DkReport dk_check(const LaurentPoly& f, std::int64_t horizon) {
  if (f.is_zero()) throw DomainError("dk_check: f must be nonzero");
  if (horizon < 1) throw DomainError("horizon must be >= 1");
  DkReport report{horizon, {}, std::nullopt, false, DkVerdict::Consistent};
  LaurentPoly power = LaurentPoly::constant(f.arity(), Rational(1));
  for (std::int64_t m = 1; m <= horizon; ++m) {
    power *= f;
    report.constant_terms.push_back(power.constant_term());
    if (report.constant_terms.back() != 0 && !report.first_nonzero) report.first_nonzero = m;
  }
  report.origin_in_polytope =
      contains_point(newton_polytope(f), Point(f.arity(), Rational(0))).has_value();
  if (report.first_nonzero) report.verdict = DkVerdict::HypothesisFails;
  else if (report.origin_in_polytope) report.verdict = DkVerdict::PredictsNonzero;
  return report;
}

const char* to_string(RayVerdict v) { return v == RayVerdict::Found ? "found" : "inconclusive"; }

const char* to_string(DkVerdict v) {
  switch (v) {
    case DkVerdict::HypothesisFails: return "hypothesis-fails";
    case DkVerdict::Consistent: return "consistent";
    case DkVerdict::PredictsNonzero: return "predicts-nonzero";
  }
  return "?";
}

}  // namespace vanishlab
