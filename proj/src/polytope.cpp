#include "vanishlab/polytope.hpp"

#include <algorithm>
#include <stdexcept>

#include "vanishlab/simplex.hpp"

namespace vanishlab {

Point to_point(const ExponentVector& e) {
  Point out;
  out.reserve(e.arity());
  for (auto v : e.entries()) out.emplace_back(v);
  return out;
}

Rational dot(const Point& a, const Point& b) {
  require_same_arity(a.size(), b.size(), "dot");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalPolytope::RationalPolytope(std::size_t arity, std::vector<Point> generators)
    : arity_(arity), generators_(std::move(generators)) {
  if (generators_.empty()) throw DomainError("polytope needs at least one generator");
  for (const auto& g : generators_) require_same_arity(arity_, g.size(), "RationalPolytope");
}

RationalPolytope newton_polytope(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("the zero polynomial has no Newton polytope");
  std::vector<Point> gens;
  for (const auto& e : p.support()) gens.push_back(to_point(e));
  return RationalPolytope(p.arity(), std::move(gens));
}

RationalPolytope newton_polytope(const DiffOp& op) { return newton_polytope(op.symbol()); }

RationalPolytope minkowski_diff(const RationalPolytope& a, const RationalPolytope& b) {
  require_same_arity(a.arity(), b.arity(), "minkowski_diff");
  std::vector<Point> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) {
      Point d(a.arity());
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = u[i] - v[i];
      gens.push_back(std::move(d));
    }
  return RationalPolytope(a.arity(), std::move(gens));
}

RationalPolytope scale_translate(const RationalPolytope& sigma, const Rational& m,
                                 const Point& beta) {
  require_same_arity(sigma.arity(), beta.size(), "scale_translate");
  std::vector<Point> gens;
  for (const auto& u : sigma.generators()) {
    Point p(u.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = beta[i] + m * u[i];
    gens.push_back(std::move(p));
  }
  return RationalPolytope(sigma.arity(), std::move(gens));
}

std::optional<std::vector<Rational>> contains_point(const RationalPolytope& sigma, const Point& w) {
  require_same_arity(sigma.arity(), w.size(), "contains_point");
  const auto& gens = sigma.generators();
  const std::size_t k = gens.size();
  lp::StandardForm lp;
  for (std::size_t j = 0; j < sigma.arity(); ++j) {
    std::vector<Rational> row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = gens[i][j];
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(w[j]);
  }
  lp.rows.emplace_back(k, Rational(1));
  lp.rhs.emplace_back(1);
  auto sol = lp::solve(lp);
  if (sol.status != lp::Status::Optimal) return std::nullopt;
  return sol.x;
}

namespace {

std::optional<OrthantWitness> orthant_witness(const RationalPolytope& sigma) {
  const auto& gens = sigma.generators();
  const std::size_t n = sigma.arity();
  const std::size_t k = gens.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (std::all_of(gens[i].begin(), gens[i].end(), [](const Rational& q) { return q >= 0; })) {
      std::vector<Rational> weights(k, Rational(0));
      weights[i] = 1;
      return OrthantWitness{gens[i], std::move(weights)};
    }
  }
  // variables: weights lambda_1..lambda_k, surplus s_1..s_n
  lp::StandardForm lp;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(k + n);
    for (std::size_t i = 0; i < k; ++i) row[i] = gens[i][j];
    row[k + j] = -1;
    lp.rows.push_back(std::move(row));
    lp.rhs.emplace_back(0);
  }
  std::vector<Rational> simplex_row(k + n);
  for (std::size_t i = 0; i < k; ++i) simplex_row[i] = 1;
  lp.rows.push_back(std::move(simplex_row));
  lp.rhs.emplace_back(1);
  auto sol = lp::solve(lp);
  if (sol.status != lp::Status::Optimal) return std::nullopt;
  OrthantWitness w{Point(n, Rational(0)), std::vector<Rational>(sol.x.begin(), sol.x.begin() + k)};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) w.point[j] += w.weights[i] * gens[i][j];
  return w;
}

SeparationCertificate separation_certificate(const RationalPolytope& sigma) {
  const auto& gens = sigma.generators();
  const std::size_t n = sigma.arity();
  const std::size_t k = gens.size();

  // maximize delta: variables c_1..c_n, delta+, delta-, slack t_1..t_k;
  // c.u_i + delta + t_i = 0, sum c = 1.
  lp::StandardForm first;
  const std::size_t width = n + 2 + k;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> row(width);
    for (std::size_t j = 0; j < n; ++j) row[j] = gens[i][j];
    row[n] = 1;
    row[n + 1] = -1;
    row[n + 2 + i] = 1;
    first.rows.push_back(std::move(row));
    first.rhs.emplace_back(0);
  }
  std::vector<Rational> norm(width);
  for (std::size_t j = 0; j < n; ++j) norm[j] = 1;
  first.rows.push_back(norm);
  first.rhs.emplace_back(1);
  first.objective.assign(width, Rational(0));
  first.objective[n] = 1;
  first.objective[n + 1] = -1;
  auto best = lp::solve(first);
  if (best.status != lp::Status::Optimal || best.value <= 0)
    throw std::logic_error("orthant_meet: no separating functional for a disjoint polytope");
  const Rational delta = best.value;

  // Among maximizers, maximize tau <= min_j c_j: variables c, t, tau, e.
  lp::StandardForm second;
  const std::size_t w2 = n + k + 1 + n;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> row(w2);
    for (std::size_t j = 0; j < n; ++j) row[j] = gens[i][j];
    row[n + i] = 1;
    second.rows.push_back(std::move(row));
    second.rhs.push_back(-delta);
  }
  std::vector<Rational> norm2(w2);
  for (std::size_t j = 0; j < n; ++j) norm2[j] = 1;
  second.rows.push_back(std::move(norm2));
  second.rhs.emplace_back(1);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(w2);
    row[j] = 1;
    row[n + k] = -1;
    row[n + k + 1 + j] = -1;
    second.rows.push_back(std::move(row));
    second.rhs.emplace_back(0);
  }
  second.objective.assign(w2, Rational(0));
  second.objective[n + k] = 1;
  auto balanced = lp::solve(second);
  if (balanced.status != lp::Status::Optimal)
    throw std::logic_error("orthant_meet: refinement LP failed");
  return SeparationCertificate{Point(balanced.x.begin(), balanced.x.begin() + n), delta};
}

}  // namespace

OrthantMeet orthant_meet(const RationalPolytope& sigma) {
  if (auto w = orthant_witness(sigma)) return *w;
  return separation_certificate(sigma);
}

bool verify_certificate(const RationalPolytope& sigma, const SeparationCertificate& cert) {
  if (cert.c.size() != sigma.arity() || cert.delta <= 0) return false;
  Rational total = 0;
  for (const auto& q : cert.c) {
    if (q < 0) return false;
    total += q;
  }
  if (total != 1) return false;
  return std::all_of(sigma.generators().begin(), sigma.generators().end(),
                     [&](const Point& u) { return dot(cert.c, u) <= -cert.delta; });
}

bool verify_witness(const RationalPolytope& sigma, const OrthantWitness& witness) {
  const auto& gens = sigma.generators();
  if (witness.point.size() != sigma.arity() || witness.weights.size() != gens.size()) return false;
  Rational total = 0;
  Point combo(sigma.arity(), Rational(0));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (witness.weights[i] < 0) return false;
    total += witness.weights[i];
    for (std::size_t j = 0; j < combo.size(); ++j) combo[j] += witness.weights[i] * gens[i][j];
  }
  if (total != 1 || combo != witness.point) return false;
  return std::all_of(witness.point.begin(), witness.point.end(),
                     [](const Rational& q) { return q >= 0; });
}

std::int64_t moveaway_bound(const Point& beta, const RationalPolytope& sigma,
                            const SeparationCertificate& cert) {
  require_same_arity(sigma.arity(), beta.size(), "moveaway_bound");
  if (!verify_certificate(sigma, cert)) throw DomainError("moveaway_bound: invalid certificate");
  Integer n = floor(dot(cert.c, beta) / cert.delta) + 1;
  if (n < 1) return 1;
  if (n > Integer(INT64_MAX)) throw std::overflow_error("moveaway_bound: bound too large");
  return n.convert_to<std::int64_t>();
}

}  // namespace vanishlab
