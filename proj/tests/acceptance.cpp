// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/expansion.hpp"
#include "oracles/fourier_motzkin.hpp"
#include "support.hpp"
#include "vanishlab/cases.hpp"
#include "vanishlab/counterexamples.hpp"
#include "vanishlab/density.hpp"

using namespace testing_support;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

// sum_{j <= D} y^j / j! as an exact polynomial in (x, y).
LaurentPoly exp_polynomial(std::int64_t precision) {
  LaurentPoly e(2);
  for (std::int64_t j = 0; j <= precision; ++j)
    e.add_term(ExponentVector{0, j}, Rational(1) / Rational(factorial(j)));
  return e;
}

Rational oracle_coeff(const oracle::Terms& t, std::int64_t a, std::int64_t b) {
  auto it = t.find({a, b});
  return it == t.end() ? Rational(0) : it->second;
}

Outcome ac1_ddv() {
  Outcome out;
  const std::int64_t horizon = 6, precision = 12;
  auto report = counterexample_ddv(horizon, precision);
  const auto sym = oracle::from(P("dx*dy", {"dx", "dy"}));
  const auto p = oracle::from(P("x") + exp_polynomial(precision));
  const auto x = oracle::from(P("x"));
  for (const auto& row : report.rows) {
    const std::int64_t m = row.m, top = precision - m;
    const std::string at = " at m = " + std::to_string(m);
    out.require(row.hypothesis_zero, "Lambda^m(P^m) != 0" + at);
    out.require(row.next_power.precision(1) == top, "precision of Lambda^m(P^{m+1})" + at);
    auto pm = oracle::power(p, 2, static_cast<int>(m));
    auto hyp = oracle::apply_iterated(sym, pm, static_cast<int>(m));
    auto next = oracle::apply_iterated(sym, oracle::mul(pm, p), static_cast<int>(m));
    auto target = oracle::apply_iterated(sym, oracle::mul(pm, x), static_cast<int>(m));
    for (std::int64_t j = 0; j <= top; ++j) {
      const Rational fj = Rational(factorial(j));
      const Rational want_next = Rational(factorial(m + 1)) / fj;
      const Rational want_target = Rational(m) * Rational(factorial(m)) / fj;
      out.require(row.next_power.coeff_at({0, j}) == want_next, "Lambda^m(P^{m+1}) coeff" + at);
      out.require(row.target.coeff_at({0, j}) == want_target, "Lambda^m(P^m x) coeff" + at);
      out.require(oracle_coeff(next, 0, j) == want_next, "oracle Lambda^m(P^{m+1})" + at);
      out.require(oracle_coeff(target, 0, j) == want_target, "oracle Lambda^m(P^m x)" + at);
      for (std::int64_t a = 0; a <= m + 1; ++a)
        out.require(oracle_coeff(hyp, a, j) == 0, "oracle Lambda^m(P^m)" + at);
    }
    for (const auto& [e, c] : row.next_power.body().terms())
      out.require(e[0] == 0, "x-degree of Lambda^m(P^{m+1})" + at);
  }
  out.require(report.passed(), "report verdict");
  out.detail = out.passed ? "m = 1..6, D = 12, coefficientwise against expansion" : out.detail;
  return out;
}

Outcome ac2_dk() {
  Outcome out;
  const std::int64_t horizon = 8, precision = 12;
  auto report = counterexample_dk(horizon, precision);
  // f = y^-1 + x^-1 y^-1 E with E exact to y^D; the constant terms only
  // involve y^j with j <= m <= D.
  auto f = oracle::from(P("y^-1") + exp_polynomial(precision).shifted({-1, -1}));
  auto x = oracle::from(P("x"));
  auto fm = oracle::one(2);
  for (const auto& row : report.rows) {
    fm = oracle::mul(fm, f);
    const std::string at = " at m = " + std::to_string(row.m);
    const Rational want = Rational(1) / Rational(factorial(row.m - 1));
    out.require(row.constant_term == 0, "[f^m] != 0" + at);
    out.require(row.constant_term_g == want, "[f^m x] != 1/(m-1)!" + at);
    out.require(oracle_coeff(fm, 0, 0) == 0, "oracle [f^m]" + at);
    out.require(oracle_coeff(oracle::mul(fm, x), 0, 0) == want, "oracle [f^m x]" + at);
    out.require(row.x_range_ok, "x-exponents of f^m" + at);
  }
  out.detail = out.passed ? "m = 1..8, D = 12, [f^m x] = 1/(m-1)!" : out.detail;
  return out;
}

struct Instance {
  RationalPolytope sigma;
  OrthantMeet meet;
};

std::vector<Instance> random_polytopes(int count) {
  std::mt19937_64 rng(2024);
  std::vector<Instance> out;
  for (int t = 0; t < count; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const int k = static_cast<int>(uniform(rng, 1, 5));
    std::vector<Point> gens;
    for (int i = 0; i < k; ++i) {
      Point p(n);
      for (auto& v : p) v = uniform(rng, -3, 3);
      gens.push_back(p);
    }
    RationalPolytope sigma(n, gens);
    out.push_back({sigma, orthant_meet(sigma)});
  }
  return out;
}

Outcome ac3_oracle() {
  Outcome out;
  int certs = 0, witnesses = 0;
  for (const auto& inst : random_polytopes(500)) {
    const bool meets = oracle::meets_orthant(inst.sigma.generators());
    out.require(std::holds_alternative<OrthantWitness>(inst.meet) == meets,
                "verdict differs from Fourier-Motzkin");
    if (auto* w = std::get_if<OrthantWitness>(&inst.meet)) {
      ++witnesses;
      out.require(verify_witness(inst.sigma, *w), "witness does not re-verify");
    } else {
      ++certs;
      out.require(verify_certificate(inst.sigma, std::get<SeparationCertificate>(inst.meet)),
                  "certificate does not re-verify");
    }
  }
  if (out.passed)
    out.detail = "500 polytopes: " + std::to_string(certs) + " certificates, " +
                 std::to_string(witnesses) + " witnesses";
  return out;
}

Outcome ac4_moveaway() {
  Outcome out;
  std::mt19937_64 rng(4048);
  int checked = 0;
  for (const auto& inst : random_polytopes(500)) {
    auto* cert = std::get_if<SeparationCertificate>(&inst.meet);
    if (!cert) continue;
    Point beta(inst.sigma.arity());
    for (auto& v : beta) v = uniform(rng, 0, 4);
    const std::int64_t n = moveaway_bound(beta, inst.sigma, *cert);
    for (std::int64_t m = n; m <= n + 5; ++m) {
      auto moved = scale_translate(inst.sigma, Rational(m), beta);
      out.require(std::holds_alternative<SeparationCertificate>(orthant_meet(moved)),
                  "LP finds beta + m Sigma meeting the orthant for m >= N");
      out.require(!oracle::meets_orthant(moved.generators()),
                  "Fourier-Motzkin finds beta + m Sigma meeting the orthant for m >= N");
    }
    ++checked;
  }
  auto sigma = RationalPolytope(2, {{-2, 1}, {1, -2}});
  auto cert = std::get<SeparationCertificate>(orthant_meet(sigma));
  out.require(moveaway_bound({3, 3}, sigma, cert) == 7, "worked instance N != 7");
  out.require(std::holds_alternative<OrthantWitness>(orthant_meet(scale_translate(sigma, 6, {3, 3}))),
              "worked instance empty at m = 6");
  if (out.passed)
    out.detail = std::to_string(checked) + " certified instances, m = N..N+5; (3,3) gives N = 7";
  return out;
}

Outcome ac5_support_formula() {
  Outcome out;
  std::mt19937_64 rng(5);
  int done = 0;
  while (done < 20) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    std::vector<std::int64_t> a(n), b(n);
    for (auto& v : a) v = uniform(rng, 0, 3);
    for (auto& v : b) v = uniform(rng, 0, 3);
    ExponentVector alpha(a), beta(b);
    if (alpha.total() == beta.total()) continue;
    ++done;
    DiffOp op(LaurentPoly::monomial(alpha) + LaurentPoly::monomial(beta));
    for (std::int64_t m = 1; m <= 5; ++m) {
      std::set<ExponentVector> want;
      for (std::int64_t k = 0; k <= m; ++k) want.insert(alpha.scaled(k) + beta.scaled(m - k));
      auto supp = op.pow(m).support();
      out.require(std::set<ExponentVector>(supp.begin(), supp.end()) == want,
                  "support formula fails");
      out.require(supp.size() == static_cast<std::size_t>(m + 1), "lattice points coincide");
    }
  }
  out.detail = out.passed ? "20 pairs, m <= 5" : out.detail;
  return out;
}

Outcome ac6_one_variable() {
  Outcome out;
  std::mt19937_64 rng(6);
  const std::int64_t horizon = 10;
  const VarNames z{"z"};
  for (int t = 0; t < 50; ++t) {
    const std::int64_t d = uniform(rng, 0, 6), dg = uniform(rng, 0, 6);
    const std::int64_t m1 = uniform(rng, d + 1, 7);
    auto tail = random_poly(rng, 1, 2, 1, 3);
    DiffOp op((LaurentPoly::constant(1, 1) + tail).shifted({m1}));
    auto p = random_poly_of_degree(rng, d);
    auto g = random_poly_of_degree(rng, dg);
    auto v = one_var_check(op, p, g, horizon);
    out.require(v.status() == CaseStatus::Confirmed, "case verdict not confirmed");
    const Rational bound(dg, m1 - d);
    out.require(v.bound == bound, "bound differs from d'/(m1 - d)");
    const auto sym = oracle::from(op.symbol());
    const auto po = oracle::from(p), go = oracle::from(g);
    auto pm = oracle::one(1);
    for (std::int64_t m = 1; m <= horizon; ++m) {
      pm = oracle::mul(pm, po);
      out.require(oracle::apply_iterated(sym, pm, static_cast<int>(m)).empty(),
                  "Lambda^m(P^m) != 0");
      if (Rational(m) > bound)
        out.require(oracle::apply_iterated(sym, oracle::mul(pm, go), static_cast<int>(m)).empty(),
                    "Lambda^m(P^m g) != 0 beyond the bound");
    }
  }
  out.detail = out.passed ? "50 instances, M = 10" : out.detail;
  return out;
}

Outcome ac7_phi() {
  Outcome out;
  std::mt19937_64 rng(7);
  const std::int64_t horizon = 10;
  for (int t = 0; t < 20; ++t) {
    const std::int64_t order = uniform(rng, 2, 4);
    auto phi = random_poly(rng, 1, 2, order, order + 2);
    phi.add_term(ExponentVector{order}, Rational(uniform(rng, 1, 3)) - phi.coeff_at({order}));
    auto f = random_poly_of_degree(rng, uniform(rng, 0, order - 1));
    auto g = random_poly(rng, 2, 2, 0, 2);
    if (g.is_zero()) g = LaurentPoly::constant(2, 1);
    auto p = phi_flow(phi, f);
    auto op = phi_operator(phi);
    out.require(apply(op, p).is_zero(), "Lambda(P) != 0");
    const Rational bound(order * g.degree_in(0) + g.degree_in(1), order - f.total_degree());
    auto v = phi_case_check(phi, f, g, horizon);
    out.require(v.status() == CaseStatus::Confirmed, "case verdict not confirmed");
    out.require(v.bound == bound, "bound differs from the closed form");
    const auto sym = oracle::from(op.symbol());
    const auto po = oracle::from(p), go = oracle::from(g);
    auto pm = oracle::one(2);
    for (std::int64_t m = 1; m <= horizon; ++m) {
      pm = oracle::mul(pm, po);
      if (Rational(m) > bound)
        out.require(oracle::apply_iterated(sym, oracle::mul(pm, go), static_cast<int>(m)).empty(),
                    "Lambda^m(P^m g) != 0 beyond the bound");
    }
  }
  out.detail = out.passed ? "20 instances, 2 <= o(Phi) <= 4, M = 10" : out.detail;
  return out;
}

Integer falling(std::int64_t n, std::int64_t k) {
  Integer r = 1;
  for (std::int64_t i = 0; i < k; ++i) r *= n - i;
  return r;
}

Outcome ac8_binomial_gap() {
  Outcome out;
  int count = 0;
  for (std::int64_t d = 2; d <= 20; ++d)
    for (std::int64_t r = 2; r <= d; ++r) {
      auto gap = binomial_gap_check(d, r);
      const Integer lhs = falling(2 * d, r) / falling(r, r);
      const Integer rhs = (Integer(1) << r) * (falling(d, r) / falling(r, r));
      const Integer v = d < 2 * r ? Integer(0) : falling(d - r, r);
      const Integer a = falling(d, r);
      const Integer expr = 2 * v * a + 2 * a * a - 4 * a * falling(2 * d - r, r) + falling(2 * d, 2 * r);
      out.require(gap.lhs == lhs && gap.rhs == rhs, "binomials differ");
      out.require(gap.expression && *gap.expression == expr, "expression differs");
      out.require(lhs >= rhs && expr > 0 && gap.holds(), "inequality fails");
      ++count;
    }
  out.detail = out.passed ? std::to_string(count) + " pairs 2 <= r <= d <= 20" : out.detail;
  return out;
}

Outcome ac9_density() {
  Outcome out;
  std::mt19937_64 rng(9);
  int done = 0;
  while (done < 30) {
    auto p = random_poly(rng, 2, static_cast<int>(uniform(rng, 2, 4)), -2, 3, true);
    auto supp = p.support();
    if (supp.size() < 2) continue;
    ++done;
    auto a = to_point(supp[0]), b = to_point(supp[1]);
    Point u{(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
    auto r2 = ray_hits_support(p, u, 2);
    bool at_two = false;
    for (const auto& h : r2.hits) {
      at_two = at_two || h.m == 2;
      out.require(pow(p, h.m).coeff_at(h.lambda) != 0 && on_ray(h.lambda, u), "bad hit");
    }
    out.require(at_two, "no hit at m = 2 for a midpoint");
    auto r1 = ray_hits_support(p, a, 1);
    out.require(!r1.hits.empty() && r1.hits[0].m == 1, "no hit at m = 1 for a support point");
  }
  out.detail = out.passed ? "30 positive polynomials" : out.detail;
  return out;
}

Outcome ac10_operators() {
  Outcome out;
  std::mt19937_64 rng(10);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    DiffOp op(random_poly(rng, n, 3, 0, 2));
    DiffOp op2(random_poly(rng, n, 2, 0, 2));
    auto p = random_poly(rng, n, 4, 0, 4);
    auto q = random_poly(rng, n, 3, 0, 3);
    const Rational c(uniform(rng, -5, 5), uniform(rng, 1, 4));
    const int m = static_cast<int>(uniform(rng, 1, 4));
    out.require(oracle::from(apply_power(op, m, p)) ==
                    oracle::apply_iterated(oracle::from(op.symbol()), oracle::from(p), m),
                "apply_power differs from iterated apply");
    out.require(apply(op, p + q) == apply(op, p) + apply(op, q), "additivity");
    out.require(apply(op, p.scaled(c)) == apply(op, p).scaled(c), "homogeneity");
    out.require(apply(op, apply(op2, p)) == apply(op2, apply(op, p)), "commutativity");
    for (std::size_t i = 0; i < n; ++i) {
      auto d = DiffOp::monomial(ExponentVector(n).with(i, 1));
      out.require(apply(d, p * q) == apply(d, p) * q + p * apply(d, q), "Leibniz rule");
    }
  }
  out.detail = out.passed ? "200 instances each" : out.detail;
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 formal-series counterexample x + e^y", ac1_ddv},
      {"AC2 constant terms of y^-1 (1 + x^-1 e^y)", ac2_dk},
      {"AC3 orthant test vs Fourier-Motzkin", ac3_oracle},
      {"AC4 move-away soundness and tightness", ac4_moveaway},
      {"AC5 support of (d^a + d^b)^m", ac5_support_formula},
      {"AC6 one-variable bound", ac6_one_variable},
      {"AC7 Phi-case bound", ac7_phi},
      {"AC8 binomial gap", ac8_binomial_gap},
      {"AC9 density search", ac9_density},
      {"AC10 operator calculus", ac10_operators},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s: %s (%.2fs)\n", o.passed ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    failures += o.passed ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
