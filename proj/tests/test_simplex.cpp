#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>

#include "vanishlab/simplex.hpp"

using vanishlab::Rational;
using namespace vanishlab::lp;

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Solves B x = rhs for a square B; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(Matrix b, std::vector<Rational> rhs) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && b[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(b[piv], b[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || b[r][col] == 0) continue;
      Rational f = b[r][col] / b[col][col];
      for (std::size_t c = col; c < n; ++c) b[r][c] -= f * b[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) rhs[r] /= b[r][r];
  return rhs;
}

// Best objective over all basic feasible solutions (rows assumed independent).
std::optional<Rational> brute_force(const StandardForm& f) {
  const std::size_t m = f.rows.size(), n = f.objective.size();
  std::optional<Rational> best;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(m), true);
  do {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
      if (pick[j]) cols.push_back(j);
    Matrix b(m, std::vector<Rational>(m));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t k = 0; k < m; ++k) b[r][k] = f.rows[r][cols[k]];
    auto x = solve_square(b, f.rhs);
    if (!x || std::any_of(x->begin(), x->end(), [](const Rational& v) { return v < 0; }))
      continue;
    Rational value = 0;
    for (std::size_t k = 0; k < m; ++k) value += f.objective[cols[k]] * (*x)[k];
    if (!best || value > *best) best = value;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

}  // namespace

TEST_CASE("small hand-solved programs") {
  // max x + y s.t. x + 2y + s1 = 4, 3x + y + s2 = 6
  StandardForm f{{{1, 2, 1, 0}, {3, 1, 0, 1}}, {4, 6}, {1, 1, 0, 0}};
  auto s = solve(f);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.value == Rational(14, 5));
  CHECK(s.x[0] == Rational(8, 5));
  CHECK(s.x[1] == Rational(6, 5));

  StandardForm infeasible{{{1, 1}}, {-1}, {0, 0}};
  CHECK(solve(infeasible).status == Status::Infeasible);

  StandardForm unbounded{{{1, -1}}, {1}, {1, 0}};
  CHECK(solve(unbounded).status == Status::Unbounded);

  // Redundant equality rows are tolerated.
  StandardForm redundant{{{1, 1}, {2, 2}}, {1, 2}, {1, 0}};
  auto r = solve(redundant);
  REQUIRE(r.status == Status::Optimal);
  CHECK(r.value == 1);
}

TEST_CASE("degenerate program terminates under Bland's rule") {
  // A classic cycling example for the largest-coefficient rule.
  StandardForm f{{{Rational(1, 2), Rational(-11, 2), Rational(-5, 2), 9, 1, 0, 0},
                  {Rational(1, 2), Rational(-3, 2), Rational(-1, 2), 1, 0, 1, 0},
                  {1, 0, 0, 0, 0, 0, 1}},
                 {0, 0, 1},
                 {10, -57, -9, -24, 0, 0, 0}};
  auto s = solve(f);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.value == 1);
}

TEST_CASE("random bounded programs match basis enumeration") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> coef(-3, 3), pos(1, 3), rhs(0, 6);
  for (int t = 0; t < 120; ++t) {
    const std::size_t m = 2 + t % 2, vars = 3;
    StandardForm f;
    const std::size_t n = vars + m;
    for (std::size_t r = 0; r < m; ++r) {
      std::vector<Rational> row(n, Rational(0));
      for (std::size_t j = 0; j < vars; ++j) row[j] = r == 0 ? Rational(pos(rng)) : Rational(coef(rng));
      row[vars + r] = 1;  // slack
      f.rows.push_back(row);
      f.rhs.push_back(Rational(rhs(rng)));
    }
    f.objective.assign(n, Rational(0));
    for (std::size_t j = 0; j < vars; ++j) f.objective[j] = coef(rng);
    auto s = solve(f);
    auto b = brute_force(f);
    REQUIRE(b.has_value());  // the slack basis is feasible
    REQUIRE(s.status == Status::Optimal);
    CHECK(s.value == *b);
    for (std::size_t r = 0; r < m; ++r) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += f.rows[r][j] * s.x[j];
      CHECK(lhs == f.rhs[r]);
    }
    for (const auto& v : s.x) CHECK(v >= 0);
  }
}
