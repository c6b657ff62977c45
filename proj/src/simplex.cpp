#include "vanishlab/simplex.hpp"

#include <optional>
#include <stdexcept>

namespace vanishlab::lp {

std::size_t StandardForm::variables() const {
  if (!rows.empty()) return rows.front().size();
  return objective.size();
}

namespace {

class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
          std::vector<std::size_t> basis)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

  std::size_t row_count() const { return rows_.size(); }
  std::size_t column_count() const { return rows_.empty() ? 0 : rows_.front().size(); }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const Rational& rhs(std::size_t r) const { return rhs_[r]; }

  void pivot(std::size_t r, std::size_t col) {
    Rational inv = 1 / rows_[r][col];
    for (auto& v : rows_[r]) v *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][col] == 0) continue;
      Rational factor = rows_[i][col];
      for (std::size_t j = 0; j < rows_[i].size(); ++j)
        if (rows_[r][j] != 0) rows_[i][j] -= factor * rows_[r][j];
      rhs_[i] -= factor * rhs_[r];
    }
    basis_[r] = col;
  }

  void drop_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  /// Maximizes cost over columns [0, allowed); returns false when unbounded.
  bool optimize(const std::vector<Rational>& cost, std::size_t allowed) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed && !entering; ++j) {
        if (is_basic(j)) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i)
          if (rows_[i][j] != 0) reduced -= cost[basis_[i]] * rows_[i][j];
        if (reduced > 0) entering = j;
      }
      if (!entering) return true;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][*entering] <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][*entering];
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Solution solve(const StandardForm& problem) {
  const std::size_t m = problem.rows.size();
  const std::size_t n = problem.variables();
  if (problem.rhs.size() != m) throw std::invalid_argument("lp: rhs size mismatch");
  for (const auto& row : problem.rows)
    if (row.size() != n) throw std::invalid_argument("lp: ragged constraint matrix");
  std::vector<Rational> objective = problem.objective;
  if (objective.empty()) objective.assign(n, Rational(0));
  if (objective.size() != n) throw std::invalid_argument("lp: objective size mismatch");

  // Phase 1: one artificial per row, rows sign-normalized so rhs >= 0.
  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(n + m));
  std::vector<Rational> rhs(m);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational sign = problem.rhs[i] < 0 ? Rational(-1) : Rational(1);
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = sign * problem.rows[i][j];
    rows[i][n + i] = 1;
    rhs[i] = sign * problem.rhs[i];
    basis[i] = n + i;
  }
  Tableau tab(std::move(rows), std::move(rhs), std::move(basis));

  std::vector<Rational> phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  tab.optimize(phase1, n + m);  // bounded below by zero
  Rational infeasibility = 0;
  for (std::size_t i = 0; i < tab.row_count(); ++i)
    if (tab.basis()[i] >= n) infeasibility += tab.rhs(i);
  if (infeasibility != 0) return {Status::Infeasible, {}, Rational(0)};

  // Drive zero-level artificials out of the basis; rows with no structural
  // entry are redundant.
  for (std::size_t i = 0; i < tab.row_count();) {
    if (tab.basis()[i] < n) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n && !col; ++j)
      if (tab.at(i, j) != 0) col = j;
    if (col) {
      tab.pivot(i, *col);
      ++i;
    } else {
      tab.drop_row(i);
    }
  }

  std::vector<Rational> phase2(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = objective[j];
  if (!tab.optimize(phase2, n)) return {Status::Unbounded, {}, Rational(0)};

  Solution sol{Status::Optimal, std::vector<Rational>(n, Rational(0)), Rational(0)};
  for (std::size_t i = 0; i < tab.row_count(); ++i) sol.x[tab.basis()[i]] = tab.rhs(i);
  for (std::size_t j = 0; j < n; ++j) sol.value += objective[j] * sol.x[j];
  return sol;
}

}  // namespace vanishlab::lp
