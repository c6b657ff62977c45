#pragma once

#include <vector>

#include "vanishlab/rational.hpp"

namespace vanishlab::lp {

/// maximize objective . x  subject to  rows * x = rhs,  x >= 0.
struct StandardForm {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;  ///< one entry per variable; empty means all zero

  std::size_t variables() const;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status;
  std::vector<Rational> x;  ///< a basic optimal (or feasible) point when status == Optimal
  Rational value;
};

/// Two-phase tableau simplex over exact rationals. Bland's rule picks the
/// entering column (lowest index with improving reduced cost) and the leaving
/// row (lowest basic index among ratio ties), so it terminates and the
/// returned basic solution is deterministic.
Solution solve(const StandardForm& problem);

}  // namespace vanishlab::lp
