#pragma once

#include <cstdint>
#include <vector>

#include "vanishlab/diff.hpp"

namespace vanishlab {

/// One m of the formal-series counterexample P = x + e^y, Lambda = d_x d_y.
struct DdvRow {
  std::int64_t m;
  std::int64_t precision;   ///< y-precision of the three results, D - m
  bool hypothesis_zero;     ///< Lambda^m(P^m) = 0 to precision
  bool next_power_matches;  ///< Lambda^m(P^{m+1}) = (m+1)! e^y coefficientwise
  bool next_power_x_free;   ///< that result has zero x-degree
  bool target_matches;      ///< Lambda^m(P^m x) = m m! e^y coefficientwise
  TruncSeries next_power;   ///< Lambda^m(P^{m+1})
  TruncSeries target;       ///< Lambda^m(P^m x)

  bool passed() const {
    return hypothesis_zero && next_power_matches && next_power_x_free && target_matches;
  }
};

struct DdvReport {
  std::int64_t horizon;
  std::int64_t precision;
  std::vector<DdvRow> rows;
  bool passed() const;
};

/// Requires M >= 1 and D >= M + 2.
DdvReport counterexample_ddv(std::int64_t horizon, std::int64_t precision);

/// One m of f = y^-1 (1 + x^-1 e^y), g = x.
struct DkSeriesRow {
  std::int64_t m;
  Rational constant_term;    ///< [x^0 y^0] f^m, expected 0
  Rational constant_term_g;  ///< [x^0 y^0] f^m x, expected 1/(m-1)!
  Rational expected_g;
  bool x_range_ok;           ///< x-exponents of f^m lie in -m..0

  bool passed() const { return constant_term == 0 && constant_term_g == expected_g && x_range_ok; }
};

struct DkSeriesReport {
  std::int64_t horizon;
  std::int64_t precision;
  std::vector<DkSeriesRow> rows;
  bool passed() const;
};

/// Requires M >= 1 and D >= M.
DkSeriesReport counterexample_dk(std::int64_t horizon, std::int64_t precision);

}  // namespace vanishlab
