#pragma once

#include <random>
#include <string>

#include "vanishlab/polytope.hpp"
#include "vanishlab/text.hpp"

namespace testing_support {

using namespace vanishlab;

inline LaurentPoly P(const std::string& s, const VarNames& vars = {"x", "y"}) {
  return parse_poly(s, vars);
}

inline DiffOp Op(const std::string& s, const VarNames& vars = {"x", "y"}) {
  return DiffOp(parse_poly(s, operator_names(vars)));
}

inline Point Pt(const std::string& s) { return parse_point(s); }

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Random polynomial: `terms` draws of exponents in [lo, hi]^n with
/// coefficients in {-3..3} \ {0} (repeated exponents merge).
inline LaurentPoly random_poly(std::mt19937_64& rng, std::size_t n, int terms, std::int64_t lo,
                               std::int64_t hi, bool positive = false) {
  LaurentPoly p(n);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::int64_t> e(n);
    for (auto& v : e) v = uniform(rng, lo, hi);
    std::int64_t c = 0;
    while (c == 0) c = positive ? uniform(rng, 1, 3) : uniform(rng, -3, 3);
    p.add_term(ExponentVector(e), Rational(c));
  }
  return p;
}

/// Random one-variable polynomial of exact degree d.
inline LaurentPoly random_poly_of_degree(std::mt19937_64& rng, std::int64_t d) {
  LaurentPoly p = random_poly(rng, 1, static_cast<int>(d), 0, d);
  p.add_term(ExponentVector{d}, Rational(0) - p.coeff_at(ExponentVector{d}) + uniform(rng, 1, 3));
  return p;
}

}  // namespace testing_support
