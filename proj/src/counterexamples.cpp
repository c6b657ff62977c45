#include "vanishlab/counterexamples.hpp"

#include <algorithm>

namespace vanishlab {

namespace {

// e^y in (x, y), exact in x and truncated at y^D.
TruncSeries exp_y(std::int64_t precision) {
  TruncSeries y(LaurentPoly::variable(2, 1), {std::nullopt, precision});
  return series_exp(y);
}

// c * sum_{j <= D} y^j / j!
LaurentPoly scaled_exp_body(const Rational& c, std::int64_t precision) {
  LaurentPoly out(2);
  for (std::int64_t j = 0; j <= precision; ++j)
    out.add_term(ExponentVector{0, j}, c / Rational(factorial(j)));
  return out;
}

bool matches(const TruncSeries& s, const Rational& c, std::int64_t precision) {
  return s.precision(1) == precision && s.body() == scaled_exp_body(c, precision);
}

}  // namespace

bool DdvReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const DdvRow& r) { return r.passed(); });
}

bool DkSeriesReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const DkSeriesRow& r) { return r.passed(); });
}

DdvReport counterexample_ddv(std::int64_t horizon, std::int64_t precision) {
  if (horizon < 1) throw DomainError("counterexample_ddv: M must be >= 1");
  if (precision < horizon + 2) throw DomainError("counterexample_ddv: D must be >= M + 2");

  const TruncSeries p = TruncSeries::exact(LaurentPoly::variable(2, 0)) + exp_y(precision);
  const TruncSeries x = TruncSeries::exact(LaurentPoly::variable(2, 0));
  const DiffOp op = DiffOp::monomial(ExponentVector{1, 1});

  DdvReport report{horizon, precision, {}};
  TruncSeries p_power = TruncSeries::exact(LaurentPoly::constant(2, Rational(1)));
  for (std::int64_t m = 1; m <= horizon; ++m) {
    p_power = p_power * p;
    const TruncSeries hyp = apply_power(op, m, p_power);
    const TruncSeries next = apply_power(op, m, p_power * p);
    const TruncSeries target = apply_power(op, m, p_power * x);
    const std::int64_t d = precision - m;
    const bool x_free = std::all_of(next.body().terms().begin(), next.body().terms().end(),
                                    [](const auto& t) { return t.first[0] == 0; });
    report.rows.push_back(DdvRow{
        m, d, hyp.vanishes_to_precision() && hyp.precision(1) == d,
        matches(next, Rational(factorial(m + 1)), d), x_free,
        matches(target, Rational(m) * Rational(factorial(m)), d), next, target});
  }
  return report;
}

DkSeriesReport counterexample_dk(std::int64_t horizon, std::int64_t precision) {
  if (horizon < 1) throw DomainError("counterexample_dk: M must be >= 1");
  if (precision < horizon) throw DomainError("counterexample_dk: D must be >= M");

  const TruncSeries one = TruncSeries::exact(LaurentPoly::constant(2, Rational(1)));
  const TruncSeries x_inv = TruncSeries::exact(LaurentPoly::monomial(ExponentVector{-1, 0}));
  const TruncSeries y_inv = TruncSeries::exact(LaurentPoly::monomial(ExponentVector{0, -1}));
  const TruncSeries x = TruncSeries::exact(LaurentPoly::variable(2, 0));
  const TruncSeries f = y_inv * (one + x_inv * exp_y(precision));

  DkSeriesReport report{horizon, precision, {}};
  TruncSeries f_power = one;
  const ExponentVector origin{0, 0};
  for (std::int64_t m = 1; m <= horizon; ++m) {
    f_power = f_power * f;
    const bool x_range =
        std::all_of(f_power.body().terms().begin(), f_power.body().terms().end(),
                    [m](const auto& t) { return t.first[0] >= -m && t.first[0] <= 0; });
    report.rows.push_back(DkSeriesRow{m, f_power.coeff_at(origin),
                                      (f_power * x).coeff_at(origin),
                                      Rational(1) / Rational(factorial(m - 1)), x_range});
  }
  return report;
}

}  // namespace vanishlab
