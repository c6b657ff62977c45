#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vanishlab/poly.hpp"

namespace vanishlab {

/// Ordered variable names of one computation context; the position of a name
/// is its variable index.
using VarNames = std::vector<std::string>;

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Splits "x,y,z" and checks names are unique identifiers.
VarNames parse_var_list(std::string_view text);

/// Parses the polynomial grammar: terms joined by '+'/'-', each term a
/// '*'-separated product of rational constants (`int` or `int/int`) and
/// powers `var` / `var^int`. Whitespace is ignored.
LaurentPoly parse_poly(std::string_view text, const VarNames& vars);

/// Canonical text in descending graded-lex order; parse_poly(format_poly(P)) == P.
std::string format_poly(const LaurentPoly& p, const VarNames& vars);

/// Point "(a,b,...)" with rational entries.
std::vector<Rational> parse_point(std::string_view text);
/// List of points separated by ';' or whitespace.
std::vector<std::vector<Rational>> parse_point_list(std::string_view text);
std::string format_point(const std::vector<Rational>& point);
std::string format_exponent(const ExponentVector& e);

/// Names prefixed with 'd' (x -> dx): the operator grammar's variables.
VarNames operator_names(const VarNames& vars);

}  // namespace vanishlab
