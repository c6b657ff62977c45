#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace vanishlab {

/// Exact rational scalar. Expression templates are disabled so that `auto`
/// always yields a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Raised when an input violates an operation's domain (zero polynomial where a
/// polytope is needed, negative exponent in polynomial mode, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two objects from different variable contexts are combined.
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical "p/q" or "p" string (denominator positive, reduced).
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q" with optional surrounding whitespace.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(std::int64_t n);

/// n (n-1) ... (n-k+1); k >= 0, n may be negative.
Integer falling_factorial(std::int64_t n, std::int64_t k);

Integer binomial(std::int64_t n, std::int64_t k);

/// Largest integer <= q.
Integer floor(const Rational& q);

}  // namespace vanishlab
