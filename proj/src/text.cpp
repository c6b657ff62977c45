#include "vanishlab/text.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

namespace vanishlab {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= src_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t pos() const { return pos_; }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(src_.substr(start, pos_ - start));
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= src_.size() || !is_ident_start(src_[pos_])) fail("expected a variable name");
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  std::int64_t signed_int() {
    bool negative = false;
    if (accept('-')) negative = true;
    else accept('+');
    std::size_t at = pos_;
    auto d = digits();
    try {
      auto v = std::stoll(d);
      return negative ? -v : v;
    } catch (const std::out_of_range&) {
      throw ParseError("exponent out of range", at);
    }
  }

  Rational unsigned_rational() {
    std::size_t at = pos_;
    Integer num(digits());
    if (accept('/')) {
      Integer den(digits());
      if (den == 0) throw ParseError("zero denominator", at);
      return Rational(num, den);
    }
    return Rational(num);
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

std::optional<std::size_t> index_of(const VarNames& vars, const std::string& name) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars.begin());
}

}  // namespace

VarNames parse_var_list(std::string_view text) {
  VarNames out;
  std::set<std::string> seen;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    std::string name;
    for (char c : piece)
      if (!std::isspace(static_cast<unsigned char>(c))) name += c;
    if (name.empty() || !is_ident_start(name[0]) ||
        !std::all_of(name.begin(), name.end(), is_ident_char))
      throw ParseError("bad variable name '" + name + "'", start);
    if (!seen.insert(name).second) throw ParseError("duplicate variable '" + name + "'", start);
    out.push_back(name);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

LaurentPoly parse_poly(std::string_view text, const VarNames& vars) {
  if (vars.empty()) throw ParseError("empty variable list", 0);
  Lexer lex(text);
  LaurentPoly result(vars.size());
  if (lex.at_end()) lex.fail("empty polynomial");
  bool first = true;
  while (!lex.at_end()) {
    Rational sign(1);
    if (lex.accept('-')) sign = -1;
    else if (!lex.accept('+') && !first) lex.fail("expected '+' or '-'");
    first = false;

    Rational coeff = sign;
    ExponentVector exponent(vars.size());
    do {
      char c = lex.peek();
      if (is_digit(c)) {
        coeff *= lex.unsigned_rational();
      } else if (is_ident_start(c)) {
        std::size_t at = lex.pos();
        auto name = lex.ident();
        auto idx = index_of(vars, name);
        if (!idx) throw ParseError("unknown variable '" + name + "'", at);
        std::int64_t e = 1;
        if (lex.accept('^')) {
          if (lex.accept('(')) {
            e = lex.signed_int();
            lex.expect(')');
          } else {
            e = lex.signed_int();
          }
        }
        exponent = exponent.with(*idx, exponent[*idx] + e);
      } else {
        lex.fail("expected a number or a variable");
      }
    } while (lex.accept('*'));
    result.add_term(exponent, coeff);
  }
  return result;
}

std::string format_poly(const LaurentPoly& p, const VarNames& vars) {
  require_same_arity(p.arity(), vars.size(), "format_poly");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

std::vector<Rational> parse_point(std::string_view text) {
  Lexer lex(text);
  std::vector<Rational> out;
  lex.expect('(');
  do {
    bool negative = lex.accept('-');
    if (!negative) lex.accept('+');
    Rational q = lex.unsigned_rational();
    out.push_back(negative ? Rational(-q) : q);
  } while (lex.accept(','));
  lex.expect(')');
  if (!lex.at_end()) lex.fail("trailing input after point");
  return out;
}

std::vector<std::vector<Rational>> parse_point_list(std::string_view text) {
  std::vector<std::vector<Rational>> out;
  auto skip_ws = [&](std::size_t i) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    return i;
  };
  std::size_t start = skip_ws(0);
  do {
    auto close = text.find(')', start);
    if (close == std::string_view::npos) throw ParseError("bad point: expected ')'", text.size());
    try {
      out.push_back(parse_point(text.substr(start, close + 1 - start)));
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad point: ") + e.what(), start + e.position());
    }
    start = skip_ws(close + 1);
    if (start < text.size() && text[start] == ';') {
      start = skip_ws(start + 1);
      if (start == text.size()) throw ParseError("bad point list: trailing ';'", start);
    }
  } while (start < text.size());
  return out;
}

std::string format_point(const std::vector<Rational>& point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ",";
    out += to_string(point[i]);
  }
  return out + ")";
}

std::string format_exponent(const ExponentVector& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.arity(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out + ")";
}

VarNames operator_names(const VarNames& vars) {
  VarNames out;
  out.reserve(vars.size());
  for (const auto& v : vars) out.push_back("d" + v);
  return out;
}

}  // namespace vanishlab
