#pragma once

// Text form of operator expressions.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('-' | '+') unary | power
//   power  := atom ('^' integer)?
//   atom   := number | identifier | '(' expr ')'
//
// Identifiers: x y z t px py pz dt (generators), hbar m q E wc c i
// (parameters). Numbers are integer or decimal literals, read exactly.
// Multiplication must be explicit, exponents are non-negative integers and
// a divisor must be a nonzero generator-free monomial.

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "lrinv/algebra/operator_expr.hpp"

namespace lrinv::algebra {

inline constexpr unsigned max_parsed_exponent = 64;

inline const char* generator_name(Generator g) {
  static constexpr const char* names[] = {"x", "y", "z", "t", "px", "py", "pz", "dt"};
  return names[static_cast<int>(g)];
}

inline const char* param_name(Param p) {
  static constexpr const char* names[] = {"hbar", "m", "q", "E", "wc", "c"};
  return names[static_cast<int>(p)];
}

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  OperatorExpr parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty expression");
    OperatorExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) {
      if (starts_operand()) throw ParseError(pos_, "implicit multiplication is not allowed");
      throw ParseError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
    }
    return e;
  }

 private:
  OperatorExpr expr() {
    OperatorExpr e = term();
    for (;;) {
      skip_space();
      if (accept('+')) e += term();
      else if (accept('-')) e -= term();
      else return e;
    }
  }

  OperatorExpr term() {
    OperatorExpr e = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        e = e * unary();
      } else if (peek() == '/') {
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        e = e * reciprocal(unary(), at);
      } else if (starts_operand()) {
        throw ParseError(pos_, "implicit multiplication is not allowed");
      } else {
        return e;
      }
    }
  }

  OperatorExpr unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  OperatorExpr power() {
    OperatorExpr base = atom();
    skip_space();
    if (!accept('^')) return base;
    skip_space();
    if (peek() == '-') throw ParseError(pos_, "negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "exponent must be a non-negative integer");
    const std::size_t at = pos_;
    unsigned long n = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      n = n * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
      if (n > max_parsed_exponent) throw ParseError(at, "exponent too large");
    }
    if (peek() == '.') throw ParseError(pos_, "exponent must be a non-negative integer");
    return pow(base, static_cast<unsigned>(n));
  }

  OperatorExpr atom() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ == text_.size()) throw ParseError(pos_, "unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      OperatorExpr e = expr();
      skip_space();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return identifier(text_.substr(at, pos_ - at), at);
    }
    throw ParseError(at, std::string("unexpected character '") + ch + "'");
  }

  OperatorExpr number() {
    const std::size_t at = pos_;
    Rational value = 0;
    bool digits = false;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_++] - '0');
      digits = true;
    }
    if (accept('.')) {
      Rational scale = 1;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        scale /= 10;
        value += scale * (text_[pos_++] - '0');
        digits = true;
      }
    }
    if (!digits) throw ParseError(at, "malformed number");
    return OperatorExpr::scalar(value);
  }

  static OperatorExpr identifier(std::string_view name, std::size_t at) {
    for (int g = 0; g < generator_count; ++g)
      if (name == generator_name(static_cast<Generator>(g)))
        return OperatorExpr::generator(static_cast<Generator>(g));
    for (int p = 0; p < param_count; ++p)
      if (name == param_name(static_cast<Param>(p))) return OperatorExpr::param(static_cast<Param>(p));
    if (name == "i") return OperatorExpr::imaginary_unit();
    throw ParseError(at, "unknown identifier '" + std::string(name) + "'");
  }

  static OperatorExpr reciprocal(const OperatorExpr& divisor, std::size_t at) {
    if (divisor.is_zero()) throw ParseError(at, "division by zero");
    if (!divisor.is_scalar_monomial()) throw ParseError(at, "divisor must be a scalar monomial");
    const auto& [key, coeff] = *divisor.terms().begin();
    auto [params, sign] = inverse(key.params);
    return OperatorExpr::term(Rational(sign) / coeff, params, {});
  }

  bool starts_operand() const {
    const char ch = peek();
    return ch == '(' || ch == '.' || std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool accept(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline void append_power(std::string& out, const char* name, int power) {
  out += name;
  if (power != 1) out += "^" + std::to_string(power);
}

}  // namespace detail

/// Parses operator text into normal-ordered form. Throws ParseError.
inline OperatorExpr parse_operator(std::string_view text) { return detail::Parser(text).parse(); }

/// Canonical text form; `parse_operator(to_string(e)) == e`.
inline std::string to_string(const OperatorExpr& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : e.terms()) {
    const bool negative = coeff < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::vector<std::string> factors;
    const Rational mag = negative ? Rational(-coeff) : coeff;
    const auto num = boost::multiprecision::numerator(mag);
    const auto den = boost::multiprecision::denominator(mag);
    std::string numerator_text;
    if (den != 1) numerator_text = num.str() + "/" + den.str();
    else if (num != 1) numerator_text = num.str();
    if (!numerator_text.empty()) factors.push_back(numerator_text);
    if (key.params.i_power == 1) factors.emplace_back("i");
    for (int p = 0; p < param_count; ++p) {
      const int power = key.params.exponents[p];
      if (power > 0) {
        std::string f;
        detail::append_power(f, param_name(static_cast<Param>(p)), power);
        factors.push_back(f);
      }
    }
    for (std::size_t k = 0; k < key.word.size();) {
      std::size_t run = k;
      while (run < key.word.size() && key.word[run] == key.word[k]) ++run;
      std::string f;
      detail::append_power(f, generator_name(key.word[k]), static_cast<int>(run - k));
      factors.push_back(f);
      k = run;
    }
    if (factors.empty()) factors.emplace_back("1");
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) out += "*";
      out += factors[k];
    }
    for (int p = 0; p < param_count; ++p) {
      const int power = key.params.exponents[p];
      if (power < 0) {
        out += "/";
        detail::append_power(out, param_name(static_cast<Param>(p)), -power);
      }
    }
  }
  return out;
}

}  // namespace lrinv::algebra
