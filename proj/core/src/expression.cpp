#include "qetude/expression.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace qetude {

namespace {

template <std::size_t Vars>
class Parser {
 public:
  using RF = RationalFunction<Vars>;

  Parser(std::string_view text, const std::array<std::string_view, Vars>& names) : text_(text), names_(names) {}

  RF parse() {
    RF value = expr();
    skip_blank();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == '\\' && pos_ + 1 < text_.size() && text_[pos_ + 1] == ',') {
        pos_ += 2;
      } else {
        break;
      }
    }
  }

  char peek() {
    skip_blank();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_primary(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(' ||
           c == '{';
  }

  RF expr() {
    RF value = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      RF rhs = term();
      value = c == '+' ? value + rhs : value - rhs;
    }
    return value;
  }

  RF term() {
    RF value = unary();
    for (char c = peek();; c = peek()) {
      if (c == '*') {
        ++pos_;
        value = value * unary();
      } else if (c == '/') {
        ++pos_;
        RF rhs = unary();
        if (rhs.is_zero()) fail("division by zero");
        value = value / rhs;
      } else if (starts_primary(c)) {
        value = value * power();
      } else {
        return value;
      }
    }
  }

  RF unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  RF power() {
    RF base = primary();
    if (peek() != '^') return base;
    ++pos_;
    const long exponent = integer_exponent();
    if (exponent < 0 && base.is_zero()) fail("negative power of zero");
    return base.pow(static_cast<int>(exponent));
  }

  long integer_exponent() {
    char c = peek();
    if (c == '(' || c == '{') {
      const char close = c == '(' ? ')' : '}';
      ++pos_;
      long e = integer_exponent();
      if (peek() != close) fail("expected closing bracket in exponent");
      ++pos_;
      return e;
    }
    bool negative = false;
    if (c == '-') {
      negative = true;
      ++pos_;
      c = peek();
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected integer exponent");
    const std::string digits = read_digits();
    if (digits.size() > 6) fail("exponent too large");
    const long e = std::stol(digits);
    return negative ? -e : e;
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  RF primary() {
    const char c = peek();
    if (c == '(' || c == '{') {
      const char close = c == '(' ? ')' : '}';
      ++pos_;
      RF inner = expr();
      if (peek() != close) fail(std::string("expected '") + close + "'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RF(SparsePoly<Vars>(Rational(Integer(read_digits(), 10))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view ident = text_.substr(start, pos_ - start);
      for (std::size_t v = 0; v < Vars; ++v) {
        if (names_[v] == ident) return RF(SparsePoly<Vars>::variable(v));
      }
      pos_ = start;
      fail("unknown variable '" + std::string(ident) + "'");
    }
    fail("expected a number, variable or '('");
  }

  std::string_view text_;
  const std::array<std::string_view, Vars>& names_;
  std::size_t pos_ = 0;
};

template <std::size_t Vars>
SparsePoly<Vars> require_polynomial(const RationalFunction<Vars>& r, std::string_view text) {
  auto p = r.as_polynomial();
  if (!p) throw std::invalid_argument("'" + std::string(text) + "' is not a polynomial");
  return *p;
}

}  // namespace

template <std::size_t Vars>
RationalFunction<Vars> parse_expression(std::string_view text, const std::array<std::string_view, Vars>& names) {
  return Parser<Vars>(text, names).parse();
}

template RationalFunction<1> parse_expression<1>(std::string_view, const std::array<std::string_view, 1>&);
template RationalFunction<2> parse_expression<2>(std::string_view, const std::array<std::string_view, 2>&);
template RationalFunction<4> parse_expression<4>(std::string_view, const std::array<std::string_view, 4>&);

QPoly parse_qpoly(std::string_view text) {
  static constexpr std::array<std::string_view, 1> names{"q"};
  return require_polynomial(parse_expression(text, names), text);
}

XQPoly parse_xqpoly(std::string_view text) {
  static constexpr std::array<std::string_view, 2> names{"X", "q"};
  const SparsePoly<2> p = require_polynomial(parse_expression(text, names), text);
  XQPoly::CoeffMap coeffs;
  for (const auto& t : p.terms()) coeffs[t.exp[0]] += q_pow(t.exp[1], t.coeff);
  return XQPoly::from_coeffs(std::move(coeffs));
}

NRational parse_nrational(std::string_view text) { return parse_expression(text, kNVars); }

MultiRational parse_multirational(std::string_view text) { return parse_expression(text, kMultiVars); }

}  // namespace qetude
