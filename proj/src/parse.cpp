#include "sunstar/parse.hpp"

#include <cctype>

namespace sunstar {

namespace {

class Parser {
 public:
  Parser(const std::string& text, int dim) : text_(text), dim_(dim) {}

  Polynomial run() {
    Polynomial value = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      fail("unexpected trailing input", pos_);
    }
    return value;
  }

 private:
  // Reports against 1-based character columns.
  [[noreturn]] void fail(const std::string& message, std::size_t offset) const {
    throw ParseError(message, offset + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer parse_uint() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a number", pos_);
    }
    Integer value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  int parse_small_uint() {
    const std::size_t at = pos_;
    const Integer value = parse_uint();
    if (value > 1000000) {
      fail("number out of range", at);
    }
    return static_cast<int>(value);
  }

  Polynomial parse_expr() {
    bool negative = false;
    if (consume('-')) {
      negative = true;
    } else {
      consume('+');
    }
    Polynomial value = parse_term();
    if (negative) {
      value = value * Rational(-1);
    }
    while (true) {
      if (consume('+')) {
        value += parse_term();
      } else if (consume('-')) {
        value -= parse_term();
      } else {
        return value;
      }
    }
  }

  Polynomial parse_term() {
    Polynomial value = parse_factor();
    while (consume('*')) {
      value = value * parse_factor();
    }
    return value;
  }

  Polynomial parse_factor() {
    Polynomial value = parse_primary();
    while (consume('^')) {
      value = value.pow(parse_small_uint());
    }
    return value;
  }

  Polynomial parse_primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial value = parse_expr();
      if (!consume(')')) {
        fail("expected ')'", pos_);
      }
      return value;
    }
    if (c == 'x') {
      const std::size_t at = pos_;
      ++pos_;
      const int index = parse_small_uint();
      if (index < 1 || index > dim_) {
        fail("variable index out of range", at);
      }
      return Polynomial::variable(dim_, index - 1);
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      bool negative = false;
      if (c == '-') {
        ++pos_;
        negative = true;
      }
      Integer num = parse_uint();
      Integer den = 1;
      if (consume('/')) {
        const std::size_t at = pos_;
        den = parse_uint();
        if (den == 0) {
          fail("zero denominator", at);
        }
      }
      Rational value(num, den);
      if (negative) {
        value = -value;
      }
      return Polynomial::constant(dim_, value);
    }
    fail("expected a rational, a variable, or '('", pos_);
  }

  const std::string& text_;
  int dim_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int dim) {
  if (dim < 1) {
    throw std::invalid_argument("dimension must be positive");
  }
  return Parser(text, dim).run();
}

}  // namespace sunstar
