#pragma once

// Recursive-descent parser for polynomial expressions in the canonical
// printer's syntax:
//   expr   := ["-"] term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := primary ("^" uint)*
//   primary:= rational | var | "(" expr ")"
//   var    := "x" uint          (1-based)
//   rational := ["-"] uint ["/" uint]
// Whitespace is ignored everywhere; parse(to_string(p)) == p.

#include "sunstar/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sunstar {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  // 1-based character column in the input where parsing failed.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Polynomial parse_polynomial(const std::string& text, int dim);

}  // namespace sunstar
