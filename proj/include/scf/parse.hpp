#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "scf/polynomial.hpp"

namespace scf {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Grammar: integers (reduced mod p), ring variable names, + - * ^ and
/// parentheses; whitespace is ignored. Example: "3*x0^2*x1 - x2*x3^2 + 7".
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace scf
