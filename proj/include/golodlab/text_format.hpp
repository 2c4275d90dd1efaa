#pragma once

#include <optional>
#include <string>
#include <vector>

#include "golodlab/poly.hpp"

namespace golod {

/// Input error carrying a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(Kind::Input, "line " + std::to_string(line) + ", column " +
                               std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A parsed fixture: ring, generators, and the optional order/colors lines.
struct IdealText {
  RingPtr ring;
  std::vector<Polynomial> generators;
  std::optional<std::string> order;
};

/// Parses one polynomial over `ring`. Juxtaposition multiplies.
Polynomial parsePolynomial(const std::string& text, const RingPtr& ring);

/// Parses the fixture grammar:
///
///   # comment
///   ring: QQ[x1,x2,x3]          (or F2[...], F101[...])
///   order: lex x1>x2>x3         (optional)
///   colors: x11,x12 | x21,x22   (optional)
///   x1^2, -x1*x2+x3^2, ...
///
/// When the ring line is missing the variables are inferred from the
/// generators: a letter followed by digits, so "xy,yz" means x*y, y*z.
IdealText parseIdeal(const std::string& text);

/// Inverse of parseIdeal() on normalized input.
std::string formatIdeal(const RingPtr& ring, const std::vector<Polynomial>& gens,
                        const std::optional<std::string>& order = std::nullopt);

}  // namespace golod
