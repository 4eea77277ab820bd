#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "korovkin/function.hpp"

namespace korovkin {

class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        offset(offset) {}
  std::size_t offset;
};

class eval_error : public std::runtime_error {
public:
  eval_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (expression offset " +
                           std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

/// Arithmetic expressions over x (and y): numbers, + - * / ^, unary minus,
/// sin cos sqrt abs exp, parentheses. '^' binds tightest and associates to
/// the right; unary minus sits between '^' and '*'.
class FunctionExpr {
public:
  static FunctionExpr parse(std::string_view src); // throws parse_error

  /// Throws eval_error on division by zero, sqrt of a negative number, or
  /// overflow, pointing at the offending operator.
  double evaluate(std::span<const double> point) const;
  double evaluate(double x) const;
  double evaluate(double x, double y) const;

  /// Parseable text form; parse(to_string()) evaluates identically.
  std::string to_string() const;

  int arity() const; // 1 when only x occurs, 2 when y occurs
  const std::string& source() const;

  /// Wrap as a RealFunction named by the original source text.
  RealFunction to_function() const;

  struct Impl; // defined in expr.cpp

private:
  explicit FunctionExpr(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

} // namespace korovkin
