#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wcs/expr.hpp"

namespace wcs {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message)
      : std::runtime_error(message), offset_(offset), expected_(std::move(expected)) {}

  /// Byte offset into the source where parsing stopped.
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/**
 * Parse an expression in alpha and a.
 *
 *   expr   := term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := base ('^' integer)?
 *   base   := number | 'alpha' | 'a' | 'sin' '(' expr ')' | 'cos' '(' expr ')'
 *           | '(' expr ')' | '-' base
 *
 * Whitespace is ignored. The exponent may carry a leading '-'.
 */
PeriodicExpr parse_expr(std::string_view source);

}  // namespace wcs
