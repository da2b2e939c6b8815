#pragma once

#include "polyinc/multipoly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyinc::cli {

/// Syntax error carrying the 0-based byte offset where parsing stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Largest exponent accepted after '^'.
inline constexpr unsigned kMaxExponent = 64;

/// Parses the grammar
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | base ('^' uint)?
///   base   := rational | 'x' | 'y' | 'z' | '(' expr ')'
///   rational := int ('/' uint)?
/// into a polynomial in x, y, z. Whitespace is ignored; juxtaposition is not
/// multiplication. A unary '-' binds looser than '^', so "-x^2" is -(x^2).
MultiPoly parse_poly(std::string_view text);

}  // namespace polyinc::cli
