#pragma once

#include <span>
#include <string>
#include <string_view>

#include "dml/error.hpp"
#include "dml/multipoly.hpp"

namespace dml {

/// Parse failure carrying the byte offset into the source.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Largest exponent accepted after "^".
inline constexpr std::uint64_t kMaxExponent = 1u << 20;

/// Parses
///
///   expr   := term (("+" | "-") term)*
///   term   := unary ("*" unary)*
///   unary  := "-"? factor
///   factor := base ("^" uint)?
///   base   := identifier | integer | "(" expr ")"
///
/// Identifiers are the declared variables, plus "t" in GF(p)(t). Juxtaposition
/// ("2x") is an error; multiplication is always explicit.
MultiPoly parse_polynomial_expr(std::string_view src, std::span<const std::string> vars, const FieldDescriptor& field);

}  // namespace dml
