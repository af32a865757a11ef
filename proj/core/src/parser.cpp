#include "dml/parser.hpp"

#include <algorithm>
#include <cctype>

namespace dml {

namespace {

class Parser {
 public:
  Parser(std::string_view src, std::span<const std::string> vars, const FieldDescriptor& field)
      : src_(src), vars_(vars), field_(field) {}

  MultiPoly parse() {
    MultiPoly e = expr();
    skip_space();
    if (pos_ < src_.size()) fail(std::string("unexpected '") + src_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("syntax error: " + what, pos_); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  MultiPoly unary() {
    if (accept('-')) return -factor();
    return factor();
  }

  MultiPoly factor() {
    MultiPoly b = base();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        fail("expected an exponent");
      }
      std::uint64_t e = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        e = e * 10 + static_cast<std::uint64_t>(src_[pos_] - '0');
        if (e > kMaxExponent) throw ParseError("exponent overflow", start);
        ++pos_;
      }
      return b.pow(e);
    }
    return b;
  }

  MultiPoly base() {
    skip_space();
    if (pos_ >= src_.size()) fail("expected an operand");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      const mpz_class n(std::string(src_.substr(start, pos_ - start)));
      return MultiPoly::constant(FieldValue::from_integer(n, field_), vars_.size());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(src_.substr(start, pos_ - start));
      const auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it != vars_.end()) {
        return MultiPoly::variable(field_, vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
      }
      if (name == "t") {
        if (!field_.has_generator()) throw ParseError("t is only defined over GF(p)(t)", start);
        return MultiPoly::constant(FieldValue::generator(field_), vars_.size());
      }
      throw ParseError("unknown identifier '" + name + "'", start);
    }
    fail("expected an operand");
  }

  std::string_view src_;
  std::span<const std::string> vars_;
  FieldDescriptor field_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_polynomial_expr(std::string_view src, std::span<const std::string> vars, const FieldDescriptor& field) {
  if (std::find(vars.begin(), vars.end(), "t") != vars.end()) {
    throw Error("reserved identifier: t cannot be a variable name");
  }
  return Parser(src, vars, field).parse();
}

}  // namespace dml
