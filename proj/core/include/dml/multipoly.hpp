#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dml/fields.hpp"

namespace dml {

/// Exponent vector over a fixed number of ambient variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : e_(num_vars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents) : e_(std::move(exponents)) {}

  static Monomial variable(std::size_t num_vars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const noexcept { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const noexcept { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) noexcept { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return e_; }

  std::uint64_t total_degree() const noexcept;
  bool is_one() const noexcept;
  bool divides(const Monomial& m) const noexcept;
  /// Variables with a positive exponent.
  std::vector<std::size_t> support() const;

  Monomial operator*(const Monomial& o) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b) noexcept;

  /// Plain lexicographic comparison of the raw exponent vector. This is only
  /// the storage key; use MonomialOrder for any algebraic ordering.
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::uint32_t> e_;
};

enum class OrderKind { Lex, Grevlex };

/// A monomial order on num_vars variables. priority()[0] is the index of the
/// most significant variable, so LEX with priority {1, 0} means y > x for
/// variables (x, y).
class MonomialOrder {
 public:
  /// Grevlex on zero variables.
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::vector<std::size_t> priority);

  static MonomialOrder lex(std::size_t num_vars);
  static MonomialOrder grevlex(std::size_t num_vars);

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }
  std::size_t num_vars() const noexcept { return priority_.size(); }
  bool is_degree_compatible() const noexcept { return kind_ == OrderKind::Grevlex; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string to_string() const;

  bool operator==(const MonomialOrder&) const = default;

 private:
  OrderKind kind_ = OrderKind::Grevlex;
  std::vector<std::size_t> priority_;
};

struct Term {
  Monomial monomial;
  FieldValue coeff;

  bool operator==(const Term&) const = default;
};

/// Sparse polynomial in num_vars variables over an exact field. Terms are
/// kept sorted by the raw monomial key with no zero coefficients, so two
/// equal polynomials have identical term vectors.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(FieldDescriptor field, std::size_t num_vars) : field_(field), num_vars_(num_vars) {}
  /// Builds from arbitrary terms; like monomials are combined.
  MultiPoly(FieldDescriptor field, std::size_t num_vars, std::vector<Term> terms);

  static MultiPoly constant(const FieldValue& c, std::size_t num_vars);
  static MultiPoly variable(const FieldDescriptor& field, std::size_t num_vars, std::size_t index);
  static MultiPoly term(const FieldValue& c, Monomial m);

  const FieldDescriptor& field() const noexcept { return field_; }
  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Zero for the zero polynomial.
  std::uint64_t total_degree() const noexcept;
  FieldValue coefficient(const Monomial& m) const;

  /// Largest term under the order; requires a nonzero polynomial.
  const Term& leading_term(const MonomialOrder& order) const;
  /// Terms in decreasing order.
  std::vector<Term> sorted_terms(const MonomialOrder& order) const;
  /// Divides by the leading coefficient; zero stays zero.
  MultiPoly monic(const MonomialOrder& order) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const FieldValue& c) const;
  MultiPoly times_term(const FieldValue& c, const Monomial& m) const;
  MultiPoly pow(std::uint64_t e) const;

  FieldValue evaluate(std::span<const FieldValue> point) const;
  MultiPoly substitute(std::span<const MultiPoly> images) const;

  bool operator==(const MultiPoly& o) const {
    return field_ == o.field_ && num_vars_ == o.num_vars_ && terms_ == o.terms_;
  }

 private:
  void require_compatible(const MultiPoly& o) const;

  FieldDescriptor field_;
  std::size_t num_vars_ = 0;
  std::vector<Term> terms_;
};

enum class PolyOp { Add, Sub, Mul };

MultiPoly poly_arith(PolyOp op, const MultiPoly& f, const MultiPoly& g);
FieldValue poly_evaluate(const MultiPoly& f, std::span<const FieldValue> point);
MultiPoly poly_substitute(const MultiPoly& f, std::span<const MultiPoly> images);

/// Canonical text: terms in decreasing order, explicit "*" and "^", e.g.
/// "x^2*y - 6*x + (t + 1)*y + 1". Polynomials built from the expression
/// grammar re-parse to themselves.
std::string render(const MultiPoly& f, std::span<const std::string> var_names, const MonomialOrder& order);
std::string render(const MultiPoly& f, std::span<const std::string> var_names);

}  // namespace dml
