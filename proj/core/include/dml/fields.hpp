#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "dml/fp_poly.hpp"

namespace dml {

enum class FieldKind { Rationals, PrimeField, RationalFunctionField };

/// Which exact coefficient field a value or polynomial lives in: QQ, GF(p),
/// or GF(p)(t) with the single transcendental generator t.
struct FieldDescriptor {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t characteristic = 0;

  static FieldDescriptor rationals() noexcept { return {}; }
  /// Throws unless p is a prime below 2^31.
  static FieldDescriptor prime_field(std::uint64_t p);
  static FieldDescriptor rational_functions(std::uint64_t p);

  /// Accepts "QQ", "GF(p)" and "GF(p)(t)".
  static FieldDescriptor parse(std::string_view text);
  std::string to_string() const;

  bool is_finite() const noexcept { return kind == FieldKind::PrimeField; }
  bool has_generator() const noexcept { return kind == FieldKind::RationalFunctionField; }

  bool operator==(const FieldDescriptor&) const = default;
};

/// Reduced quotient num/den of F_p[t] polynomials; den is monic and
/// coprime to num, and zero is 0/1.
struct RationalFunction {
  FpPoly num;
  FpPoly den;

  bool operator==(const RationalFunction&) const = default;
};

enum class ArithOp { Add, Sub, Mul };

/// An element of one of the supported fields, always held in canonical form
/// so that equality is payload equality.
class FieldValue {
 public:
  /// Zero of QQ.
  FieldValue();

  static FieldValue zero(const FieldDescriptor& d);
  static FieldValue one(const FieldDescriptor& d);
  static FieldValue from_integer(const mpz_class& n, const FieldDescriptor& d);
  static FieldValue from_integer(long long n, const FieldDescriptor& d);
  static FieldValue from_rational(const mpq_class& q);
  /// The generator t of GF(p)(t).
  static FieldValue generator(const FieldDescriptor& d);
  /// num/den in GF(p)(t), canonicalized; throws on den = 0.
  static FieldValue from_fraction(FpPoly num, FpPoly den, const FieldDescriptor& d);

  const FieldDescriptor& descriptor() const noexcept { return desc_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  const mpq_class& rational() const { return std::get<mpq_class>(payload_); }
  std::uint32_t residue() const { return std::get<std::uint32_t>(payload_); }
  const RationalFunction& rational_function() const { return std::get<RationalFunction>(payload_); }

  FieldValue operator+(const FieldValue& o) const;
  FieldValue operator-(const FieldValue& o) const;
  FieldValue operator*(const FieldValue& o) const;
  FieldValue operator/(const FieldValue& o) const { return *this * o.inverse(); }
  FieldValue operator-() const;
  FieldValue& operator+=(const FieldValue& o);
  FieldValue& operator-=(const FieldValue& o) { return *this = *this - o; }
  FieldValue& operator*=(const FieldValue& o) { return *this = *this * o; }

  /// Throws "division by zero" on zero.
  FieldValue inverse() const;
  FieldValue pow(std::uint64_t e) const;

  bool operator==(const FieldValue& o) const { return desc_ == o.desc_ && payload_ == o.payload_; }

  /// Plain rendering: "17/12", "5", "t^2 + 1", "(t + 1)/(t^2)".
  std::string to_string() const;
  /// True when to_string() reads as a single signed factor, so it can be
  /// written in front of "*monomial" without parentheses.
  bool renders_atomic() const;
  /// Negative rationals only; residues and function-field values have no sign.
  bool renders_negative() const;

 private:
  using Payload = std::variant<mpq_class, std::uint32_t, RationalFunction>;
  FieldValue(FieldDescriptor d, Payload p) : desc_(d), payload_(std::move(p)) {}

  void require_same_field(const FieldValue& o) const;

  FieldDescriptor desc_;
  Payload payload_;
};

FieldValue field_arith(ArithOp op, const FieldValue& a, const FieldValue& b);
FieldValue field_invert(const FieldValue& a);
FieldValue embed_integer(long long n, const FieldDescriptor& d);

}  // namespace dml
