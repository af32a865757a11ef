#include "dml/fields.hpp"

#include <algorithm>
#include <charconv>

#include "dml/error.hpp"

namespace dml {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t checked_prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw Error("characteristic must be a prime below 2^31, got " + std::to_string(p));
  }
  return static_cast<std::uint32_t>(p);
}

RationalFunction canonical_fraction(FpPoly num, FpPoly den) {
  const std::uint32_t p = num.modulus();
  if (den.is_zero()) throw Error("division by zero");
  if (num.is_zero()) return {FpPoly(p), FpPoly::constant(p, 1)};
  if (den.is_constant()) {
    if (!den.is_one()) num = num.scaled(mod_inverse(den.leading(), p));
    return {std::move(num), FpPoly::constant(p, 1)};
  }
  FpPoly g = gcd(num, den);
  if (!g.is_one()) {
    num = num.divrem(g).first;
    den = den.divrem(g).first;
  }
  if (den.leading() != 1) {
    const std::uint32_t inv = mod_inverse(den.leading(), p);
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return {std::move(num), std::move(den)};
}

std::uint32_t reduce_mpz(const mpz_class& n, std::uint32_t p) {
  mpz_class r = n % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
  return {FieldKind::PrimeField, checked_prime(p)};
}

FieldDescriptor FieldDescriptor::rational_functions(std::uint64_t p) {
  return {FieldKind::RationalFunctionField, checked_prime(p)};
}

FieldDescriptor FieldDescriptor::parse(std::string_view text) {
  if (text == "QQ") return rationals();
  if (text.substr(0, 3) != "GF(") throw Error("unknown field \"" + std::string(text) + "\"");
  const auto close = text.find(')');
  if (close == std::string_view::npos) throw Error("unknown field \"" + std::string(text) + "\"");
  std::uint64_t p = 0;
  const auto digits = text.substr(3, close - 3);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw Error("unknown field \"" + std::string(text) + "\"");
  }
  const auto rest = text.substr(close + 1);
  if (rest.empty()) return prime_field(p);
  if (rest == "(t)") return rational_functions(p);
  throw Error("unknown field \"" + std::string(text) + "\"");
}

std::string FieldDescriptor::to_string() const {
  switch (kind) {
    case FieldKind::Rationals:
      return "QQ";
    case FieldKind::PrimeField:
      return "GF(" + std::to_string(characteristic) + ")";
    case FieldKind::RationalFunctionField:
      return "GF(" + std::to_string(characteristic) + ")(t)";
  }
  return {};
}

FieldValue::FieldValue() : FieldValue(FieldDescriptor::rationals(), mpq_class(0)) {}

FieldValue FieldValue::zero(const FieldDescriptor& d) { return from_integer(0LL, d); }

FieldValue FieldValue::one(const FieldDescriptor& d) { return from_integer(1LL, d); }

FieldValue FieldValue::from_integer(const mpz_class& n, const FieldDescriptor& d) {
  switch (d.kind) {
    case FieldKind::Rationals:
      return {d, mpq_class(n)};
    case FieldKind::PrimeField:
      return {d, reduce_mpz(n, d.characteristic)};
    case FieldKind::RationalFunctionField: {
      const std::uint32_t p = d.characteristic;
      return {d, RationalFunction{FpPoly::constant(p, reduce_mpz(n, p)), FpPoly::constant(p, 1)}};
    }
  }
  throw InvariantViolation("unknown field kind");
}

FieldValue FieldValue::from_integer(long long n, const FieldDescriptor& d) {
  return from_integer(mpz_class(std::to_string(n)), d);
}

FieldValue FieldValue::from_rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return {FieldDescriptor::rationals(), std::move(c)};
}

FieldValue FieldValue::generator(const FieldDescriptor& d) {
  if (!d.has_generator()) throw Error("t is only defined in a rational function field");
  const std::uint32_t p = d.characteristic;
  return {d, RationalFunction{FpPoly::monomial(p, 1, 1), FpPoly::constant(p, 1)}};
}

FieldValue FieldValue::from_fraction(FpPoly num, FpPoly den, const FieldDescriptor& d) {
  if (!d.has_generator()) throw Error("field mismatch");
  if (num.modulus() != d.characteristic || den.modulus() != d.characteristic) {
    throw Error("field mismatch");
  }
  return {d, canonical_fraction(std::move(num), std::move(den))};
}

bool FieldValue::is_zero() const noexcept {
  switch (desc_.kind) {
    case FieldKind::Rationals:
      return sgn(std::get<mpq_class>(payload_)) == 0;
    case FieldKind::PrimeField:
      return std::get<std::uint32_t>(payload_) == 0;
    case FieldKind::RationalFunctionField:
      return std::get<RationalFunction>(payload_).num.is_zero();
  }
  return false;
}

bool FieldValue::is_one() const noexcept {
  switch (desc_.kind) {
    case FieldKind::Rationals:
      return std::get<mpq_class>(payload_) == 1;
    case FieldKind::PrimeField:
      return std::get<std::uint32_t>(payload_) == 1;
    case FieldKind::RationalFunctionField: {
      const auto& f = std::get<RationalFunction>(payload_);
      return f.num.is_one() && f.den.is_one();
    }
  }
  return false;
}

void FieldValue::require_same_field(const FieldValue& o) const {
  if (!(desc_ == o.desc_)) throw Error("field mismatch");
}

FieldValue FieldValue::operator+(const FieldValue& o) const {
  require_same_field(o);
  switch (desc_.kind) {
    case FieldKind::Rationals:
      return {desc_, mpq_class(rational() + o.rational())};
    case FieldKind::PrimeField: {
      const std::uint64_t s = std::uint64_t{residue()} + o.residue();
      return {desc_, static_cast<std::uint32_t>(s % desc_.characteristic)};
    }
    case FieldKind::RationalFunctionField: {
      const auto& a = rational_function();
      const auto& b = o.rational_function();
      if (a.den == b.den) {
        if (a.den.is_one()) return {desc_, RationalFunction{a.num + b.num, a.den}};
        return {desc_, canonical_fraction(a.num + b.num, a.den)};
      }
      return {desc_, canonical_fraction(a.num * b.den + b.num * a.den, a.den * b.den)};
    }
  }
  throw InvariantViolation("unknown field kind");
}

FieldValue& FieldValue::operator+=(const FieldValue& o) {
  require_same_field(o);
  if (desc_.kind == FieldKind::RationalFunctionField) {
    auto& a = std::get<RationalFunction>(payload_);
    const auto& b = o.rational_function();
    if (a.den.is_one() && b.den.is_one()) {
      a.num += b.num;
      return *this;
    }
  }
  return *this = *this + o;
}

FieldValue FieldValue::operator-() const {
  switch (desc_.kind) {
    case FieldKind::Rationals:
      return {desc_, mpq_class(-rational())};
    case FieldKind::PrimeField:
      return {desc_, residue() == 0 ? 0u : desc_.characteristic - residue()};
    case FieldKind::RationalFunctionField:
      return {desc_, RationalFunction{-rational_function().num, rational_function().den}};
  }
  throw InvariantViolation("unknown field kind");
}

FieldValue FieldValue::operator-(const FieldValue& o) const {
  require_same_field(o);
  if (desc_.kind == FieldKind::RationalFunctionField) {
    const auto& a = rational_function();
    const auto& b = o.rational_function();
    if (a.den.is_one() && b.den.is_one()) return {desc_, RationalFunction{a.num - b.num, a.den}};
  }
  return *this + (-o);
}

FieldValue FieldValue::operator*(const FieldValue& o) const {
  require_same_field(o);
  switch (desc_.kind) {
    case FieldKind::Rationals:
      return {desc_, mpq_class(rational() * o.rational())};
    case FieldKind::PrimeField: {
      const std::uint64_t s = std::uint64_t{residue()} * o.residue();
      return {desc_, static_cast<std::uint32_t>(s % desc_.characteristic)};
    }
    case FieldKind::RationalFunctionField: {
      if (is_one()) return o;
      if (o.is_one()) return *this;
      const auto& a = rational_function();
      const auto& b = o.rational_function();
      if (a.den.is_one() && b.den.is_one()) return {desc_, RationalFunction{a.num * b.num, a.den}};
      return {desc_, canonical_fraction(a.num * b.num, a.den * b.den)};
    }
  }
  throw InvariantViolation("unknown field kind");
}

FieldValue FieldValue::inverse() const {
  if (is_zero()) throw Error("division by zero");
  switch (desc_.kind) {
    case FieldKind::Rationals:
      return {desc_, mpq_class(1 / rational())};
    case FieldKind::PrimeField:
      return {desc_, mod_inverse(residue(), desc_.characteristic)};
    case FieldKind::RationalFunctionField: {
      const auto& a = rational_function();
      return {desc_, canonical_fraction(a.den, a.num)};
    }
  }
  throw InvariantViolation("unknown field kind");
}

FieldValue FieldValue::pow(std::uint64_t e) const {
  if (e == 1) return *this;
  FieldValue result = one(desc_);
  FieldValue base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string FieldValue::to_string() const {
  switch (desc_.kind) {
    case FieldKind::Rationals:
      return rational().get_str();
    case FieldKind::PrimeField:
      return std::to_string(residue());
    case FieldKind::RationalFunctionField: {
      const auto& f = rational_function();
      if (f.den.is_one()) return f.num.to_string();
      auto wrap = [](const FpPoly& g) {
        const auto terms = std::count_if(g.coeffs().begin(), g.coeffs().end(), [](std::uint32_t c) { return c != 0; });
        return terms > 1 ? "(" + g.to_string() + ")" : g.to_string();
      };
      return wrap(f.num) + "/" + wrap(f.den);
    }
  }
  return {};
}

bool FieldValue::renders_atomic() const {
  if (desc_.kind != FieldKind::RationalFunctionField) return true;
  const auto& f = rational_function();
  if (!f.den.is_one()) return false;
  std::size_t nonzero = 0;
  for (auto c : f.num.coeffs()) nonzero += c != 0;
  return nonzero <= 1;
}

bool FieldValue::renders_negative() const {
  return desc_.kind == FieldKind::Rationals && sgn(rational()) < 0;
}

FieldValue field_arith(ArithOp op, const FieldValue& a, const FieldValue& b) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Sub:
      return a - b;
    case ArithOp::Mul:
      return a * b;
  }
  throw InvariantViolation("unknown arithmetic op");
}

FieldValue field_invert(const FieldValue& a) { return a.inverse(); }

FieldValue embed_integer(long long n, const FieldDescriptor& d) { return FieldValue::from_integer(n, d); }

}  // namespace dml
