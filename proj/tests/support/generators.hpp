#pragma once

#include <random>
#include <string>
#include <vector>

#include "dml/fields.hpp"
#include "dml/ideal.hpp"
#include "dml/multipoly.hpp"
#include "dml/orbit.hpp"

namespace dml::testing {

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline FieldDescriptor qq() { return FieldDescriptor::rationals(); }
inline FieldDescriptor gf(std::uint64_t p) { return FieldDescriptor::prime_field(p); }
inline FieldDescriptor gft(std::uint64_t p) { return FieldDescriptor::rational_functions(p); }

inline FpPoly random_fp_poly(Rng& rng, std::uint32_t p, int max_degree) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(uniform(rng, 0, max_degree + 1)));
  for (auto& x : c) x = static_cast<std::uint32_t>(uniform(rng, 0, p - 1));
  return FpPoly(p, std::move(c));
}

inline FieldValue random_value(Rng& rng, const FieldDescriptor& d) {
  switch (d.kind) {
    case FieldKind::Rationals: {
      mpq_class q(static_cast<long>(uniform(rng, -9, 9)), static_cast<unsigned long>(uniform(rng, 1, 6)));
      q.canonicalize();
      return FieldValue::from_rational(q);
    }
    case FieldKind::PrimeField:
      return FieldValue::from_integer(uniform(rng, 0, d.characteristic - 1), d);
    case FieldKind::RationalFunctionField: {
      FpPoly den = random_fp_poly(rng, d.characteristic, 2);
      if (den.is_zero()) den = FpPoly::constant(d.characteristic, 1);
      return FieldValue::from_fraction(random_fp_poly(rng, d.characteristic, 3), den, d);
    }
  }
  return FieldValue::zero(d);
}

inline FieldValue random_nonzero(Rng& rng, const FieldDescriptor& d) {
  while (true) {
    FieldValue v = random_value(rng, d);
    if (!v.is_zero()) return v;
  }
}

inline Monomial random_monomial(Rng& rng, std::size_t n, int max_exp) {
  std::vector<std::uint32_t> e(n);
  for (auto& x : e) x = static_cast<std::uint32_t>(uniform(rng, 0, max_exp));
  return Monomial(std::move(e));
}

inline MultiPoly random_poly(Rng& rng, const FieldDescriptor& d, std::size_t n, int max_terms, int max_exp) {
  std::vector<Term> terms;
  const auto count = uniform(rng, 0, max_terms);
  for (long long i = 0; i < count; ++i) terms.push_back({random_monomial(rng, n, max_exp), random_value(rng, d)});
  return MultiPoly(d, n, std::move(terms));
}

inline std::vector<FieldValue> random_point(Rng& rng, const FieldDescriptor& d, std::size_t n) {
  std::vector<FieldValue> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(random_value(rng, d));
  return p;
}

inline MonomialOrder random_order(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return MonomialOrder(uniform(rng, 0, 1) ? OrderKind::Lex : OrderKind::Grevlex, perm);
}

inline MultiPoly var(const FieldDescriptor& d, std::size_t n, std::size_t i) { return MultiPoly::variable(d, n, i); }
inline MultiPoly cst(const FieldValue& c, std::size_t n) { return MultiPoly::constant(c, n); }
inline MultiPoly cst(long long c, const FieldDescriptor& d, std::size_t n) {
  return MultiPoly::constant(FieldValue::from_integer(c, d), n);
}

/// LEX with y > x on variables (x, y).
inline MonomialOrder lex_y_over_x() { return MonomialOrder(OrderKind::Lex, {1, 0}); }

inline const std::vector<std::string>& xy() {
  static const std::vector<std::string> names{"x", "y"};
  return names;
}

/// (t*x, (1-t)*y) over GF(p)(t).
inline Morphism frobenius_map(std::uint64_t p) {
  const auto d = gft(p);
  const auto t = FieldValue::generator(d);
  const auto one = FieldValue::one(d);
  return Morphism({var(d, 2, 0).scaled(t), var(d, 2, 1).scaled(one - t)});
}

inline RationalPoint ones(const FieldDescriptor& d, std::size_t n) {
  return RationalPoint(std::vector<FieldValue>(n, FieldValue::one(d)));
}

inline Morphism swap_map() {
  const auto d = qq();
  return Morphism({var(d, 2, 1), var(d, 2, 0)});
}

inline RationalPoint point(const FieldDescriptor& d, std::initializer_list<long long> coords) {
  std::vector<FieldValue> v;
  for (auto c : coords) v.push_back(FieldValue::from_integer(c, d));
  return RationalPoint(std::move(v));
}

}  // namespace dml::testing
