#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dml/multipoly.hpp"

namespace dml {

struct GroebnerAccess;

/// The reduced Groebner basis of an ideal with respect to a fixed order.
///
/// Generators are monic, mutually reduced, and sorted by decreasing leading
/// monomial, which makes the generator list a canonical name for the ideal.
/// An empty list is the zero ideal (the whole space); the single generator 1
/// is the unit ideal (the empty variety).
class ReducedGroebnerBasis {
 public:
  ReducedGroebnerBasis() = default;
  ReducedGroebnerBasis(MonomialOrder order, FieldDescriptor field)
      : order_(std::move(order)), field_(field) {}

  static ReducedGroebnerBasis zero_ideal(const MonomialOrder& order, const FieldDescriptor& field);
  static ReducedGroebnerBasis unit_ideal(const MonomialOrder& order, const FieldDescriptor& field);

  const MonomialOrder& order() const noexcept { return order_; }
  const FieldDescriptor& field() const noexcept { return field_; }
  std::size_t num_vars() const noexcept { return order_.num_vars(); }
  const std::vector<MultiPoly>& generators() const noexcept { return gens_; }

  bool is_zero_ideal() const noexcept { return gens_.empty(); }
  bool is_unit_ideal() const noexcept { return gens_.size() == 1 && gens_[0].is_constant(); }

  std::vector<Monomial> leading_monomials() const;

  bool operator==(const ReducedGroebnerBasis&) const = default;

 private:
  friend struct GroebnerAccess;

  MonomialOrder order_;
  FieldDescriptor field_;
  std::vector<MultiPoly> gens_;
};

/// Finite set of rational points in affine space. Duplicates are allowed on
/// input and removed by distinct().
class PointSet {
 public:
  PointSet(FieldDescriptor field, std::size_t num_vars) : field_(field), num_vars_(num_vars) {}
  PointSet(FieldDescriptor field, std::size_t num_vars, std::vector<std::vector<FieldValue>> points);

  void add(std::vector<FieldValue> point);

  const FieldDescriptor& field() const noexcept { return field_; }
  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<std::vector<FieldValue>>& points() const noexcept { return points_; }
  bool empty() const noexcept { return points_.empty(); }

  std::vector<std::vector<FieldValue>> distinct() const;

 private:
  FieldDescriptor field_;
  std::size_t num_vars_;
  std::vector<std::vector<FieldValue>> points_;
};

/// Buchberger's algorithm with the normal selection strategy and both
/// Buchberger criteria. Empty input gives the zero ideal.
ReducedGroebnerBasis buchberger(std::span<const MultiPoly> gens, const MonomialOrder& order,
                                const FieldDescriptor& field);
ReducedGroebnerBasis buchberger(std::span<const MultiPoly> gens, const MonomialOrder& order);

/// Full multivariate division remainder. Zero iff f is in the ideal when
/// divisors form a Groebner basis.
MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> divisors, const MonomialOrder& order);
MultiPoly normal_form(const MultiPoly& f, const ReducedGroebnerBasis& gb);

/// S-polynomial of two nonzero polynomials.
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order);

/// Throws when the two bases live in different rings or orders.
bool ideal_equal(const ReducedGroebnerBasis& a, const ReducedGroebnerBasis& b);

/// Reduced basis of a + b, the ideal of the intersection of the varieties.
ReducedGroebnerBasis ideal_sum(const ReducedGroebnerBasis& a, const ReducedGroebnerBasis& b);

/// True when ideal(a) contains ideal(b), i.e. V(a) lies inside V(b): every
/// generator of b reduces to zero modulo a.
bool ideal_contains(const ReducedGroebnerBasis& a, const ReducedGroebnerBasis& b);

/// Krull dimension of the quotient ring, -1 for the unit ideal.
int ideal_dimension(const ReducedGroebnerBasis& gb);

/// Buchberger-Moller: reduced Groebner basis of the ideal of polynomials
/// vanishing on every point. Throws on an empty point set.
///
/// With a degree cap the monomial sweep runs in grevlex (same variable
/// priority) and stops past the cap; the result is the reduced basis, in
/// `order`, of the ideal generated by the vanishing polynomials of total
/// degree <= cap.
ReducedGroebnerBasis vanishing_ideal(const PointSet& pts, const MonomialOrder& order,
                                     std::optional<unsigned> degree_cap = std::nullopt);

/// Monomials outside the leading-term ideal, when that set is finite;
/// nullopt when the ideal has positive dimension.
std::optional<std::size_t> standard_monomial_count(const ReducedGroebnerBasis& gb);

}  // namespace dml
