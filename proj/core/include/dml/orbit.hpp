#pragma once

#include <span>
#include <vector>

#include "dml/ideal.hpp"
#include "dml/multipoly.hpp"
#include "dml/return_set.hpp"

namespace dml {

/// A k-rational point of affine space.
class RationalPoint {
 public:
  RationalPoint() = default;
  explicit RationalPoint(std::vector<FieldValue> coords);

  const std::vector<FieldValue>& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const FieldValue& operator[](std::size_t i) const { return coords_[i]; }
  const FieldDescriptor& field() const { return coords_.at(0).descriptor(); }

  bool operator==(const RationalPoint&) const = default;

 private:
  std::vector<FieldValue> coords_;
};

/// A polynomial self-map of affine space, possibly taken to a power.
///
/// power(a) does not compose the components symbolically: the result keeps
/// the same components and applies them a times per step, both on points
/// and when pulling back polynomials.
class Morphism {
 public:
  explicit Morphism(std::vector<MultiPoly> components);

  const std::vector<MultiPoly>& components() const noexcept { return components_; }
  std::size_t num_vars() const noexcept { return components_.size(); }
  const FieldDescriptor& field() const noexcept { return components_.front().field(); }
  /// How many applications of the components make up one step.
  std::size_t exponent() const noexcept { return exponent_; }

  Morphism power(std::size_t a) const;

  RationalPoint apply(const RationalPoint& p) const;
  /// g composed with this map, by `exponent()` substitution passes.
  MultiPoly pullback(const MultiPoly& g) const;

  void require_compatible(const RationalPoint& p) const;

 private:
  std::vector<MultiPoly> components_;
  std::size_t exponent_ = 1;
};

struct CycleStructure {
  std::size_t preperiod = 0;
  std::size_t period = 1;

  bool operator==(const CycleStructure&) const = default;
};

/// phi^n(alpha) by n successive evaluations.
RationalPoint morphism_iterate(const Morphism& phi, const RationalPoint& alpha, std::size_t n);

/// [alpha, phi(alpha), ..., phi^{N-1}(alpha)].
std::vector<RationalPoint> orbit_prefix(const Morphism& phi, const RationalPoint& alpha, std::size_t n);

/// Brent's cycle finder. Only defined over a prime field, where every orbit
/// is eventually periodic.
CycleStructure detect_cycle(const Morphism& phi, const RationalPoint& alpha);

bool lies_on(std::span<const MultiPoly> generators, const RationalPoint& p);

/// Indices n < horizon with every generator vanishing at phi^n(alpha). The
/// orbit is streamed, never stored.
ReturnSet return_set(const Morphism& phi, const RationalPoint& alpha, std::span<const MultiPoly> generators,
                     std::size_t horizon);
ReturnSet return_set(const Morphism& phi, const RationalPoint& alpha, const ReducedGroebnerBasis& variety,
                     std::size_t horizon);

}  // namespace dml
