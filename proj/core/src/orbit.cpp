#include "dml/orbit.hpp"

#include "dml/error.hpp"

namespace dml {

RationalPoint::RationalPoint(std::vector<FieldValue> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error("a point needs at least one coordinate");
  for (const auto& c : coords_) {
    if (!(c.descriptor() == coords_.front().descriptor())) throw Error("field mismatch");
  }
}

Morphism::Morphism(std::vector<MultiPoly> components) : components_(std::move(components)) {
  if (components_.empty()) throw Error("a morphism needs at least one component");
  const std::size_t n = components_.size();
  for (const auto& c : components_) {
    if (c.num_vars() != n) {
      throw Error("morphism component has " + std::to_string(c.num_vars()) + " variables, expected " +
                  std::to_string(n));
    }
    if (!(c.field() == components_.front().field())) throw Error("field mismatch");
  }
}

Morphism Morphism::power(std::size_t a) const {
  if (a == 0) throw Error("morphism power must be at least 1");
  Morphism m = *this;
  m.exponent_ = exponent_ * a;
  return m;
}

void Morphism::require_compatible(const RationalPoint& p) const {
  if (p.size() != num_vars()) {
    throw Error("point has " + std::to_string(p.size()) + " coordinates, morphism acts on " +
                std::to_string(num_vars()));
  }
  if (!(p.field() == field())) throw Error("field mismatch");
}

RationalPoint Morphism::apply(const RationalPoint& p) const {
  require_compatible(p);
  auto step = [this](const RationalPoint& from) {
    std::vector<FieldValue> next;
    next.reserve(components_.size());
    for (const auto& c : components_) next.push_back(c.evaluate(from.coords()));
    return RationalPoint(std::move(next));
  };
  RationalPoint cur = step(p);
  for (std::size_t k = 1; k < exponent_; ++k) cur = step(cur);
  return cur;
}

MultiPoly Morphism::pullback(const MultiPoly& g) const {
  if (g.num_vars() != num_vars()) throw Error("variable count mismatch");
  MultiPoly out = g;
  for (std::size_t step = 0; step < exponent_; ++step) out = out.substitute(components_);
  return out;
}

RationalPoint morphism_iterate(const Morphism& phi, const RationalPoint& alpha, std::size_t n) {
  phi.require_compatible(alpha);
  RationalPoint p = alpha;
  for (std::size_t i = 0; i < n; ++i) p = phi.apply(p);
  return p;
}

std::vector<RationalPoint> orbit_prefix(const Morphism& phi, const RationalPoint& alpha, std::size_t n) {
  phi.require_compatible(alpha);
  std::vector<RationalPoint> out;
  out.reserve(n);
  if (n == 0) return out;
  out.push_back(alpha);
  while (out.size() < n) out.push_back(phi.apply(out.back()));
  return out;
}

CycleStructure detect_cycle(const Morphism& phi, const RationalPoint& alpha) {
  if (!phi.field().is_finite()) throw Error("cycle detection requires a finite field");
  phi.require_compatible(alpha);
  // Brent: find the period by teleporting the tortoise at powers of two.
  std::size_t power = 1;
  std::size_t period = 1;
  RationalPoint tortoise = alpha;
  RationalPoint hare = phi.apply(alpha);
  while (!(tortoise == hare)) {
    if (power == period) {
      tortoise = hare;
      power *= 2;
      period = 0;
    }
    hare = phi.apply(hare);
    ++period;
  }
  // Preperiod: walk two pointers `period` apart from the start.
  tortoise = alpha;
  hare = morphism_iterate(phi, alpha, period);
  std::size_t preperiod = 0;
  while (!(tortoise == hare)) {
    tortoise = phi.apply(tortoise);
    hare = phi.apply(hare);
    ++preperiod;
  }
  return {preperiod, period};
}

bool lies_on(std::span<const MultiPoly> generators, const RationalPoint& p) {
  for (const auto& g : generators) {
    if (!g.evaluate(p.coords()).is_zero()) return false;
  }
  return true;
}

ReturnSet return_set(const Morphism& phi, const RationalPoint& alpha, std::span<const MultiPoly> generators,
                     std::size_t horizon) {
  if (horizon == 0) throw Error("horizon must be at least 1");
  phi.require_compatible(alpha);
  for (const auto& g : generators) {
    if (g.num_vars() != phi.num_vars()) throw Error("variable count mismatch");
    if (!(g.field() == phi.field())) throw Error("field mismatch");
  }
  std::vector<std::size_t> hits;
  RationalPoint p = alpha;
  for (std::size_t n = 0; n < horizon; ++n) {
    if (n > 0) p = phi.apply(p);
    if (lies_on(generators, p)) hits.push_back(n);
  }
  return ReturnSet(horizon, std::move(hits));
}

ReturnSet return_set(const Morphism& phi, const RationalPoint& alpha, const ReducedGroebnerBasis& variety,
                     std::size_t horizon) {
  return return_set(phi, alpha, variety.generators(), horizon);
}

}  // namespace dml
