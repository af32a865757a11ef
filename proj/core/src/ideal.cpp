#include "dml/ideal.hpp"

#include <algorithm>
#include <bit>

#include "dml/error.hpp"

namespace dml {

struct GroebnerAccess {
  static ReducedGroebnerBasis make(const MonomialOrder& order, const FieldDescriptor& field,
                                   std::vector<MultiPoly> gens) {
    ReducedGroebnerBasis gb(order, field);
    gb.gens_ = std::move(gens);
    return gb;
  }
};

namespace {

void sort_by_leading_term(std::vector<MultiPoly>& gens, const MonomialOrder& order) {
  std::sort(gens.begin(), gens.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return order.less(b.leading_term(order).monomial, a.leading_term(order).monomial);
  });
}

void require_ring(const MultiPoly& f, const MonomialOrder& order, const FieldDescriptor& field) {
  if (!(f.field() == field)) throw Error("field mismatch");
  if (f.num_vars() != order.num_vars()) throw Error("variable count mismatch");
}

// Turns a Groebner basis into the reduced one: drop redundant leading terms,
// reduce every tail, make monic, sort.
std::vector<MultiPoly> reduce_basis(std::vector<MultiPoly> g, const MonomialOrder& order) {
  sort_by_leading_term(g, order);
  // Sorted decreasingly, a divisor of a leading monomial can only appear later.
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& lm = g[i].leading_term(order).monomial;
    bool redundant = false;
    for (std::size_t j = i + 1; j < g.size() && !redundant; ++j) {
      redundant = g[j].leading_term(order).monomial.divides(lm);
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<MultiPoly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    reduced.push_back(normal_form(minimal[i], others, order).monic(order));
  }
  sort_by_leading_term(reduced, order);
  return reduced;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

}  // namespace

ReducedGroebnerBasis ReducedGroebnerBasis::zero_ideal(const MonomialOrder& order, const FieldDescriptor& field) {
  return {order, field};
}

ReducedGroebnerBasis ReducedGroebnerBasis::unit_ideal(const MonomialOrder& order, const FieldDescriptor& field) {
  return GroebnerAccess::make(order, field, {MultiPoly::constant(FieldValue::one(field), order.num_vars())});
}

std::vector<Monomial> ReducedGroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.leading_term(order_).monomial);
  return out;
}

PointSet::PointSet(FieldDescriptor field, std::size_t num_vars, std::vector<std::vector<FieldValue>> points)
    : field_(field), num_vars_(num_vars) {
  for (auto& p : points) add(std::move(p));
}

void PointSet::add(std::vector<FieldValue> point) {
  if (point.size() != num_vars_) throw Error("point length does not match the ambient space");
  for (const auto& x : point) {
    if (!(x.descriptor() == field_)) throw Error("field mismatch");
  }
  points_.push_back(std::move(point));
}

std::vector<std::vector<FieldValue>> PointSet::distinct() const {
  std::vector<std::vector<FieldValue>> out;
  for (const auto& p : points_) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order) {
  const auto& lf = f.leading_term(order);
  const auto& lg = g.leading_term(order);
  const Monomial l = lcm(lf.monomial, lg.monomial);
  return f.times_term(lf.coeff.inverse(), l / lf.monomial) - g.times_term(lg.coeff.inverse(), l / lg.monomial);
}

MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> divisors, const MonomialOrder& order) {
  std::vector<const MultiPoly*> divs;
  std::vector<Term> leads;
  for (const auto& d : divisors) {
    if (d.is_zero()) continue;
    if (!(d.field() == f.field()) || d.num_vars() != f.num_vars()) throw Error("ring mismatch in normal form");
    divs.push_back(&d);
    leads.push_back(d.leading_term(order));
  }
  MultiPoly p = f;
  MultiPoly r(f.field(), f.num_vars());
  while (!p.is_zero()) {
    const Term lt = p.leading_term(order);
    bool divided = false;
    for (std::size_t k = 0; k < divs.size(); ++k) {
      if (leads[k].monomial.divides(lt.monomial)) {
        p -= divs[k]->times_term(lt.coeff / leads[k].coeff, lt.monomial / leads[k].monomial);
        divided = true;
        break;
      }
    }
    if (!divided) {
      const MultiPoly head = MultiPoly::term(lt.coeff, lt.monomial);
      r += head;
      p -= head;
    }
  }
  return r;
}

MultiPoly normal_form(const MultiPoly& f, const ReducedGroebnerBasis& gb) {
  require_ring(f, gb.order(), gb.field());
  return normal_form(f, gb.generators(), gb.order());
}

ReducedGroebnerBasis buchberger(std::span<const MultiPoly> gens, const MonomialOrder& order,
                                const FieldDescriptor& field) {
  std::vector<MultiPoly> g;
  for (const auto& f : gens) {
    require_ring(f, order, field);
    if (f.is_zero()) continue;
    if (f.is_constant()) return ReducedGroebnerBasis::unit_ideal(order, field);
    g.push_back(f.monic(order));
  }
  if (g.empty()) return ReducedGroebnerBasis::zero_ideal(order, field);

  std::vector<Monomial> lms;
  for (const auto& f : g) lms.push_back(f.leading_term(order).monomial);

  std::vector<Pair> queue;
  auto in_queue = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return std::any_of(queue.begin(), queue.end(), [&](const Pair& p) { return p.i == a && p.j == b; });
  };
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) queue.push_back({i, j, lcm(lms[i], lms[j])});
  }

  while (!queue.empty()) {
    // Normal strategy: smallest lcm first, ties broken by insertion order.
    auto best = queue.begin();
    for (auto it = queue.begin(); it != queue.end(); ++it) {
      if (order.less(it->lcm, best->lcm)) best = it;
    }
    const Pair pair = *best;
    queue.erase(best);

    // First criterion: coprime leading monomials reduce to zero.
    if (coprime(lms[pair.i], lms[pair.j])) continue;
    // Second criterion: some third leading monomial divides the lcm and both
    // of its pairs with i and j are already dealt with.
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chain = lms[k].divides(pair.lcm) && !in_queue(pair.i, k) && !in_queue(pair.j, k);
    }
    if (chain) continue;

    MultiPoly r = normal_form(s_polynomial(g[pair.i], g[pair.j], order), g, order);
    if (r.is_zero()) continue;
    if (r.is_constant()) return ReducedGroebnerBasis::unit_ideal(order, field);
    r = r.monic(order);
    const std::size_t n = g.size();
    lms.push_back(r.leading_term(order).monomial);
    g.push_back(std::move(r));
    for (std::size_t i = 0; i < n; ++i) queue.push_back({i, n, lcm(lms[i], lms[n])});
  }
  return GroebnerAccess::make(order, field, reduce_basis(std::move(g), order));
}

ReducedGroebnerBasis buchberger(std::span<const MultiPoly> gens, const MonomialOrder& order) {
  if (gens.empty()) throw Error("cannot infer the coefficient field of an empty generator list");
  return buchberger(gens, order, gens.front().field());
}

bool ideal_equal(const ReducedGroebnerBasis& a, const ReducedGroebnerBasis& b) {
  if (!(a.order() == b.order())) throw Error("monomial order mismatch");
  if (!(a.field() == b.field())) throw Error("field mismatch");
  return a.generators() == b.generators();
}

ReducedGroebnerBasis ideal_sum(const ReducedGroebnerBasis& a, const ReducedGroebnerBasis& b) {
  if (!(a.order() == b.order())) throw Error("monomial order mismatch");
  if (!(a.field() == b.field())) throw Error("field mismatch");
  std::vector<MultiPoly> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return buchberger(gens, a.order(), a.field());
}

bool ideal_contains(const ReducedGroebnerBasis& a, const ReducedGroebnerBasis& b) {
  if (!(a.order() == b.order())) throw Error("monomial order mismatch");
  return std::all_of(b.generators().begin(), b.generators().end(),
                     [&](const MultiPoly& g) { return normal_form(g, a).is_zero(); });
}

int ideal_dimension(const ReducedGroebnerBasis& gb) {
  if (gb.is_unit_ideal()) return -1;
  const std::size_t n = gb.num_vars();
  if (n > 20) throw Error("dimension search supports at most 20 variables");
  std::vector<std::uint32_t> lead_masks;
  for (const auto& m : gb.leading_monomials()) {
    std::uint32_t mask = 0;
    for (auto v : m.support()) mask |= 1u << v;
    lead_masks.push_back(mask);
  }
  int best = -1;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    const int size = std::popcount(subset);
    if (size <= best) continue;
    // A leading monomial "lives in" the subset when its support is inside it.
    const bool independent = std::none_of(lead_masks.begin(), lead_masks.end(),
                                          [&](std::uint32_t m) { return (m & ~subset) == 0; });
    if (independent) best = size;
  }
  return best;
}

std::optional<std::size_t> standard_monomial_count(const ReducedGroebnerBasis& gb) {
  if (gb.is_unit_ideal()) return 0;
  if (ideal_dimension(gb) != 0) return std::nullopt;
  const auto lms = gb.leading_monomials();
  const std::size_t n = gb.num_vars();
  // Zero-dimensional: each variable has a pure power among the leading terms.
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& m : lms) {
    const auto s = m.support();
    if (s.size() == 1 && (bound[s[0]] == 0 || m[s[0]] < bound[s[0]])) bound[s[0]] = m[s[0]];
  }
  std::size_t count = 0;
  Monomial cur(n);
  while (true) {
    const bool standard = std::none_of(lms.begin(), lms.end(), [&](const Monomial& m) { return m.divides(cur); });
    count += standard;
    std::size_t k = 0;
    while (k < n && ++cur[k] >= bound[k]) cur[k++] = 0;
    if (k == n) break;
  }
  return count;
}

// --------------------------------------------------------- Buchberger-Moller

namespace {

using Vec = std::vector<FieldValue>;

void axpy(Vec& y, const FieldValue& a, const Vec& x) {
  if (y.size() < x.size()) y.resize(x.size(), FieldValue::zero(a.descriptor()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] -= a * x[i];
  }
}

struct EchelonRow {
  Vec values;       // evaluation vector, 1 at pivot, 0 at other rows' pivots
  std::size_t pivot;
  Vec combination;  // coefficients over the standard monomials found so far
};

struct Candidate {
  Monomial monomial;
  Vec values;
};

std::vector<MultiPoly> buchberger_moller(const std::vector<Vec>& points, const MonomialOrder& order,
                                         const FieldDescriptor& field, std::optional<unsigned> degree_cap) {
  const std::size_t n = order.num_vars();
  const std::size_t m = points.size();
  const FieldValue zero = FieldValue::zero(field);

  std::vector<Monomial> standard;
  std::vector<EchelonRow> rows;
  std::vector<MultiPoly> basis;
  std::vector<Monomial> basis_lms;
  std::vector<Candidate> candidates{{Monomial(n), Vec(m, FieldValue::one(field))}};

  auto divisible = [&](const Monomial& t) {
    return std::any_of(basis_lms.begin(), basis_lms.end(), [&](const Monomial& l) { return l.divides(t); });
  };

  while (!candidates.empty()) {
    auto min_it = candidates.begin();
    for (auto it = candidates.begin(); it != candidates.end(); ++it) {
      if (order.less(it->monomial, min_it->monomial)) min_it = it;
    }
    Candidate cand = std::move(*min_it);
    candidates.erase(min_it);
    if (divisible(cand.monomial)) continue;
    if (degree_cap && cand.monomial.total_degree() > *degree_cap) break;

    // v = eval(t + sum acc_i * standard_i), reduced against the echelon rows.
    Vec v = cand.values;
    Vec acc(standard.size(), zero);
    for (const auto& row : rows) {
      const FieldValue c = v[row.pivot];
      if (c.is_zero()) continue;
      axpy(v, c, row.values);
      axpy(acc, c, row.combination);
    }

    auto nonzero = std::find_if(v.begin(), v.end(), [](const FieldValue& x) { return !x.is_zero(); });
    if (nonzero == v.end()) {
      std::vector<Term> terms{{cand.monomial, FieldValue::one(field)}};
      for (std::size_t i = 0; i < acc.size(); ++i) {
        if (!acc[i].is_zero()) terms.push_back({standard[i], acc[i]});
      }
      basis.emplace_back(field, n, std::move(terms));
      basis_lms.push_back(cand.monomial);
      continue;
    }

    EchelonRow row;
    row.pivot = static_cast<std::size_t>(nonzero - v.begin());
    const FieldValue scale = v[row.pivot].inverse();
    for (auto& x : v) x *= scale;
    acc.push_back(FieldValue::one(field));
    for (auto& x : acc) x *= scale;
    row.values = std::move(v);
    row.combination = std::move(acc);
    for (auto& other : rows) {
      const FieldValue c = other.values[row.pivot];
      if (c.is_zero()) continue;
      axpy(other.values, c, row.values);
      axpy(other.combination, c, row.combination);
    }
    rows.push_back(std::move(row));
    standard.push_back(cand.monomial);

    for (std::size_t i = 0; i < n; ++i) {
      Monomial next = cand.monomial * Monomial::variable(n, i);
      if (divisible(next)) continue;
      if (std::any_of(candidates.begin(), candidates.end(),
                      [&](const Candidate& c) { return c.monomial == next; })) {
        continue;
      }
      Vec values = cand.values;
      for (std::size_t k = 0; k < m; ++k) values[k] *= points[k][i];
      candidates.push_back({std::move(next), std::move(values)});
    }
  }
  return basis;
}

}  // namespace

ReducedGroebnerBasis vanishing_ideal(const PointSet& pts, const MonomialOrder& order,
                                     std::optional<unsigned> degree_cap) {
  if (pts.empty()) throw Error("vanishing ideal of an empty point set");
  if (pts.num_vars() != order.num_vars()) throw Error("variable count mismatch");
  const auto points = pts.distinct();
  if (!degree_cap) {
    auto basis = buchberger_moller(points, order, pts.field(), std::nullopt);
    sort_by_leading_term(basis, order);
    return GroebnerAccess::make(order, pts.field(), std::move(basis));
  }
  // The truncated sweep is only meaningful for a degree-compatible order; do
  // it in grevlex and convert the (small) result.
  const MonomialOrder sweep = order.is_degree_compatible() ? order : MonomialOrder(OrderKind::Grevlex, order.priority());
  const auto low_degree = buchberger_moller(points, sweep, pts.field(), degree_cap);
  return buchberger(low_degree, order, pts.field());
}

}  // namespace dml
