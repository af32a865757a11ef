#include "dml/multipoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dml/error.hpp"

namespace dml {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, std::uint32_t power) {
  Monomial m(num_vars);
  m.e_.at(index) = power;
  return m;
}

std::uint64_t Monomial::total_degree() const noexcept {
  return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](auto x) { return x == 0; });
}

bool Monomial::divides(const Monomial& m) const noexcept {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > m.e_[i]) return false;
  }
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > 0) s.push_back(i);
  }
  return s;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (divisor.e_[i] > e_[i]) throw InvariantViolation("monomial division is not exact");
    r.e_[i] -= divisor.e_[i];
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < a.e_.size(); ++i) {
    if (a.e_[i] != 0 && b.e_[i] != 0) return false;
  }
  return true;
}

// ----------------------------------------------------------- MonomialOrder

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw Error("variable priority must be a permutation");
  }
}

MonomialOrder MonomialOrder::lex(std::size_t num_vars) {
  std::vector<std::size_t> p(num_vars);
  std::iota(p.begin(), p.end(), 0);
  return {OrderKind::Lex, std::move(p)};
}

MonomialOrder MonomialOrder::grevlex(std::size_t num_vars) {
  std::vector<std::size_t> p(num_vars);
  std::iota(p.begin(), p.end(), 0);
  return {OrderKind::Grevlex, std::move(p)};
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == OrderKind::Lex) {
    for (auto v : priority_) {
      if (a[v] != b[v]) return a[v] <=> b[v];
    }
    return std::strong_ordering::equal;
  }
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da <=> db;
  // Reverse lexicographic tie break: the smaller exponent in the least
  // significant differing variable wins.
  for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
    const auto v = *it;
    if (a[v] != b[v]) return b[v] <=> a[v];
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::to_string() const {
  std::string s = kind_ == OrderKind::Lex ? "lex(" : "grevlex(";
  for (std::size_t i = 0; i < priority_.size(); ++i) {
    if (i) s += ">";
    s += std::to_string(priority_[i]);
  }
  return s + ")";
}

// --------------------------------------------------------------- MultiPoly

namespace {

std::vector<Term> collect(std::map<Monomial, FieldValue>&& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.push_back({m, std::move(c)});
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(FieldDescriptor field, std::size_t num_vars, std::vector<Term> terms)
    : field_(field), num_vars_(num_vars) {
  std::map<Monomial, FieldValue> acc;
  for (auto& t : terms) {
    if (t.monomial.size() != num_vars_) throw Error("monomial length does not match the ring");
    if (!(t.coeff.descriptor() == field_)) throw Error("field mismatch");
    auto [it, inserted] = acc.try_emplace(t.monomial, t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  terms_ = collect(std::move(acc));
}

MultiPoly MultiPoly::constant(const FieldValue& c, std::size_t num_vars) {
  MultiPoly r(c.descriptor(), num_vars);
  if (!c.is_zero()) r.terms_.push_back({Monomial(num_vars), c});
  return r;
}

MultiPoly MultiPoly::variable(const FieldDescriptor& field, std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw Error("variable index out of range");
  MultiPoly r(field, num_vars);
  r.terms_.push_back({Monomial::variable(num_vars, index), FieldValue::one(field)});
  return r;
}

MultiPoly MultiPoly::term(const FieldValue& c, Monomial m) {
  MultiPoly r(c.descriptor(), m.size());
  if (!c.is_zero()) r.terms_.push_back({std::move(m), c});
  return r;
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

std::uint64_t MultiPoly::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

FieldValue MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial < key; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return FieldValue::zero(field_);
}

const Term& MultiPoly::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw InvariantViolation("leading term of the zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (order.less(best->monomial, t.monomial)) best = &t;
  }
  return *best;
}

std::vector<Term> MultiPoly::sorted_terms(const MonomialOrder& order) const {
  std::vector<Term> out = terms_;
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return order.less(b.monomial, a.monomial); });
  return out;
}

MultiPoly MultiPoly::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  const FieldValue& lc = leading_term(order).coeff;
  if (lc.is_one()) return *this;
  return scaled(lc.inverse());
}

void MultiPoly::require_compatible(const MultiPoly& o) const {
  if (!(field_ == o.field_)) throw Error("field mismatch");
  if (num_vars_ != o.num_vars_) throw Error("variable count mismatch");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  require_compatible(o);
  MultiPoly r(field_, num_vars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->monomial < b->monomial)) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->monomial < a->monomial) {
      r.terms_.push_back(*b++);
    } else {
      FieldValue c = a->coeff + b->coeff;
      if (!c.is_zero()) r.terms_.push_back({a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  require_compatible(o);
  std::map<Monomial, FieldValue> acc;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      auto m = a.monomial * b.monomial;
      auto c = a.coeff * b.coeff;
      auto [it, inserted] = acc.try_emplace(std::move(m), c);
      if (!inserted) it->second += c;
    }
  }
  MultiPoly r(field_, num_vars_);
  r.terms_ = collect(std::move(acc));
  return r;
}

MultiPoly MultiPoly::scaled(const FieldValue& c) const {
  if (!(c.descriptor() == field_)) throw Error("field mismatch");
  MultiPoly r(field_, num_vars_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial, t.coeff * c});
  return r;
}

MultiPoly MultiPoly::times_term(const FieldValue& c, const Monomial& m) const {
  if (!(c.descriptor() == field_)) throw Error("field mismatch");
  MultiPoly r(field_, num_vars_);
  if (c.is_zero()) return r;
  // Multiplying every key by the same monomial preserves the storage order.
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
  return r;
}

MultiPoly MultiPoly::pow(std::uint64_t e) const {
  MultiPoly result = constant(FieldValue::one(field_), num_vars_);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

FieldValue MultiPoly::evaluate(std::span<const FieldValue> point) const {
  if (point.size() != num_vars_) throw Error("point has " + std::to_string(point.size()) +
                                             " coordinates, expected " + std::to_string(num_vars_));
  for (const auto& x : point) {
    if (!(x.descriptor() == field_)) throw Error("field mismatch");
  }
  FieldValue sum = FieldValue::zero(field_);
  for (const auto& t : terms_) {
    FieldValue v = t.coeff;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      const auto e = t.monomial[i];
      if (e == 1) {
        v *= point[i];
      } else if (e > 1) {
        v *= point[i].pow(e);
      }
    }
    if (sum.is_zero()) {
      sum = std::move(v);
    } else {
      sum += v;
    }
  }
  return sum;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != num_vars_) throw Error("substitution needs one image per variable");
  if (images.empty()) return *this;
  const std::size_t target_vars = images.front().num_vars();
  for (const auto& g : images) {
    if (!(g.field() == field_)) throw Error("field mismatch");
    if (g.num_vars() != target_vars) throw Error("variable count mismatch");
  }
  // powers[i][k] = images[i]^k, grown on demand.
  std::vector<std::vector<MultiPoly>> powers(num_vars_);
  const MultiPoly one = constant(FieldValue::one(field_), target_vars);
  auto power_of = [&](std::size_t i, std::uint32_t k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(one);
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  MultiPoly result(field_, target_vars);
  for (const auto& t : terms_) {
    MultiPoly prod = constant(t.coeff, target_vars);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (t.monomial[i] > 0) prod *= power_of(i, t.monomial[i]);
    }
    result += prod;
  }
  return result;
}

MultiPoly poly_arith(PolyOp op, const MultiPoly& f, const MultiPoly& g) {
  switch (op) {
    case PolyOp::Add:
      return f + g;
    case PolyOp::Sub:
      return f - g;
    case PolyOp::Mul:
      return f * g;
  }
  throw InvariantViolation("unknown polynomial op");
}

FieldValue poly_evaluate(const MultiPoly& f, std::span<const FieldValue> point) { return f.evaluate(point); }

MultiPoly poly_substitute(const MultiPoly& f, std::span<const MultiPoly> images) { return f.substitute(images); }

// --------------------------------------------------------------- rendering

namespace {

std::string render_monomial(const Monomial& m, std::span<const std::string> names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

}  // namespace

std::string render(const MultiPoly& f, std::span<const std::string> var_names, const MonomialOrder& order) {
  if (var_names.size() != f.num_vars()) throw Error("need one name per variable");
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.sorted_terms(order)) {
    const bool negative = t.coeff.renders_negative();
    const FieldValue c = negative ? -t.coeff : t.coeff;
    std::string body;
    if (t.monomial.is_one()) {
      body = c.to_string();
    } else {
      const std::string mono = render_monomial(t.monomial, var_names);
      if (c.is_one()) {
        body = mono;
      } else if (c.renders_atomic()) {
        body = c.to_string() + "*" + mono;
      } else {
        body = "(" + c.to_string() + ")*" + mono;
      }
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::string render(const MultiPoly& f, std::span<const std::string> var_names) {
  return render(f, var_names, MonomialOrder::grevlex(f.num_vars()));
}

}  // namespace dml
