#include "dml/fp_poly.hpp"

#include <algorithm>

#include "dml/error.hpp"

namespace dml {

namespace {

// r[shift + i] += s * b[i] (mod p). The unit and minus-unit cases are split
// out so the common orbit steps (multiplication by t or 1 - t) vectorize.
void add_scaled(std::vector<std::uint32_t>& r, const std::vector<std::uint32_t>& b,
                std::size_t shift, std::uint32_t s, std::uint32_t p) {
  std::uint32_t* out = r.data() + shift;
  const std::uint32_t* in = b.data();
  const std::size_t n = b.size();
  if (s == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t x = out[i] + in[i];
      out[i] = x >= p ? x - p : x;
    }
  } else if (s == p - 1) {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t x = out[i] + (p - in[i]);
      out[i] = x >= p ? x - p : x;
    }
  } else {
    const std::uint64_t sw = s;
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = static_cast<std::uint32_t>((out[i] + sw * in[i]) % p);
    }
  }
}

}  // namespace

FpPoly::FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= p_;
  trim();
}

FpPoly FpPoly::constant(std::uint32_t p, std::uint64_t c) {
  FpPoly r(p);
  if (c % p != 0) r.c_.push_back(static_cast<std::uint32_t>(c % p));
  return r;
}

FpPoly FpPoly::monomial(std::uint32_t p, std::uint32_t c, std::size_t degree) {
  FpPoly r(p);
  c %= p;
  if (c != 0) {
    r.c_.assign(degree + 1, 0);
    r.c_.back() = c;
  }
  return r;
}

void FpPoly::trim() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  const FpPoly& big = c_.size() >= o.c_.size() ? *this : o;
  const FpPoly& small = c_.size() >= o.c_.size() ? o : *this;
  FpPoly r = big;
  add_scaled(r.c_, small.c_, 0, 1, p_);
  r.trim();
  return r;
}

FpPoly& FpPoly::operator+=(const FpPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  add_scaled(c_, o.c_, 0, 1, p_);
  trim();
  return *this;
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  FpPoly r(p_);
  r.c_ = c_;
  if (r.c_.size() < o.c_.size()) r.c_.resize(o.c_.size(), 0);
  add_scaled(r.c_, o.c_, 0, p_ - 1, p_);
  r.trim();
  return r;
}

FpPoly FpPoly::operator-() const {
  FpPoly r(p_);
  r.c_.reserve(c_.size());
  for (auto x : c_) r.c_.push_back(x == 0 ? 0 : p_ - x);
  return r;
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (is_zero() || o.is_zero()) return FpPoly(p_);
  if (is_one()) return o;
  if (o.is_one()) return *this;
  const FpPoly& longer = c_.size() >= o.c_.size() ? *this : o;
  const FpPoly& shorter = c_.size() >= o.c_.size() ? o : *this;
  FpPoly r(p_);
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < shorter.c_.size(); ++i) {
    if (shorter.c_[i] != 0) add_scaled(r.c_, longer.c_, i, shorter.c_[i], p_);
  }
  r.trim();
  return r;
}

FpPoly FpPoly::scaled(std::uint32_t s) const {
  s %= p_;
  if (s == 0) return FpPoly(p_);
  if (s == 1) return *this;
  FpPoly r(p_);
  r.c_.resize(c_.size(), 0);
  add_scaled(r.c_, c_, 0, s, p_);
  return r;
}

std::pair<FpPoly, FpPoly> FpPoly::divrem(const FpPoly& d) const {
  if (d.is_zero()) throw Error("division by zero");
  if (degree() < d.degree()) return {FpPoly(p_), *this};
  const std::uint32_t inv_lead = mod_inverse(d.leading(), p_);
  std::vector<std::uint32_t> rem = c_;
  std::vector<std::uint32_t> quo(c_.size() - d.c_.size() + 1, 0);
  const std::size_t dn = d.c_.size();
  for (std::size_t k = rem.size(); k >= dn; --k) {
    const std::uint32_t top = rem[k - 1];
    if (top == 0) continue;
    const auto q = static_cast<std::uint32_t>(static_cast<std::uint64_t>(top) * inv_lead % p_);
    const std::size_t shift = k - dn;
    quo[shift] = q;
    add_scaled(rem, d.c_, shift, p_ - q, p_);
  }
  return {FpPoly(p_, std::move(quo)), FpPoly(p_, std::move(rem))};
}

FpPoly FpPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  return scaled(mod_inverse(leading(), p_));
}

std::string FpPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const std::uint32_t c = c_[k];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    auto r = a.divrem(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw Error("division by zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace dml
