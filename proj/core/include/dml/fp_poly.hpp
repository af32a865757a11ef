#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dml {

/// Dense univariate polynomial over the prime field F_p, coefficients stored
/// low degree first. The coefficient vector never has a trailing zero, so the
/// zero polynomial is the empty vector.
class FpPoly {
 public:
  FpPoly() = default;
  explicit FpPoly(std::uint32_t p) : p_(p) {}
  FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  static FpPoly constant(std::uint32_t p, std::uint64_t c);
  static FpPoly monomial(std::uint32_t p, std::uint32_t c, std::size_t degree);

  std::uint32_t modulus() const noexcept { return p_; }
  const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  /// Degree, with -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  std::uint32_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  std::uint32_t operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator-() const;
  FpPoly& operator+=(const FpPoly& o);
  FpPoly operator*(const FpPoly& o) const;
  FpPoly scaled(std::uint32_t s) const;

  /// Euclidean division; throws on a zero divisor.
  std::pair<FpPoly, FpPoly> divrem(const FpPoly& d) const;
  FpPoly monic() const;

  bool operator==(const FpPoly& o) const noexcept { return p_ == o.p_ && c_ == o.c_; }

  /// "t^2 + t + 1" style rendering in the generator t.
  std::string to_string() const;

 private:
  void trim() noexcept;

  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(FpPoly a, FpPoly b);

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

}  // namespace dml
