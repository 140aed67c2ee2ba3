#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sawstrip/poly.hpp"

namespace sawstrip {

// Quotient num/den of polynomials in t, always held in canonical form:
//  - gcd(num, den) = 1 over Q,
//  - num and den have integer coefficients with joint content 1,
//  - den's lowest-degree nonzero coefficient is positive.
// Canonical form makes equality a structural comparison.
class RatFun {
 public:
  RatFun() : den_(Poly{1}) {}
  explicit RatFun(long c) : RatFun(Poly{c}) {}
  RatFun(const Poly& p) : RatFun(p, Poly{1}) {}  // NOLINT(google-explicit-constructor)
  RatFun(Poly num, Poly den);  // normalizes; throws Error on zero den

  static RatFun constant(const BigRat& c) { return RatFun(Poly::constant(c)); }
  // The indeterminate t.
  static RatFun t() { return RatFun(Poly{0, 1}); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  friend bool operator==(const RatFun&, const RatFun&) = default;

  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

enum class ArithOp { Add, Sub, Mul, Div };

RatFun ratfun_arith(ArithOp op, const RatFun& a, const RatFun& b);
RatFun ratfun_normalize(const Poly& num, const Poly& den);

// Maclaurin coefficients c_0..c_order of a rational function.
class Series {
 public:
  Series() = default;
  explicit Series(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t order() const { return coeffs_.size(); }
  const BigRat& operator[](std::size_t k) const { return coeffs_[k]; }
  const std::vector<BigRat>& coeffs() const { return coeffs_; }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<BigRat> coeffs_;
};

// Expands f to t^n (n + 1 coefficients) through the recurrence
// sum_j den_j c_{k-j} = num_k. Throws Error if den(0) = 0.
Series series_expand(const RatFun& f, std::size_t n);

// Integer view of a series; throws Error on a non-integral coefficient.
std::vector<BigInt> integer_coeffs(const Series& s);

}  // namespace sawstrip
