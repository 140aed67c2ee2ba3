#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sawstrip/numeric.hpp"

namespace sawstrip {

// Univariate polynomial in t with exact rational coefficients, stored in
// ascending degree. The zero polynomial has no coefficients; otherwise the
// leading coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<long> coeffs);
  explicit Poly(std::vector<BigRat> coeffs);

  static Poly constant(const BigRat& c);
  // c * t^k
  static Poly monomial(const BigRat& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  // Index of the first nonzero coefficient; -1 for the zero polynomial.
  long low_degree() const;

  // Coefficient of t^k, zero beyond the degree.
  BigRat operator[](std::size_t k) const;
  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  const BigRat& leading() const { return coeffs_.back(); }

  BigRat eval(const BigRat& x) const;
  Poly derivative() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const BigRat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const BigRat& c) { return a *= c; }
  friend Poly operator*(const BigRat& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly pow(unsigned e) const;

  // Human-readable form, e.g. "1 - t - t^2".
  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();

  std::vector<BigRat> coeffs_;
};

// Euclidean division: a = q*b + r with deg r < deg b. Throws on b == 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Monic gcd over Q; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// p / gcd(p, p'): same roots, all simple.
Poly square_free_part(const Poly& p);

// Scale to integer coefficients with content 1 and positive leading
// coefficient. Returns the factor applied.
BigRat make_primitive(Poly& p);

}  // namespace sawstrip
