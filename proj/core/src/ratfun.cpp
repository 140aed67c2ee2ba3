#include "sawstrip/ratfun.hpp"

#include "sawstrip/error.hpp"

namespace sawstrip {

namespace {

// Joint scale making num and den integral with content 1.
BigRat joint_scale(const Poly& num, const Poly& den) {
  BigInt lcm_den = 1;
  for (const Poly* p : {&num, &den})
    for (const auto& c : p->coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  BigInt content = 0;
  for (const Poly* p : {&num, &den})
    for (const auto& c : p->coeffs()) {
      const BigInt scaled = c.get_num() * (lcm_den / c.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    }
  return make_rat(lcm_den, content);
}

}  // namespace

RatFun::RatFun(Poly num, Poly den) {
  if (den.is_zero()) throw Error("zero denominator");
  if (num.is_zero()) {
    den_ = Poly{1};
    return;
  }
  const Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  BigRat scale = joint_scale(num, den);
  if (den[static_cast<std::size_t>(den.low_degree())] < 0) scale = -scale;
  num_ = num * scale;
  den_ = den * scale;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw Error("zero divisor");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFun::to_string() const {
  if (den_ == Poly{1}) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RatFun ratfun_arith(ArithOp op, const RatFun& a, const RatFun& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error("unknown operation");
}

RatFun ratfun_normalize(const Poly& num, const Poly& den) { return RatFun(num, den); }

Series series_expand(const RatFun& f, std::size_t n) {
  const Poly& num = f.num();
  const Poly& den = f.den();
  if (den[0] == 0) throw Error("no Maclaurin expansion");
  const BigRat inv0 = 1 / den[0];
  const std::size_t q = static_cast<std::size_t>(den.degree());
  std::vector<BigRat> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    BigRat acc = num[k];
    for (std::size_t j = 1; j <= q && j <= k; ++j) acc -= den.coeffs()[j] * c[k - j];
    c[k] = acc * inv0;
  }
  return Series(std::move(c));
}

std::vector<BigInt> integer_coeffs(const Series& s) {
  std::vector<BigInt> out;
  out.reserve(s.order());
  for (const auto& c : s.coeffs()) {
    if (c.get_den() != 1) throw Error("non-integral series coefficient " + to_string(c));
    out.push_back(c.get_num());
  }
  return out;
}

}  // namespace sawstrip
