#include "sawstrip/numeric.hpp"

#include <algorithm>
#include <cctype>

#include "sawstrip/error.hpp"

namespace sawstrip {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigInt parse_integer(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw Error("empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<long>(start), s.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    throw Error("not an integer: " + std::string(text));
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

BigRat parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw Error("empty number");

  if (auto slash = s.find('/'); slash != std::string::npos)
    return make_rat(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    const BigInt ex = parse_integer(s.substr(e + 1));
    if (!ex.fits_slong_p() || abs(ex) > 100000) throw Error("exponent out of range: " + s);
    exponent = ex.get_si();
    s.erase(e);
  }
  std::string digits = s;
  if (auto dot = digits.find('.'); dot != std::string::npos) {
    exponent -= static_cast<long>(digits.size() - dot - 1);
    digits.erase(dot, 1);
  }
  BigInt mantissa = parse_integer(digits);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? make_rat(mantissa, scale) : make_rat(mantissa * scale);
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const BigRat& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

namespace {

std::string with_point(const BigInt& scaled_abs, unsigned digits, bool negative) {
  std::string s = scaled_abs.get_str(10);
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (negative && scaled_abs != 0) s.insert(0, "-");
  return s;
}

}  // namespace

std::optional<std::string> exact_decimal(const BigRat& value) {
  BigInt den = value.get_den();
  unsigned twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
  if (den != 1) return std::nullopt;
  const unsigned digits = std::max(twos, fives);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const BigInt scaled = value.get_num() * scale / value.get_den();
  return with_point(abs(scaled), digits, scaled < 0);
}

std::string rounded_decimal(const BigRat& value, unsigned digits, Rounding mode) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const BigInt num = value.get_num() * scale;
  BigInt q;
  if (mode == Rounding::Down)
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), value.get_den().get_mpz_t());
  else
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), value.get_den().get_mpz_t());
  return with_point(abs(q), digits, q < 0);
}

BigInt fibonacci(std::uint64_t n) {
  BigInt a = 0, b = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

int sign(const BigRat& value) { return sgn(value); }

}  // namespace sawstrip
