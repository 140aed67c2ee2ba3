#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sawstrip {

using BigInt = mpz_class;
// mpq_class keeps numerator/denominator coprime with a positive denominator
// as long as every value is canonicalized after construction.
using BigRat = mpq_class;

BigRat make_rat(const BigInt& num, const BigInt& den = 1);

// Parses "17", "-3/4", "0.125", "1e-12", "2.5E3" into an exact rational.
BigRat parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const BigRat& value);
std::string to_string(const BigInt& value);

// Exact decimal expansion, or nullopt if the denominator has a prime factor
// other than 2 and 5.
std::optional<std::string> exact_decimal(const BigRat& value);

enum class Rounding { Down, Up };

// Decimal with `digits` fractional digits, rounded toward -inf or +inf.
std::string rounded_decimal(const BigRat& value, unsigned digits, Rounding mode);

// F_0 = 0, F_1 = F_2 = 1.
BigInt fibonacci(std::uint64_t n);

int sign(const BigRat& value);

}  // namespace sawstrip
