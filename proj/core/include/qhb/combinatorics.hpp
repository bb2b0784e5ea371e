#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace qhb {

/// Arbitrary-precision integer. Every bound verdict in this library is an
/// exact comparison between values of this type.
using BigInt = mpz_class;

/// C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// base^exp with 0^0 = 1.
BigInt power(std::uint64_t base, std::uint64_t exp);

/// Number of n-qubit Paulis of weight at most t:
///   sum_{j=0}^{t} C(n, j) 3^j
/// Throws std::invalid_argument when t > n.
BigInt sphere_volume(std::uint64_t n, std::uint64_t t);

/// Approximate log2(rhs / lhs) in bits, for display only.
///
/// The result is accurate to well under 0.01 bits and its sign always agrees
/// with the exact comparison of rhs and lhs: when the two differ by less than
/// double precision can resolve, the smallest denormal of the correct sign is
/// returned instead of zero. Both arguments must be >= 1.
double log2_margin(const BigInt& lhs, const BigInt& rhs);

/// Decimal digits of a nonnegative value ("0" has one digit).
std::size_t decimal_digits(const BigInt& value);

}  // namespace qhb
