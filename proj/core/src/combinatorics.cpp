#include "qhb/combinatorics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qhb {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt power(std::uint64_t base, std::uint64_t exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

BigInt sphere_volume(std::uint64_t n, std::uint64_t t) {
  if (t > n) {
    throw std::invalid_argument("sphere_volume: radius t=" + std::to_string(t) +
                                " exceeds length n=" + std::to_string(n));
  }
  // term_j = C(n, j) 3^j, advanced by term_{j+1} = term_j * 3 (n - j) / (j + 1).
  BigInt term = 1;
  BigInt total = 1;
  for (std::uint64_t j = 0; j < t; ++j) {
    term *= static_cast<unsigned long>(n - j);
    term *= 3u;
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), j + 1);
    total += term;
  }
  return total;
}

namespace {

double log2_of(const BigInt& v) {
  long exp = 0;
  const double mantissa = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(mantissa) + static_cast<double>(exp);
}

}  // namespace

double log2_margin(const BigInt& lhs, const BigInt& rhs) {
  if (lhs < 1 || rhs < 1) {
    throw std::invalid_argument("log2_margin: arguments must be positive");
  }
  const int order = cmp(rhs, lhs);
  if (order == 0) return 0.0;

  double bits = 0.0;
  const BigInt diff = rhs - lhs;
  const mpq_class rel(diff, lhs);
  const double rel_d = rel.get_d();
  if (std::fabs(rel_d) < 0.5) {
    // Near 1 the difference of two logs cancels; log1p on the exact
    // relative difference keeps full precision.
    bits = std::log1p(rel_d) / std::log(2.0);
  } else {
    bits = log2_of(rhs) - log2_of(lhs);
  }

  if (bits == 0.0 || (bits > 0) != (order > 0)) {
    bits = std::copysign(std::numeric_limits<double>::denorm_min(),
                         static_cast<double>(order));
  }
  return bits;
}

std::size_t decimal_digits(const BigInt& value) {
  if (value == 0) return 1;
  BigInt mag = abs(value);
  return mag.get_str(10).size();
}

}  // namespace qhb
