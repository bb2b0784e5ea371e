#include "qhb/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qhb {

namespace {

// Keeps a*b well inside 64 bits.
constexpr std::uint64_t kMaxSide = std::uint64_t{1} << 31;

}  // namespace

CodeParams rect_family(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) {
    throw std::invalid_argument("lattice dimensions must be positive (got " + std::to_string(a) +
                                "x" + std::to_string(b) + ")");
  }
  if (a > kMaxSide || b > kMaxSide) {
    throw std::invalid_argument("lattice dimension exceeds 2^31");
  }
  return CodeParams{a * b, 1, (a - 1) * (b - 1), std::min(a, b)};
}

CodeParams square_family(std::uint64_t a) {
  if (a == 0) throw std::invalid_argument("square_family: a must be positive");
  return rect_family(a, a);
}

CodeParams odd_family(std::uint64_t t) {
  if (t == 0) throw std::invalid_argument("odd_family: t must be positive");
  if (t >= kMaxSide / 2) throw std::invalid_argument("odd_family: t too large");
  const std::uint64_t side = 2 * t + 1;
  return CodeParams{side * side, 1, 4 * t * t, side};
}

}  // namespace qhb
