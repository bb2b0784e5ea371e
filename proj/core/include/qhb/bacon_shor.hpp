#pragma once

#include <cstddef>
#include <cstdint>

#include "qhb/bounds.hpp"
#include "qhb/symplectic.hpp"

namespace qhb {

/// A Bacon-Shor subsystem code on an a x b qubit lattice.
///
/// Qubit (i, j), 0 <= i < a, 0 <= j < b, has index i*b + j. Gauge generators
/// are X_{i,j} X_{i,j+1} (row-major) followed by Z_{i,j} Z_{i+1,j} (row-major).
/// Stabilizer generators are X on columns j, j+1 for each j < b-1, followed
/// by Z on rows i, i+1 for each i < a-1.
struct SubsystemCode {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t n = 0;
  GeneratorSet gauge;
  /// Explicitly constructed stabilizer generators.
  GeneratorSet stabilizer;
  /// Derived from the gauge group alone: s = dim center(gauge),
  /// r = (rank(gauge) - s) / 2, k = n - s - r.
  std::size_t s = 0;
  std::size_t r = 0;
  std::size_t k = 0;
};

/// Throws std::invalid_argument on a zero dimension.
SubsystemCode build_bacon_shor(std::size_t a, std::size_t b);

/// Index of lattice site (row, col).
inline std::size_t site(const SubsystemCode& c, std::size_t row, std::size_t col) {
  return row * c.b + col;
}

/// Cross-checks a constructed code:
///  - (n, k, r) equals rect_family(a, b),
///  - the explicit stabilizer spans exactly center(gauge),
///  - every stabilizer generator commutes with every gauge generator.
bool certify_parameters(const SubsystemCode& c);

}  // namespace qhb
