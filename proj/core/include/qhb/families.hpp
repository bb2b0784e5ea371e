#pragma once

#include <cstdint>

#include "qhb/bounds.hpp"

namespace qhb {

// Parameter families of Bacon-Shor codes on an a x b lattice. These only
// compute [[n,k,r,d]]; lattice construction lives in bacon_shor.hpp.

/// [[a b, 1, (a-1)(b-1), min(a, b)]]. Throws on a zero dimension.
CodeParams rect_family(std::uint64_t a, std::uint64_t b);

/// [[a^2, 1, (a-1)^2, a]]
CodeParams square_family(std::uint64_t a);

/// [[(2t+1)^2, 1, 4t^2, 2t+1]], the odd-length square members. Throws on t = 0.
CodeParams odd_family(std::uint64_t t);

}  // namespace qhb
