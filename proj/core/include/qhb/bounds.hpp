#pragma once

#include <cstdint>
#include <string>

#include "qhb/combinatorics.hpp"

namespace qhb {

/// Parameters [[n, k, r, d]] of a subsystem code: n physical qubits, k
/// logical qubits, r gauge qubits, minimum distance d.
struct CodeParams {
  std::uint64_t n = 1;
  std::uint64_t k = 0;
  std::uint64_t r = 0;
  std::uint64_t d = 1;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// Throws std::invalid_argument naming the first violated invariant among
/// n >= 1, 1 <= d <= n, k + r <= n.
void validate(const CodeParams& p);

/// "[[n,k,r,d]]"
std::string to_string(const CodeParams& p);

enum class Bound { Hamming, Singleton };

std::string_view to_string(Bound b);

/// Outcome of one bound evaluation. The bound holds iff lhs >= rhs.
///
/// margin_bits approximates log2 of how far rhs overshoots lhs: positive
/// means the bound is violated, negative means slack. For the Hamming bound
/// it is log2(rhs / lhs). The Singleton bound is an inequality between
/// exponents (2^{k+r} <= 2^{n-2(d-1)}), so its margin is exactly rhs - lhs.
struct BoundReport {
  CodeParams params;
  Bound bound = Bound::Hamming;
  BigInt lhs;
  BigInt rhs;
  bool satisfied = false;
  double margin_bits = 0.0;
  std::string note;
};

/// Quantum Hamming bound for pure subsystem codes:
///   2^{n-k-r} >= sum_{j=0}^{floor((d-1)/2)} C(n, j) 3^j
BoundReport hamming_check(const CodeParams& p);

/// Quantum Singleton bound for subsystem codes: k + r <= n - 2(d - 1).
/// lhs carries n - 2(d - 1) exactly, which may be negative for very large d.
BoundReport singleton_check(const CodeParams& p);

}  // namespace qhb
