#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qhb/combinatorics.hpp"

namespace qhb {

// Division-free integer forms of the steps showing that the odd square
// Bacon-Shor codes [[(2t+1)^2, 1, 4t^2, 2t+1]] violate the Hamming bound.
// Each lemma is an exact comparison; none of them throws for t >= 1.

/// 16t < 3(4t^2 + 4t + 1)
bool lemma_quadratic(std::uint64_t t);

/// 2^{4t} t^t < 3^t (2t+1)^{2t}
bool lemma_power(std::uint64_t t);

/// C(n, t) t^t >= n^t. Throws std::invalid_argument unless 1 <= t <= n.
bool lemma_binomial(std::uint64_t n, std::uint64_t t);

/// 2^{4t} < C((2t+1)^2, t) 3^t, a single sphere term already beating the
/// left-hand side of the Hamming bound.
bool check_suffices(std::uint64_t t);

struct ChainReport {
  std::uint64_t t = 0;
  bool quadratic_ok = false;
  bool power_ok = false;
  bool binomial_ok = false;
  bool suffices_ok = false;
  bool full_violation_ok = false;
  /// log2(rhs / lhs) of the full Hamming check on odd_family(t).
  double margin_bits = 0.0;
  /// Exact sides of that Hamming check, kept for exact trend comparisons.
  BigInt hamming_lhs;
  BigInt hamming_rhs;

  bool all_ok() const {
    return quadratic_ok && power_ok && binomial_ok && suffices_ok && full_violation_ok;
  }
  /// power && binomial => suffices => full violation.
  bool implications_hold() const {
    const bool premises_to_suffices = !(power_ok && binomial_ok) || suffices_ok;
    const bool suffices_to_violation = !suffices_ok || full_violation_ok;
    return premises_to_suffices && suffices_to_violation;
  }
};

ChainReport evaluate_chain(std::uint64_t t);

/// Rows for t = 1..t_max in ascending order. Distinct t are evaluated on up
/// to `workers` threads (0 picks hardware concurrency); the result does not
/// depend on the worker count. Throws std::invalid_argument when t_max = 0.
std::vector<ChainReport> verify_chain(std::uint64_t t_max, std::size_t workers = 1);

/// True iff rhs/lhs strictly increases from each row to the next, compared
/// exactly by cross-multiplication.
bool margins_strictly_increasing(const std::vector<ChainReport>& rows);

}  // namespace qhb
