#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "qhb/bacon_shor.hpp"
#include "qhb/combinatorics.hpp"
#include "qhb/symplectic.hpp"

namespace qhb {

/// Default cap on candidate evaluations for brute-force searches.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Thrown before a search starts when its workload exceeds the budget.
class WorkloadRefused : public std::runtime_error {
 public:
  WorkloadRefused(BigInt estimate, std::uint64_t budget);
  const BigInt& estimate() const { return estimate_; }
  std::uint64_t budget() const { return budget_; }

 private:
  BigInt estimate_;
  std::uint64_t budget_;
};

/// Number of nonidentity Paulis of weight 1..max_weight on n qubits,
/// i.e. sphere_volume(n, max_weight) - 1. Requires 1 <= max_weight <= n.
BigInt workload_estimate(std::uint64_t n, std::uint64_t max_weight);

struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Threads used for the enumeration; 0 picks hardware concurrency.
  std::size_t workers = 1;
};

/// Position of an operator in the canonical enumeration order: ascending
/// weight, then lexicographic support, then letters with X < Z < Y per qubit
/// and the lowest support qubit most significant.
struct CanonicalHit {
  PauliVector op;
  /// Zero-based rank among all nonidentity operators in canonical order.
  std::uint64_t rank = 0;
};

/// First operator of weight min_weight..max_weight in canonical order that
/// satisfies `accept`. `accept` is called concurrently when workers > 1 and
/// must be thread-safe. The result is independent of the worker count.
/// Throws WorkloadRefused if workload_estimate(n, max_weight) > budget.
std::optional<CanonicalHit> first_in_canonical_order(
    std::size_t n, std::size_t min_weight, std::size_t max_weight,
    const std::function<bool(const PauliVector&)>& accept, const SearchOptions& options = {});

struct DistanceResult {
  /// Minimum weight of a dressed logical operator. When truncated, this is
  /// max_weight + 1, a lower bound.
  std::size_t d = 0;
  /// Canonically first operator of weight d that commutes with the
  /// stabilizer and lies outside the gauge group (identity when truncated).
  PauliVector witness;
  /// Candidates up to and including the witness in canonical order (the
  /// whole workload when truncated).
  std::uint64_t enumerated = 0;
  bool truncated = false;
};

/// Brute-force subsystem distance: the lowest-weight operator commuting with
/// every stabilizer generator but not contained in the gauge group.
DistanceResult min_distance(const SubsystemCode& c, std::size_t max_weight,
                            const SearchOptions& options = {});

enum class Purity { Pure, Impure };

std::string_view to_string(Purity p);

/// Canonically first nonidentity gauge-group element of weight < d, if any.
std::optional<PauliVector> low_weight_gauge_element(const SubsystemCode& c, std::size_t d,
                                                    const SearchOptions& options = {});

/// Impure iff the gauge group has a nonidentity element of weight < d.
Purity purity(const SubsystemCode& c, std::size_t d, const SearchOptions& options = {});

/// Minimum weight over nonidentity stabilizer elements, by enumerating all
/// 2^s products of the stabilizer generators. nullopt when s = 0. Throws
/// WorkloadRefused when 2^s exceeds the budget.
std::optional<std::size_t> min_stabilizer_weight(const SubsystemCode& c,
                                                 const SearchOptions& options = {});

}  // namespace qhb
