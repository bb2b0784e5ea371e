#include "qhb/proof_chain.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "qhb/bounds.hpp"
#include "qhb/families.hpp"

namespace qhb {

bool lemma_quadratic(std::uint64_t t) {
  const BigInt bt(t);
  return 16 * bt < 3 * (4 * bt * bt + 4 * bt + 1);
}

bool lemma_power(std::uint64_t t) {
  return power(2, 4 * t) * power(t, t) < power(3, t) * power(2 * t + 1, 2 * t);
}

bool lemma_binomial(std::uint64_t n, std::uint64_t t) {
  if (t < 1 || t > n) {
    throw std::invalid_argument("lemma_binomial: requires 1 <= t <= n");
  }
  return binomial(n, t) * power(t, t) >= power(n, t);
}

bool check_suffices(std::uint64_t t) {
  const std::uint64_t side = 2 * t + 1;
  return power(2, 4 * t) < binomial(side * side, t) * power(3, t);
}

ChainReport evaluate_chain(std::uint64_t t) {
  if (t == 0) throw std::invalid_argument("evaluate_chain: t must be positive");
  ChainReport row;
  row.t = t;
  row.quadratic_ok = lemma_quadratic(t);
  row.power_ok = lemma_power(t);
  const std::uint64_t side = 2 * t + 1;
  row.binomial_ok = lemma_binomial(side * side, t);
  row.suffices_ok = check_suffices(t);
  const BoundReport hamming = hamming_check(odd_family(t));
  row.full_violation_ok = !hamming.satisfied;
  row.margin_bits = hamming.margin_bits;
  row.hamming_lhs = hamming.lhs;
  row.hamming_rhs = hamming.rhs;
  return row;
}

std::vector<ChainReport> verify_chain(std::uint64_t t_max, std::size_t workers) {
  if (t_max == 0) throw std::invalid_argument("verify_chain: t_max must be positive");
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<std::size_t>(workers, t_max);

  std::vector<ChainReport> rows(t_max);
  if (workers == 1) {
    for (std::uint64_t t = 1; t <= t_max; ++t) rows[t - 1] = evaluate_chain(t);
    return rows;
  }

  // Each slot is written by exactly one thread; order is fixed by index.
  std::atomic<std::uint64_t> next{1};
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t t = next++; t <= t_max; t = next++) rows[t - 1] = evaluate_chain(t);
      });
    }
  }
  return rows;
}

bool margins_strictly_increasing(const std::vector<ChainReport>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& prev = rows[i - 1];
    const auto& cur = rows[i];
    // prev.rhs / prev.lhs < cur.rhs / cur.lhs
    if (!(prev.hamming_rhs * cur.hamming_lhs < cur.hamming_rhs * prev.hamming_lhs)) return false;
  }
  return true;
}

}  // namespace qhb
