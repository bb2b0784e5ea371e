#include "qhb/distance.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <string>
#include <thread>
#include <vector>

namespace qhb {

WorkloadRefused::WorkloadRefused(BigInt estimate, std::uint64_t budget)
    : std::runtime_error("workload " + estimate.get_str() + " exceeds budget " +
                         std::to_string(budget)),
      estimate_(std::move(estimate)),
      budget_(budget) {}

BigInt workload_estimate(std::uint64_t n, std::uint64_t max_weight) {
  if (max_weight < 1 || max_weight > n) {
    throw std::invalid_argument("workload_estimate: requires 1 <= max_weight <= n");
  }
  return sphere_volume(n, max_weight) - 1;
}

namespace {

constexpr char kLetterOrder[] = {'X', 'Z', 'Y'};
constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

std::uint64_t pow3(std::size_t w) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < w; ++i) out *= 3;
  return out;
}

// Advances `support` to the next w-subset of [0, n) in lexicographic order.
bool next_combination(std::vector<std::size_t>& support, std::size_t n) {
  const std::size_t w = support.size();
  std::size_t i = w;
  while (i > 0) {
    --i;
    if (support[i] < n - w + i) {
      ++support[i];
      for (std::size_t j = i + 1; j < w; ++j) support[j] = support[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct WeightHit {
  std::uint64_t support_index = kNone;
  std::uint64_t letter_index = kNone;
  PauliVector op;
};

// Scans supports whose index is congruent to `worker` mod `workers`, stopping
// at this worker's first accepted operator or once a smaller support index
// has been claimed by another worker.
WeightHit scan_weight(std::size_t n, std::size_t w, std::size_t worker, std::size_t workers,
                      const std::function<bool(const PauliVector&)>& accept,
                      std::atomic<std::uint64_t>& best_support) {
  std::vector<std::size_t> support(w);
  for (std::size_t i = 0; i < w; ++i) support[i] = i;
  std::vector<std::uint8_t> letters(w);
  PauliVector scratch(n);

  std::uint64_t support_index = 0;
  do {
    if (support_index > best_support.load(std::memory_order_relaxed)) break;
    if (support_index % workers == worker) {
      std::fill(letters.begin(), letters.end(), 0);
      for (std::size_t i = 0; i < w; ++i) scratch.set_letter(support[i], kLetterOrder[0]);
      std::uint64_t letter_index = 0;
      while (true) {
        if (accept(scratch)) {
          WeightHit hit{support_index, letter_index, scratch};
          std::uint64_t cur = best_support.load();
          while (support_index < cur && !best_support.compare_exchange_weak(cur, support_index)) {
          }
          return hit;
        }
        // Odometer over letters, last support qubit fastest.
        bool advanced = false;
        for (std::size_t pos = w; pos-- > 0;) {
          if (letters[pos] < 2) {
            ++letters[pos];
            scratch.set_letter(support[pos], kLetterOrder[letters[pos]]);
            advanced = true;
            break;
          }
          letters[pos] = 0;
          scratch.set_letter(support[pos], kLetterOrder[0]);
        }
        if (!advanced) break;
        ++letter_index;
      }
      for (std::size_t i = 0; i < w; ++i) scratch.set_letter(support[i], 'I');
    }
    ++support_index;
  } while (next_combination(support, n));
  return {};
}

}  // namespace

std::optional<CanonicalHit> first_in_canonical_order(
    std::size_t n, std::size_t min_weight, std::size_t max_weight,
    const std::function<bool(const PauliVector&)>& accept, const SearchOptions& options) {
  if (min_weight < 1) min_weight = 1;
  if (max_weight > n) throw std::invalid_argument("search weight exceeds number of qubits");
  if (max_weight < min_weight) return std::nullopt;

  const BigInt estimate = workload_estimate(n, max_weight);
  if (estimate > BigInt(options.budget)) throw WorkloadRefused(estimate, options.budget);

  std::size_t workers = options.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

  std::uint64_t offset = 0;  // candidates of weight < w
  for (std::size_t w = 1; w < min_weight; ++w) {
    offset += binomial(n, w).get_ui() * pow3(w);
  }

  for (std::size_t w = min_weight; w <= max_weight; ++w) {
    std::atomic<std::uint64_t> best_support{kNone};
    std::vector<WeightHit> hits(workers);
    if (workers == 1) {
      hits[0] = scan_weight(n, w, 0, 1, accept, best_support);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t k = 0; k < workers; ++k) {
        pool.emplace_back([&, k] { hits[k] = scan_weight(n, w, k, workers, accept, best_support); });
      }
    }

    const WeightHit* best = nullptr;
    for (const auto& h : hits) {
      if (h.support_index == kNone) continue;
      if (!best || std::pair(h.support_index, h.letter_index) <
                       std::pair(best->support_index, best->letter_index)) {
        best = &h;
      }
    }
    const std::uint64_t per_support = pow3(w);
    if (best) {
      return CanonicalHit{best->op, offset + best->support_index * per_support + best->letter_index};
    }
    offset += binomial(n, w).get_ui() * per_support;
  }
  return std::nullopt;
}

DistanceResult min_distance(const SubsystemCode& c, std::size_t max_weight,
                            const SearchOptions& options) {
  if (max_weight < 1 || max_weight > c.n) {
    throw std::invalid_argument("min_distance: requires 1 <= max_weight <= n");
  }
  const SpanBasis gauge_span(c.gauge);
  const auto& stabilizer = c.stabilizer;
  auto dressed_logical = [&](const PauliVector& op) {
    for (const auto& s : stabilizer) {
      if (symplectic_product(op, s)) return false;
    }
    return !gauge_span.contains(op);
  };

  DistanceResult result;
  const auto hit = first_in_canonical_order(c.n, 1, max_weight, dressed_logical, options);
  if (!hit) {
    result.d = max_weight + 1;
    result.witness = PauliVector(c.n);
    result.enumerated = workload_estimate(c.n, max_weight).get_ui();
    result.truncated = true;
    return result;
  }
  result.d = weight(hit->op);
  result.witness = hit->op;
  result.enumerated = hit->rank + 1;
  return result;
}

std::string_view to_string(Purity p) { return p == Purity::Pure ? "pure" : "impure"; }

std::optional<PauliVector> low_weight_gauge_element(const SubsystemCode& c, std::size_t d,
                                                    const SearchOptions& options) {
  if (d < 1) throw std::invalid_argument("purity: d must be positive");
  if (d == 1) return std::nullopt;
  const SpanBasis gauge_span(c.gauge);
  auto in_gauge = [&](const PauliVector& op) { return gauge_span.contains(op); };
  const auto hit = first_in_canonical_order(c.n, 1, std::min(d - 1, c.n), in_gauge, options);
  if (!hit) return std::nullopt;
  return hit->op;
}

Purity purity(const SubsystemCode& c, std::size_t d, const SearchOptions& options) {
  return low_weight_gauge_element(c, d, options) ? Purity::Impure : Purity::Pure;
}

std::optional<std::size_t> min_stabilizer_weight(const SubsystemCode& c,
                                                 const SearchOptions& options) {
  const SpanBasis basis(c.stabilizer);
  const std::size_t s = basis.rank();
  if (s == 0) return std::nullopt;
  const BigInt count = power(2, s) - 1;
  if (s >= 63 || count > BigInt(options.budget)) throw WorkloadRefused(count, options.budget);

  // Gray-code walk visits every nonzero combination with one product per step.
  PauliVector current(c.n);
  std::size_t best = c.n + 1;
  const std::uint64_t total = std::uint64_t{1} << s;
  for (std::uint64_t i = 1; i < total; ++i) {
    current *= basis.rows()[static_cast<std::size_t>(std::countr_zero(i))];
    best = std::min(best, weight(current));
  }
  return best;
}

}  // namespace qhb
